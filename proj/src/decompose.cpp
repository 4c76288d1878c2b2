#include "abcd/decompose.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace abcd {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_equidiagonal(const Mat2& e, const char* op) {
  if (!is_equidiagonal(e)) {
    throw DomainError(std::string(op) + ": input is not equi-diagonal (a = " +
                      std::to_string(e.a()) + ", d = " + std::to_string(e.d()) + ")");
  }
}

// rot2(-pi) m rot2(pi)
Mat2 half_turn_conjugate(const Mat2& m) {
  return Mat2::from_entries(m.d(), -m.c(), -m.b(), m.a());
}

// B(eta) W B(-eta) written out entrywise.
Mat2 sandwich(const Mat2& w, double eta) {
  detail::require_exp_range(eta, "Wigner eta");
  const double up = std::exp(eta);
  const double down = std::exp(-eta);
  return Mat2::from_entries(w.a(), w.b() * up, w.c() * down, w.d());
}

}  // namespace

std::string_view to_string(ConjClass c) noexcept {
  switch (c) {
    case ConjClass::Elliptic: return "Elliptic";
    case ConjClass::Parabolic: return "Parabolic";
    case ConjClass::Hyperbolic: return "Hyperbolic";
  }
  return "?";
}

MatrixClass classify_trace(double trace, double tol) {
  if (!(tol > 0.0)) throw DomainError("class tolerance must be positive");
  detail::require_finite(trace, "trace");
  MatrixClass out;
  out.trace = trace;
  const double mag = std::abs(trace);
  if (mag < 2.0 - tol) {
    out.tag = ConjClass::Elliptic;
  } else if (mag > 2.0 + tol) {
    out.tag = ConjClass::Hyperbolic;
  } else {
    out.tag = ConjClass::Parabolic;
  }
  out.negative_trace = out.tag != ConjClass::Elliptic && trace < 0.0;
  return out;
}

MatrixClass classify(const Mat2& m, double tol) { return classify_trace(m.trace(), tol); }

bool is_equidiagonal(const Mat2& m, double tol) noexcept {
  return std::abs(m.a() - m.d()) <= tol * std::max(1.0, m.max_abs());
}

Equidiagonal equidiagonalize(const Mat2& m) {
  // e11 - e22 = (a - d) cos(alpha) - (b + c) sin(alpha)
  const double diff = m.a() - m.d();
  const double sum = m.b() + m.c();
  double alpha = 0.0;
  if (diff != 0.0) {
    alpha = (sum == 0.0) ? std::numbers::pi / 2 : std::atan(diff / sum);
  }
  if (alpha == -std::numbers::pi / 2) alpha = std::numbers::pi / 2;
  const Mat2 rotated = rot2(alpha) * m * rot2(-alpha);
  const double half = 0.5 * (rotated.a() + rotated.d());
  // Symmetrize the rounding residue so e11 == e22 exactly.
  const Mat2 e = Mat2::from_entries(half, rotated.b(), rotated.c(), half, kComposeDriftTol);
  return {alpha, e};
}

// ---- Wigner ---------------------------------------------------------------

ConjClass WignerForm::kind() const noexcept {
  return std::visit(overloaded{[](const Elliptic&) { return ConjClass::Elliptic; },
                               [](const Hyperbolic&) { return ConjClass::Hyperbolic; },
                               [](const Parabolic&) { return ConjClass::Parabolic; }},
                    core);
}

double WignerForm::parameter() const noexcept {
  return std::visit(overloaded{[](const Elliptic& c) { return c.phi; },
                               [](const Hyperbolic& c) { return c.chi; },
                               [](const Parabolic& c) { return c.gamma; }},
                    core);
}

Mat2 wigner_matrix(const WignerCore& core) {
  return std::visit(overloaded{[](const Elliptic& c) {
                                 const double co = std::cos(c.phi);
                                 const double si = std::sin(c.phi);
                                 return Mat2::from_entries(co, -si, si, co);
                               },
                               [](const Hyperbolic& c) {
                                 detail::require_exp_range(c.chi, "Wigner chi");
                                 const double ch = std::cosh(c.chi);
                                 const double sh = std::sinh(c.chi);
                                 return Mat2::from_entries(ch, -sh, -sh, ch);
                               },
                               [](const Parabolic& c) { return shear2(c.gamma); }},
                    core);
}

WignerCore scale_core(const WignerCore& core, std::int64_t n) {
  const auto k = static_cast<double>(n);
  return std::visit(overloaded{[k](const Elliptic& c) -> WignerCore { return Elliptic{k * c.phi}; },
                               [k](const Hyperbolic& c) -> WignerCore {
                                 return Hyperbolic{k * c.chi};
                               },
                               [k](const Parabolic& c) -> WignerCore {
                                 return Parabolic{k * c.gamma};
                               }},
                    core);
}

WignerForm wigner_decompose(const Mat2& input, double tol) {
  require_equidiagonal(input, "wigner_decompose");
  const MatrixClass cls = classify(input, tol);
  WignerForm out;
  out.negated = cls.negative_trace;
  const Mat2 e = out.negated ? -input : input;
  const double a = 0.5 * (e.a() + e.d());
  const double b = e.b();
  const double c = e.c();

  switch (cls.tag) {
    case ConjClass::Elliptic: {
      if (!(b * c < 0.0)) throw InternalError("elliptic equi-diagonal matrix with b*c >= 0");
      out.eta = 0.5 * std::log(-b / c);
      const double sin_phi = std::copysign(std::sqrt(-b * c), c);
      out.core = Elliptic{std::atan2(sin_phi, a)};
      break;
    }
    case ConjClass::Hyperbolic: {
      if (!(b * c > 0.0)) throw InternalError("hyperbolic equi-diagonal matrix with b*c <= 0");
      out.eta = 0.5 * std::log(b / c);
      const double sinh_chi = -std::copysign(std::sqrt(b * c), b);
      out.core = Hyperbolic{std::asinh(sinh_chi)};
      break;
    }
    case ConjClass::Parabolic: {
      // Only gamma e^eta is observable; fix eta = 0.
      out.eta = 0.0;
      if (std::abs(b) >= std::abs(c)) {
        out.core = Parabolic{-b};
      } else {
        out.lower = true;
        out.core = Parabolic{c};
      }
      break;
    }
  }
  return out;
}

Mat2 wigner_recompose(const WignerForm& w) { return wigner_power(w, 1); }

Mat2 wigner_power(const WignerForm& w, std::int64_t n) {
  if (n < 0) throw DomainError("power exponent must be non-negative");
  if (const auto* h = std::get_if<Hyperbolic>(&w.core)) {
    const double exponent = static_cast<double>(n) * std::abs(h->chi) + std::abs(w.eta);
    if (exponent > kMaxExpArg) {
      throw RangeError("hyperbolic power overflows (N*chi + |eta|)", exponent);
    }
  }
  Mat2 m = sandwich(wigner_matrix(scale_core(w.core, n)), w.eta);
  if (w.lower) m = half_turn_conjugate(m);
  if (w.negated && (n % 2 != 0)) m = -m;
  return m;
}

Mat2 power(const Mat2& m, std::int64_t n, double tol) {
  if (n < 0) throw DomainError("power exponent must be non-negative");
  if (n == 0) return Mat2::identity();
  const Equidiagonal eq = equidiagonalize(m);
  const WignerForm w = wigner_decompose(eq.e, tol);
  return rot2(-eq.alpha) * wigner_power(w, n) * rot2(eq.alpha);
}

// ---- Bargmann / Iwasawa ---------------------------------------------------

Mat2 bargmann_matrix(const BargmannForm& bf) {
  detail::require_finite(bf.theta, "Bargmann theta");
  detail::require_exp_range(bf.lambda, "Bargmann lambda");
  const double ch = std::cosh(bf.lambda);
  const double sh = std::sinh(bf.lambda);
  const double co = std::cos(bf.theta);
  const double si = std::sin(bf.theta);
  return Mat2::from_entries(ch * co, -sh - ch * si, -sh + ch * si, ch * co);
}

BargmannForm bargmann_decompose(const Mat2& e) {
  require_equidiagonal(e, "bargmann_decompose");
  const double a = 0.5 * (e.a() + e.d());
  // sinh l = -(b + c)/2 ; cosh l sin t = (c - b)/2 ; cosh l cos t = a
  return {std::atan2(0.5 * (e.c() - e.b()), a), std::asinh(-0.5 * (e.b() + e.c()))};
}

double iwasawa_gap(const BargmannForm& bf) noexcept {
  return std::cosh(bf.lambda) * std::sin(bf.theta) - std::sinh(bf.lambda);
}

WignerForm bargmann_to_wigner(const BargmannForm& bf, double tol) {
  detail::require_finite(bf.theta, "Bargmann theta");
  detail::require_exp_range(bf.lambda, "Bargmann lambda");
  const double diag = std::cosh(bf.lambda) * std::cos(bf.theta);
  const MatrixClass cls = classify_trace(2.0 * diag, tol);

  if (cls.tag == ConjClass::Parabolic) return wigner_decompose(bargmann_matrix(bf), tol);
  if (cls.negative_trace) {
    // -Barg(theta, lambda) = Barg(theta + pi, -lambda)
    WignerForm w = bargmann_to_wigner({bf.theta + std::numbers::pi, -bf.lambda}, tol);
    w.negated = true;
    return w;
  }

  const double t = std::tanh(bf.lambda);
  const double s = std::sin(bf.theta);
  const double lower = iwasawa_gap(bf);
  WignerForm out;
  if (cls.tag == ConjClass::Elliptic) {
    const double radicand = (s + t) / (s - t);
    if (!(radicand > 0.0)) throw InternalError("elliptic Bargmann radicand is not positive");
    out.eta = 0.5 * std::log(radicand);
    out.core = Elliptic{std::atan2(lower * std::exp(out.eta), diag)};
  } else {
    const double radicand = (t + s) / (t - s);
    if (!(radicand > 0.0)) throw InternalError("hyperbolic Bargmann radicand is not positive");
    out.eta = 0.5 * std::log(radicand);
    out.core = Hyperbolic{std::asinh(-lower * std::exp(out.eta))};
  }
  return out;
}

// ---- transition -----------------------------------------------------------

double TransitionForm::error_bound() const noexcept {
  const double k = std::pow(std::sinh(eta) * std::cosh(eta), 2);
  return 1e-8 + k * epsilon * epsilon;
}

TransitionForm transition_decompose(const Mat2& e, double window) {
  require_equidiagonal(e, "transition_decompose");
  const double gap = e.trace() - 2.0;
  if (std::abs(gap) > window) {
    throw DomainError("transition_decompose: |trace - 2| = " + std::to_string(std::abs(gap)) +
                      " exceeds window " + std::to_string(window));
  }
  const double b = e.b();
  if (b == 0.0) {
    throw DomainError("transition_decompose: sinh(eta) = 0, beta is undefined");
  }
  if (b > 0.0) {
    throw DomainError("transition_decompose: upper off-diagonal must be -2 sinh(eta) < 0");
  }
  TransitionForm tf;
  tf.eta = std::asinh(-0.5 * b);
  const double sh = std::sinh(tf.eta);
  const double ch = std::cosh(tf.eta);
  tf.epsilon = e.c() / ch;
  tf.side = tf.epsilon >= 0.0 ? TransitionSide::RotationLike : TransitionSide::SqueezeLike;
  const double mag = std::abs(tf.epsilon);
  tf.alpha = std::sqrt(2.0 * mag * sh * ch);
  tf.beta = std::sqrt(mag * ch / (2.0 * sh));
  return tf;
}

RawMat2 transition_recompose(const TransitionForm& tf) {
  const double sign = tf.side == TransitionSide::RotationLike ? 1.0 : -1.0;
  const double diag = 1.0 - sign * 0.5 * tf.alpha * tf.alpha;
  // alpha / beta = 2 sinh(eta) also at the parabolic point where both vanish.
  const double upper = tf.beta > 0.0 ? -tf.alpha / tf.beta : -2.0 * std::sinh(tf.eta);
  const double lower = sign * tf.alpha * tf.beta;
  return {diag, upper, lower, diag};
}

Mat2 transition_matrix(double eta, double epsilon) {
  detail::require_exp_range(eta, "transition eta");
  detail::require_finite(epsilon, "transition epsilon");
  if (!(eta > 0.0)) throw DomainError("transition family requires eta > 0");
  const double sh = std::sinh(eta);
  const double ch = std::cosh(eta);
  if (epsilon == 0.0) return shear2(2.0 * sh);
  const double alpha = std::sqrt(2.0 * std::abs(epsilon) * sh * ch);
  double diag = 0.0;
  double ratio = 0.0;  // sin(alpha)/alpha or sinh(alpha)/alpha
  if (epsilon > 0.0) {
    diag = std::cos(alpha);
    ratio = std::sin(alpha) / alpha;
  } else {
    diag = std::cosh(alpha);
    ratio = std::sinh(alpha) / alpha;
  }
  return Mat2::from_entries(diag, -2.0 * sh * ratio, epsilon * ch * ratio, diag);
}

std::vector<TransitionSample> transition_curve(double eta, double lo, double hi, int steps,
                                               double tol) {
  if (steps < 3) throw DomainError("transition_curve needs at least 3 steps");
  if (!(lo < 0.0 && 0.0 < hi)) throw DomainError("epsilon range must straddle 0");
  std::vector<TransitionSample> out;
  out.reserve(static_cast<std::size_t>(steps));
  const double span = static_cast<double>(steps - 1);
  for (int i = 0; i < steps; ++i) {
    const double k = static_cast<double>(i);
    const double eps = (lo * (span - k) + hi * k) / span;
    const Mat2 m = transition_matrix(eta, eps);
    TransitionSample s;
    s.epsilon = eps;
    s.diag = m.a();
    s.upper = m.b();
    s.lower = m.c();
    s.tag = classify(m, tol).tag;
    s.angle_or_rapidity = s.tag == ConjClass::Parabolic ? 0.0 : wigner_decompose(m, tol).parameter();
    out.push_back(s);
  }
  return out;
}

}  // namespace abcd
