#include "abcd/little_group.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace abcd {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

struct Coords {
  double x, z, t;
};

// X = [[t + z, x], [x, t - z]] -> (x, z, t)
Coords symmetric_to_coords(double s00, double s01, double s11) {
  return {s01, 0.5 * (s00 - s11), 0.5 * (s00 + s11)};
}

// Column of lift(m) for the basis symmetric matrix [[p, q], [q, r]].
Coords image(const Mat2& m, double p, double q, double r) {
  // m S m^T
  const double a = m.a(), b = m.b(), c = m.c(), d = m.d();
  const double s00 = a * (a * p + b * q) + b * (a * q + b * r);
  const double s01 = a * (c * p + d * q) + b * (c * q + d * r);
  const double s11 = c * (c * p + d * q) + d * (c * q + d * r);
  return symmetric_to_coords(s00, s01, s11);
}

}  // namespace

void validate(const MomentumKind& kind) {
  std::visit(overloaded{[](const Massive& k) {
                          detail::require_finite(k.momentum, "momentum");
                          detail::require_finite(k.mass, "mass");
                          if (!(k.mass > 0.0)) throw DomainError("massive: mass must be > 0");
                        },
                        [](const Spacelike& k) {
                          detail::require_finite(k.momentum, "momentum");
                          detail::require_finite(k.energy, "energy");
                          if (!(k.energy >= 0.0 && k.energy < k.momentum)) {
                            throw DomainError("spacelike: need 0 <= E < p");
                          }
                        },
                        [](const Massless& k) {
                          detail::require_finite(k.momentum, "momentum");
                          if (!(k.momentum > 0.0)) throw DomainError("massless: p must be > 0");
                        }},
             kind);
}

FourVector four_momentum(const MomentumKind& kind) {
  validate(kind);
  return std::visit(
      overloaded{[](const Massive& k) {
                   return FourVector{0, 0, k.momentum, std::hypot(k.momentum, k.mass)};
                 },
                 [](const Spacelike& k) { return FourVector{0, 0, k.momentum, k.energy}; },
                 [](const Massless& k) { return FourVector{0, 0, k.momentum, k.momentum}; }},
      kind);
}

Mat4 lift(const Mat2& m) {
  // Basis images: x <-> [[0,1],[1,0]], z <-> [[1,0],[0,-1]], t <-> I.
  const Coords ex = image(m, 0, 1, 0);
  const Coords ez = image(m, 1, 0, -1);
  const Coords et = image(m, 1, 0, 1);
  return Mat4::from_entries({ex.x, 0, ez.x, et.x,  //
                             0, 1, 0, 0,  //
                             ex.z, 0, ez.z, et.z,  //
                             ex.t, 0, ez.t, et.t});
}

FrameBoost boost_to_frame(const MomentumKind& kind) {
  validate(kind);
  return std::visit(
      overloaded{[](const Massive& k) {
                   // tanh eta = p / E, sinh eta = p / m
                   return FrameBoost{std::asinh(k.momentum / k.mass), {0, 0, 0, k.mass}, false};
                 },
                 [](const Spacelike& k) {
                   const double norm = std::sqrt((k.momentum - k.energy) * (k.momentum + k.energy));
                   return FrameBoost{std::atanh(k.energy / k.momentum), {0, 0, norm, 0}, false};
                 },
                 [](const Massless& k) {
                   return FrameBoost{0.0, {0, 0, k.momentum, k.momentum}, true};
                 }},
      kind);
}

LittleGroupElement little_group_element(const MomentumKind& kind, double param) {
  detail::require_finite(param, "little-group parameter");
  const FrameBoost frame = boost_to_frame(kind);
  LittleGroupElement out;
  out.fixed_momentum = four_momentum(kind);
  out.eta = frame.eta;
  out.param = param;
  std::visit(overloaded{[&](const Massive&) {
                          out.core = boost2(frame.eta) * rot2(2.0 * param) * boost2(-frame.eta);
                          out.mat4 = lift(out.core);
                        },
                        [&](const Spacelike&) {
                          out.core =
                              boost2(frame.eta) * squeeze2(-2.0 * param) * boost2(-frame.eta);
                          out.mat4 = lift(out.core);
                        },
                        [&](const Massless&) {
                          out.core = shear2(-2.0 * param);
                          out.mat4 = gauge4(param);
                        }},
             kind);
  return out;
}

double preservation_residual(const Mat4& e, const FourVector& v) noexcept {
  return max_abs_diff(e.apply(v), v) / std::max(1.0, v.max_abs());
}

bool preserves(const Mat4& e, const FourVector& v, double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  return preservation_residual(e, v) <= tol;
}

bool ContractionReport::monotone() const noexcept {
  for (std::size_t i = 1; i < steps.size(); ++i) {
    if (steps[i].elliptic_distance > steps[i - 1].elliptic_distance) return false;
    if (steps[i].hyperbolic_distance > steps[i - 1].hyperbolic_distance) return false;
  }
  return true;
}

ContractionReport contraction_demo(const std::vector<double>& eta_schedule, double phi) {
  if (eta_schedule.empty()) throw DomainError("contraction schedule is empty");
  detail::require_finite(phi, "phi");
  ContractionReport report;
  report.gamma = std::sin(phi);
  report.target = shear2(report.gamma);
  for (double eta : eta_schedule) {
    if (std::isnan(eta) || eta < 0.0) throw DomainError("schedule rapidities must be >= 0");
    ContractionStep s;
    s.eta = eta;
    if (std::isinf(eta)) {
      s.elliptic_core = report.target;
      s.hyperbolic_core = report.target;
      s.momentum_residual = preservation_residual(lift(report.target), {0, 0, 1, 1});
    } else {
      detail::require_exp_range(eta, "schedule rapidity");
      const double shrink = report.gamma * std::exp(-eta);
      s.phi = std::asin(shrink);
      s.chi = std::asinh(shrink);
      s.epsilon = shrink * std::exp(-eta);
      s.elliptic_core = boost2(eta) * rot2(2.0 * s.phi) * boost2(-eta);
      s.hyperbolic_core = boost2(eta) * squeeze2(-2.0 * s.chi) * boost2(-eta);
      // Unit mass: the fixed momentum is (0, 0, sinh eta, cosh eta).
      s.momentum_residual =
          preservation_residual(lift(s.elliptic_core), {0, 0, std::sinh(eta), std::cosh(eta)});
    }
    s.elliptic_distance = max_abs_diff(s.elliptic_core, report.target);
    s.hyperbolic_distance = max_abs_diff(s.hyperbolic_core, report.target);
    report.steps.push_back(s);
  }
  return report;
}

}  // namespace abcd
