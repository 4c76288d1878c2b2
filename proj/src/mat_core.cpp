#include "abcd/mat_core.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

namespace abcd {

namespace detail {

void require_finite(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw DomainError(std::string(what) + " must be finite");
  }
}

void require_exp_range(double value, const char* what) {
  require_finite(value, what);
  if (std::abs(value) > kMaxExpArg) {
    throw RangeError(std::string(what) + " overflows double precision", std::abs(value));
  }
}

}  // namespace detail

namespace {

double det_scale(double a, double b, double c, double d) {
  return std::max(1.0, std::abs(a * d) + std::abs(b * c));
}

}  // namespace

// ---- Mat2 -----------------------------------------------------------------

Mat2 Mat2::from_entries(double a, double b, double c, double d, double tol) {
  for (double v : {a, b, c, d}) detail::require_finite(v, "matrix entry");
  const double det = a * d - b * c;
  if (std::abs(det - 1.0) > tol * det_scale(a, b, c, d)) {
    throw DomainError("matrix is not unimodular: determinant = " + std::to_string(det));
  }
  return Mat2(a, b, c, d);
}

double Mat2::max_abs() const noexcept {
  double r = 0.0;
  for (double v : m_) r = std::max(r, std::abs(v));
  return r;
}

Mat2 operator*(const Mat2& l, const Mat2& r) {
  const auto& x = l.m_;
  const auto& y = r.m_;
  Mat2 out(x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
           x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]);
  const auto& o = out.m_;
  if (!std::isfinite(o[0]) || !std::isfinite(o[1]) || !std::isfinite(o[2]) ||
      !std::isfinite(o[3])) {
    throw RangeError("matrix product overflowed",
                     std::log(std::max(l.max_abs(), 1.0)) + std::log(std::max(r.max_abs(), 1.0)));
  }
  // Products of unimodular matrices drift only by rounding, which is bounded by
  // the operand norms; anything larger is a bug.
  const double operands = l.max_abs() * r.max_abs();
  const double scale = std::max(det_scale(o[0], o[1], o[2], o[3]), operands * operands);
  if (std::abs(out.det() - 1.0) > kComposeDriftTol * scale) {
    throw InternalError("determinant drift in Mat2 product: " + std::to_string(out.det()));
  }
  return out;
}

Mat2 compose(const Mat2& m1, const Mat2& m2) { return m1 * m2; }

double max_abs_diff(const Mat2& lhs, const Mat2& rhs) noexcept {
  double r = 0.0;
  for (int i = 0; i < 4; ++i) r = std::max(r, std::abs(lhs.entries()[i] - rhs.entries()[i]));
  return r;
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
  return os << "[[" << m.a() << ", " << m.b() << "], [" << m.c() << ", " << m.d() << "]]";
}

// ---- CMat2 ----------------------------------------------------------------

CMat2 CMat2::from_entries(Complex a, Complex b, Complex c, Complex d, double tol) {
  for (Complex v : {a, b, c, d}) {
    detail::require_finite(v.real(), "matrix entry");
    detail::require_finite(v.imag(), "matrix entry");
  }
  const Complex det = a * d - b * c;
  const double scale = std::max(1.0, std::abs(a * d) + std::abs(b * c));
  if (std::abs(det - Complex{1.0}) > tol * scale) {
    throw DomainError("complex matrix is not unimodular: |det - 1| = " +
                      std::to_string(std::abs(det - Complex{1.0})));
  }
  return CMat2(a, b, c, d);
}

double CMat2::max_abs() const noexcept {
  double r = 0.0;
  for (const Complex& v : m_) r = std::max(r, std::abs(v));
  return r;
}

CMat2 operator*(const CMat2& l, const CMat2& r) {
  const auto& x = l.m_;
  const auto& y = r.m_;
  CMat2 out(x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
            x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]);
  const double scale = std::max(1.0, l.max_abs() * r.max_abs());
  if (!(std::abs(out.det() - Complex{1.0}) <= kComposeDriftTol * scale * scale)) {
    throw InternalError("determinant drift in CMat2 product");
  }
  return out;
}

CMat2 compose(const CMat2& m1, const CMat2& m2) { return m1 * m2; }

double max_abs_diff(const CMat2& lhs, const CMat2& rhs) noexcept {
  double r = 0.0;
  for (int i = 0; i < 4; ++i) r = std::max(r, std::abs(lhs.entries()[i] - rhs.entries()[i]));
  return r;
}

// ---- FourVector -----------------------------------------------------------

double FourVector::max_abs() const noexcept {
  return std::max({std::abs(x), std::abs(y), std::abs(z), std::abs(t)});
}

double max_abs_diff(const FourVector& lhs, const FourVector& rhs) noexcept {
  return std::max({std::abs(lhs.x - rhs.x), std::abs(lhs.y - rhs.y), std::abs(lhs.z - rhs.z),
                   std::abs(lhs.t - rhs.t)});
}

std::ostream& operator<<(std::ostream& os, const FourVector& v) {
  return os << "(" << v.x << ", " << v.y << ", " << v.z << ", " << v.t << ")";
}

// ---- Mat4 -----------------------------------------------------------------

namespace {

constexpr std::array<double, 4> kMetric{1.0, 1.0, 1.0, -1.0};

double metric_residual_of(const std::array<double, 16>& m) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += m[4 * k + i] * kMetric[k] * m[4 * k + j];
      const double target = (i == j) ? kMetric[i] : 0.0;
      worst = std::max(worst, std::abs(s - target));
    }
  }
  return worst;
}

double max_abs_of(const std::array<double, 16>& m) {
  double r = 0.0;
  for (double v : m) r = std::max(r, std::abs(v));
  return r;
}

}  // namespace

Mat4 Mat4::from_entries(const std::array<double, 16>& rows, double tol) {
  for (double v : rows) detail::require_finite(v, "matrix entry");
  const double norm = max_abs_of(rows);
  const double residual = metric_residual_of(rows);
  if (residual > tol * std::max(1.0, norm * norm)) {
    throw DomainError("matrix does not preserve the Minkowski metric: residual = " +
                      std::to_string(residual));
  }
  return Mat4(rows);
}

double Mat4::max_abs() const noexcept { return max_abs_of(m_); }

double Mat4::metric_residual() const noexcept { return metric_residual_of(m_); }

FourVector Mat4::apply(const FourVector& v) const noexcept {
  const std::array<double, 4> in{v.x, v.y, v.z, v.t};
  std::array<double, 4> out{};
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) out[i] += m_[4 * i + k] * in[k];
  }
  return {out[0], out[1], out[2], out[3]};
}

Mat4 operator*(const Mat4& l, const Mat4& r) {
  std::array<double, 16> out{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += l.m_[4 * i + k] * r.m_[4 * k + j];
      out[4 * i + j] = s;
    }
  }
  for (double v : out) {
    if (!std::isfinite(v)) throw RangeError("4x4 product overflowed", kMaxExpArg);
  }
  const double norm = std::max(1.0, l.max_abs() * r.max_abs());
  if (metric_residual_of(out) > kComposeDriftTol * norm * norm) {
    throw InternalError("metric drift in Mat4 product");
  }
  return Mat4(out);
}

Mat4 compose(const Mat4& m1, const Mat4& m2) { return m1 * m2; }

double max_abs_diff(const Mat4& lhs, const Mat4& rhs) noexcept {
  double r = 0.0;
  for (int i = 0; i < 16; ++i) r = std::max(r, std::abs(lhs.entries()[i] - rhs.entries()[i]));
  return r;
}

std::ostream& operator<<(std::ostream& os, const Mat4& m) {
  os << "[";
  for (int i = 0; i < 4; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < 4; ++j) os << (j ? ", " : "") << m(i, j);
    os << "]";
  }
  return os << "]";
}

// ---- generators -----------------------------------------------------------

Mat2 rot2(double phi) {
  detail::require_finite(phi, "rotation angle");
  const double c = std::cos(0.5 * phi);
  const double s = std::sin(0.5 * phi);
  return Mat2::from_entries(c, -s, s, c);
}

Mat2 boost2(double eta) {
  detail::require_exp_range(0.5 * eta, "boost rapidity");
  return Mat2::from_entries(std::exp(0.5 * eta), 0.0, 0.0, std::exp(-0.5 * eta));
}

Mat2 squeeze2(double chi) {
  detail::require_exp_range(0.5 * chi, "squeeze rapidity");
  const double ch = std::cosh(0.5 * chi);
  const double sh = std::sinh(0.5 * chi);
  return Mat2::from_entries(ch, sh, sh, ch);
}

Mat2 shear2(double gamma) {
  detail::require_finite(gamma, "shear parameter");
  return Mat2::from_entries(1.0, -gamma, 0.0, 1.0);
}

Mat4 rot4_y(double phi) {
  detail::require_finite(phi, "rotation angle");
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  return Mat4::from_entries({c, 0, s, 0,  //
                             0, 1, 0, 0,  //
                             -s, 0, c, 0,  //
                             0, 0, 0, 1});
}

Mat4 boost4_z(double eta) {
  detail::require_exp_range(eta, "boost rapidity");
  const double ch = std::cosh(eta);
  const double sh = std::sinh(eta);
  return Mat4::from_entries({1, 0, 0, 0,  //
                             0, 1, 0, 0,  //
                             0, 0, ch, sh,  //
                             0, 0, sh, ch});
}

Mat4 boost4_x(double chi) {
  detail::require_exp_range(chi, "boost rapidity");
  const double ch = std::cosh(chi);
  const double sh = std::sinh(chi);
  return Mat4::from_entries({ch, 0, 0, sh,  //
                             0, 1, 0, 0,  //
                             0, 0, 1, 0,  //
                             sh, 0, 0, ch});
}

Mat4 gauge4(double gamma) {
  detail::require_finite(gamma, "gauge parameter");
  const double g2 = 2.0 * gamma * gamma;
  if (!std::isfinite(g2)) throw RangeError("gauge parameter overflows", std::log(std::abs(gamma)));
  return Mat4::from_entries({1, 0, -2 * gamma, 2 * gamma,  //
                             0, 1, 0, 0,  //
                             2 * gamma, 0, 1 - g2, g2,  //
                             2 * gamma, 0, -g2, 1 + g2});
}

}  // namespace abcd
