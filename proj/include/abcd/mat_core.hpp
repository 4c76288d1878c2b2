#pragma once

// Value types for unimodular 2x2 matrices (real and complex), 4x4 Lorentz
// matrices acting on (x, y, z, t), and the one-parameter generators.
//
// All 2x2 generators use the half-angle convention:
//   rot2(phi)     = [[cos(phi/2), -sin(phi/2)], [sin(phi/2), cos(phi/2)]]
//   boost2(eta)   = diag(e^{eta/2}, e^{-eta/2})
//   squeeze2(chi) = [[cosh(chi/2), sinh(chi/2)], [sinh(chi/2), cosh(chi/2)]]
//   shear2(gamma) = [[1, -gamma], [0, 1]]

#include <array>
#include <complex>
#include <iosfwd>

#include "abcd/errors.hpp"

namespace abcd {

inline constexpr double kDetTol = 1e-12;
inline constexpr double kComposeDriftTol = 1e-9;
inline constexpr double kMetricTol = 1e-10;

// Largest |x| for which exp(x) is finite in double precision.
inline constexpr double kMaxExpArg = 709.0;

// Real 2x2 matrix with unit determinant, row-major [[a, b], [c, d]].
class Mat2 {
 public:
  // Identity.
  constexpr Mat2() = default;

  // Throws DomainError unless |ad - bc - 1| <= tol * max(1, |ad| + |bc|)
  // and every entry is finite.
  static Mat2 from_entries(double a, double b, double c, double d, double tol = kDetTol);

  static Mat2 identity() { return Mat2{}; }

  double a() const noexcept { return m_[0]; }
  double b() const noexcept { return m_[1]; }
  double c() const noexcept { return m_[2]; }
  double d() const noexcept { return m_[3]; }
  double operator()(int row, int col) const noexcept { return m_[2 * row + col]; }
  const std::array<double, 4>& entries() const noexcept { return m_; }

  double trace() const noexcept { return m_[0] + m_[3]; }
  double det() const noexcept { return m_[0] * m_[3] - m_[1] * m_[2]; }
  Mat2 inverse() const noexcept { return Mat2(m_[3], -m_[1], -m_[2], m_[0]); }
  Mat2 transpose() const noexcept { return Mat2(m_[0], m_[2], m_[1], m_[3]); }
  Mat2 operator-() const noexcept { return Mat2(-m_[0], -m_[1], -m_[2], -m_[3]); }

  double max_abs() const noexcept;

  friend Mat2 operator*(const Mat2& lhs, const Mat2& rhs);
  friend bool operator==(const Mat2&, const Mat2&) = default;

 private:
  constexpr Mat2(double a, double b, double c, double d) : m_{a, b, c, d} {}
  std::array<double, 4> m_{1.0, 0.0, 0.0, 1.0};
};

Mat2 compose(const Mat2& m1, const Mat2& m2);
double max_abs_diff(const Mat2& lhs, const Mat2& rhs) noexcept;
std::ostream& operator<<(std::ostream& os, const Mat2& m);

using Complex = std::complex<double>;

// Complex 2x2 matrix with determinant 1 + 0i.
class CMat2 {
 public:
  CMat2() = default;
  static CMat2 from_entries(Complex a, Complex b, Complex c, Complex d, double tol = kDetTol);
  static CMat2 identity() { return CMat2{}; }

  Complex operator()(int row, int col) const noexcept { return m_[2 * row + col]; }
  const std::array<Complex, 4>& entries() const noexcept { return m_; }
  Complex det() const noexcept { return m_[0] * m_[3] - m_[1] * m_[2]; }
  CMat2 inverse() const noexcept { return CMat2(m_[3], -m_[1], -m_[2], m_[0]); }
  double max_abs() const noexcept;

  friend CMat2 operator*(const CMat2& lhs, const CMat2& rhs);

 private:
  CMat2(Complex a, Complex b, Complex c, Complex d) : m_{a, b, c, d} {}
  std::array<Complex, 4> m_{Complex{1.0}, Complex{}, Complex{}, Complex{1.0}};
};

CMat2 compose(const CMat2& m1, const CMat2& m2);
double max_abs_diff(const CMat2& lhs, const CMat2& rhs) noexcept;

// Minkowski four-vector (x, y, z, t); for momenta (px, py, pz, E) with c = 1.
struct FourVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double t = 0.0;

  // x^2 + y^2 + z^2 - t^2
  double minkowski_norm2() const noexcept { return x * x + y * y + z * z - t * t; }
  double max_abs() const noexcept;
  friend bool operator==(const FourVector&, const FourVector&) = default;
};

double max_abs_diff(const FourVector& lhs, const FourVector& rhs) noexcept;
std::ostream& operator<<(std::ostream& os, const FourVector& v);

// Real 4x4 Lorentz matrix on (x, y, z, t), metric g = diag(1, 1, 1, -1).
class Mat4 {
 public:
  Mat4() = default;

  // Throws DomainError unless ||M^T g M - g||_inf <= tol * max(1, ||M||_inf^2).
  static Mat4 from_entries(const std::array<double, 16>& rows, double tol = kMetricTol);
  static Mat4 identity() { return Mat4{}; }

  double operator()(int row, int col) const noexcept { return m_[4 * row + col]; }
  const std::array<double, 16>& entries() const noexcept { return m_; }
  double max_abs() const noexcept;

  // ||M^T g M - g||_inf
  double metric_residual() const noexcept;

  FourVector apply(const FourVector& v) const noexcept;

  friend Mat4 operator*(const Mat4& lhs, const Mat4& rhs);

 private:
  explicit Mat4(const std::array<double, 16>& m) : m_(m) {}
  std::array<double, 16> m_{1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1};
};

Mat4 compose(const Mat4& m1, const Mat4& m2);
double max_abs_diff(const Mat4& lhs, const Mat4& rhs) noexcept;
std::ostream& operator<<(std::ostream& os, const Mat4& m);

Mat2 rot2(double phi);
Mat2 boost2(double eta);
Mat2 squeeze2(double chi);
Mat2 shear2(double gamma);

// Rotation about y by the full angle phi (mixes x and z).
Mat4 rot4_y(double phi);
// Boost along z with rapidity eta (mixes z and t).
Mat4 boost4_z(double eta);
// Boost along x with rapidity chi (mixes x and t).
Mat4 boost4_x(double chi);
// Null-vector-preserving transformation fixing (0, 0, p, p).
Mat4 gauge4(double gamma);

namespace detail {
void require_finite(double value, const char* what);
// Throws RangeError when exp(|value|) would overflow.
void require_exp_range(double value, const char* what);
}  // namespace detail

}  // namespace abcd
