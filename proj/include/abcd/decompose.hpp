#pragma once

// Conjugacy-class machinery for unimodular 2x2 matrices: trace classification,
// rotation to equi-diagonal form, and the Wigner / Bargmann / Iwasawa
// factorizations together with the conversions between them.

#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "abcd/mat_core.hpp"

namespace abcd {

inline constexpr double kClassTol = 1e-9;
inline constexpr double kEquidiagonalTol = 1e-9;
inline constexpr double kTransitionWindow = 0.1;

enum class ConjClass { Elliptic, Parabolic, Hyperbolic };

std::string_view to_string(ConjClass c) noexcept;

struct MatrixClass {
  ConjClass tag = ConjClass::Parabolic;
  double trace = 2.0;
  // |trace| was compared against 2 because trace <= -2 + tol.
  bool negative_trace = false;
};

// Elliptic if |tr| < 2 - tol, hyperbolic if |tr| > 2 + tol, parabolic otherwise.
// Traces near or below -2 are classified by magnitude and flagged.
MatrixClass classify(const Mat2& m, double tol = kClassTol);
MatrixClass classify_trace(double trace, double tol = kClassTol);

struct Equidiagonal {
  double alpha = 0.0;  // rot2 argument: e = rot2(alpha) m rot2(-alpha)
  Mat2 e;
};

// Rotation angle of smallest magnitude (ties to +pi/2) making both diagonal
// entries equal to trace/2.
Equidiagonal equidiagonalize(const Mat2& m);

bool is_equidiagonal(const Mat2& m, double tol = kEquidiagonalTol) noexcept;

// ---- Wigner ---------------------------------------------------------------

// Core matrices W(tau):
//   Elliptic   [[cos phi, -sin phi], [sin phi, cos phi]]        = rot2(2 phi)
//   Hyperbolic [[cosh chi, -sinh chi], [-sinh chi, cosh chi]]   = squeeze2(-2 chi)
//   Parabolic  [[1, -gamma], [0, 1]]                            = shear2(gamma)
struct Elliptic {
  double phi = 0.0;
};
struct Hyperbolic {
  double chi = 0.0;
};
struct Parabolic {
  double gamma = 0.0;
};

using WignerCore = std::variant<Elliptic, Hyperbolic, Parabolic>;

// e = s * T B(eta) W(tau) B(-eta) T^-1 with s = -1 when `negated`, and
// T = rot2(-pi) when `lower` (lower-triangular parabolic), identity otherwise.
struct WignerForm {
  WignerCore core;
  double eta = 0.0;
  bool negated = false;
  bool lower = false;

  ConjClass kind() const noexcept;
  // phi, chi or gamma depending on kind()
  double parameter() const noexcept;
};

Mat2 wigner_matrix(const WignerCore& core);
// W(n tau)
WignerCore scale_core(const WignerCore& core, std::int64_t n);

// Requires an equi-diagonal input (|e11 - e22| <= 1e-9 * scale).
// Elliptic:   cos phi = e11, sin phi = c e^eta, e^{2 eta} = -b / c
// Hyperbolic: cosh chi = e11, sinh chi = -b e^-eta, e^{2 eta} = b / c
// Parabolic:  eta = 0, gamma = -b (or gamma = c with `lower` set)
WignerForm wigner_decompose(const Mat2& e, double tol = kClassTol);
Mat2 wigner_recompose(const WignerForm& w);

// w^n, evaluated as B(eta) W(n tau) B(-eta).
Mat2 wigner_power(const WignerForm& w, std::int64_t n);

// m^n through equidiagonalize + Wigner form; n >= 0.
Mat2 power(const Mat2& m, std::int64_t n, double tol = kClassTol);

// ---- Bargmann / Iwasawa ---------------------------------------------------

struct BargmannForm {
  double theta = 0.0;
  double lambda = 0.0;
};

// rot2(theta) squeeze2(-2 lambda) rot2(theta) =
//   [[cosh l cos t, -sinh l - cosh l sin t], [-sinh l + cosh l sin t, cosh l cos t]]
Mat2 bargmann_matrix(const BargmannForm& bf);
BargmannForm bargmann_decompose(const Mat2& e);
WignerForm bargmann_to_wigner(const BargmannForm& bf, double tol = kClassTol);

// cosh(lambda) sin(theta) - sinh(lambda): the lower-left Bargmann entry. Zero on
// the Iwasawa (triangular) boundary.
double iwasawa_gap(const BargmannForm& bf) noexcept;

// ---- transition near the parabolic boundary --------------------------------

enum class TransitionSide { RotationLike, SqueezeLike };  // epsilon > 0 / epsilon < 0

struct TransitionForm {
  double alpha = 0.0;
  double beta = 0.0;
  TransitionSide side = TransitionSide::RotationLike;
  double epsilon = 0.0;
  double eta = 0.0;

  // Recomposition error allowed by the first-order core: 1e-8 + K eps^2,
  // K = sinh^2(eta) cosh^2(eta).
  double error_bound() const noexcept;
};

// First-order entries, not unimodular beyond O(eps^2).
using RawMat2 = std::array<double, 4>;

// Near-parabolic equi-diagonal [[a, b], [c, a]] with b = -2 sinh(eta) < 0 and
// c = eps cosh(eta). Rejects |tr - 2| > window and b >= 0.
TransitionForm transition_decompose(const Mat2& e, double window = kTransitionWindow);

// diag(1/sqrt(beta), sqrt(beta)) core diag(sqrt(beta), 1/sqrt(beta)) with
// core [[1 -+ alpha^2/2, -alpha], [+-alpha, 1 -+ alpha^2/2]].
RawMat2 transition_recompose(const TransitionForm& tf);

// Exact unimodular member of the one-parameter family through the parabolic
// point shear2(2 sinh eta); eta > 0.
Mat2 transition_matrix(double eta, double epsilon);

struct TransitionSample {
  double epsilon = 0.0;
  double diag = 1.0;
  double upper = 0.0;
  double lower = 0.0;
  ConjClass tag = ConjClass::Parabolic;
  double angle_or_rapidity = 0.0;  // phi (elliptic), chi (hyperbolic), 0 (parabolic)
};

// `steps` samples over [lo, hi], lo < 0 < hi, steps >= 3, eta > 0.
std::vector<TransitionSample> transition_curve(double eta, double lo, double hi, int steps,
                                               double tol = kClassTol);

}  // namespace abcd
