#pragma once

// Lorentz-group side: the 2x2 -> 4x4 lift, momentum frames, and elements of
// the little groups of massive, space-like and massless four-momenta along z.

#include <optional>
#include <variant>
#include <vector>

#include "abcd/mat_core.hpp"

namespace abcd {

struct Massive {
  double mass = 1.0;
  double momentum = 0.0;  // p_z
};
struct Spacelike {
  double momentum = 1.0;  // p_z
  double energy = 0.0;    // 0 <= E < p
};
struct Massless {
  double momentum = 1.0;  // p_z > 0
};

using MomentumKind = std::variant<Massive, Spacelike, Massless>;

// Throws DomainError when the kind's invariants fail.
void validate(const MomentumKind& kind);

// (0, 0, p, E) with E = sqrt(p^2 + m^2), the given E, or p.
FourVector four_momentum(const MomentumKind& kind);

// Action of m on X = [[t + z, x], [x, t - z]] by X -> m X m^T, identity on y.
Mat4 lift(const Mat2& m);

struct FrameBoost {
  double eta = 0.0;     // boost4_z(eta) maps `standard` to the kind's momentum
  FourVector standard;  // (0,0,0,m), (0,0,sqrt(p^2-E^2),0), or (0,0,p,p)
  bool no_rest_frame = false;
};

FrameBoost boost_to_frame(const MomentumKind& kind);

struct LittleGroupElement {
  Mat4 mat4;
  FourVector fixed_momentum;
  double eta = 0.0;    // frame rapidity (0 for massless)
  double param = 0.0;  // phi, chi or gamma
  Mat2 core;           // 2x2 preimage: B(eta) R(2 phi) B(-eta), B(eta) S(-2 chi) B(-eta), shear2(-2 gamma)
};

// Massive:   boost4_z(eta) rot4_y(2 phi) boost4_z(-eta)
// Spacelike: boost4_z(eta) boost4_x(-2 chi) boost4_z(-eta)
// Massless:  gauge4(gamma)
LittleGroupElement little_group_element(const MomentumKind& kind, double param);

// ||e v - v||_inf <= tol * max(1, ||v||_inf)
bool preserves(const Mat4& e, const FourVector& v, double tol);
double preservation_residual(const Mat4& e, const FourVector& v) noexcept;

struct ContractionStep {
  double eta = 0.0;             // +inf marks the contracted (massless) limit
  double phi = 0.0;             // elliptic side: sin phi = gamma e^-eta
  double chi = 0.0;             // hyperbolic side: sinh chi = gamma e^-eta
  double epsilon = 0.0;         // lower-left entry gamma e^{-2 eta} of the elliptic core
  Mat2 elliptic_core;           // B(eta) R(2 phi) B(-eta)
  Mat2 hyperbolic_core;         // B(eta) S(-2 chi) B(-eta)
  double elliptic_distance = 0.0;    // max-entry distance to shear2(gamma)
  double hyperbolic_distance = 0.0;
  double momentum_residual = 0.0;    // relative, lifted elliptic core on its momentum
};

struct ContractionReport {
  double gamma = 0.0;  // sin(phi): the limiting shear parameter
  Mat2 target;         // shear2(gamma)
  std::vector<ContractionStep> steps;

  // Both distance sequences non-increasing along the schedule.
  bool monotone() const noexcept;
};

// Schedule entries must be >= 0 (or +inf); nonempty.
ContractionReport contraction_demo(const std::vector<double>& eta_schedule, double phi);

}  // namespace abcd
