#pragma once

// Periodic two-medium optical stack. One cycle starts half-way through medium
// 2, crosses into medium 1, traverses it, and returns to the middle of the
// next medium-2 layer.

#include <cstdint>
#include <string_view>

#include "abcd/decompose.hpp"
#include "abcd/mat_core.hpp"

namespace abcd {

struct LayerStack {
  double phi1 = 0.0;  // phase per traversal of medium 1
  double phi2 = 0.0;  // phase per traversal of medium 2
  double eta = 0.0;   // boundary parameter
  std::int64_t periods = 0;

  // Throws DomainError on non-finite fields or negative periods.
  void validate() const;
};

// diag(e^{-i phi}, e^{i phi})
CMat2 phase_matrix(double phi);
// [[cosh(eta/2), sinh(eta/2)], [sinh(eta/2), cosh(eta/2)]]
CMat2 boundary_matrix(double eta);

// P(phi2/2) B(eta) P(phi1) B(-eta) P(phi2/2)
CMat2 cycle_complex(const LayerStack& stack);

// (e^{i pi/4} / sqrt 2) [[1, 1], [i, -i]]
CMat2 conjugation_matrix();

// C m C^-1 as a real matrix. Throws InternalError if the imaginary residue
// exceeds 1e-10 * max(1, |m|).
Mat2 realify(const CMat2& m);

// rot2(phi2) boost2(eta) rot2(2 phi1) boost2(-eta) rot2(phi2)
Mat2 cycle_real(const LayerStack& stack);

struct CycleBargmann {
  double lambda = 0.0;
  double theta = 0.0;       // inner block angle
  double theta_star = 0.0;  // after absorbing the two medium-2 half layers

  BargmannForm inner() const noexcept { return {theta, lambda}; }
  BargmannForm cycle() const noexcept { return {theta_star, lambda}; }
};

struct InnerClosedForm {
  double cosh_lambda = 1.0;
  double cos_theta = 1.0;
};

// Bargmann parameters of the inner block boost2(eta) rot2(2 phi1) boost2(-eta):
//   cosh l = cosh eta sqrt(1 - cos^2 phi1 tanh^2 eta),  cos t = cos phi1 / cosh l
InnerClosedForm inner_closed_form(double phi1, double eta);

// Inner-block parameters (see inner_closed_form) plus the medium-2 shift
// t* = t + phi2. Throws InternalError unless rot2(t*) squeeze2(-2 l) rot2(t*)
// reproduces cycle_real within 1e-9.
CycleBargmann cycle_bargmann(const LayerStack& stack);

enum class Band { PassBand, BandEdge, StopBand };
std::string_view to_string(Band b) noexcept;

struct CycleReport {
  Mat2 cycle;
  CycleBargmann bargmann;
  WignerForm wigner;
  MatrixClass cls;
  Band band = Band::PassBand;
  Mat2 transfer_n;
};

Band band_of(const MatrixClass& cls) noexcept;

// Cycle matrix, its Bargmann and Wigner forms, and cycle^periods computed as
// B(eta*) W(N tau*) B(-eta*). Hyperbolic overflow throws RangeError carrying
// the exponent estimate.
CycleReport transfer(const LayerStack& stack, double tol = kClassTol);

// Same Wigner form, different period count; avoids recomputing the report.
Mat2 transfer_n(const CycleReport& report, std::int64_t periods);

}  // namespace abcd
