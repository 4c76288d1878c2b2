#include "abcd/multilayer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace abcd {

namespace {

constexpr double kRealifyTol = 1e-10;
constexpr double kCycleCheckTol = 1e-9;

}  // namespace

void LayerStack::validate() const {
  detail::require_finite(phi1, "phi1");
  detail::require_finite(phi2, "phi2");
  detail::require_exp_range(eta, "eta");
  if (periods < 0) throw DomainError("periods must be non-negative");
}

CMat2 phase_matrix(double phi) {
  detail::require_finite(phi, "phase");
  return CMat2::from_entries(std::polar(1.0, -phi), Complex{}, Complex{}, std::polar(1.0, phi));
}

CMat2 boundary_matrix(double eta) {
  detail::require_exp_range(0.5 * eta, "boundary eta");
  const Complex ch{std::cosh(0.5 * eta)};
  const Complex sh{std::sinh(0.5 * eta)};
  return CMat2::from_entries(ch, sh, sh, ch);
}

CMat2 cycle_complex(const LayerStack& stack) {
  stack.validate();
  const CMat2 half2 = phase_matrix(0.5 * stack.phi2);
  return half2 * boundary_matrix(stack.eta) * phase_matrix(stack.phi1) *
         boundary_matrix(-stack.eta) * half2;
}

CMat2 conjugation_matrix() {
  const Complex k = std::polar(1.0 / std::numbers::sqrt2, std::numbers::pi / 4);
  const Complex i{0.0, 1.0};
  return CMat2::from_entries(k, k, k * i, -k * i);
}

Mat2 realify(const CMat2& m) {
  const CMat2 c = conjugation_matrix();
  const CMat2 out = c * m * c.inverse();
  double imag = 0.0;
  for (const Complex& v : out.entries()) imag = std::max(imag, std::abs(v.imag()));
  if (imag > kRealifyTol * std::max(1.0, m.max_abs())) {
    throw InternalError("realify: imaginary residue " + std::to_string(imag));
  }
  return Mat2::from_entries(out(0, 0).real(), out(0, 1).real(), out(1, 0).real(),
                            out(1, 1).real(), kComposeDriftTol);
}

Mat2 cycle_real(const LayerStack& stack) {
  stack.validate();
  const Mat2 half2 = rot2(stack.phi2);
  return half2 * (boost2(stack.eta) * rot2(2.0 * stack.phi1) * boost2(-stack.eta)) * half2;
}

InnerClosedForm inner_closed_form(double phi1, double eta) {
  detail::require_finite(phi1, "phi1");
  detail::require_exp_range(eta, "eta");
  const double ch_eta = std::cosh(eta);
  const double th_eta = std::tanh(eta);
  const double cos1 = std::cos(phi1);
  const double cosh_lambda = ch_eta * std::sqrt(1.0 - cos1 * cos1 * th_eta * th_eta);
  return {cosh_lambda, cos1 / cosh_lambda};
}

CycleBargmann cycle_bargmann(const LayerStack& stack) {
  stack.validate();
  // Same angles as inner_closed_form, taken through sinh l = sinh eta sin phi1 and
  // cosh l sin t = cosh eta sin phi1, which keep their precision near lambda = 0.
  CycleBargmann out;
  out.lambda = std::asinh(std::sinh(stack.eta) * std::sin(stack.phi1));
  out.theta = std::atan2(std::cosh(stack.eta) * std::sin(stack.phi1), std::cos(stack.phi1));
  out.theta_star = out.theta + stack.phi2;

  const Mat2 expected = cycle_real(stack);
  const double err = max_abs_diff(bargmann_matrix(out.cycle()), expected);
  if (err > kCycleCheckTol * std::max(1.0, expected.max_abs())) {
    throw InternalError("cycle Bargmann form does not reproduce the cycle matrix (error " +
                        std::to_string(err) + ")");
  }
  return out;
}

std::string_view to_string(Band b) noexcept {
  switch (b) {
    case Band::PassBand: return "PassBand";
    case Band::BandEdge: return "BandEdge";
    case Band::StopBand: return "StopBand";
  }
  return "?";
}

Band band_of(const MatrixClass& cls) noexcept {
  switch (cls.tag) {
    case ConjClass::Elliptic: return Band::PassBand;
    case ConjClass::Parabolic: return Band::BandEdge;
    case ConjClass::Hyperbolic: return Band::StopBand;
  }
  return Band::PassBand;
}

CycleReport transfer(const LayerStack& stack, double tol) {
  stack.validate();
  CycleReport r;
  r.cycle = cycle_real(stack);
  r.bargmann = cycle_bargmann(stack);
  r.wigner = bargmann_to_wigner(r.bargmann.cycle(), tol);
  r.cls = classify(r.cycle, tol);
  r.band = band_of(r.cls);
  r.transfer_n = transfer_n(r, stack.periods);
  return r;
}

Mat2 transfer_n(const CycleReport& report, std::int64_t periods) {
  if (periods < 0) throw DomainError("periods must be non-negative");
  return wigner_power(report.wigner, periods);
}

}  // namespace abcd
