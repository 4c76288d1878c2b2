// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "abcd/cli.hpp"
#include "abcd/decompose.hpp"
#include "abcd/little_group.hpp"
#include "abcd/multilayer.hpp"
#include "golden_fixtures.hpp"
#include "support.hpp"

using namespace abcd;
using abcd::testing::Gen;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  return *mid;
}

// Round trip through equidiagonal form and Wigner form.
Outcome round_trip() {
  Gen g(1001);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Mat2 m = g.unimodular();
    const Equidiagonal eq = equidiagonalize(m);
    const Mat2 back = rot2(-eq.alpha) * wigner_recompose(wigner_decompose(eq.e)) * rot2(eq.alpha);
    worst = std::max(worst, max_abs_diff(back, m));
  }
  return {worst < 1e-10, "10^4 matrices, max entry error " + sci(worst) + " (limit 1e-10)"};
}

// Wigner power against iterated multiplication.
Outcome power_law() {
  Gen g(1002);
  int elliptic = 0, hyperbolic = 0;
  double worst_e = 0.0, worst_h = 0.0;
  while (elliptic < 100 || hyperbolic < 100) {
    const LayerStack s = g.stack(1.5);
    const CycleReport r = transfer(s);
    if (r.cls.tag == ConjClass::Elliptic && elliptic < 100) {
      ++elliptic;
      worst_e = std::max(worst_e, max_abs_diff(transfer_n(r, 1000), testing::iterate(r.cycle, 1000)));
    } else if (r.cls.tag == ConjClass::Hyperbolic && hyperbolic < 100) {
      ++hyperbolic;
      worst_h = std::max(worst_h, testing::max_rel_diff(transfer_n(r, 50), testing::iterate(r.cycle, 50)));
    }
  }
  return {worst_e < 1e-8 && worst_h < 1e-8,
          "elliptic N=1000 max error " + sci(worst_e) + ", hyperbolic N=50 relative error " +
              sci(worst_h) + " (limit 1e-8)"};
}

// Complex pipeline with conjugation against the real rotation/boost pipeline.
Outcome conjugation_oracle() {
  Gen g(1003);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const LayerStack s = g.stack(3.0);
    worst = std::max(worst, max_abs_diff(realify(cycle_complex(s)), cycle_real(s)));
  }
  return {worst < 1e-10, "10^3 stacks, max entry difference " + sci(worst) + " (limit 1e-10)"};
}

// Closed-form inner-block parameters against the numerical Bargmann decomposition.
Outcome closed_forms() {
  Gen g(1004);
  double worst = 0.0, worst_id = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double phi = g.uniform(-kPi, kPi);
    const double eta = g.uniform(-3, 3);
    const InnerClosedForm cf = inner_closed_form(phi, eta);
    const BargmannForm bf = bargmann_decompose(boost2(eta) * rot2(2 * phi) * boost2(-eta));
    worst = std::max({worst, std::abs(cf.cosh_lambda - std::cosh(bf.lambda)),
                      std::abs(cf.cos_theta - std::cos(bf.theta))});
    worst_id = std::max({worst_id, std::abs(std::sinh(bf.lambda) - std::sinh(eta) * std::sin(phi)),
                         std::abs(std::cosh(bf.lambda) * std::sin(bf.theta) -
                                  std::cosh(eta) * std::sin(phi))});
  }
  return {worst < 1e-10 && worst_id < 1e-10, "10^3 samples, closed form error " + sci(worst) +
                                                  ", identity error " + sci(worst_id) +
                                                  " (limit 1e-10)"};
}

// Little-group invariance, lift homomorphism, and the 4x4 generators.
Outcome little_groups() {
  Gen g(1005);
  double worst_inv = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double param = g.uniform(-3, 3);
    const double p = g.uniform(-3, 3);
    const MomentumKind kinds[] = {Massive{g.uniform(0.1, 3), p},
                                  Spacelike{std::abs(p) + 0.1, g.uniform(0, std::abs(p))},
                                  Massless{std::abs(p) + 0.01}};
    for (const MomentumKind& k : kinds) {
      const LittleGroupElement e = little_group_element(k, param);
      worst_inv = std::max(worst_inv, preservation_residual(e.mat4, e.fixed_momentum));
    }
  }
  double worst_hom = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Mat2 a = g.unimodular(1.0);
    const Mat2 b = g.unimodular(1.0);
    const Mat4 ab = lift(a * b);
    worst_hom = std::max(worst_hom, max_abs_diff(ab, lift(a) * lift(b)) / std::max(1.0, ab.max_abs()));
  }
  double worst_gen = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double x = g.uniform(-3, 3);
    worst_gen = std::max({worst_gen, max_abs_diff(lift(rot2(x)), rot4_y(x)),
                          max_abs_diff(lift(boost2(x)), boost4_z(x)),
                          max_abs_diff(lift(squeeze2(x)), boost4_x(x))});
  }
  return {worst_inv < 1e-10 && worst_hom < 1e-11 && worst_gen < 1e-12,
          "invariance residual " + sci(worst_inv) + " (limit 1e-10), homomorphism " +
              sci(worst_hom) + " (limit 1e-11), generators " + sci(worst_gen) + " (limit 1e-12)"};
}

// Transition curve from the CLI: continuity, class flip, non-analytic angle.
Outcome transition_curve_shape() {
  std::ostringstream out, err;
  const int code = cli::run({"transition-curve", "--eta", "0.8", "--eps-range=-0.05,0.05", "--steps",
                             "2001", "--precision", "17"},
                            out, err);
  if (code != cli::kExitOk) return {false, "CLI exit code " + std::to_string(code)};

  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  std::vector<std::array<double, 4>> entries;  // epsilon, diag, upper, lower
  std::vector<std::string> classes;
  std::vector<double> angle;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (cells.size() != 6) return {false, "malformed row: " + line};
    entries.push_back({std::stod(cells[0]), std::stod(cells[1]), std::stod(cells[2]), std::stod(cells[3])});
    classes.push_back(cells[4]);
    angle.push_back(std::stod(cells[5]));
  }
  const std::size_t n = entries.size();
  if (n != 2001) return {false, "expected 2001 rows, got " + std::to_string(n)};

  // (a) adjacent jumps of every matrix entry within 10x the column's typical grid slope
  double worst_jump_ratio = 0.0;
  for (int col = 1; col <= 3; ++col) {
    std::vector<double> jumps;
    for (std::size_t i = 1; i < n; ++i) jumps.push_back(std::abs(entries[i][col] - entries[i - 1][col]));
    const double slope = median(jumps);
    worst_jump_ratio = std::max(worst_jump_ratio, *std::max_element(jumps.begin(), jumps.end()) / slope);
  }
  const bool continuous = worst_jump_ratio < 10.0;

  // (b) class flips exactly where epsilon changes sign
  bool flip = true;
  std::size_t zero = n;
  for (std::size_t i = 0; i < n; ++i) {
    const double eps = entries[i][0];
    const std::string want = eps < 0 ? "Hyperbolic" : (eps > 0 ? "Elliptic" : "Parabolic");
    flip = flip && classes[i] == want;
    if (eps == 0.0) zero = i;
  }
  flip = flip && zero != n;

  // (c) second difference of the angle column spikes at epsilon = 0
  double spike_ratio = 0.0;
  if (zero != n && zero > 0 && zero + 1 < n) {
    std::vector<double> off;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (i == zero) continue;
      off.push_back(std::abs(angle[i + 1] - 2 * angle[i] + angle[i - 1]));
    }
    const double at_zero = std::abs(angle[zero + 1] - 2 * angle[zero] + angle[zero - 1]);
    spike_ratio = at_zero / median(off);
  }
  const bool kink = spike_ratio > 100.0;

  return {continuous && flip && kink,
          "max jump / median jump " + sci(worst_jump_ratio) + " (limit 10), class flip at 0 " +
              (flip ? "yes" : "no") + ", second-difference spike " + sci(spike_ratio) +
              "x median (limit 100x)"};
}

// Pass band stays bounded, stop band grows by e^chi per period.
Outcome band_dichotomy() {
  int elliptic = 0, hyperbolic = 0, edge = 0;
  bool bounded = true;
  double worst_ratio = 0.0;
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 4; ++j) {
      for (int k = 0; k < 5; ++k) {
        const LayerStack s{0.15 + 0.3 * i, -1.2 + 0.8 * j, 0.4 + 0.5 * k, 0};
        const CycleReport r = transfer(s);
        if (r.cls.tag == ConjClass::Elliptic) {
          ++elliptic;
          const double bound = std::exp(2 * std::abs(r.wigner.eta)) + 1;
          for (std::int64_t n = 0; n <= 10000; ++n) {
            if (transfer_n(r, n).max_abs() > bound) {
              bounded = false;
              break;
            }
          }
        } else if (r.cls.tag == ConjClass::Hyperbolic) {
          ++hyperbolic;
          const double chi = std::abs(r.wigner.parameter());
          // Far enough out that the decaying exponential is negligible.
          const auto n = static_cast<std::int64_t>(std::ceil(20.0 / chi));
          const double ratio = transfer_n(r, n + 1).max_abs() / transfer_n(r, n).max_abs();
          worst_ratio = std::max(worst_ratio, std::abs(ratio / std::exp(chi) - 1.0));
        } else {
          ++edge;
        }
      }
    }
  }
  const bool spans = elliptic > 0 && hyperbolic > 0;
  return {spans && bounded && worst_ratio < 0.01,
          std::to_string(elliptic) + " elliptic (bounded to N=10^4: " + (bounded ? "yes" : "no") + "), " +
              std::to_string(hyperbolic) + " hyperbolic (growth ratio error " + sci(worst_ratio) +
              ", limit 1%), " + std::to_string(edge) + " band edge"};
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

// Golden byte equality by running the installed tool.
Outcome golden_files() {
  int matched = 0;
  std::string mismatched;
  const auto& fixtures = testing::golden_fixtures();
  for (const auto& fx : fixtures) {
    std::string cmd = shell_quote(ABCD_TOOL_PATH);
    for (const auto& a : testing::expand_golden_args(fx.args, ABCD_GOLDEN_DIR)) cmd += " " + shell_quote(a);
    std::string got;
    if (FILE* pipe = ::popen(cmd.c_str(), "r")) {
      char buf[4096];
      std::size_t k;
      while ((k = std::fread(buf, 1, sizeof buf, pipe)) > 0) got.append(buf, k);
      if (::pclose(pipe) != 0) got += "<nonzero exit>";
    }
    std::ifstream want_file(std::string(ABCD_GOLDEN_DIR) + "/" + fx.name + ".txt", std::ios::binary);
    std::ostringstream want;
    want << want_file.rdbuf();
    if (got == want.str() && !got.empty()) {
      ++matched;
    } else {
      mismatched += " " + fx.name;
    }
  }
  return {matched == static_cast<int>(fixtures.size()),
          std::to_string(matched) + "/" + std::to_string(fixtures.size()) + " fixtures byte-identical" +
              (mismatched.empty() ? "" : ", mismatched:" + mismatched)};
}

struct Criterion {
  int id;
  const char* name;
  double time_limit;  // seconds; 0 = none
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "decomposition round trip", 5.0, round_trip},
      {2, "Wigner power law", 10.0, power_law},
      {3, "conjugation oracle", 0.0, conjugation_oracle},
      {4, "closed-form Bargmann angles", 0.0, closed_forms},
      {5, "little-group invariance and lift", 0.0, little_groups},
      {6, "transition curve shape", 0.0, transition_curve_shape},
      {7, "band dichotomy", 30.0, band_dichotomy},
      {8, "CLI golden files", 0.0, golden_files},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0 && secs > c.time_limit) {
      o.pass = false;
      o.detail += ", over time limit " + sci(c.time_limit) + " s";
    }
    if (!o.pass) ++failures;
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.name << ": "
              << o.detail << " [" << sci(secs) << " s]\n";
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
