#pragma once

// Command-line front end. Kept as a library so tests can drive it in-process.

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "abcd/decompose.hpp"
#include "abcd/multilayer.hpp"

namespace abcd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitRange = 3;

inline constexpr int kDefaultPrecision = 12;
inline constexpr double kCliDetTol = 1e-9;

enum class Command { Classify, Decompose, Stack, TransitionCurve, LittleGroup };

enum class DecomposeForm { Wigner, Bargmann, Transition };
enum class Kind { Massive, Spacelike, Massless };

struct RunConfig {
  Command command = Command::Classify;
  int precision = kDefaultPrecision;
  double class_tol = kClassTol;

  // classify / decompose
  std::array<double, 4> entries{1, 0, 0, 1};
  DecomposeForm form = DecomposeForm::Wigner;
  double window = kTransitionWindow;

  // stack: exactly one of config_path / inline parameters
  std::optional<std::string> config_path;
  std::optional<LayerStack> inline_stack;
  std::optional<std::int64_t> periods;

  // transition-curve
  double eta = 0.8;
  double eps_lo = -0.05;
  double eps_hi = 0.05;
  int steps = 2001;

  // little-group
  Kind kind = Kind::Massive;
  double mass = 1.0;
  double momentum = 0.0;
  double energy = 0.0;
  double param = 0.0;

  std::optional<std::string> csv_path;
};

// Locale-independent shortest-general formatting with `precision` significant
// digits; -0 prints as 0.
std::string format_number(double value, int precision);

// Flat key=value text: phi1, phi2, eta, periods (optional, default 0); '#'
// starts a comment. Throws DomainError on malformed input.
LayerStack parse_stack_config(std::istream& in);

// CSV of cycle^n for n = 0..periods; header n,a,b,c,d.
void write_transfer_csv(std::ostream& out, const CycleReport& report, std::int64_t periods,
                        int precision);

// Header epsilon,diag,offdiag_upper,offdiag_lower,class,angle_or_rapidity.
void write_transition_csv(std::ostream& out, const std::vector<TransitionSample>& samples,
                          int precision);

// args excludes the program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abcd::cli
