#include "abcd/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "abcd/little_group.hpp"

namespace abcd::cli {

namespace {

bool parse_double(std::string_view text, double& out) {
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last && std::isfinite(out);
}

bool parse_int(std::string_view text, std::int64_t& out) {
  const char* first = text.data();
  const char* last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

class Printer {
 public:
  Printer(std::ostream& out, int precision) : out_(out), precision_(precision) {}

  std::string num(double v) const { return format_number(v, precision_); }

  std::string list(std::initializer_list<double> values) const {
    std::string s;
    for (double v : values) {
      if (!s.empty()) s += ',';
      s += num(v);
    }
    return s;
  }

  std::string mat(const Mat2& m) const { return list({m.a(), m.b(), m.c(), m.d()}); }

  void kv(std::string_view key, std::string_view value) const {
    out_ << key << '=' << value << '\n';
  }
  void kv(std::string_view key, double value) const { kv(key, num(value)); }
  void flag(std::string_view key, bool value) const { kv(key, value ? "true" : "false"); }

  std::ostream& stream() const { return out_; }

 private:
  std::ostream& out_;
  int precision_;
};

std::string_view param_name(ConjClass c) {
  switch (c) {
    case ConjClass::Elliptic: return "phi";
    case ConjClass::Hyperbolic: return "chi";
    case ConjClass::Parabolic: return "gamma";
  }
  return "tau";
}

Mat2 input_matrix(const RunConfig& cfg) {
  const auto& e = cfg.entries;
  const double det = e[0] * e[3] - e[1] * e[2];
  try {
    return Mat2::from_entries(e[0], e[1], e[2], e[3], kCliDetTol);
  } catch (const DomainError&) {
    throw DomainError("matrix is not unimodular: determinant = " + format_number(det, 12));
  }
}

void run_classify(const RunConfig& cfg, const Printer& p) {
  const Mat2 m = input_matrix(cfg);
  const MatrixClass cls = classify(m, cfg.class_tol);
  const Equidiagonal eq = equidiagonalize(m);
  p.stream() << to_string(cls.tag) << " trace=" << p.num(cls.trace) << '\n';
  p.flag("negative_trace", cls.negative_trace);
  p.kv("equidiag_alpha", eq.alpha);
  p.kv("equidiagonal", p.mat(eq.e));
}

void run_decompose(const RunConfig& cfg, const Printer& p) {
  const Mat2 m = input_matrix(cfg);
  const Equidiagonal eq = equidiagonalize(m);
  const Mat2 unrotate = rot2(-eq.alpha);
  const Mat2 rerotate = rot2(eq.alpha);
  switch (cfg.form) {
    case DecomposeForm::Wigner: {
      const WignerForm w = wigner_decompose(eq.e, cfg.class_tol);
      p.kv("form", "wigner");
      p.kv("equidiag_alpha", eq.alpha);
      p.kv("class", to_string(w.kind()));
      p.kv(param_name(w.kind()), w.parameter());
      p.kv("eta", w.eta);
      p.flag("negated", w.negated);
      p.flag("lower", w.lower);
      p.kv("residual", max_abs_diff(unrotate * wigner_recompose(w) * rerotate, m));
      break;
    }
    case DecomposeForm::Bargmann: {
      const BargmannForm bf = bargmann_decompose(eq.e);
      p.kv("form", "bargmann");
      p.kv("equidiag_alpha", eq.alpha);
      p.kv("theta", bf.theta);
      p.kv("lambda", bf.lambda);
      p.kv("iwasawa_gap", iwasawa_gap(bf));
      p.kv("residual", max_abs_diff(unrotate * bargmann_matrix(bf) * rerotate, m));
      break;
    }
    case DecomposeForm::Transition: {
      const TransitionForm tf = transition_decompose(eq.e, cfg.window);
      const RawMat2 raw = transition_recompose(tf);
      double residual = 0.0;
      for (int i = 0; i < 4; ++i) residual = std::max(residual, std::abs(raw[i] - eq.e.entries()[i]));
      p.kv("form", "transition");
      p.kv("equidiag_alpha", eq.alpha);
      p.kv("side", tf.side == TransitionSide::RotationLike ? "rotation" : "squeeze");
      p.kv("epsilon", tf.epsilon);
      p.kv("eta", tf.eta);
      p.kv("alpha", tf.alpha);
      p.kv("beta", tf.beta);
      p.kv("residual", residual);
      p.kv("bound", tf.error_bound());
      break;
    }
  }
}

LayerStack load_stack(const RunConfig& cfg) {
  LayerStack stack;
  if (cfg.config_path) {
    std::ifstream in(*cfg.config_path);
    if (!in) throw DomainError("cannot open config file " + *cfg.config_path);
    stack = parse_stack_config(in);
  } else if (cfg.inline_stack) {
    stack = *cfg.inline_stack;
  } else {
    throw DomainError("stack needs a config file or --phi1/--phi2/--eta");
  }
  if (cfg.periods) stack.periods = *cfg.periods;
  stack.validate();
  return stack;
}

void run_stack(const RunConfig& cfg, const Printer& p) {
  const LayerStack stack = load_stack(cfg);
  const CycleReport r = transfer(stack, cfg.class_tol);
  const ConjClass wk = r.wigner.kind();
  p.kv("class", to_string(r.cls.tag));
  p.kv("band", to_string(r.band));
  p.kv("trace", r.cls.trace);
  p.kv("cycle", p.mat(r.cycle));
  p.kv("lambda", r.bargmann.lambda);
  p.kv("theta", r.bargmann.theta);
  p.kv("theta_star", r.bargmann.theta_star);
  p.kv("wigner_class", to_string(wk));
  p.kv(std::string(param_name(wk)) + "_star", r.wigner.parameter());
  p.kv("eta_star", r.wigner.eta);
  p.flag("negated", r.wigner.negated);
  p.kv("periods", static_cast<double>(stack.periods));
  p.kv("transfer_n", p.mat(r.transfer_n));
  if (cfg.csv_path) {
    std::ofstream csv(*cfg.csv_path, std::ios::binary);
    if (!csv) throw DomainError("cannot write " + *cfg.csv_path);
    write_transfer_csv(csv, r, stack.periods, cfg.precision);
  }
}

void run_transition_curve(const RunConfig& cfg, const Printer& p) {
  if (!(cfg.eps_lo < 0.0 && 0.0 < cfg.eps_hi)) {
    throw DomainError("--eps-range must straddle 0");
  }
  const auto samples = transition_curve(cfg.eta, cfg.eps_lo, cfg.eps_hi, cfg.steps, cfg.class_tol);
  if (cfg.csv_path) {
    std::ofstream csv(*cfg.csv_path, std::ios::binary);
    if (!csv) throw DomainError("cannot write " + *cfg.csv_path);
    write_transition_csv(csv, samples, cfg.precision);
    p.kv("rows", static_cast<double>(samples.size()));
  } else {
    write_transition_csv(p.stream(), samples, cfg.precision);
  }
}

void run_little_group(const RunConfig& cfg, const Printer& p) {
  MomentumKind kind;
  std::string_view name;
  switch (cfg.kind) {
    case Kind::Massive:
      kind = Massive{cfg.mass, cfg.momentum};
      name = "massive";
      break;
    case Kind::Spacelike:
      kind = Spacelike{cfg.momentum, cfg.energy};
      name = "spacelike";
      break;
    case Kind::Massless:
      kind = Massless{cfg.momentum};
      name = "massless";
      break;
  }
  const LittleGroupElement el = little_group_element(kind, cfg.param);
  const FourVector& v = el.fixed_momentum;
  p.kv("kind", name);
  p.kv("param", el.param);
  p.kv("eta", el.eta);
  p.kv("fixed_momentum", p.list({v.x, v.y, v.z, v.t}));
  for (int i = 0; i < 4; ++i) {
    p.kv("row" + std::to_string(i),
         p.list({el.mat4(i, 0), el.mat4(i, 1), el.mat4(i, 2), el.mat4(i, 3)}));
  }
  p.kv("residual", preservation_residual(el.mat4, v));
}

void execute(const RunConfig& cfg, std::ostream& out) {
  const Printer p(out, cfg.precision);
  switch (cfg.command) {
    case Command::Classify: run_classify(cfg, p); break;
    case Command::Decompose: run_decompose(cfg, p); break;
    case Command::Stack: run_stack(cfg, p); break;
    case Command::TransitionCurve: run_transition_curve(cfg, p); break;
    case Command::LittleGroup: run_little_group(cfg, p); break;
  }
}

}  // namespace

std::string format_number(double value, int precision) {
  if (value == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, precision);
  return std::string(buf, res.ptr);
}

LayerStack parse_stack_config(std::istream& in) {
  std::map<std::string, std::string, std::less<>> values;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw DomainError("config line " + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key(trim(view.substr(0, eq)));
    const std::string value(trim(view.substr(eq + 1)));
    if (key != "phi1" && key != "phi2" && key != "eta" && key != "periods") {
      throw DomainError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    if (!values.emplace(key, value).second) {
      throw DomainError("config line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    }
  }
  LayerStack stack;
  for (auto [key, target] : {std::pair{"phi1", &stack.phi1}, std::pair{"phi2", &stack.phi2},
                             std::pair{"eta", &stack.eta}}) {
    const auto it = values.find(key);
    if (it == values.end()) throw DomainError(std::string("config: missing key '") + key + "'");
    if (!parse_double(it->second, *target)) {
      throw DomainError(std::string("config: bad number for '") + key + "': " + it->second);
    }
  }
  if (const auto it = values.find("periods"); it != values.end()) {
    if (!parse_int(it->second, stack.periods)) {
      throw DomainError("config: bad integer for 'periods': " + it->second);
    }
  }
  stack.validate();
  return stack;
}

void write_transfer_csv(std::ostream& out, const CycleReport& report, std::int64_t periods,
                        int precision) {
  out << "n,a,b,c,d\n";
  for (std::int64_t n = 0; n <= periods; ++n) {
    const Mat2 m = transfer_n(report, n);
    out << n << ',' << format_number(m.a(), precision) << ',' << format_number(m.b(), precision)
        << ',' << format_number(m.c(), precision) << ',' << format_number(m.d(), precision) << '\n';
  }
}

void write_transition_csv(std::ostream& out, const std::vector<TransitionSample>& samples,
                          int precision) {
  out << "epsilon,diag,offdiag_upper,offdiag_lower,class,angle_or_rapidity\n";
  for (const auto& s : samples) {
    out << format_number(s.epsilon, precision) << ',' << format_number(s.diag, precision) << ','
        << format_number(s.upper, precision) << ',' << format_number(s.lower, precision) << ','
        << to_string(s.tag) << ',' << format_number(s.angle_or_rapidity, precision) << '\n';
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::optional<double> tol_flag;

  CLI::App app{"Unimodular 2x2 transfer matrices: classes, decompositions, periodic stacks"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  app.add_option("--precision", cfg.precision, "significant digits in output")
      ->check(CLI::Range(6, 17));
  app.add_option("--tol", tol_flag, "class tolerance on |trace - 2| (overrides ABCD_TOL)")
      ->check(CLI::PositiveNumber);

  std::vector<double> entries;
  auto add_entries = [&](CLI::App* sub) {
    sub->add_option("entries", entries, "matrix entries a b c d (row-major)")
        ->expected(4)
        ->required();
  };

  auto* classify_cmd = app.add_subcommand("classify", "conjugacy class of [[a,b],[c,d]]");
  add_entries(classify_cmd);

  auto* decompose_cmd = app.add_subcommand("decompose", "Wigner, Bargmann or transition form");
  add_entries(decompose_cmd);
  const std::map<std::string, DecomposeForm> forms{{"wigner", DecomposeForm::Wigner},
                                                   {"bargmann", DecomposeForm::Bargmann},
                                                   {"transition", DecomposeForm::Transition}};
  decompose_cmd->add_option("--form", cfg.form, "wigner|bargmann|transition")
      ->transform(CLI::CheckedTransformer(forms, CLI::ignore_case));
  decompose_cmd->add_option("--window", cfg.window, "transition window on |trace - 2|")
      ->check(CLI::PositiveNumber);

  auto* stack_cmd = app.add_subcommand("stack", "periodic two-medium stack");
  std::string config_path;
  double phi1 = 0.0, phi2 = 0.0, eta = 0.0;
  std::int64_t periods = 0;
  auto* path_opt = stack_cmd->add_option("config", config_path, "key=value stack file");
  auto* phi1_opt = stack_cmd->add_option("--phi1", phi1, "medium-1 phase");
  auto* phi2_opt = stack_cmd->add_option("--phi2", phi2, "medium-2 phase");
  auto* eta_opt = stack_cmd->add_option("--eta", eta, "boundary rapidity");
  auto* periods_opt =
      stack_cmd->add_option("--periods", periods, "period count N")->check(CLI::NonNegativeNumber);
  auto* stack_csv = stack_cmd->add_option("--csv", cfg.csv_path, "write cycle^n rows, n = 0..N");
  (void)stack_csv;

  auto* curve_cmd = app.add_subcommand("transition-curve", "samples across the parabolic boundary");
  std::vector<double> eps_range{cfg.eps_lo, cfg.eps_hi};
  curve_cmd->add_option("--eta", cfg.eta, "boundary rapidity (> 0)");
  curve_cmd->add_option("--eps-range", eps_range, "LO,HI")->expected(2)->delimiter(',');
  curve_cmd->add_option("--steps", cfg.steps, "sample count (>= 3)");
  curve_cmd->add_option("--csv", cfg.csv_path, "output file (default stdout)");

  auto* lg_cmd = app.add_subcommand("little-group", "momentum-preserving Lorentz element");
  const std::map<std::string, Kind> kinds{
      {"massive", Kind::Massive}, {"spacelike", Kind::Spacelike}, {"massless", Kind::Massless}};
  lg_cmd->add_option("--kind", cfg.kind, "massive|spacelike|massless")
      ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case))
      ->required();
  lg_cmd->add_option("--mass", cfg.mass, "rest mass (massive)");
  lg_cmd->add_option("--momentum,-p", cfg.momentum, "momentum along z");
  lg_cmd->add_option("--energy", cfg.energy, "energy (spacelike, E < p)");
  lg_cmd->add_option("--param", cfg.param, "phi (massive), chi (spacelike), gamma (massless)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  if (tol_flag) {
    cfg.class_tol = *tol_flag;
  } else if (const char* env = std::getenv("ABCD_TOL"); env != nullptr && *env != '\0') {
    double v = 0.0;
    if (!parse_double(env, v) || !(v > 0.0)) {
      err << "error: ABCD_TOL must be a positive number, got '" << env << "'\n";
      return kExitInput;
    }
    cfg.class_tol = v;
  }

  if (*classify_cmd) {
    cfg.command = Command::Classify;
  } else if (*decompose_cmd) {
    cfg.command = Command::Decompose;
  } else if (*stack_cmd) {
    cfg.command = Command::Stack;
    const bool has_path = path_opt->count() > 0;
    const bool has_inline = phi1_opt->count() + phi2_opt->count() + eta_opt->count() > 0;
    if (has_path == has_inline) {
      err << "error: stack needs exactly one input: a config file or --phi1/--phi2/--eta\n";
      return kExitInput;
    }
    if (has_path) {
      cfg.config_path = config_path;
    } else {
      cfg.inline_stack = LayerStack{phi1, phi2, eta, 0};
    }
    if (periods_opt->count() > 0) cfg.periods = periods;
  } else if (*curve_cmd) {
    cfg.command = Command::TransitionCurve;
    cfg.eps_lo = eps_range.at(0);
    cfg.eps_hi = eps_range.at(1);
  } else {
    cfg.command = Command::LittleGroup;
  }
  if (cfg.command == Command::Classify || cfg.command == Command::Decompose) {
    std::copy_n(entries.begin(), 4, cfg.entries.begin());
  }

  try {
    std::ostringstream buffer;
    execute(cfg, buffer);
    out << buffer.str();
    return kExitOk;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << " (exponent estimate " << format_number(e.exponent(), 6)
        << ")\n";
    return kExitRange;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace abcd::cli
