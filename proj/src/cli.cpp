#include "dissension/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dissension/errors.hpp"
#include "dissension/measures.hpp"
#include "dissension/random_states.hpp"
#include "dissension/report.hpp"
#include "dissension/state_io.hpp"
#include "dissension/sweep.hpp"

namespace dissension::cli {

namespace {

using Json = nlohmann::ordered_json;

// Flag combination that parses but makes no sense.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Anything that prevents building a valid state from the flags.
class StateError : public Error {
 public:
  using Error::Error;
};

struct StateOptions {
  std::string state = "ghz";
  std::optional<double> a;
  std::string file;
  std::string labeling;
  std::uint64_t seed = 1;
};

struct MinimizerOptions {
  int grid = 720;
  double refine_tol = 1e-8;
  int workers = 0;
};

struct OutputOptions {
  bool json = false;
  std::string out;
};

void add_state_options(CLI::App* cmd, StateOptions& o) {
  cmd->add_option("--state", o.state, "ghz|w|mixed-ghz|mixed-w|biseparable|file|random-pure|random-mixed")
      ->check(CLI::IsMember({"ghz", "w", "mixed-ghz", "mixed-w", "biseparable", "file", "random-pure",
                             "random-mixed"}));
  cmd->add_option("--a", o.a, "mixing weight");
  cmd->add_option("--file", o.file, "state JSON file (with --state file)");
  cmd->add_option("--labeling", o.labeling, "qubits playing X,Y,Z, e.g. 2,0,1");
  cmd->add_option("--seed", o.seed, "seed for random-pure / random-mixed");
}

void add_minimizer_options(CLI::App* cmd, MinimizerOptions& o) {
  cmd->add_option("--grid", o.grid, "coarse grid points over [0, 2pi)")->check(CLI::Range(8, 1 << 24));
  cmd->add_option("--refine-tol", o.refine_tol, "golden-section bracket width")->check(CLI::PositiveNumber);
  cmd->add_option("--workers", o.workers, "OpenMP workers (0 = default)")->check(CLI::NonNegativeNumber);
}

void add_output_options(CLI::App* cmd, OutputOptions& o, bool with_json = true) {
  if (with_json) cmd->add_flag("--json", o.json, "machine-readable output");
  cmd->add_option("--out", o.out, "write to this path instead of stdout");
}

MinimizerConfig to_config(const MinimizerOptions& o) { return {o.grid, o.refine_tol, o.workers}; }

// Spec for the named family; the mixing weight is left at its default when absent.
StateSpec family_spec(const StateOptions& o, bool a_required) {
  auto weight = [&](double fallback) {
    if (o.a) return *o.a;
    if (a_required) throw UsageError("--state " + o.state + " needs --a");
    return fallback;
  };
  if (o.state == "ghz") return StateSpec::ghz();
  if (o.state == "w") return StateSpec::w();
  if (o.state == "mixed-ghz") return StateSpec::mixed_ghz(weight(0.0));
  if (o.state == "mixed-w") return StateSpec::mixed_w(weight(0.0));
  if (o.state == "biseparable") return StateSpec::biseparable(o.a.value_or(0.25));
  if (o.state == "random-pure" || o.state == "random-mixed") {
    std::mt19937_64 rng(o.seed);
    const DensityMatrix rho = o.state == "random-pure" ? random_pure_state(3, rng) : random_mixed_state(3, rng);
    return StateSpec::raw(rho.matrix());
  }
  if (o.file.empty()) throw UsageError("--state file needs --file");
  try {
    return StateSpec::raw(read_state_file(o.file));
  } catch (const NotAState& e) {
    throw StateError(e.what());
  }
}

std::string state_descriptor(const StateOptions& o, const StateSpec& spec) {
  if (o.state == "file") return "file:" + o.file;
  if (o.state == "random-pure" || o.state == "random-mixed") return o.state + "(seed=" + std::to_string(o.seed) + ")";
  return spec.descriptor();
}

DensityMatrix build_state(const StateSpec& spec) {
  try {
    return make_state(spec);
  } catch (const Error& e) {
    throw StateError(e.what());
  }
}

QubitLabeling parse_labeling(const std::string& text, int num_qubits) {
  QubitLabeling l;
  if (text.empty()) return l;
  std::vector<int> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--labeling expects comma-separated qubit indices, got '" + text + "'");
    }
  }
  if (static_cast<int>(v.size()) != num_qubits) {
    throw UsageError("--labeling needs " + std::to_string(num_qubits) + " indices for a " +
                     std::to_string(num_qubits) + "-qubit state");
  }
  l.x = v[0];
  l.y = v[1];
  l.z = v.size() > 2 ? v[2] : -1;
  if (num_qubits == 3) {
    try {
      l.validate();
    } catch (const InvalidParam& e) {
      throw UsageError(e.what());
    }
  }
  return l;
}

std::string fixed6(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << v;
  std::string s = os.str();
  if (s == "-0.000000") s = "0.000000";
  return s;
}

Json labeling_json(const QubitLabeling& l, int num_qubits) {
  if (num_qubits == 2) return Json::array({l.x, l.y});
  return Json::array({l.x, l.y, l.z});
}

// Writes to --out when given, stdout otherwise.
void emit(const OutputOptions& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write " + o.out);
  f << text;
  f.flush();
  if (!f) throw IoError("failed writing " + o.out);
}

// Measure evaluation failures here are flag mismatches (wrong measure for the state).
template <class F>
auto as_usage(F&& f) {
  try {
    return f();
  } catch (const InvalidParam& e) {
    throw UsageError(e.what());
  } catch (const BadSubset& e) {
    throw UsageError(e.what());
  }
}

int cmd_compute(const StateOptions& so, const std::string& measure_name, double t, const OutputOptions& oo,
                std::ostream& out) {
  const Measure measure = as_usage([&] { return parse_measure(measure_name); });
  const StateSpec spec = family_spec(so, true);
  const DensityMatrix rho = build_state(spec);
  const QubitLabeling labeling = parse_labeling(so.labeling, rho.num_qubits());
  const MeasureValue mv =
      as_usage([&] { return compute_measure(measure, rho, labeling, t, state_descriptor(so, spec)); });

  if (!oo.json) {
    emit(oo, fixed6(mv.value) + "\n", out);
    return kExitOk;
  }
  Json j;
  j["state"] = mv.state_descriptor;
  j["measure"] = to_string(mv.measure);
  j["value"] = mv.value;
  j["t"] = mv.t ? Json(*mv.t) : Json(nullptr);
  j["labeling"] = labeling_json(mv.labeling, mv.num_qubits);
  emit(oo, j.dump() + "\n", out);
  return kExitOk;
}

int cmd_minimize(const StateOptions& so, const std::string& measure_name, const MinimizerOptions& mo,
                 bool independent, const OutputOptions& oo, std::ostream& out) {
  const Measure measure = as_usage([&] { return parse_measure(measure_name); });
  if (measure != Measure::D1 && measure != Measure::D2 && measure != Measure::discord) {
    throw UsageError("minimize supports D1, D2 and discord");
  }
  if (independent && measure != Measure::D1) throw UsageError("--independent-angles applies to D1 only");
  const StateSpec spec = family_spec(so, true);
  const DensityMatrix rho = build_state(spec);
  const QubitLabeling labeling = parse_labeling(so.labeling, rho.num_qubits());
  const MinimizerConfig config = to_config(mo);

  Json j;
  j["state"] = state_descriptor(so, spec);
  j["measure"] = to_string(measure);
  j["labeling"] = labeling_json(labeling, rho.num_qubits());
  std::ostringstream text;
  if (independent) {
    const auto r = as_usage([&] { return delta1_independent(rho, labeling, config); });
    j["value"] = r.value;
    j["argmin"] = {{"t_x", r.argmin.on_x}, {"t_y", r.argmin.on_y}, {"t_z", r.argmin.on_z}};
    j["evaluations"] = r.evaluations;
    text << "value " << fixed6(r.value) << "\n"
         << "argmin_t_x " << fixed6(r.argmin.on_x) << "\nargmin_t_y " << fixed6(r.argmin.on_y) << "\nargmin_t_z "
         << fixed6(r.argmin.on_z) << "\n"
         << "evaluations " << r.evaluations << "\n";
  } else {
    const auto r = as_usage([&] { return minimize_measure(measure, rho, labeling, config); });
    j["value"] = r.value;
    j["argmin_t"] = r.argmin_t;
    j["evaluations"] = r.evaluations;
    j["grid_points"] = r.grid_points;
    j["refine_tol"] = r.refined_tol;
    text << "value " << fixed6(r.value) << "\n"
         << "argmin_t " << fixed6(r.argmin_t) << "\n"
         << "evaluations " << r.evaluations << "\n";
  }
  emit(oo, oo.json ? j.dump() + "\n" : text.str(), out);
  return kExitOk;
}

struct SweepOptions {
  std::string measure = "D1";
  double t_min = 0.0;
  double t_max = 2.0 * std::numbers::pi;
  int t_steps = 181;
  std::optional<double> a_min;
  std::optional<double> a_max;
  std::optional<int> a_steps;
};

int cmd_sweep(const StateOptions& so, const SweepOptions& sw, int workers, const OutputOptions& oo,
              std::ostream& out) {
  SweepRequest req;
  req.measure = as_usage([&] { return parse_measure(sw.measure); });
  const bool surface = sw.a_steps.has_value();
  req.state = family_spec(so, !surface);
  if (surface) {
    if (!req.state.has_mixing_weight()) throw UsageError("--a-steps needs a family with a mixing weight");
    const double hi_default = req.state.family == StateFamily::biseparable ? 0.5 : 1.0;
    req.a_axis = as_usage([&] { return linspace(sw.a_min.value_or(0.0), sw.a_max.value_or(hi_default), *sw.a_steps); });
  }
  req.t_axis = as_usage([&] { return linspace(sw.t_min, sw.t_max, sw.t_steps); });
  // Validate every row state and the labeling before the parallel sweep.
  int num_qubits = 0;
  if (req.a_axis) {
    for (double a : *req.a_axis) {
      StateSpec s = req.state;
      s.a = a;
      num_qubits = build_state(s).num_qubits();
    }
  } else {
    num_qubits = build_state(req.state).num_qubits();
  }
  req.labeling = parse_labeling(so.labeling, num_qubits);

  const SweepGrid grid = as_usage([&] { return run_sweep(req, workers); });
  std::ostringstream csv;
  write_csv(grid, csv);
  emit(oo, csv.str(), out);
  return kExitOk;
}

int cmd_report(const MinimizerOptions& mo, const OutputOptions& oo, std::ostream& out) {
  emit(oo, report_to_json(build_report(to_config(mo))), out);
  return kExitOk;
}

std::string format_number(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  ComplexMatrix m;
  try {
    m = read_state_file(path);
  } catch (const NotAState& e) {
    err << "invalid state: " << e.what() << "\n";
    return kExitInvalidState;
  }
  const StateDiagnostics d = diagnose_state(m);
  out << "hermiticity deviation " << format_number(d.hermiticity_deviation) << "\n";
  out << "trace deviation " << format_number(d.trace_deviation) << "\n";
  out << "min eigenvalue " << (d.min_eigenvalue ? format_number(*d.min_eigenvalue) : std::string("n/a")) << "\n";
  if (!d.valid()) {
    err << "invalid state: " << *d.violation << "\n";
    return kExitInvalidState;
  }
  out << "valid\n";
  return kExitOk;
}

int cmd_negative_mi(const StateOptions& so, double t, const OutputOptions& oo, std::ostream& out) {
  const StateSpec spec = family_spec(so, true);
  const DensityMatrix rho = build_state(spec);
  const QubitLabeling labeling = parse_labeling(so.labeling, rho.num_qubits());
  const ThreeVariableMi r = as_usage([&] { return three_variable_mi(rho, labeling, t); });
  if (oo.json) {
    Json j;
    j["state"] = state_descriptor(so, spec);
    j["t"] = t;
    j["i2"] = r.i2;
    j["cond_mi"] = r.cond_mi;
    j["i3"] = r.i3;
    emit(oo, j.dump() + "\n", out);
  } else {
    emit(oo,
         "I(X:Y) " + fixed6(r.i2) + "\nI(X,Y|Z) " + fixed6(r.cond_mi) + "\nI(X:Y:Z) " + fixed6(r.i3) + "\n", out);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entropic correlation measures (discord, dissension) for three-qubit states", "dissension"};
  app.require_subcommand(1);

  StateOptions state_opts;
  MinimizerOptions min_opts;
  OutputOptions out_opts;

  auto* compute = app.add_subcommand("compute", "evaluate one measure at a fixed angle");
  std::string compute_measure_name;
  double compute_t = 0.0;
  add_state_options(compute, state_opts);
  compute->add_option("--measure", compute_measure_name, "I2|discord|I3|J3|K3|D1|D2")->required();
  compute->add_option("--t", compute_t, "measurement angle in radians");
  add_output_options(compute, out_opts);

  auto* minimize = app.add_subcommand("minimize", "minimize D1, D2 or discord over the angle");
  std::string minimize_measure_name = "D1";
  bool independent = false;
  add_state_options(minimize, state_opts);
  minimize->add_option("--measure", minimize_measure_name, "D1|D2|discord");
  minimize->add_flag("--independent-angles", independent, "D1 with separate angles per measured qubit");
  add_minimizer_options(minimize, min_opts);
  add_output_options(minimize, out_opts);

  auto* sweep = app.add_subcommand("sweep", "tabulate a measure over t (and a) as CSV");
  SweepOptions sweep_opts;
  add_state_options(sweep, state_opts);
  sweep->add_option("--measure", sweep_opts.measure, "I2|discord|I3|J3|K3|D1|D2");
  sweep->add_option("--t-min", sweep_opts.t_min);
  sweep->add_option("--t-max", sweep_opts.t_max);
  sweep->add_option("--t-steps", sweep_opts.t_steps)->check(CLI::Range(2, 1 << 20));
  sweep->add_option("--a-min", sweep_opts.a_min);
  sweep->add_option("--a-max", sweep_opts.a_max);
  sweep->add_option("--a-steps", sweep_opts.a_steps)->check(CLI::Range(2, 1 << 20));
  sweep->add_option("--workers", min_opts.workers, "OpenMP workers (0 = default)")->check(CLI::NonNegativeNumber);
  add_output_options(sweep, out_opts, false);

  auto* report = app.add_subcommand("report", "JSON summary of all reference states");
  add_minimizer_options(report, min_opts);
  add_output_options(report, out_opts, false);

  auto* validate = app.add_subcommand("validate", "check a state file against the density-matrix invariants");
  std::string validate_path;
  validate->add_option("path,--file", validate_path, "state JSON file")->required();

  auto* demo = app.add_subcommand("demo", "worked examples");
  demo->require_subcommand(1);
  auto* negative_mi = demo->add_subcommand("negative-mi", "I(X:Y), I(X,Y|Z), I(X:Y:Z) at one angle");
  double demo_t = std::numbers::pi / 4;
  add_state_options(negative_mi, state_opts);
  negative_mi->add_option("--t", demo_t, "measurement angle in radians");
  add_output_options(negative_mi, out_opts);

  std::vector<const char*> argv{"dissension"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compute) return cmd_compute(state_opts, compute_measure_name, compute_t, out_opts, out);
    if (*minimize) return cmd_minimize(state_opts, minimize_measure_name, min_opts, independent, out_opts, out);
    if (*sweep) return cmd_sweep(state_opts, sweep_opts, min_opts.workers, out_opts, out);
    if (*report) return cmd_report(min_opts, out_opts, out);
    if (*validate) return cmd_validate(validate_path, out, err);
    if (*negative_mi) return cmd_negative_mi(state_opts, demo_t, out_opts, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const StateError& e) {
    err << "invalid state: " << e.what() << "\n";
    return kExitInvalidState;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const NotAState& e) {
    err << "invalid state: " << e.what() << "\n";
    return kExitInvalidState;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dissension::cli
