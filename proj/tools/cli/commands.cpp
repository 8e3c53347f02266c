// Copyright 2026 The wdwvqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "wdwvqe/errors.hpp"
#include "wdwvqe/qasm.hpp"

namespace wdwvqe::cli {

namespace {

namespace fs = std::filesystem;

constexpr const char* kZTestModel = "z-test";
// Rounded pi that reproduces the published 1-D oscillator coefficients
// exactly (spacing^2 = 2 * 3.142856 / N^2 = 0.392857 at N = 4).
constexpr double kCalibratedPi = 3.142856;

/// Flag values seen on the command line; unset members leave the config alone.
struct Overrides {
  std::optional<std::string> config_file;
  std::optional<std::string> model;
  bool paper_params = false;
  std::vector<std::string> params;
  std::optional<int> qubits_per_dim;
  std::optional<double> spacing;
  std::optional<double> offset;
  std::optional<double> epsilon;
  std::optional<double> lapse;
  std::optional<int> momentum_roll;
  std::optional<double> prune;
  std::optional<int> depth;
  std::optional<std::string> entanglement;
  std::optional<int> iterations;
  std::optional<double> a;
  std::optional<double> c;
  std::optional<double> alpha;
  std::optional<double> gamma;
  std::optional<double> stability;
  std::optional<double> target_update;
  bool no_calibrate = false;
  std::optional<int> trials;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  std::optional<double> threshold;
  std::optional<std::string> hamiltonian;
  std::vector<std::string> sweep;
  std::optional<std::string> out;
};

class OutputError : public Error {
 public:
  using Error::Error;
};

void add_model_options(CLI::App* sub, Overrides& ov) {
  sub->add_option("--config", ov.config_file, "JSON config file (flat keys mirroring the flags)");
  sub->add_option("--model", ov.model,
                  "oscillator1d | oscillator2d | bianchi-ix | higher-derivative | string-dilaton | "
                  "kaluza-klein | z-test");
  sub->add_flag("--paper-params", ov.paper_params, "Load the published parameter values");
  sub->add_option("--param", ov.params, "Model parameter override KEY=VALUE (repeatable)");
  sub->add_option("--qubits-per-dim", ov.qubits_per_dim, "Qubits per grid dimension (default 2)");
  sub->add_option("--spacing", ov.spacing, "Grid spacing (default sqrt(2 pi)/N)");
  sub->add_option("--offset", ov.offset, "Grid offset in units of the spacing (default 0)");
  sub->add_option("--epsilon", ov.epsilon, "Regularizer in 1/(a^2 + epsilon) (default 1e-4)");
  sub->add_option("--lapse", ov.lapse, "Lapse N for kaluza-klein (default 1)");
  sub->add_option("--momentum-roll", ov.momentum_roll, "Fourier-mode roll of the momentum operator");
  sub->add_option("--prune", ov.prune, "Pauli coefficient prune threshold (default 1e-10)");
  sub->add_option("--out", ov.out, "Output directory (default $WDWVQE_OUT_DIR or .)");
}

void add_vqe_options(CLI::App* sub, Overrides& ov) {
  sub->add_option("--depth", ov.depth, "Ry ansatz depth (default 3)");
  sub->add_option("--entanglement", ov.entanglement, "full | linear (default full)");
  sub->add_option("--iterations", ov.iterations, "SPSA iterations (default 1000)");
  sub->add_option("--a", ov.a, "SPSA step gain (overridden by calibration)");
  sub->add_option("--c", ov.c, "SPSA perturbation gain (default 0.1)");
  sub->add_option("--alpha", ov.alpha, "SPSA step-gain exponent (default 0.602)");
  sub->add_option("--gamma", ov.gamma, "SPSA perturbation exponent (default 0.101)");
  sub->add_option("--stability", ov.stability, "SPSA stability constant A (default 0.01*iterations)");
  sub->add_option("--target-update", ov.target_update, "Calibration target step (default 2 pi/10)");
  sub->add_flag("--no-calibrate", ov.no_calibrate, "Use --a as given instead of calibrating");
  sub->add_option("--trials", ov.trials, "Independent VQE trials (default 10)");
  sub->add_option("--seed", ov.seed, "Master seed (default 0)");
  sub->add_option("--threads", ov.threads, "Worker threads for trials (default 1)");
}

template <typename T>
void set_if(std::optional<T> value, T& target) {
  if (value) target = *value;
}

std::pair<std::string, double> parse_param(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0)
    throw InvalidArgument("--param expects KEY=VALUE, got '" + text + "'");
  const std::string key = text.substr(0, eq);
  const std::string value = text.substr(eq + 1);
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (value.empty() || *end != '\0' || !std::isfinite(v))
    throw InvalidArgument("parameter '" + key + "' needs a finite number, got '" + value + "'");
  return {key, v};
}

void apply_overrides(const Overrides& ov, RunConfig& cfg) {
  set_if(ov.model, cfg.model);
  if (ov.paper_params) cfg.paper_params = true;
  for (const auto& p : ov.params) {
    const auto [key, value] = parse_param(p);
    cfg.params[key] = value;
  }
  set_if(ov.qubits_per_dim, cfg.qubits_per_dim);
  if (ov.spacing) cfg.spacing = ov.spacing;
  set_if(ov.offset, cfg.offset);
  if (ov.epsilon) cfg.params[param::kEpsilon] = *ov.epsilon;
  if (ov.lapse) cfg.params[param::kLapse] = *ov.lapse;
  set_if(ov.momentum_roll, cfg.momentum_roll);
  set_if(ov.prune, cfg.prune);
  set_if(ov.depth, cfg.depth);
  set_if(ov.entanglement, cfg.entanglement);
  set_if(ov.iterations, cfg.iterations);
  set_if(ov.a, cfg.a);
  set_if(ov.c, cfg.c);
  set_if(ov.alpha, cfg.alpha);
  set_if(ov.gamma, cfg.gamma);
  if (ov.stability) cfg.stability = ov.stability;
  set_if(ov.target_update, cfg.target_update);
  if (ov.no_calibrate) cfg.calibrate = false;
  set_if(ov.trials, cfg.trials);
  set_if(ov.seed, cfg.seed);
  set_if(ov.threads, cfg.threads);
  set_if(ov.threshold, cfg.threshold);
  set_if(ov.hamiltonian, cfg.hamiltonian_file);
  if (!ov.sweep.empty()) {
    cfg.sweep_param = ov.sweep.at(0);
    cfg.sweep_range = ov.sweep.at(1);
  }
  set_if(ov.out, cfg.out_dir);
}

SpsaConfig optimizer_config(const RunConfig& cfg) {
  SpsaConfig s;
  s.max_iterations = cfg.iterations;
  s.a = cfg.a;
  s.c = cfg.c;
  s.alpha = cfg.alpha;
  s.gamma = cfg.gamma;
  s.stability = cfg.stability;
  s.calibrate = cfg.calibrate;
  s.target_update = cfg.target_update;
  s.seed = cfg.seed;
  s.validate();
  return s;
}

ModelSpec model_spec(const RunConfig& cfg, std::optional<ModelKind> kind_override = std::nullopt) {
  const ModelKind kind = kind_override ? *kind_override : parse_model_kind(cfg.model);
  ModelSpec spec = cfg.paper_params || kind_override ? paper_instance(kind) : ModelSpec{};
  spec.kind = kind;
  for (const auto& [k, v] : cfg.params) spec.params[k] = v;
  if (cfg.qubits_per_dim < 1 || cfg.qubits_per_dim > 4)
    throw InvalidArgument("--qubits-per-dim must lie in [1, 4]");
  spec.qubits_per_dim = cfg.qubits_per_dim;
  const Grid base = default_model_grid(cfg.qubits_per_dim);
  spec.grid = Grid(base.num_points(), cfg.spacing.value_or(base.spacing()), cfg.offset,
                   cfg.momentum_roll);
  return spec;
}

WdwReportOptions report_options(const RunConfig& cfg) {
  WdwReportOptions opts;
  opts.depth = cfg.depth;
  opts.entanglement = parse_entanglement(cfg.entanglement);
  opts.optimizer = optimizer_config(cfg);
  opts.trials = cfg.trials;
  opts.seed = cfg.seed;
  opts.threads = cfg.threads;
  opts.constraint_threshold = cfg.threshold;
  return opts;
}

void validate(const RunConfig& cfg) {
  if (cfg.depth < 0) throw InvalidArgument("--depth must be >= 0");
  if (cfg.trials < 1) throw InvalidArgument("--trials must be >= 1");
  if (cfg.threads < 1) throw InvalidArgument("--threads must be >= 1");
  if (!(cfg.prune >= 0.0)) throw InvalidArgument("--prune must be >= 0");
  if (!(cfg.threshold > 0.0)) throw InvalidArgument("--threshold must be > 0");
  parse_entanglement(cfg.entanglement);
  optimizer_config(cfg);
  if (cfg.model != kZTestModel) parse_model_kind(cfg.model);
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json metadata(const RunConfig& cfg, double wall_seconds) {
  return {{"tool", {{"name", "wdwvqe"}, {"version", WDWVQE_VERSION}}},
          {"command", cfg.command},
          {"config", to_json(cfg)},
          {"master_seed", cfg.seed},
          {"timestamp", {{"utc", utc_now()}, {"wall_seconds", wall_seconds}}}};
}

fs::path out_path(const RunConfig& cfg, const std::string& name) {
  std::error_code ec;
  fs::create_directories(cfg.out_dir, ec);
  if (ec) throw OutputError("cannot create output directory '" + cfg.out_dir + "': " + ec.message());
  return fs::path(cfg.out_dir) / name;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw OutputError("cannot write '" + path.string() + "'");
  f << text;
  if (!f) throw OutputError("failed writing '" + path.string() + "'");
}

void write_json(const fs::path& path, const Json& doc) { write_text(path, doc.dump(2) + "\n"); }

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double v, const char* spec = "%.10g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

// Shortest text that parses back to the same double.
std::string shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

std::string qasm_for(const VqeResult& vqe, const std::string& label, const RunConfig& cfg) {
  const Circuit circuit = AnsatzTemplate(vqe.ansatz).bind(vqe.best_theta);
  return to_openqasm(circuit, {"wdwvqe " + std::string(WDWVQE_VERSION),
                               "model: " + label,
                               "master seed: " + std::to_string(cfg.seed),
                               "best energy: " + fmt(vqe.best_energy, "%.17g")});
}

// --- commands ---------------------------------------------------------------

int cmd_decompose(const RunConfig& cfg, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const ModelInstance model = build_model(model_spec(cfg), cfg.prune);
  const std::string name = model_name(model.spec.kind);
  const std::string table = pauli_table(model.pauli);

  Json doc = metadata(cfg, seconds_since(start));
  doc["model"] = to_json(model.spec);
  doc["conventions"] = to_json(model.conventions);
  doc["num_qubits"] = model.pauli.num_qubits();
  doc["terms"] = to_json(model.pauli);

  write_json(out_path(cfg, name + ".pauli.json"), to_json(model.pauli));
  write_json(out_path(cfg, name + ".decompose.json"), doc);
  write_text(out_path(cfg, name + ".pauli.txt"), table);
  out << name << ": " << model.pauli.size() << " Pauli terms on " << model.pauli.num_qubits()
      << " qubits\n"
      << table;
  return kExitOk;
}

int cmd_exact(const RunConfig& cfg, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const ModelInstance model = build_model(model_spec(cfg), cfg.prune);
  const std::string name = model_name(model.spec.kind);
  const EigResult eig = eigh(model.matrix);

  Json doc = metadata(cfg, 0.0);
  doc["model"] = to_json(model.spec);
  doc["conventions"] = to_json(model.conventions);
  doc["hermiticity_error"] = model.matrix.hermiticity_error();
  doc["spectrum"] = spectrum_json(eig.eigenvalues);
  if (const auto pub = published_result(model.spec.kind)) {
    doc["published_exact_eigenvalue"] = pub->exact_eigenvalue;
  }
  doc["timestamp"]["wall_seconds"] = seconds_since(start);
  write_json(out_path(cfg, name + ".exact.json"), doc);

  out << name << ": min eigenvalue " << fmt(eig.eigenvalues.front(), "%.17g")
      << ", nearest-zero eigenvalue " << fmt(nearest_zero(eig.eigenvalues), "%.17g") << '\n';
  return kExitOk;
}

int cmd_vqe(const RunConfig& cfg, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  std::string name;
  Json doc;
  VqeResult vqe;
  if (cfg.model == kZTestModel || !cfg.hamiltonian_file.empty()) {
    PauliSum h(1);
    if (!cfg.hamiltonian_file.empty()) {
      std::ifstream f(cfg.hamiltonian_file);
      if (!f) throw InvalidArgument("cannot read Hamiltonian file '" + cfg.hamiltonian_file + "'");
      Json parsed;
      try {
        parsed = Json::parse(f);
      } catch (const Json::exception& e) {
        throw InvalidArgument(std::string("Hamiltonian file is not valid JSON: ") + e.what());
      }
      h = pauli_sum_from_json(parsed);
      name = fs::path(cfg.hamiltonian_file).stem().stem().string();
    } else {
      h.add(1.0, "Z");
      name = kZTestModel;
    }
    AnsatzSpec ansatz{h.num_qubits(), cfg.depth, parse_entanglement(cfg.entanglement)};
    vqe = run_vqe(h, ansatz, optimizer_config(cfg), cfg.trials, cfg.seed, cfg.threads);
    doc = metadata(cfg, 0.0);
    doc["hamiltonian"] = to_json(h);
    doc["vqe"] = to_json(vqe);
    doc["variational_bound_holds"] = vqe.best_energy >= vqe.exact_min - 1e-9;
  } else {
    const WdwReport report = wheeler_dewitt_report(model_spec(cfg), report_options(cfg));
    name = model_name(report.spec.kind);
    vqe = report.vqe;
    doc = metadata(cfg, 0.0);
    doc["conventions"] = to_json(report.conventions);
    doc["report"] = to_json(report);
  }
  doc["timestamp"]["wall_seconds"] = seconds_since(start);

  write_json(out_path(cfg, name + ".vqe.json"), doc);
  write_text(out_path(cfg, name + ".trace.csv"), trace_csv(vqe));
  write_text(out_path(cfg, name + ".circuit.qasm"), qasm_for(vqe, name, cfg));

  out << name << ": VQE best " << fmt(vqe.best_energy, "%.12g") << ", mean "
      << fmt(vqe.energy_mean, "%.12g") << " +/- " << fmt(vqe.energy_std, "%.6g") << " over "
      << vqe.trials << " trials; exact min " << fmt(vqe.exact_min, "%.12g") << '\n';
  return kExitOk;
}

double relative_difference(double ours, double theirs) {
  return std::abs(ours - theirs) / std::max(std::abs(theirs), 1e-300);
}

int cmd_paper(const RunConfig& cfg, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const WdwReportOptions opts = report_options(cfg);
  Json rows = Json::array();
  std::ostringstream md;
  md << "# Minisuperspace models: exact eigensolver vs VQE\n\n"
     << "Grid: N = " << (1 << cfg.qubits_per_dim) << " points per dimension, "
     << "2 dimensions per model. Uncertainties are sample standard deviations over "
     << cfg.trials << " VQE trials (master seed " << cfg.seed << ").\n\n"
     << "The `calibrated` columns use spacing^2 = 2*" << fmt(kCalibratedPi, "%.7g")
     << "/N^2 and, for kaluza-klein, lapse = 24 pi^2 (prefactor removed).\n\n"
     << "The real-amplitude floor is the lowest eigenvalue of Re(H). The Ry form prepares only "
        "real amplitudes, so VQE cannot go below it when H has imaginary entries.\n\n"
     << "| model | exact min | exact nearest-zero | published exact | calibrated min | "
        "calibrated nearest-zero | real-amplitude floor | VQE best | VQE mean +/- std | "
        "published VQE | variational bound |\n"
     << "|---|---|---|---|---|---|---|---|---|---|---|\n";

  for (ModelKind kind : all_model_kinds()) {
    if (!is_cosmological(kind)) continue;
    const ModelSpec spec = model_spec(cfg, kind);
    const WdwReport report = wheeler_dewitt_report(spec, opts);

    ModelSpec calibrated = spec;
    calibrated.grid = Grid(spec.grid.num_points(),
                           std::sqrt(2.0 * kCalibratedPi) / static_cast<double>(spec.grid.num_points()),
                           spec.grid.offset(), spec.grid.momentum_roll());
    if (kind == ModelKind::KaluzaKlein)
      calibrated.params[param::kLapse] = 24.0 * std::numbers::pi * std::numbers::pi;
    const ModelInstance cal_model = build_model(calibrated, cfg.prune);
    const auto cal = eigh(cal_model.matrix).eigenvalues;

    Json row = to_json(report);
    const auto& pub = *report.published;
    row["relative_difference"] = {
        {"exact_min_vs_published", relative_difference(report.exact_min, pub.exact_eigenvalue)},
        {"exact_nearest_zero_vs_published",
         relative_difference(report.exact_nearest_zero, pub.exact_eigenvalue)},
        {"vqe_mean_vs_published", relative_difference(report.vqe.energy_mean, pub.vqe_energy)}};
    row["calibrated"] = {{"conventions", to_json(cal_model.conventions)},
                         {"exact_min", cal.front()},
                         {"exact_nearest_zero", nearest_zero(cal)},
                         {"exact_min_vs_published", relative_difference(cal.front(), pub.exact_eigenvalue)},
                         {"exact_nearest_zero_vs_published",
                          relative_difference(nearest_zero(cal), pub.exact_eigenvalue)}};
    rows.push_back(row);

    const std::string name = model_name(kind);
    write_text(out_path(cfg, "paper_" + name + ".circuit.qasm"), qasm_for(report.vqe, name, cfg));

    md << "| " << name << " | " << fmt(report.exact_min) << " | " << fmt(report.exact_nearest_zero)
       << " | " << fmt(pub.exact_eigenvalue, "%.17g") << " | " << fmt(cal.front()) << " | "
       << fmt(nearest_zero(cal)) << " | " << fmt(report.real_amplitude_floor) << " | "
       << fmt(report.vqe.best_energy) << " | "
       << fmt(report.vqe.energy_mean) << " +/- " << fmt(report.vqe.energy_std, "%.4g") << " | "
       << fmt(pub.vqe_energy, "%.17g") << " +/- " << fmt(pub.vqe_uncertainty, "%.4g") << " | "
       << (report.variational_bound_holds ? "holds" : "VIOLATED") << " |\n";
    out << name << ": exact min " << fmt(report.exact_min) << ", VQE best "
        << fmt(report.vqe.best_energy) << '\n';
  }

  Json doc = metadata(cfg, seconds_since(start));
  doc["models"] = rows;
  write_json(out_path(cfg, "paper_report.json"), doc);
  write_text(out_path(cfg, "paper_report.md"), md.str());
  return kExitOk;
}

struct SweepRange {
  double lo, hi, step;
  int count;
};

SweepRange parse_range(const std::string& text) {
  SweepRange r{};
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &r.lo, &r.hi, &r.step, &tail) != 3)
    throw InvalidArgument("--sweep range must look like LO:HI:STEP, got '" + text + "'");
  if (!(r.step > 0.0) || !(r.hi >= r.lo))
    throw InvalidArgument("--sweep range needs STEP > 0 and HI >= LO");
  r.count = static_cast<int>(std::floor((r.hi - r.lo) / r.step + 1e-9)) + 1;
  if (r.count > 100000) throw InvalidArgument("--sweep range has too many points");
  return r;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  if (cfg.sweep_param.empty()) throw InvalidArgument("sweep needs --sweep NAME LO:HI:STEP");
  const SweepRange range = parse_range(cfg.sweep_range);
  ModelSpec spec = model_spec(cfg);
  const std::string name = model_name(spec.kind);

  Json points = Json::array();
  std::ostringstream csv;
  csv << cfg.sweep_param << ",exact_min,exact_nearest_zero\n";
  std::optional<ModelInstance> first;
  for (int i = 0; i < range.count; ++i) {
    // Snap to 12 digits so 2.3:2.6:0.01 yields 2.31 rather than 2.3099999999999996.
    const double value = std::stod(fmt(range.lo + i * range.step, "%.12g"));
    spec.params[cfg.sweep_param] = value;
    ModelInstance model = build_model(spec, cfg.prune);
    const auto ev = eigh(model.matrix).eigenvalues;
    points.push_back({{"value", value}, {"exact_min", ev.front()}, {"exact_nearest_zero", nearest_zero(ev)}});
    csv << shortest(value) << ',' << shortest(ev.front()) << ',' << shortest(nearest_zero(ev))
        << '\n';
    if (!first) first = std::move(model);
  }

  Json doc = metadata(cfg, seconds_since(start));
  doc["model"] = to_json(first->spec);
  doc["conventions"] = to_json(first->conventions);
  doc["sweep"] = {{"parameter", cfg.sweep_param}, {"range", cfg.sweep_range}, {"points", points}};
  write_json(out_path(cfg, name + ".sweep.json"), doc);
  write_text(out_path(cfg, name + ".sweep.csv"), csv.str());
  out << name << ": swept " << cfg.sweep_param << " over " << range.count << " values\n";
  return kExitOk;
}

}  // namespace

Json to_json(const RunConfig& c) {
  Json params = Json::object();
  for (const auto& [k, v] : c.params) params[k] = v;
  Json doc = {{"command", c.command},
              {"model", c.model},
              {"paper_params", c.paper_params},
              {"params", params},
              {"qubits_per_dim", c.qubits_per_dim},
              {"spacing", c.spacing ? Json(*c.spacing) : Json(nullptr)},
              {"offset", c.offset},
              {"momentum_roll", c.momentum_roll},
              {"prune", c.prune},
              {"depth", c.depth},
              {"entanglement", c.entanglement},
              {"iterations", c.iterations},
              {"a", c.a},
              {"c", c.c},
              {"alpha", c.alpha},
              {"gamma", c.gamma},
              {"stability", c.stability ? Json(*c.stability) : Json(nullptr)},
              {"calibrate", c.calibrate},
              {"target_update", c.target_update},
              {"trials", c.trials},
              {"seed", c.seed},
              {"threads", c.threads},
              {"threshold", c.threshold}};
  if (!c.hamiltonian_file.empty()) doc["hamiltonian"] = c.hamiltonian_file;
  if (!c.sweep_param.empty()) doc["sweep"] = {c.sweep_param, c.sweep_range};
  return doc;
}

void apply_config_json(const Json& doc, RunConfig& c) {
  if (!doc.is_object()) throw InvalidArgument("config file must hold a JSON object");
  try {
    for (const auto& [raw_key, value] : doc.items()) {
      std::string key = raw_key;
      for (auto& ch : key)
        if (ch == '-') ch = '_';
      const auto opt_double = [&](std::optional<double>& target) {
        if (value.is_null()) target.reset();
        else target = value.get<double>();
      };
      if (key == "command") continue;
      else if (key == "model") c.model = value.get<std::string>();
      else if (key == "paper_params") c.paper_params = value.get<bool>();
      else if (key == "params") {
        for (const auto& [k, v] : value.items()) c.params[k] = v.get<double>();
      } else if (key == "param") {
        for (const auto& s : value) {
          const auto [k, v] = parse_param(s.get<std::string>());
          c.params[k] = v;
        }
      } else if (key == "epsilon") c.params[param::kEpsilon] = value.get<double>();
      else if (key == "lapse") c.params[param::kLapse] = value.get<double>();
      else if (key == "qubits_per_dim") c.qubits_per_dim = value.get<int>();
      else if (key == "spacing") opt_double(c.spacing);
      else if (key == "offset") c.offset = value.get<double>();
      else if (key == "momentum_roll") c.momentum_roll = value.get<int>();
      else if (key == "prune") c.prune = value.get<double>();
      else if (key == "depth") c.depth = value.get<int>();
      else if (key == "entanglement") c.entanglement = value.get<std::string>();
      else if (key == "iterations") c.iterations = value.get<int>();
      else if (key == "a") c.a = value.get<double>();
      else if (key == "c") c.c = value.get<double>();
      else if (key == "alpha") c.alpha = value.get<double>();
      else if (key == "gamma") c.gamma = value.get<double>();
      else if (key == "stability") opt_double(c.stability);
      else if (key == "calibrate") c.calibrate = value.get<bool>();
      else if (key == "no_calibrate") c.calibrate = !value.get<bool>();
      else if (key == "target_update") c.target_update = value.get<double>();
      else if (key == "trials") c.trials = value.get<int>();
      else if (key == "seed") c.seed = value.get<std::uint64_t>();
      else if (key == "threads") c.threads = value.get<int>();
      else if (key == "threshold") c.threshold = value.get<double>();
      else if (key == "hamiltonian") c.hamiltonian_file = value.get<std::string>();
      else if (key == "sweep") {
        c.sweep_param = value.at(0).get<std::string>();
        c.sweep_range = value.at(1).get<std::string>();
      } else if (key == "out") c.out_dir = value.get<std::string>();
      else throw InvalidArgument("unknown config key '" + raw_key + "'");
    }
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("bad value in config file: ") + e.what());
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minisuperspace Wheeler-DeWitt Hamiltonians: Pauli decomposition, exact "
               "eigensolver and VQE on a statevector simulator"};
  app.name("wdwvqe");
  app.set_version_flag("--version", WDWVQE_VERSION);
  app.require_subcommand(1);

  Overrides ov;
  auto* decompose = app.add_subcommand("decompose", "Build a model Hamiltonian and write its Pauli sum");
  auto* exact = app.add_subcommand("exact", "Exact spectrum of a model Hamiltonian");
  auto* vqe = app.add_subcommand("vqe", "Run VQE (Ry ansatz + SPSA) on a model or Pauli JSON file");
  auto* paper = app.add_subcommand("paper", "Exact vs VQE comparison report for all four cosmological models");
  auto* sweep = app.add_subcommand("sweep", "Exact eigenvalues while sweeping one model parameter");
  for (auto* sub : {decompose, exact, vqe, paper, sweep}) add_model_options(sub, ov);
  for (auto* sub : {vqe, paper}) add_vqe_options(sub, ov);
  vqe->add_option("--hamiltonian", ov.hamiltonian, "PauliSum JSON file (output of decompose)");
  paper->add_option("--threshold", ov.threshold,
                    "|nearest-zero eigenvalue| below this is reported constraint-compatible");
  sweep->add_option("--sweep", ov.sweep, "Parameter name and LO:HI:STEP range")
      ->expected(2)
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  RunConfig cfg;
  cfg.command = app.get_subcommands().front()->get_name();
  if (const char* env = std::getenv(kOutDirEnv); env && *env) cfg.out_dir = env;

  try {
    if (ov.config_file) {
      std::ifstream f(*ov.config_file);
      if (!f) throw InvalidArgument("cannot read config file '" + *ov.config_file + "'");
      Json doc;
      try {
        doc = Json::parse(f);
      } catch (const Json::exception& e) {
        throw InvalidArgument(std::string("config file is not valid JSON: ") + e.what());
      }
      apply_config_json(doc, cfg);
    }
    apply_overrides(ov, cfg);
    validate(cfg);
    if (cfg.model == kZTestModel && cfg.command != "vqe")
      throw InvalidArgument("model z-test is only available to the vqe command");

    if (cfg.command == "decompose") return cmd_decompose(cfg, out);
    if (cfg.command == "exact") return cmd_exact(cfg, out);
    if (cfg.command == "vqe") return cmd_vqe(cfg, out);
    if (cfg.command == "paper") return cmd_paper(cfg, out);
    return cmd_sweep(cfg, out);
  } catch (const InvalidArgument& e) {
    err << "wdwvqe: configuration error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const OutputError& e) {
    err << "wdwvqe: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const NumericalError& e) {
    err << "wdwvqe: numerical failure: " << e.what() << '\n';
    return kExitNumericalError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("wdwvqe");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace wdwvqe::cli
