#include "urdd/dd.hpp"
#include "urdd/ensemble.hpp"
#include "urdd/sequences.hpp"
#include "urdd/sweeps.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kSchemaVersion = 1;
constexpr const char* kVersion = "urdd 1.0.0 (schema 1)";

using nlohmann::json;
using nlohmann::ordered_json;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_known_keys(const json& obj, const std::vector<std::string>& allowed,
                        const std::string& context) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError("unknown field \"" + key + "\" in " + context);
    }
  }
}

urdd::RationalAngle parse_rational(const std::string& text, const std::string& what) {
  const auto r = urdd::RationalAngle::parse(text);
  if (!r) throw ConfigError("cannot parse " + what + " \"" + text + "\" (expected num/den)");
  return *r;
}

int parse_sign(const std::string& text) {
  if (text == "+" || text == "+1") return +1;
  if (text == "-" || text == "-1") return -1;
  throw ConfigError("sign must be + or -");
}

urdd::PhaseSequence make_family_sequence(const std::string& family, int n,
                                         const std::optional<std::string>& phi2_over_pi,
                                         const std::string& sign_text) {
  const int sign = parse_sign(sign_text);
  if (family == "ur") {
    const urdd::RationalAngle phi2 = phi2_over_pi ? parse_rational(*phi2_over_pi, "phi2-over-pi")
                                                  : urdd::ur_big_phi(n, sign);
    return urdd::ur_phases(n, phi2, sign);
  }
  if (family == "ur-sym") return urdd::symmetric_ur(n, sign);
  if (const auto base = urdd::parse_baseline(family)) return urdd::baseline(*base);
  throw ConfigError("unknown sequence family \"" + family + "\"");
}

/// Names accepted in `ensemble --sequences`: UR<n>, the baselines, or
/// "free" for undriven evolution.
urdd::PhaseSequence sequence_by_name(const std::string& name) {
  if (name == "free" || name == "FREE" || name == "none") {
    urdd::PhaseSequence seq;
    seq.name = "free";
    return seq;
  }
  if ((name.size() > 2) && (name.rfind("UR", 0) == 0 || name.rfind("ur", 0) == 0)) {
    const int n = std::stoi(name.substr(2));
    return urdd::symmetric_ur(n);
  }
  if (const auto base = urdd::parse_baseline(name)) return urdd::baseline(*base);
  throw ConfigError("unknown sequence name \"" + name + "\"");
}

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  json cfg;
  try {
    in >> cfg;
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  return cfg;
}

void check_schema_version(const json& cfg) {
  if (!cfg.contains("schemaVersion")) throw ConfigError("config is missing schemaVersion");
  if (cfg.at("schemaVersion").get<int>() != kSchemaVersion) {
    throw ConfigError("unsupported schemaVersion (expected 1)");
  }
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file " + path);
  return out;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// gen

struct GenArgs {
  std::string family;
  int n = 0;
  std::optional<std::string> phi2_over_pi;
  std::string sign = "+";
  std::string format = "json";
};

int run_gen(const GenArgs& args) {
  const urdd::PhaseSequence seq =
      make_family_sequence(args.family, args.n, args.phi2_over_pi, args.sign);
  if (args.format == "json") {
    ordered_json out;
    out["name"] = seq.name;
    out["n"] = seq.n;
    out["phi2_over_pi"] = seq.phi2.str();
    ordered_json phases = ordered_json::array();
    for (const auto& ph : seq.phases) phases.push_back(ph.str());
    out["phases_over_pi"] = phases;
    std::cout << out.dump() << "\n";
  } else if (args.format == "csv") {
    std::cout << "index,phase_over_pi\n";
    for (std::size_t i = 0; i < seq.phases.size(); ++i) {
      std::cout << i << "," << seq.phases[i].str() << "\n";
    }
  } else {
    throw ConfigError("format must be json or csv");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepArgs {
  std::string config_path;
  std::string out_path;
  std::string heatmap_path;
  int threads = 1;
};

int run_sweep(const SweepArgs& args) {
  const json cfg = load_config(args.config_path);
  require_known_keys(cfg, {"schemaVersion", "sequence", "totalPulses", "tauOverT", "grid"}, "config");
  check_schema_version(cfg);

  const json& seq_cfg = cfg.at("sequence");
  require_known_keys(seq_cfg, {"family", "n", "phi2OverPi", "sign"}, "sequence");
  std::optional<std::string> phi2;
  if (seq_cfg.contains("phi2OverPi")) phi2 = seq_cfg.at("phi2OverPi").get<std::string>();
  const urdd::PhaseSequence seq = make_family_sequence(
      seq_cfg.at("family").get<std::string>(), seq_cfg.value("n", 0), phi2,
      seq_cfg.value("sign", "+"));

  const json& grid_cfg = cfg.at("grid");
  require_known_keys(grid_cfg, {"detuningRange", "amplitudeRange", "resolution"}, "grid");
  urdd::SweepGrid grid;
  grid.detuning_lo = grid_cfg.at("detuningRange").at(0).get<double>();
  grid.detuning_hi = grid_cfg.at("detuningRange").at(1).get<double>();
  grid.amplitude_lo = grid_cfg.at("amplitudeRange").at(0).get<double>();
  grid.amplitude_hi = grid_cfg.at("amplitudeRange").at(1).get<double>();
  grid.nx = grid_cfg.at("resolution").at(0).get<int>();
  grid.ny = grid_cfg.at("resolution").at(1).get<int>();

  const int total_pulses = cfg.at("totalPulses").get<int>();
  const double tau_over_t = cfg.at("tauOverT").get<double>();

  const urdd::MapResult map = urdd::fidelity_map(seq, total_pulses, grid, tau_over_t, args.threads);

  auto out = open_output(args.out_path);
  urdd::write_map_csv(map, out);
  if (!out) throw IoError("failed while writing " + args.out_path);

  if (!args.heatmap_path.empty()) {
    auto pgm = open_output(args.heatmap_path);
    urdd::write_map_pgm(map, pgm);
    if (!pgm) throw IoError("failed while writing " + args.heatmap_path);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// scaling

struct ScalingArgs {
  std::vector<int> n_list = {4, 8, 12, 16, 20};
  double p_min = 0.75;
  double p_max = 0.95;
  int points = 10;
  double alpha = 0.1;
  double delta = 0.07;
  std::string out_path;
};

int run_scaling(const ScalingArgs& args) {
  if (!(args.p_min > 0.0 && args.p_max < 1.0 && args.p_min < args.p_max)) {
    throw ConfigError("need 0 < p-min < p-max < 1");
  }
  if (args.points < 2) throw ConfigError("need at least 2 points");

  // log-spaced in 1-p from the largest error to the smallest
  std::vector<double> p_list;
  const double lo = std::log(1.0 - args.p_max);
  const double hi = std::log(1.0 - args.p_min);
  for (int i = 0; i < args.points; ++i) {
    const double q = std::exp(hi + (lo - hi) * i / (args.points - 1));
    p_list.push_back(1.0 - q);
  }

  const auto fits = urdd::scaling_fit(args.n_list, p_list, {args.alpha, args.delta});

  std::ostringstream csv;
  csv << "n,slope\n";
  for (const auto& fit : fits) {
    if (fit.degenerate) {
      std::cerr << "warning: n=" << fit.n << " excluded (all errors below 1e-14)\n";
      csv << fit.n << ",nan\n";
    } else {
      csv << fit.n << "," << format_double(fit.slope) << "\n";
    }
  }
  if (args.out_path.empty()) {
    std::cout << csv.str();
  } else {
    auto out = open_output(args.out_path);
    out << csv.str();
    if (!out) throw IoError("failed while writing " + args.out_path);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// ensemble

struct EnsembleArgs {
  std::string config_path;
  std::vector<std::string> sequences;
  std::vector<double> times;
  std::string out_path;
  int threads = 1;
};

int run_ensemble(const EnsembleArgs& args) {
  const json cfg = load_config(args.config_path);
  require_known_keys(cfg,
                     {"schemaVersion", "nQubits", "detuningSigma", "rabiSpread", "rabiOffset",
                      "driveDetuning", "T2", "seed", "tau", "drive"},
                     "config");
  check_schema_version(cfg);

  urdd::EnsembleSpec spec;
  spec.n_qubits = cfg.at("nQubits").get<int>();
  spec.detuning_sigma = cfg.at("detuningSigma").get<double>();
  spec.rabi_spread = cfg.at("rabiSpread").get<double>();
  spec.rabi_offset = cfg.at("rabiOffset").get<double>();
  spec.drive_detuning = cfg.at("driveDetuning").get<double>();
  spec.t2 = cfg.at("T2").get<double>();
  spec.seed = cfg.at("seed").get<std::uint64_t>();

  const json& drive_cfg = cfg.at("drive");
  require_known_keys(drive_cfg,
                     {"shape", "duration", "peakRabi", "drivePhase", "stepsPerPulse",
                      "gaussianWidth", "chirpRate"},
                     "drive");
  urdd::IntegratedCycle cycle;
  const std::string shape = drive_cfg.value("shape", "rectangular");
  if (shape == "rectangular") {
    cycle.drive.shape.kind = urdd::PulseKind::Rectangular;
  } else if (shape == "gaussian") {
    cycle.drive.shape.kind = urdd::PulseKind::Gaussian;
  } else if (shape == "chirped") {
    cycle.drive.shape.kind = urdd::PulseKind::ChirpedRectangular;
  } else {
    throw ConfigError("drive.shape must be rectangular, gaussian, or chirped");
  }
  cycle.drive.shape.duration = drive_cfg.at("duration").get<double>();
  cycle.drive.shape.peak_rabi = drive_cfg.at("peakRabi").get<double>();
  cycle.drive.shape.gaussian_width = drive_cfg.value("gaussianWidth", cycle.drive.shape.duration / 6.0);
  cycle.drive.shape.chirp_rate = drive_cfg.value("chirpRate", 0.0);
  cycle.drive.drive_phase = drive_cfg.value("drivePhase", 0.0);
  cycle.integrator.steps_per_pulse = drive_cfg.value("stepsPerPulse", 2000);
  cycle.tau = cfg.at("tau").get<double>();

  std::vector<urdd::SequenceRun> runs;
  for (const std::string& name : args.sequences) {
    urdd::SequenceRun run;
    run.sequence = sequence_by_name(name);
    run.cycle = cycle;
    runs.push_back(std::move(run));
  }
  if (runs.empty()) throw ConfigError("no sequences given");
  if (args.times.empty()) throw ConfigError("no storage times given");

  std::ostringstream csv;
  csv << "storage_time_s,sequence,efficiency_proxy\n";
  for (double t : args.times) {
    const urdd::StorageResult result = urdd::storage_efficiency(spec, runs, t, args.threads);
    for (const auto& [name, proxy] : result.per_sequence) {
      csv << format_double(t) << "," << name << "," << format_double(proxy) << "\n";
    }
  }

  auto out = open_output(args.out_path);
  out << csv.str();
  if (!out) throw IoError("failed while writing " + args.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"universally robust dynamical decoupling sequences: generation and simulation"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "emit a phase sequence as JSON or CSV");
  gen_cmd->add_option("--family", gen.family, "ur | ur-sym | cpmg | xy4 | xy8 | kdd | kdd-xy4")
      ->required();
  gen_cmd->add_option("--n", gen.n, "pulse count (UR families)");
  std::string phi2_text;
  CLI::Option* phi2_opt = gen_cmd->add_option("--phi2-over-pi", phi2_text, "phi2 as a rational multiple of pi, e.g. 1/2");
  gen_cmd->add_option("--sign", gen.sign, "+ or - branch of the UR phase increment");
  gen_cmd->add_option("--format", gen.format, "json (default) or csv");

  SweepArgs sweep;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "2D fidelity map over detuning and amplitude error");
  sweep_cmd->add_option("--config", sweep.config_path, "JSON config")->required();
  sweep_cmd->add_option("--out", sweep.out_path, "output CSV path")->required();
  sweep_cmd->add_option("--heatmap", sweep.heatmap_path, "optional PGM heatmap path");
  sweep_cmd->add_option("--threads", sweep.threads, "worker threads (default 1)");

  ScalingArgs scaling;
  CLI::App* scaling_cmd = app.add_subcommand("scaling", "log-log error-scaling exponents vs 1-p");
  scaling_cmd->add_option("--n-list", scaling.n_list, "sequence orders (2 = two-pulse echo)")
      ->delimiter(',');
  scaling_cmd->add_option("--p-min", scaling.p_min, "smallest transition probability");
  scaling_cmd->add_option("--p-max", scaling.p_max, "largest transition probability");
  scaling_cmd->add_option("--points", scaling.points, "sample count, log-spaced in 1-p");
  scaling_cmd->add_option("--alpha", scaling.alpha, "static pulse phase alpha");
  scaling_cmd->add_option("--delta", scaling.delta, "static free-evolution phase delta");
  scaling_cmd->add_option("--out", scaling.out_path, "output CSV path (default stdout)");

  EnsembleArgs ensemble;
  CLI::App* ensemble_cmd = app.add_subcommand("ensemble", "Monte Carlo storage-efficiency proxy");
  ensemble_cmd->add_option("--config", ensemble.config_path, "JSON config")->required();
  ensemble_cmd->add_option("--sequences", ensemble.sequences, "e.g. UR10,CPMG,KDD_XY4,free")
      ->delimiter(',')
      ->required();
  ensemble_cmd->add_option("--times", ensemble.times, "storage times in seconds")
      ->delimiter(',')
      ->required();
  ensemble_cmd->add_option("--out", ensemble.out_path, "output CSV path")->required();
  ensemble_cmd->add_option("--threads", ensemble.threads, "worker threads (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (phi2_opt->count() > 0) gen.phi2_over_pi = phi2_text;
    if (gen_cmd->parsed()) return run_gen(gen);
    if (sweep_cmd->parsed()) return run_sweep(sweep);
    if (scaling_cmd->parsed()) return run_scaling(scaling);
    if (ensemble_cmd->parsed()) return run_ensemble(ensemble);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    // invalid parameter combinations from the library surface as domain errors
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
