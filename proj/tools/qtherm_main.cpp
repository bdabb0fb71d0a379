// Command-line front end: parameter sweeps over the thermal-qubit
// discrimination machinery, emitted as CSV or JSON tables.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qtherm/adaptive.hpp"
#include "qtherm/discrimination.hpp"
#include "qtherm/states.hpp"
#include "qtherm/sweeps.hpp"
#include "qtherm/table.hpp"
#include "qtherm/thermal.hpp"

namespace {

using nlohmann::json;
using namespace qtherm;

constexpr int kConfigError = 2;
constexpr int kNumericError = 3;

struct ConfigError : std::runtime_error {
  ConfigError(const std::string& field, const std::string& message)
      : std::runtime_error("config error in '" + field + "': " + message) {}
};

struct CliConfig {
  double xi_hot = 1.0 / 20.0;
  double xi_cold = 1.0 / 12.0;
  std::string input = "+x";
  double t_start = 0.0;
  double t_stop = 0.4;
  double t_step = 0.005;
  std::vector<double> times;
  int n_qubits = 0;  // per-command default applied at registration
  std::int64_t n_shots = 40000;
  int replicates = 9;
  std::uint64_t seed = 1;
  std::string quantize;  // degrees, optional "deg" suffix
  std::string format = "csv";
  std::string out;
};

BlochVector parse_input_state(const std::string& text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "+z") return {0.0, 0.0, 1.0};
  if (lower == "-z") return {0.0, 0.0, -1.0};
  if (lower == "+x") return {1.0, 0.0, 0.0};
  std::vector<double> parts;
  std::size_t pos = 0;
  while (pos <= lower.size()) {
    const std::size_t comma = lower.find(',', pos);
    const std::string field =
        lower.substr(pos, comma == std::string::npos ? std::string::npos
                                                     : comma - pos);
    char* end = nullptr;
    const double value = std::strtod(field.c_str(), &end);
    if (end != field.c_str() + field.size() || field.empty()) {
      throw ConfigError("input",
                        "expected +z, -z, +x or a sx,sy,sz triple, got '" +
                            text + "'");
    }
    parts.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (parts.size() != 3) {
    throw ConfigError("input", "expected exactly three components");
  }
  const BlochVector r(parts[0], parts[1], parts[2]);
  if (!is_valid_bloch(r)) {
    throw ConfigError("input", "Bloch vector lies outside the unit sphere");
  }
  return r;
}

double parse_quantize_step(const std::string& text) {
  if (text.empty()) return 0.0;
  std::string body = text;
  if (body.size() >= 3) {
    std::string tail = body.substr(body.size() - 3);
    std::transform(tail.begin(), tail.end(), tail.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (tail == "deg") body = body.substr(0, body.size() - 3);
  }
  char* end = nullptr;
  const double degrees = std::strtod(body.c_str(), &end);
  if (end != body.c_str() + body.size() || body.empty() || degrees < 0.0) {
    throw ConfigError("quantize-angles",
                      "expected a nonnegative angle in degrees, got '" + text +
                          "'");
  }
  return degrees * M_PI / 180.0;
}

std::vector<double> resolve_times(const CliConfig& cfg) {
  if (!cfg.times.empty()) {
    double previous = -1.0;
    for (const double t : cfg.times) {
      if (!(t >= 0.0)) throw ConfigError("times", "times must be >= 0");
      if (t < previous) throw ConfigError("times", "times must be ascending");
      previous = t;
    }
    return cfg.times;
  }
  if (!(cfg.t_start >= 0.0)) throw ConfigError("t-start", "must be >= 0");
  if (!(cfg.t_step > 0.0)) throw ConfigError("t-step", "must be > 0");
  if (!(cfg.t_stop >= cfg.t_start)) {
    throw ConfigError("t-stop", "must be >= t-start");
  }
  const int count = static_cast<int>(
      std::floor((cfg.t_stop - cfg.t_start) / cfg.t_step + 1e-9));
  std::vector<double> times(count + 1);
  for (int i = 0; i <= count; ++i) times[i] = cfg.t_start + i * cfg.t_step;
  return times;
}

ThermalBath bath_from_xi(double xi, const std::string& field) {
  if (!(xi > 0.0 && xi <= 1.0)) {
    throw ConfigError(field, "xi must lie in (0, 1]");
  }
  return ThermalBath::from_xi(xi);
}

json time_config(const CliConfig& cfg) {
  json j;
  if (!cfg.times.empty()) {
    j["times"] = cfg.times;
  } else {
    j["t_start"] = cfg.t_start;
    j["t_stop"] = cfg.t_stop;
    j["t_step"] = cfg.t_step;
  }
  return j;
}

json input_config(const BlochVector& r) {
  return json::array({r.x(), r.y(), r.z()});
}

void emit(const Table& table, const json& config, const CliConfig& cfg) {
  std::string payload;
  if (cfg.format == "csv") {
    payload = table.to_csv();
  } else if (cfg.format == "json") {
    json doc;
    doc["config"] = config;
    doc["rows"] = table.rows_json();
    payload = doc.dump(2) + "\n";
  } else {
    throw ConfigError("format", "expected csv or json");
  }
  if (cfg.out.empty()) {
    std::cout << payload;
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) throw ConfigError("out", "cannot open '" + cfg.out + "'");
    file << payload;
  }
}

void run_trajectory(const CliConfig& cfg) {
  const ThermalBath hot = bath_from_xi(cfg.xi_hot, "xi-hot");
  const ThermalBath cold = bath_from_xi(cfg.xi_cold, "xi-cold");
  const BlochVector input = parse_input_state(cfg.input);
  const std::vector<double> times = resolve_times(cfg);
  Table table({"t", "bath_label", "sx", "sz"});
  for (const TrajectoryRow& row : trajectory_sweep(hot, cold, input, times)) {
    table.add_row({row.t, row.bath_label, row.sx, row.sz});
  }
  json config{{"command", "trajectory"},
              {"xi_hot", cfg.xi_hot},
              {"xi_cold", cfg.xi_cold},
              {"input", input_config(input)},
              {"format", cfg.format}};
  config.update(time_config(cfg));
  emit(table, config, cfg);
}

void run_pe_curve(const CliConfig& cfg) {
  const ThermalBath hot = bath_from_xi(cfg.xi_hot, "xi-hot");
  const ThermalBath cold = bath_from_xi(cfg.xi_cold, "xi-cold");
  const BlochVector input = parse_input_state(cfg.input);
  const std::vector<double> times = resolve_times(cfg);
  Table table({"t", "theta_opt", "pe_hot_vs_cold"});
  for (const PeCurveRow& row : pe_curve_sweep(hot, cold, input, times)) {
    table.add_row({row.t, row.theta_opt, row.pe_hot_vs_cold});
  }
  json config{{"command", "pe-curve"},
              {"xi_hot", cfg.xi_hot},
              {"xi_cold", cfg.xi_cold},
              {"input", input_config(input)},
              {"format", cfg.format}};
  config.update(time_config(cfg));
  emit(table, config, cfg);
}

void run_multiqubit(const CliConfig& cfg) {
  const ThermalBath hot = bath_from_xi(cfg.xi_hot, "xi-hot");
  const ThermalBath cold = bath_from_xi(cfg.xi_cold, "xi-cold");
  const BlochVector input = parse_input_state(cfg.input);
  const int n_qubits = cfg.n_qubits == 0 ? 100 : cfg.n_qubits;
  if (n_qubits < 1) throw ConfigError("n-qubits", "must be >= 1");
  const std::vector<double> times = resolve_times(cfg);
  Table table({"t", "pe_N", "fidelity", "fidelity_bound"});
  for (const MultiqubitRow& row :
       multiqubit_sweep(hot, cold, input, n_qubits, times)) {
    table.add_row({row.t, row.pe_n, row.fidelity, row.fidelity_bound});
  }
  json config{{"command", "multiqubit"},
              {"xi_hot", cfg.xi_hot},
              {"xi_cold", cfg.xi_cold},
              {"input", input_config(input)},
              {"n_qubits", n_qubits},
              {"format", cfg.format}};
  config.update(time_config(cfg));
  emit(table, config, cfg);
}

void run_distinguishability(const CliConfig& cfg) {
  const ThermalBath hot = bath_from_xi(cfg.xi_hot, "xi-hot");
  const ThermalBath cold = bath_from_xi(cfg.xi_cold, "xi-cold");
  const BlochVector input = parse_input_state(cfg.input);
  if (cfg.n_shots < 1) throw ConfigError("n-shots", "must be >= 1");
  if (cfg.replicates < 2) throw ConfigError("replicates", "must be >= 2");
  const std::vector<double> times = resolve_times(cfg);
  Table table({"t", "d_analytic", "d_empirical"});
  for (const DistinguishabilityRow& row :
       distinguishability_sweep(hot, cold, input, cfg.n_shots, cfg.replicates,
                                cfg.seed, times)) {
    table.add_row({row.t, row.d_analytic, row.d_empirical});
  }
  json config{{"command", "distinguishability"},
              {"xi_hot", cfg.xi_hot},
              {"xi_cold", cfg.xi_cold},
              {"input", input_config(input)},
              {"n_shots", cfg.n_shots},
              {"replicates", cfg.replicates},
              {"seed", cfg.seed},
              {"format", cfg.format}};
  config.update(time_config(cfg));
  emit(table, config, cfg);
}

void run_adaptive(const CliConfig& cfg) {
  const int n_qubits = cfg.n_qubits == 0 ? 10 : cfg.n_qubits;
  if (n_qubits < 1) throw ConfigError("n-qubits", "must be >= 1");
  AdaptiveOptions options;
  options.angle_step = parse_quantize_step(cfg.quantize);
  if (n_qubits > options.exact_depth_cap) {
    throw ConfigError("n-qubits",
                      "exact enumeration is capped at " +
                          std::to_string(options.exact_depth_cap));
  }
  if (cfg.n_shots < 1) throw ConfigError("n-shots", "must be >= 1");
  // Benchmark discrimination problem: ground state |H> against the maximally
  // coherent |D>, equal priors.
  const BlochVector rho1(0.0, 0.0, -1.0);
  const BlochVector rho2(1.0, 0.0, 0.0);
  Table table({"N", "pe_1qubit_static", "pe_global_static",
               "pe_adaptive_exact", "pe_adaptive_mc", "pe_adaptive_mc_stderr"});
  for (const AdaptiveSweepRow& row :
       adaptive_sweep(rho1, rho2, PriorPair::equal(), n_qubits, cfg.n_shots,
                      cfg.seed, options)) {
    table.add_row({static_cast<double>(row.n), row.pe_1qubit_static,
                   row.pe_global_static, row.pe_adaptive_exact,
                   row.pe_adaptive_mc, row.pe_adaptive_mc_stderr});
  }
  json config{{"command", "adaptive"},
              {"n_qubits", n_qubits},
              {"n_shots", cfg.n_shots},
              {"seed", cfg.seed},
              {"quantize_angles_deg", options.angle_step * 180.0 / M_PI},
              {"format", cfg.format}};
  emit(table, config, cfg);
}

void run_waveplates(const CliConfig& cfg, double p, double gamma) {
  if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("p", "must lie in [0, 1]");
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw ConfigError("gamma", "must lie in [0, 1]");
  }
  const WaveplateSettings s = waveplate_settings(GadChannel(p, gamma));
  const double to_deg = 180.0 / M_PI;
  Table table({"theta_vbs_rad", "theta_vbs_deg", "theta_v_rad", "theta_v_deg",
               "theta_h_rad", "theta_h_deg"});
  table.add_row({s.theta_vbs, s.theta_vbs * to_deg, s.branch1_theta_v,
                 s.branch1_theta_v * to_deg, s.branch2_theta_h,
                 s.branch2_theta_h * to_deg});
  json config{{"command", "waveplates"},
              {"p", p},
              {"gamma", gamma},
              {"format", cfg.format}};
  emit(table, config, cfg);
}

void add_bath_options(CLI::App* cmd, CliConfig& cfg) {
  cmd->add_option("--xi-hot", cfg.xi_hot, "hot-bath xi = 1/(1+2N)");
  cmd->add_option("--xi-cold", cfg.xi_cold, "cold-bath xi = 1/(1+2N)");
  cmd->add_option("--input", cfg.input, "input state: +z, -z, +x or sx,sy,sz");
}

void add_time_options(CLI::App* cmd, CliConfig& cfg) {
  cmd->add_option("--t-start", cfg.t_start, "sweep start (units of tau_sp)");
  cmd->add_option("--t-stop", cfg.t_stop, "sweep stop (units of tau_sp)");
  cmd->add_option("--t-step", cfg.t_step, "sweep step (units of tau_sp)");
  cmd->add_option("--times", cfg.times, "explicit time list")
      ->delimiter(',')
      ->excludes("--t-start")
      ->excludes("--t-stop")
      ->excludes("--t-step");
}

void add_output_options(CLI::App* cmd, CliConfig& cfg) {
  cmd->add_option("--format", cfg.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", cfg.out, "output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermal-qubit discrimination sweeps"};
  app.require_subcommand(1);

  CliConfig cfg;
  double wp_p = 0.0;
  double wp_gamma = 0.0;

  CLI::App* trajectory = app.add_subcommand(
      "trajectory", "Bloch components of hot/cold thermalization");
  add_bath_options(trajectory, cfg);
  add_time_options(trajectory, cfg);
  add_output_options(trajectory, cfg);

  CLI::App* pe_curve = app.add_subcommand(
      "pe-curve", "optimal single-qubit discrimination error vs time");
  add_bath_options(pe_curve, cfg);
  add_time_options(pe_curve, cfg);
  add_output_options(pe_curve, cfg);

  CLI::App* multiqubit = app.add_subcommand(
      "multiqubit", "optimal static N-qubit error and fidelity bound vs time");
  add_bath_options(multiqubit, cfg);
  add_time_options(multiqubit, cfg);
  add_output_options(multiqubit, cfg);
  multiqubit->add_option("--n-qubits", cfg.n_qubits, "qubit count");

  CLI::App* disting = app.add_subcommand(
      "distinguishability", "outcome distinguishability vs time");
  add_bath_options(disting, cfg);
  add_time_options(disting, cfg);
  add_output_options(disting, cfg);
  disting->add_option("--n-shots", cfg.n_shots, "photons per measurement");
  disting->add_option("--replicates", cfg.replicates,
                      "datasets for the empirical variance");
  disting->add_option("--seed", cfg.seed, "RNG seed");

  CLI::App* adaptive = app.add_subcommand(
      "adaptive", "strategy comparison for |H> vs |D> by qubit count");
  add_output_options(adaptive, cfg);
  adaptive->add_option("--n-qubits", cfg.n_qubits, "largest qubit count");
  adaptive->add_option("--n-shots", cfg.n_shots, "Monte Carlo trials per N");
  adaptive->add_option("--seed", cfg.seed, "RNG seed");
  adaptive->add_option("--quantize-angles", cfg.quantize,
                       "round commanded angles to this step, e.g. 0.2deg");

  CLI::App* waveplates = app.add_subcommand(
      "waveplates", "plate angles realizing a GAD channel");
  waveplates->add_option("--p", wp_p, "absorption-branch weight")->required();
  waveplates->add_option("--gamma", wp_gamma, "damping parameter")->required();
  add_output_options(waveplates, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  try {
    if (trajectory->parsed()) {
      run_trajectory(cfg);
    } else if (pe_curve->parsed()) {
      run_pe_curve(cfg);
    } else if (multiqubit->parsed()) {
      run_multiqubit(cfg);
    } else if (disting->parsed()) {
      run_distinguishability(cfg);
    } else if (adaptive->parsed()) {
      run_adaptive(cfg);
    } else if (waveplates->parsed()) {
      run_waveplates(cfg, wp_p, wp_gamma);
    }
  } catch (const ConfigError& e) {
    std::cerr << e.what() << "\n";
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kNumericError;
  }
  return 0;
}
