// multiport: generate, inspect, verify and simulate multiport circuits.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "multiport/experiments.hpp"
#include "multiport/generators.hpp"
#include "multiport/netlist.hpp"
#include "multiport/oracles.hpp"
#include "multiport/results.hpp"
#include "verify.hpp"

using namespace multiport;

namespace {

constexpr int kVerifyFailed = 1;
constexpr int kUsageError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

CircuitFamily family_from(const std::string& name) {
  if (auto family = parse_family(name)) return *family;
  throw std::invalid_argument("unknown family '" + name +
                              "' (expected qft, shuffle, v, w, phi, prep, oracle, grover-search)");
}

struct CircuitArgs {
  std::string family;
  int modes = 0;
  std::optional<int> solution;
};

void add_circuit_args(CLI::App* cmd, CircuitArgs& args) {
  cmd->add_option("family", args.family, "qft, shuffle, v, w, phi, prep, oracle or grover-search")->required();
  cmd->add_option("-d,--modes,--items", args.modes, "Number of modes (items for Grover search)")->required();
  cmd->add_option("-s,--solution", args.solution, "Marked mode for oracle and grover-search (1-based)");
}

struct NoiseFlags {
  std::optional<double> bs_mean, bs_std, swap_mean, swap_std, loss_mean, loss_std;

  void apply_to(NoiseParams& p) const {
    if (bs_mean) p.bs_mean = *bs_mean;
    if (bs_std) p.bs_std = *bs_std;
    if (swap_mean) p.swap_mean = *swap_mean;
    if (swap_std) p.swap_std = *swap_std;
    if (loss_mean) p.loss_mean = *loss_mean;
    if (loss_std) p.loss_std = *loss_std;
  }
};

int cmd_netlist(const CircuitArgs& args, const std::string& out_path) {
  const auto family = family_from(args.family);
  NetlistDocument doc;
  doc.circuit = generate(family, args.modes, args.solution);
  doc.metadata.family = std::string(to_string(family));
  doc.metadata.parameters["modes"] = args.modes;
  if (args.solution) doc.metadata.parameters["solution"] = *args.solution;
  doc.metadata.generator = fmt::format("multiport {}", library_version());
  write_output(out_path, serialize_netlist(doc));
  return 0;
}

int cmd_matrix(const CircuitArgs& args) {
  const auto m = circuit_matrix(generate(family_from(args.family), args.modes, args.solution));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    std::string line;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c > 0) line += "  ";
      line += fmt::format("{:.12f}{:+.12f}i", m(r, c).real() + 0.0, m(r, c).imag() + 0.0);
    }
    fmt::print("{}\n", line);
  }
  fmt::print("# unitarity residual {:.3e}\n", unitarity_residual(m));
  return 0;
}

struct SimulateArgs {
  std::string kind;
  int modes = 0;
  std::size_t trials = 100000;
  std::uint64_t seed = 1;
  std::string config;
  std::string convention = "unnormalized";
  unsigned workers = 0;
  std::string out_path;
  std::string per_trial_path;
  NoiseFlags noise;
};

int cmd_simulate(const SimulateArgs& args) {
  ExperimentSpec spec;
  const auto kind = parse_experiment_kind(args.kind);
  if (!kind) throw std::invalid_argument("unknown experiment '" + args.kind + "' (expected qft or grover)");
  const auto convention = parse_convention(args.convention);
  if (!convention) throw std::invalid_argument("unknown convention '" + args.convention + "'");
  spec.kind = *kind;
  spec.modes = args.modes;
  spec.trials = args.trials;
  spec.seed = args.seed;
  spec.convention = *convention;
  spec.workers = args.workers;
  if (!args.config.empty()) spec.noise = apply_noise_config(read_file(args.config), spec.noise);
  args.noise.apply_to(spec.noise);
  spec.validate();

  const auto result = run_experiment(spec);
  const auto csv = write_results_csv(spec, result.stats);
  write_output(args.out_path, csv);
  if (!args.per_trial_path.empty()) write_output(args.per_trial_path, write_fidelities_csv(result.fidelities));
  if (!args.out_path.empty() && args.out_path != "-") {
    fmt::print("mean {:.6f}  std {:.6f}  median {:.6f}  ({} trials)\n", result.stats.mean, result.stats.std,
               result.stats.median, spec.trials);
  }
  return 0;
}

int cmd_histogram(const std::string& in_path, const std::string& out_path) {
  std::ifstream in(in_path);
  if (!in) throw std::invalid_argument("cannot open " + in_path);
  const auto values = read_fidelities_csv(in);
  write_output(out_path, write_histogram_csv(fd_histogram(values)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiport photonic circuit generator and simulator"};
  app.set_version_flag("--version", std::string(library_version()));
  app.require_subcommand(1);

  CircuitArgs netlist_args;
  std::string netlist_out;
  auto* netlist = app.add_subcommand("netlist", "Write a circuit netlist (JSON)");
  add_circuit_args(netlist, netlist_args);
  netlist->add_option("-o,--output", netlist_out, "Output path (default stdout)");

  CircuitArgs matrix_args;
  auto* matrix = app.add_subcommand("matrix", "Print a circuit's transfer matrix");
  add_circuit_args(matrix, matrix_args);

  int max_dim = 32;
  double tolerance = 1e-10;
  auto* verify = app.add_subcommand("verify", "Check generators against analytic references");
  verify->add_option("--max-dim", max_dim, "Largest dimension to check (power of two)")
      ->check(CLI::Range(2, 256));
  verify->add_option("--tolerance", tolerance, "Maximum allowed deviation");

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo fidelity under fabrication noise");
  simulate->add_option("kind", sim.kind, "qft or grover")->required();
  simulate->add_option("-d,--modes,--items", sim.modes, "Number of modes or search items")->required();
  simulate->add_option("-n,--trials", sim.trials, "Number of trials");
  simulate->add_option("--seed", sim.seed, "Master seed");
  simulate->add_option("--config", sim.config, "JSON file with noise parameters (flags override it)");
  simulate->add_option("--convention", sim.convention, "unnormalized or normalized");
  simulate->add_option("-j,--workers", sim.workers, "Worker threads (default: MULTIPORT_WORKERS or all cores)");
  simulate->add_option("-o,--output", sim.out_path, "Results CSV path (default stdout)");
  simulate->add_option("--per-trial", sim.per_trial_path, "Also write per-trial fidelities here");
  simulate->add_option("--bs-mean", sim.noise.bs_mean, "Beam-splitter reflectivity mean");
  simulate->add_option("--bs-std", sim.noise.bs_std, "Beam-splitter reflectivity std");
  simulate->add_option("--swap-mean", sim.noise.swap_mean, "Swap reflectivity mean");
  simulate->add_option("--swap-std", sim.noise.swap_std, "Swap reflectivity std");
  simulate->add_option("--loss-mean", sim.noise.loss_mean, "Phase-shifter loss mean");
  simulate->add_option("--loss-std", sim.noise.loss_std, "Phase-shifter loss std");

  std::string histogram_in;
  std::string histogram_out;
  auto* histogram = app.add_subcommand("histogram", "Freedman-Diaconis histogram of a per-trial file");
  histogram->add_option("file", histogram_in, "Per-trial fidelity CSV")->required();
  histogram->add_option("-o,--output", histogram_out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*netlist) return cmd_netlist(netlist_args, netlist_out);
    if (*matrix) return cmd_matrix(matrix_args);
    if (*verify) {
      if (!is_power_of_two(max_dim)) throw std::invalid_argument("--max-dim must be a power of two");
      return cli::run_verify(max_dim, tolerance, std::cout) ? 0 : kVerifyFailed;
    }
    if (*simulate) return cmd_simulate(sim);
    if (*histogram) return cmd_histogram(histogram_in, histogram_out);
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kUsageError;
  }
  return kUsageError;
}
