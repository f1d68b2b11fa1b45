#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "multiport/circuit.hpp"
#include "multiport/noise.hpp"
#include "multiport/statistics.hpp"

namespace multiport {

enum class ExperimentKind : std::uint8_t { Qft, GroverSearch };

/// Unnormalized: |<ideal|sim>|^2, so photon loss lowers fidelity.
/// Normalized: the simulated state is rescaled to unit norm first.
enum class FidelityConvention : std::uint8_t { Unnormalized, Normalized };

std::string_view to_string(ExperimentKind kind);
std::string_view to_string(FidelityConvention convention);
std::optional<ExperimentKind> parse_experiment_kind(std::string_view name);
std::optional<FidelityConvention> parse_convention(std::string_view name);

struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::Qft;
  int modes = 4;
  std::size_t trials = 100000;
  NoiseParams noise;
  std::uint64_t seed = 1;
  FidelityConvention convention = FidelityConvention::Unnormalized;
  /// 0 picks MULTIPORT_WORKERS from the environment, else the hardware thread count.
  unsigned workers = 0;

  /// Throws std::invalid_argument for zero trials, bad noise or a mode
  /// count the circuit family cannot build.
  void validate() const;
};

struct ExperimentResult {
  SummaryStats stats;
  /// Indexed by trial.
  std::vector<double> fidelities;
};

/// Haar-random pure state from the Box-Muller construction
/// z_k = sqrt(-2 ln x_k) exp(2 pi i y_k), x_k, y_k uniform on (0, 1),
/// normalized to unit Euclidean norm.
AmplitudeVector haar_state(int d, TrialRng& rng);

/// |<ideal|simulated>|^2 clamped to [0, 1]; `ideal` is normalized internally.
double fidelity(const AmplitudeVector& ideal, const AmplitudeVector& simulated,
                FidelityConvention convention = FidelityConvention::Unnormalized);

/// Resolves spec.workers == 0 against the environment.
unsigned resolve_workers(unsigned requested);

/// Trial k: Haar input, fresh noisy QFT, fidelity against the ideal output.
ExperimentResult run_qft_experiment(const ExperimentSpec& spec);

/// Trial k: uniform solution in [1, d], fresh noisy search circuit
/// (preparation, oracles and inversions), fidelity against the lossless output.
ExperimentResult run_grover_experiment(const ExperimentSpec& spec);

ExperimentResult run_experiment(const ExperimentSpec& spec);

}  // namespace multiport
