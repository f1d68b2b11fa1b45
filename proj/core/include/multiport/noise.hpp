#pragma once

#include <cstdint>
#include <random>

#include "multiport/circuit.hpp"

namespace multiport {

/// Fabrication-error distributions. Beam-splitter reflectivities are
/// Gaussian; swap reflectivities and phase-shifter absorptivities are
/// rectified Gaussians, max(0, X).
struct NoiseParams {
  double bs_mean = 0.5;
  double bs_std = 0.04;
  double swap_mean = 0.02;
  double swap_std = 0.02;
  double loss_mean = 0.05;
  double loss_std = 0.025;

  /// Degenerate distributions that reproduce the ideal circuits exactly.
  static NoiseParams ideal();

  /// Throws std::invalid_argument on negative stds or means outside [0, 1].
  void validate() const;

  bool operator==(const NoiseParams&) const = default;
};

/// Random stream owned by one Monte Carlo trial. The stream is a pure
/// function of (master seed, trial index), so trials can run on any worker
/// in any order.
class TrialRng {
 public:
  TrialRng(std::uint64_t master_seed, std::uint64_t trial_index);

  /// Uniform on the open interval (0, 1).
  double uniform_open();
  double standard_normal();
  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// SplitMix64 finalizer; used to derive per-trial seeds.
std::uint64_t mix_seed(std::uint64_t x);

/// max(0, mean + std * Z) with Z standard normal. std = 0 returns max(0, mean).
double rectified_gaussian(double mean, double std, TrialRng& rng);

/// Copy of `c` with freshly drawn reflectivities and losses; structure,
/// modes and phases are unchanged. Draws one value per element in layer order.
Circuit realize(const Circuit& c, const NoiseParams& p, TrialRng& rng);

}  // namespace multiport
