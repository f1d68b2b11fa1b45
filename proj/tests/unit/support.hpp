#pragma once

// Test-only oracles and generators. Nothing here goes through the library's
// compilation path, so it can be used to check it.

#include <cmath>
#include <random>

#include <Eigen/Core>

#include "multiport/circuit.hpp"

namespace multiport::fixtures {

/// Dense product of fully embedded per-element matrices, built from the
/// coupler formula directly rather than through element_block/circuit_matrix.
Eigen::MatrixXcd dense_product_matrix(const Circuit& c);

/// Random circuit of `layers` layers on `modes` modes with random kinds,
/// reflectivities in [0, 1], phases in [-pi, pi] and (if lossy) losses in [0, 0.3].
Circuit random_circuit(int modes, int layers, std::mt19937_64& rng, bool lossy = false);

Eigen::VectorXcd random_vector(int d, std::mt19937_64& rng);

/// Decomposes a unitary into adjacent couplers and phase shifters by
/// nulling sub-diagonal entries column by column. Used only to obtain an
/// even-size Fourier base circuit that the doubling generator can extend.
Circuit decompose_unitary(const Eigen::MatrixXcd& u);

inline double standard_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

inline double standard_normal_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * 3.14159265358979323846);
}

/// E[max(0, X)] for X ~ N(mean, std^2).
inline double rectified_gaussian_mean(double mean, double std) {
  const double a = mean / std;
  return mean * standard_normal_cdf(a) + std * standard_normal_pdf(a);
}

}  // namespace multiport::fixtures
