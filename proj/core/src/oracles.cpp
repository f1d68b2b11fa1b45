#include "multiport/oracles.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "multiport/circuit.hpp"
#include "multiport/generators.hpp"

namespace multiport {
namespace {

void require_positive(int d) {
  if (d < 1) throw std::invalid_argument("dimension must be >= 1, got " + std::to_string(d));
}

Eigen::MatrixXcd block_diagonal(const Eigen::MatrixXcd& a) {
  const auto n = a.rows();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  out.topLeftCorner(n, n) = a;
  out.bottomRightCorner(n, n) = a;
  return out;
}

}  // namespace

Eigen::MatrixXcd dft_matrix(int d) {
  require_positive(d);
  Eigen::MatrixXcd f(d, d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      // Reduce jk mod d first so the angle stays small and exact.
      const int r = static_cast<int>((static_cast<long long>(j) * k) % d);
      f(j, k) = std::polar(scale, 2.0 * std::numbers::pi * r / d);
    }
  }
  return f;
}

Eigen::MatrixXcd grover_inversion_matrix(int d) {
  require_positive(d);
  const double off = 2.0 / d;
  Eigen::MatrixXcd w = Eigen::MatrixXcd::Constant(d, d, off);
  w.diagonal().array() -= 1.0;
  return w;
}

Eigen::MatrixXcd walsh_hadamard_matrix(int d) {
  if (!is_power_of_two(d)) {
    throw std::invalid_argument("walsh_hadamard_matrix needs d = 2^k, got " + std::to_string(d));
  }
  Eigen::MatrixXcd h(d, d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      h(j, k) = (std::popcount(static_cast<unsigned>(j & k)) % 2 == 0) ? scale : -scale;
    }
  }
  return h;
}

Eigen::MatrixXcd even_odd_sort_matrix(int half) {
  require_positive(half);
  const int n = 2 * half;
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 0; k < half; ++k) {
    p(k, 2 * k) = 1.0;
    p(half + k, 2 * k + 1) = 1.0;
  }
  return p;
}

Eigen::MatrixXcd exchange_matrix(int half) {
  require_positive(half);
  const int n = 2 * half;
  Eigen::MatrixXcd q = Eigen::MatrixXcd::Identity(n, n);
  q(0, 0) = 0.0;
  q(half, half) = 0.0;
  q(0, half) = 1.0;
  q(half, 0) = 1.0;
  return q;
}

Eigen::VectorXcd uniform_state(int d) {
  require_positive(d);
  return Eigen::VectorXcd::Constant(d, 1.0 / std::sqrt(static_cast<double>(d)));
}

double max_abs_deviation(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix shapes differ");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

double unitarity_residual(const Eigen::MatrixXcd& u) {
  const auto n = u.cols();
  return max_abs_deviation(u.adjoint() * u, Eigen::MatrixXcd::Identity(n, n));
}

MatrixComparison compare_up_to_global_phase(const Eigen::MatrixXcd& actual,
                                            const Eigen::MatrixXcd& expected, double tolerance) {
  MatrixComparison result;
  result.deviation = max_abs_deviation(actual, expected);
  if (result.deviation <= tolerance || expected.size() == 0) return result;

  Eigen::Index row = 0;
  Eigen::Index col = 0;
  expected.cwiseAbs().maxCoeff(&row, &col);
  if (std::abs(actual(row, col)) == 0.0) return result;
  const auto ratio = actual(row, col) / expected(row, col);
  const auto phase = ratio / std::abs(ratio);
  const double corrected = max_abs_deviation(actual / phase, expected);
  if (corrected < result.deviation) {
    result.deviation = corrected;
    result.phase_corrected = true;
    result.global_phase = phase;
  }
  return result;
}

double check_fft_factorization(int d) {
  require_positive(d);
  const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(d, d);
  Eigen::MatrixXcd twiddle = Eigen::MatrixXcd::Zero(d, d);
  for (int k = 0; k < d; ++k) twiddle(k, k) = std::polar(1.0, k * std::numbers::pi / d);

  Eigen::MatrixXcd butterfly(2 * d, 2 * d);
  butterfly << identity, twiddle, identity, -twiddle;
  butterfly /= std::sqrt(2.0);

  const Eigen::MatrixXcd lhs = butterfly * block_diagonal(dft_matrix(d)) * even_odd_sort_matrix(d);
  return max_abs_deviation(lhs, dft_matrix(2 * d));
}

GroverFactorizationCheck check_grover_factorization(int d) {
  if (!is_power_of_two(d) || d < 2) {
    throw std::invalid_argument("grover factorization needs d = 2^k >= 2, got " +
                                std::to_string(d));
  }
  const Eigen::MatrixXcd v = circuit_matrix(v_circuit(d));
  if (unitarity_residual(v) > 1e-12) {
    throw std::runtime_error("generated V circuit is not unitary");
  }
  const Eigen::MatrixXcd vv = block_diagonal(v);
  const Eigen::MatrixXcd ww = block_diagonal(grover_inversion_matrix(d));

  GroverFactorizationCheck check;
  check.inversion_deviation =
      max_abs_deviation(vv * exchange_matrix(d) * vv * ww, grover_inversion_matrix(2 * d));

  Eigen::MatrixXcd h_kron_i(2 * d, 2 * d);
  const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(d, d) / std::sqrt(2.0);
  h_kron_i << identity, identity, identity, -identity;
  check.hadamard_deviation = max_abs_deviation(h_kron_i * vv, walsh_hadamard_matrix(2 * d));
  return check;
}

double ideal_grover_success(int d) {
  require_positive(d);
  Eigen::MatrixXcd oracle_matrix = Eigen::MatrixXcd::Identity(d, d);
  oracle_matrix(0, 0) = -1.0;
  const Eigen::MatrixXcd grover = grover_inversion_matrix(d) * oracle_matrix;
  Eigen::VectorXcd state = uniform_state(d);
  for (int r = 0; r < grover_iterations(d); ++r) state = grover * state;
  return std::norm(state(0));
}

}  // namespace multiport
