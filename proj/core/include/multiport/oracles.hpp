#pragma once

#include <complex>

#include <Eigen/Core>

namespace multiport {

// Analytic reference matrices. Row/column indices are 0-based here; index k
// corresponds to mode label k + 1 everywhere else in the library.

/// Entry (j, k) = exp(2 pi i j k / d) / sqrt(d).
Eigen::MatrixXcd dft_matrix(int d);

/// 2|psi><psi| - I for the uniform |psi>: diagonal 2/d - 1, off-diagonal 2/d.
Eigen::MatrixXcd grover_inversion_matrix(int d);

/// Normalized Sylvester-Hadamard matrix H^{(x)k} for d = 2^k.
Eigen::MatrixXcd walsh_hadamard_matrix(int d);

/// 2d x 2d permutation with (P v) = (v1, v3, ..., v_{2d-1}, v2, v4, ..., v_{2d}).
Eigen::MatrixXcd even_odd_sort_matrix(int half);

/// 2d x 2d permutation exchanging entries 1 and d + 1.
Eigen::MatrixXcd exchange_matrix(int half);

/// Uniform superposition (1, ..., 1) / sqrt(d).
Eigen::VectorXcd uniform_state(int d);

double max_abs_deviation(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// Largest |(U^dagger U - I)_jk|.
double unitarity_residual(const Eigen::MatrixXcd& u);

struct MatrixComparison {
  double deviation = 0.0;
  /// True when equality only held after removing a global phase.
  bool phase_corrected = false;
  std::complex<double> global_phase{1.0, 0.0};
};

/// Compares `actual` to `expected` directly; if that exceeds `tolerance`,
/// retries after dividing out the phase of actual/expected at the
/// largest-magnitude entry of `expected`.
MatrixComparison compare_up_to_global_phase(const Eigen::MatrixXcd& actual,
                                            const Eigen::MatrixXcd& expected, double tolerance);

/// || (1/sqrt2) [[I, D], [I, -D]] diag(F_d, F_d) P - F_{2d} ||_max
/// with D = diag(exp(i k pi / d)), k = 0..d-1.
double check_fft_factorization(int d);

struct GroverFactorizationCheck {
  /// || diag(V,V) Q diag(V,V) diag(W,W) - W_{2d} ||_max
  double inversion_deviation = 0.0;
  /// || (H (x) I_d) diag(V,V) - V_{2d} ||_max
  double hadamard_deviation = 0.0;
};

/// V_d is taken from the generated circuit; W_d, W_2d and V_2d are analytic.
GroverFactorizationCheck check_grover_factorization(int d);

/// Success probability after floor((pi/4) sqrt d) analytic Grover iterations
/// from the uniform state, solution at mode 1.
double ideal_grover_success(int d);

}  // namespace multiport
