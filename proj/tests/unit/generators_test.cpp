#include "multiport/generators.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "multiport/oracles.hpp"
#include "support.hpp"

using namespace multiport;

namespace {

Element B(int i, int j) { return Element::beam_splitter(i, j); }
Element S(int i, int j) { return Element::swap(i, j); }
Element P(int m, double theta) { return Element::phase_shifter(m, theta); }

Eigen::MatrixXcd analytic_inversion(int d) {
  return Eigen::MatrixXcd::Constant(d, d, 2.0 / d) - Eigen::MatrixXcd::Identity(d, d);
}

}  // namespace

TEST(Qft, two_modes_is_single_beam_splitter) {
  EXPECT_EQ(qft(2), Circuit(2, {Layer{B(1, 2)}}));
}

TEST(Qft, four_modes_layer_layout) {
  const Circuit expected(4, {Layer{S(2, 3)}, Layer{B(1, 2), B(3, 4)}, Layer{P(4, std::numbers::pi / 2)},
                             Layer{S(2, 3)}, Layer{B(1, 2), B(3, 4)}, Layer{S(2, 3)}});
  EXPECT_EQ(qft(4), expected);
}

TEST(Qft, matches_dft_oracle) {
  for (int d : {2, 4, 8, 16, 32}) {
    EXPECT_LE(max_abs_deviation(circuit_matrix(qft(d)), dft_matrix(d)), 1e-10) << d;
  }
}

TEST(Qft, dft_oracle_entry_check) {
  // (1,1) entry of the 4-point transform is i/2.
  const auto f = dft_matrix(4);
  EXPECT_NEAR(std::abs(f(1, 1) - std::complex<double>(0.0, 0.5)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(f(0, 3) - 0.5), 0.0, 1e-15);
}

TEST(Qft, six_mode_base_doubles_to_twelve) {
  const auto base = fixtures::decompose_unitary(dft_matrix(6));
  ASSERT_LE(max_abs_deviation(circuit_matrix(base), dft_matrix(6)), 1e-12);
  const auto twelve = qft(12, base);
  EXPECT_EQ(twelve.modes(), 12);
  EXPECT_LE(max_abs_deviation(circuit_matrix(twelve), dft_matrix(12)), 1e-10);
  EXPECT_LE(max_abs_deviation(circuit_matrix(qft(24, base)), dft_matrix(24)), 1e-10);
}

TEST(Qft, rejects_unreachable_sizes) {
  EXPECT_THROW(qft(6), std::invalid_argument);
  EXPECT_THROW(qft(1), std::invalid_argument);
  EXPECT_THROW(qft(0), std::invalid_argument);
  EXPECT_THROW(qft(18, fixtures::decompose_unitary(dft_matrix(6))), std::invalid_argument);
}

TEST(Shuffle, layer_structure) {
  EXPECT_EQ(shuffle_sigma(1), Circuit(2));
  EXPECT_EQ(shuffle_sigma(2), Circuit(4, {Layer{S(2, 3)}}));
  const Circuit expected(8, {Layer{S(4, 5)}, Layer{S(3, 4), S(5, 6)}, Layer{S(2, 3), S(4, 5), S(6, 7)}});
  EXPECT_EQ(shuffle_sigma(4), expected);
  EXPECT_THROW(shuffle_sigma(0), std::invalid_argument);
}

TEST(Shuffle, swap_count_and_interleaving) {
  for (int half = 1; half <= 16; ++half) {
    const auto sigma = shuffle_sigma(half);
    EXPECT_EQ(element_count(sigma), static_cast<std::size_t>(half * (half - 1) / 2));
    const auto perm = swap_permutation(sigma);
    // Mode k (1-based) lands at 2k-1 from the top half and 2(k-h) from the bottom.
    for (int k = 1; k <= 2 * half; ++k) {
      const int expected = k <= half ? 2 * k - 1 : 2 * (k - half);
      EXPECT_EQ(perm[k - 1], expected) << "half " << half << " mode " << k;
    }
  }
}

TEST(Shuffle, inverse_is_even_odd_sort) {
  for (int half : {1, 2, 3, 4, 8}) {
    EXPECT_EQ(circuit_matrix(inverse(shuffle_sigma(half))), even_odd_sort_matrix(half));
  }
}

TEST(VCircuit, small_cases) {
  EXPECT_EQ(v_circuit(2), Circuit(2, {Layer{B(1, 2)}}));
  const Circuit v4(4, {Layer{B(1, 2), B(3, 4)}, Layer{S(2, 3)}, Layer{B(1, 2), B(3, 4)}, Layer{S(2, 3)}});
  EXPECT_EQ(v_circuit(4), v4);
  EXPECT_EQ(element_count(v_circuit(8)), 28u);
}

TEST(VCircuit, is_walsh_hadamard) {
  for (int d : {2, 4, 8, 16, 32}) {
    EXPECT_LE(max_abs_deviation(circuit_matrix(v_circuit(d)), walsh_hadamard_matrix(d)), 1e-10) << d;
  }
}

TEST(Phi, small_cases) {
  EXPECT_EQ(phi(2), Circuit(4, {Layer{S(2, 3)}, Layer{S(1, 2)}, Layer{S(2, 3)}}));
  EXPECT_EQ(element_count(phi(4)), 7u);
  EXPECT_THROW(phi(3), std::invalid_argument);
}

TEST(Phi, exchanges_first_mode_of_each_half) {
  for (int half : {2, 4, 8, 16}) {
    const auto net = phi(half);
    EXPECT_EQ(element_count(net), static_cast<std::size_t>(half * half / 4 + half / 2 + 1)) << half;
    EXPECT_EQ(circuit_matrix(net), exchange_matrix(half)) << half;
    const auto perm = swap_permutation(net);
    for (int k = 1; k <= 2 * half; ++k) {
      const int expected = k == 1 ? half + 1 : k == half + 1 ? 1 : k;
      EXPECT_EQ(perm[k - 1], expected);
    }
  }
}

TEST(GroverInversion, small_cases) {
  EXPECT_EQ(grover_inversion(2), Circuit(2, {Layer{S(1, 2)}}));
  const Circuit w4(4, {Layer{S(1, 2), S(3, 4)}, Layer{B(1, 2), B(3, 4)}, Layer{S(2, 3)}, Layer{S(1, 2)},
                       Layer{S(2, 3)}, Layer{B(1, 2), B(3, 4)}});
  EXPECT_EQ(grover_inversion(4), w4);
  EXPECT_EQ(element_count(grover_inversion(8)), 49u);
}

TEST(GroverInversion, equals_reflection_without_phase_correction) {
  for (int d : {2, 4, 8, 16, 32}) {
    const auto cmp = compare_up_to_global_phase(circuit_matrix(grover_inversion(d)), analytic_inversion(d), 1e-10);
    EXPECT_LE(cmp.deviation, 1e-10) << d;
    EXPECT_FALSE(cmp.phase_corrected) << d;
  }
}

TEST(Prep, counts_and_output) {
  EXPECT_EQ(prep(2), Circuit(2, {Layer{B(1, 2)}}));
  EXPECT_EQ(element_count(prep(4)), 4u);
  EXPECT_EQ(element_count(prep(8)), 12u);
  for (int d : {2, 4, 8, 16, 32}) {
    AmplitudeVector e1 = AmplitudeVector::Zero(d);
    e1(0) = 1.0;
    const auto out = multiport::apply(prep(d), e1);
    for (int k = 0; k < d; ++k) {
      EXPECT_NEAR(out(k).real(), 1.0 / std::sqrt(d), 1e-12) << d << ":" << k;
      EXPECT_NEAR(out(k).imag(), 0.0, 1e-12);
    }
  }
}

TEST(Oracle, flips_sign_of_solution) {
  const auto o = oracle(4, 2);
  EXPECT_EQ(element_count(o), 1u);
  const auto out = multiport::apply(o, uniform_state(4));
  EXPECT_NEAR(out(0).real(), 0.5, 1e-15);
  EXPECT_NEAR(out(1).real(), -0.5, 1e-15);
  EXPECT_NEAR(out(2).real(), 0.5, 1e-15);
  EXPECT_EQ(element_count(oracle(8, 3)), 1u);

  auto twice = o;
  twice.append(o);
  EXPECT_LE(max_abs_deviation(circuit_matrix(twice), Eigen::MatrixXcd::Identity(4, 4)), 1e-15);

  EXPECT_THROW(oracle(4, 0), std::invalid_argument);
  EXPECT_THROW(oracle(4, 5), std::invalid_argument);
}

TEST(GroverSearch, iterations) {
  EXPECT_EQ(grover_iterations(2), 1);
  EXPECT_EQ(grover_iterations(4), 1);
  EXPECT_EQ(grover_iterations(8), 2);
  EXPECT_EQ(grover_iterations(16), 3);
  EXPECT_EQ(grover_iterations(64), 6);
}

TEST(GroverSearch, ideal_success_probabilities) {
  for (int d : {4, 8}) {
    const double expected = d == 4 ? 1.0 : 121.0 / 128.0;
    for (int s = 1; s <= d; ++s) {
      AmplitudeVector e1 = AmplitudeVector::Zero(d);
      e1(0) = 1.0;
      const auto out = multiport::apply(grover_search(d, s), e1);
      EXPECT_NEAR(std::norm(out(s - 1)), expected, 1e-9) << d << " " << s;
      EXPECT_NEAR(out.squaredNorm(), 1.0, 1e-12);
    }
  }
  EXPECT_NEAR(ideal_grover_success(8), 121.0 / 128.0, 1e-12);
}

TEST(GroverSearch, element_totals) {
  EXPECT_EQ(element_count(grover_search(4, 2)), 14u);
  EXPECT_EQ(element_count(grover_search(8, 5)), 112u);
  EXPECT_THROW(grover_search(6, 1), std::invalid_argument);
  EXPECT_THROW(grover_search(8, 9), std::invalid_argument);
}

TEST(Formulas, counts_match_generated_circuits) {
  for (int d = 2; d <= 32; d *= 2) {
    for (auto family : {CircuitFamily::Qft, CircuitFamily::V, CircuitFamily::W, CircuitFamily::Prep,
                        CircuitFamily::Shuffle, CircuitFamily::Phi}) {
      if (family == CircuitFamily::Phi && d < 4) continue;
      const auto c = generate(family, d, std::nullopt);
      EXPECT_EQ(static_cast<std::int64_t>(element_count(c)), count_formula(family, d))
          << to_string(family) << " " << d;
    }
    const auto search = generate(CircuitFamily::GroverSearch, d, 1);
    EXPECT_EQ(static_cast<std::int64_t>(element_count(search)), count_formula(CircuitFamily::GroverSearch, d));
  }
}

TEST(Formulas, published_values) {
  EXPECT_EQ(count_formula(CircuitFamily::Qft, 4), 8);
  EXPECT_EQ(count_formula(CircuitFamily::Qft, 8), 41);
  EXPECT_EQ(count_formula(CircuitFamily::V, 4), 6);
  EXPECT_EQ(count_formula(CircuitFamily::W, 4), 9);
  EXPECT_EQ(count_formula(CircuitFamily::W, 8), 49);
  EXPECT_EQ(count_formula(CircuitFamily::GroverSearch, 4), 14);
  EXPECT_EQ(count_formula(CircuitFamily::GroverSearch, 8), 112);
  EXPECT_EQ(depth_formula(CircuitFamily::Qft, 2), 1);
}

TEST(Formulas, depths_match_generated_circuits) {
  for (int d = 2; d <= 32; d *= 2) {
    EXPECT_EQ(depth(qft(d)), depth_formula(CircuitFamily::Qft, d)) << d;
    if (d >= 4) EXPECT_EQ(depth(grover_inversion(d)), depth_formula(CircuitFamily::W, d)) << d;
  }
  EXPECT_THROW(depth_formula(CircuitFamily::Prep, 4), std::invalid_argument);
}

TEST(Families, names_round_trip) {
  for (auto family : {CircuitFamily::Qft, CircuitFamily::Shuffle, CircuitFamily::V, CircuitFamily::W,
                      CircuitFamily::Phi, CircuitFamily::Prep, CircuitFamily::Oracle,
                      CircuitFamily::GroverSearch}) {
    EXPECT_EQ(parse_family(to_string(family)), family);
  }
  EXPECT_EQ(parse_family("grover"), CircuitFamily::GroverSearch);
  EXPECT_FALSE(parse_family("fft").has_value());
}

TEST(Families, generate_validates_inputs) {
  EXPECT_THROW(generate(CircuitFamily::Oracle, 4), std::invalid_argument);
  EXPECT_THROW(generate(CircuitFamily::W, 12), std::invalid_argument);
  EXPECT_THROW(generate(CircuitFamily::Shuffle, 5), std::invalid_argument);
  EXPECT_EQ(generate(CircuitFamily::Shuffle, 8), shuffle_sigma(4));
  EXPECT_EQ(generate(CircuitFamily::Phi, 8), phi(4));
}

TEST(Factorizations, fourier_and_grover) {
  for (int d : {1, 2, 4, 8, 16}) EXPECT_LE(check_fft_factorization(d), 1e-10) << d;
  for (int d : {2, 4, 8}) {
    const auto check = check_grover_factorization(d);
    EXPECT_LE(check.inversion_deviation, 1e-10) << d;
    EXPECT_LE(check.hadamard_deviation, 1e-10) << d;
  }
}
