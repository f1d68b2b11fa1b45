#include "multiport/noise.hpp"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "multiport/generators.hpp"
#include "support.hpp"

using namespace multiport;

TEST(Noise, ideal_parameters_reproduce_circuit_exactly) {
  TrialRng rng(3, 0);
  for (const auto& c : {qft(8), grover_search(8, 3), grover_inversion(16), prep(4)}) {
    EXPECT_EQ(realize(c, NoiseParams::ideal(), rng), c);
  }
}

TEST(Noise, realize_keeps_structure_and_phases) {
  TrialRng rng(9, 4);
  const auto c = qft(16);
  const auto noisy = realize(c, NoiseParams{}, rng);
  ASSERT_EQ(noisy.layers().size(), c.layers().size());
  for (std::size_t l = 0; l < c.layers().size(); ++l) {
    const auto& a = c.layers()[l].elements();
    const auto& b = noisy.layers()[l].elements();
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      EXPECT_EQ(a[k].kind(), b[k].kind());
      EXPECT_EQ(a[k].first_mode(), b[k].first_mode());
      EXPECT_EQ(a[k].phase(), b[k].phase());
    }
  }
}

TEST(Noise, beam_splitter_reflectivity_distribution) {
  const Circuit one(2, {Layer{Element::beam_splitter(1, 2)}});
  const NoiseParams p;
  double sum = 0.0;
  double sq = 0.0;
  const int n = 100000;
  for (int k = 0; k < n; ++k) {
    TrialRng rng(42, k);
    const double r = realize(one, p, rng).layers()[0].elements()[0].reflectivity();
    sum += r;
    sq += r * r;
  }
  const double mean = sum / n;
  EXPECT_NEAR(mean, 0.5, 0.001);
  EXPECT_NEAR(std::sqrt(sq / n - mean * mean), 0.04, 0.001);
}

TEST(Noise, rectified_swap_mean_matches_closed_form) {
  const NoiseParams p;
  const double expected = fixtures::rectified_gaussian_mean(p.swap_mean, p.swap_std);
  EXPECT_NEAR(expected, 0.02 * 0.8413447 + 0.02 * 0.2419707, 1e-6);
  double sum = 0.0;
  int zeros = 0;
  const int n = 200000;
  for (int k = 0; k < n; ++k) {
    TrialRng rng(7, k);
    const double x = rectified_gaussian(p.swap_mean, p.swap_std, rng);
    EXPECT_GE(x, 0.0);
    sum += x;
    zeros += x == 0.0;
  }
  EXPECT_NEAR(sum / n, expected, 2e-4);
  EXPECT_NEAR(static_cast<double>(zeros) / n, 0.1587, 0.005);
}

TEST(Noise, zero_std_returns_mean) {
  TrialRng rng(1, 1);
  EXPECT_EQ(rectified_gaussian(0.05, 0.0, rng), 0.05);
  EXPECT_EQ(rectified_gaussian(-0.05, 0.0, rng), 0.0);
}

TEST(Noise, streams_depend_only_on_seed_and_index) {
  auto draw = [](std::uint64_t seed, std::uint64_t index) {
    TrialRng rng(seed, index);
    std::vector<double> out;
    for (int k = 0; k < 8; ++k) out.push_back(rng.standard_normal());
    for (int k = 0; k < 8; ++k) out.push_back(rng.uniform_open());
    return out;
  };
  EXPECT_EQ(draw(5, 17), draw(5, 17));
  EXPECT_NE(draw(5, 17), draw(5, 18));
  EXPECT_NE(draw(5, 17), draw(6, 17));
}

TEST(Noise, uniform_helpers_stay_in_range) {
  TrialRng rng(11, 0);
  std::vector<int> hits(9, 0);
  for (int k = 0; k < 20000; ++k) {
    const double u = rng.uniform_open();
    EXPECT_GT(u, 0.0);
    EXPECT_LT(u, 1.0);
    const int s = rng.uniform_int(1, 8);
    ASSERT_GE(s, 1);
    ASSERT_LE(s, 8);
    ++hits[s];
  }
  for (int s = 1; s <= 8; ++s) EXPECT_NEAR(hits[s] / 20000.0, 0.125, 0.015);
}

TEST(Noise, validate_rejects_bad_parameters) {
  NoiseParams p;
  p.bs_std = -0.1;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = NoiseParams{};
  p.loss_mean = 1.5;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  EXPECT_NO_THROW(NoiseParams{}.validate());
  EXPECT_NO_THROW(NoiseParams::ideal().validate());
}

TEST(Noise, mix_seed_is_a_bijection_sample) {
  EXPECT_NE(mix_seed(0), mix_seed(1));
  EXPECT_EQ(mix_seed(12345), mix_seed(12345));
}
