#include "verify.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "multiport/generators.hpp"
#include "multiport/oracles.hpp"

namespace multiport::cli {
namespace {

class Report {
 public:
  Report(std::ostream& out, double tolerance) : out_(out), tolerance_(tolerance) {}

  void deviation(const std::string& name, double value) {
    const bool ok = value <= tolerance_;
    failures_ += !ok;
    fmt::print(out_, "{:<34} max deviation {:.3e}  {}\n", name, value, ok ? "ok" : "FAIL");
  }

  void exact(const std::string& name, std::int64_t expected, std::int64_t actual) {
    const bool ok = expected == actual;
    failures_ += !ok;
    fmt::print(out_, "{:<34} expected {:>6}, actual {:>6}  {}\n", name, expected, actual, ok ? "ok" : "FAIL");
  }

  int failures() const { return failures_; }

 private:
  std::ostream& out_;
  double tolerance_;
  int failures_ = 0;
};

Eigen::MatrixXcd reflection(int d) {
  return Eigen::MatrixXcd::Constant(d, d, 2.0 / d) - Eigen::MatrixXcd::Identity(d, d);
}

}  // namespace

bool run_verify(int max_dim, double tolerance, std::ostream& out) {
  Report report(out, tolerance);

  for (int d = 2; d <= max_dim; d *= 2) {
    report.deviation(fmt::format("qft({}) vs DFT", d), max_abs_deviation(circuit_matrix(qft(d)), dft_matrix(d)));
  }
  for (int d = 2; d <= max_dim; d *= 2) {
    const auto cmp = compare_up_to_global_phase(circuit_matrix(grover_inversion(d)), reflection(d), tolerance);
    report.deviation(fmt::format("w({}) vs 2|psi><psi|-I{}", d, cmp.phase_corrected ? " (phase)" : ""),
                     cmp.deviation);
  }
  for (int d = 2; d <= max_dim; d *= 2) {
    report.deviation(fmt::format("v({}) vs Walsh-Hadamard", d),
                     max_abs_deviation(circuit_matrix(v_circuit(d)), walsh_hadamard_matrix(d)));
  }
  for (int d = 1; 2 * d <= max_dim; d *= 2) {
    report.deviation(fmt::format("fourier factorization d={}", d), check_fft_factorization(d));
  }
  for (int d = 2; 2 * d <= max_dim; d *= 2) {
    const auto check = check_grover_factorization(d);
    report.deviation(fmt::format("grover factorization d={}", d),
                     std::max(check.inversion_deviation, check.hadamard_deviation));
  }
  for (int half = 1; 2 * half <= max_dim; half *= 2) {
    report.deviation(fmt::format("shuffle({}) inverse vs even/odd sort", 2 * half),
                     max_abs_deviation(circuit_matrix(inverse(shuffle_sigma(half))), even_odd_sort_matrix(half)));
  }
  for (int half = 2; 2 * half <= max_dim; half *= 2) {
    report.deviation(fmt::format("phi({}) vs exchange", 2 * half),
                     max_abs_deviation(circuit_matrix(phi(half)), exchange_matrix(half)));
  }
  for (int d = 2; d <= max_dim; d *= 2) {
    AmplitudeVector e1 = AmplitudeVector::Zero(d);
    e1(0) = 1.0;
    report.deviation(fmt::format("prep({}) output vs uniform", d),
                     (multiport::apply(prep(d), e1) - uniform_state(d)).cwiseAbs().maxCoeff());
  }
  for (int d : {4, 8}) {
    if (d > max_dim) break;
    AmplitudeVector e1 = AmplitudeVector::Zero(d);
    e1(0) = 1.0;
    const double p = std::norm(multiport::apply(grover_search(d, 1), e1)(0));
    report.deviation(fmt::format("grover_search({}) success", d), std::abs(p - ideal_grover_success(d)));
  }

  for (int d = 2; d <= max_dim; d *= 2) {
    for (auto family : {CircuitFamily::Qft, CircuitFamily::V, CircuitFamily::W, CircuitFamily::Prep}) {
      report.exact(fmt::format("count {}({})", to_string(family), d), count_formula(family, d),
                   static_cast<std::int64_t>(element_count(generate(family, d))));
    }
    report.exact(fmt::format("count grover-search({})", d), count_formula(CircuitFamily::GroverSearch, d),
                 static_cast<std::int64_t>(element_count(grover_search(d, 1))));
  }
  for (int d = 2; d <= max_dim; d *= 2) {
    report.exact(fmt::format("depth qft({})", d), depth_formula(CircuitFamily::Qft, d), depth(qft(d)));
    if (d >= 4) {
      report.exact(fmt::format("depth w({})", d), depth_formula(CircuitFamily::W, d), depth(grover_inversion(d)));
    }
  }

  if (report.failures() > 0) {
    fmt::print(out, "{} check(s) failed\n", report.failures());
    return false;
  }
  fmt::print(out, "all checks passed\n");
  return true;
}

}  // namespace multiport::cli
