#include "multiport/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

#include "multiport/generators.hpp"

namespace multiport {
namespace {

// Runs body(k) for every k in [0, n). Trials are striped across workers;
// each writes only its own output slot, so the result is schedule-independent.
template <typename Body>
void parallel_trials(std::size_t n, unsigned workers, Body&& body) {
  workers = static_cast<unsigned>(std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(n, 1)));
  if (workers == 1) {
    for (std::size_t k = 0; k < n; ++k) body(k);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t k = w; k < n; k += workers) body(k);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

ExperimentResult finish(std::vector<double> fidelities) {
  ExperimentResult result;
  result.stats = summarize(fidelities);
  result.fidelities = std::move(fidelities);
  return result;
}

}  // namespace

std::string_view to_string(ExperimentKind kind) {
  return kind == ExperimentKind::Qft ? "qft" : "grover";
}

std::string_view to_string(FidelityConvention convention) {
  return convention == FidelityConvention::Unnormalized ? "unnormalized" : "normalized";
}

std::optional<ExperimentKind> parse_experiment_kind(std::string_view name) {
  if (name == "qft") return ExperimentKind::Qft;
  if (name == "grover" || name == "grover-search") return ExperimentKind::GroverSearch;
  return std::nullopt;
}

std::optional<FidelityConvention> parse_convention(std::string_view name) {
  if (name == "unnormalized") return FidelityConvention::Unnormalized;
  if (name == "normalized") return FidelityConvention::Normalized;
  return std::nullopt;
}

void ExperimentSpec::validate() const {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  noise.validate();
  if (kind == ExperimentKind::Qft) {
    if (modes < 2 || modes % 2 != 0 || !is_power_of_two(modes / 2)) {
      throw std::invalid_argument("modes must be base·2^k (base 2), got " + std::to_string(modes));
    }
  } else if (modes < 2 || !is_power_of_two(modes)) {
    throw std::invalid_argument("grover search needs a power-of-two item count >= 2, got " +
                                std::to_string(modes));
  }
}

AmplitudeVector haar_state(int d, TrialRng& rng) {
  if (d < 1) throw std::invalid_argument("haar_state needs d >= 1");
  AmplitudeVector z(d);
  for (int k = 0; k < d; ++k) {
    const double x = rng.uniform_open();
    const double y = rng.uniform_open();
    z(k) = std::polar(std::sqrt(-2.0 * std::log(x)), 2.0 * std::numbers::pi * y);
  }
  return z / z.norm();
}

double fidelity(const AmplitudeVector& ideal, const AmplitudeVector& simulated,
                FidelityConvention convention) {
  if (ideal.size() != simulated.size()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  // Spelled out in real arithmetic so that fidelity(v, v) == 1 exactly.
  double re = 0.0;
  double im = 0.0;
  double ideal_norm = 0.0;
  double sim_norm = 0.0;
  for (Eigen::Index k = 0; k < ideal.size(); ++k) {
    const double ar = ideal(k).real();
    const double ai = ideal(k).imag();
    const double br = simulated(k).real();
    const double bi = simulated(k).imag();
    re += ar * br + ai * bi;
    im += ar * bi - ai * br;
    ideal_norm += ar * ar + ai * ai;
    sim_norm += br * br + bi * bi;
  }
  if (ideal_norm == 0.0) throw std::invalid_argument("fidelity: ideal state is zero");
  const double overlap = re * re + im * im;
  double f = 0.0;
  if (convention == FidelityConvention::Unnormalized) {
    f = overlap / (ideal_norm * ideal_norm);
  } else {
    f = sim_norm > 0.0 ? overlap / (ideal_norm * sim_norm) : 0.0;
  }
  return std::clamp(f, 0.0, 1.0);
}

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("MULTIPORT_WORKERS")) {
    unsigned value = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc{} && ptr == text.data() + text.size() && value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

ExperimentResult run_qft_experiment(const ExperimentSpec& spec) {
  if (spec.kind != ExperimentKind::Qft) throw std::invalid_argument("spec is not a QFT experiment");
  spec.validate();
  const Circuit ideal = qft(spec.modes);

  std::vector<double> fidelities(spec.trials);
  parallel_trials(spec.trials, resolve_workers(spec.workers), [&](std::size_t k) {
    TrialRng rng(spec.seed, k);
    const AmplitudeVector input = haar_state(spec.modes, rng);
    const Circuit noisy = realize(ideal, spec.noise, rng);
    fidelities[k] = fidelity(multiport::apply(ideal, input), multiport::apply(noisy, input), spec.convention);
  });
  return finish(std::move(fidelities));
}

ExperimentResult run_grover_experiment(const ExperimentSpec& spec) {
  if (spec.kind != ExperimentKind::GroverSearch) {
    throw std::invalid_argument("spec is not a Grover experiment");
  }
  spec.validate();
  const int d = spec.modes;

  std::vector<Circuit> searches;
  std::vector<AmplitudeVector> ideal_outputs;
  AmplitudeVector photon_in_mode_1 = AmplitudeVector::Zero(d);
  photon_in_mode_1(0) = 1.0;
  for (int s = 1; s <= d; ++s) {
    searches.push_back(grover_search(d, s));
    ideal_outputs.push_back(multiport::apply(searches.back(), photon_in_mode_1));
  }

  std::vector<double> fidelities(spec.trials);
  parallel_trials(spec.trials, resolve_workers(spec.workers), [&](std::size_t k) {
    TrialRng rng(spec.seed, k);
    const int s = rng.uniform_int(1, d);
    const Circuit noisy = realize(searches[s - 1], spec.noise, rng);
    fidelities[k] = fidelity(ideal_outputs[s - 1], multiport::apply(noisy, photon_in_mode_1), spec.convention);
  });
  return finish(std::move(fidelities));
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
  return spec.kind == ExperimentKind::Qft ? run_qft_experiment(spec) : run_grover_experiment(spec);
}

}  // namespace multiport
