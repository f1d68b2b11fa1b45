#include "multiport/noise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace multiport {
namespace {

void require_mean(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " +
                                std::to_string(v));
  }
}

void require_std(double v, const char* name) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(name) + " must be a finite value >= 0, got " +
                                std::to_string(v));
  }
}

}  // namespace

NoiseParams NoiseParams::ideal() { return {0.5, 0.0, 0.0, 0.0, 0.0, 0.0}; }

void NoiseParams::validate() const {
  require_mean(bs_mean, "bs_mean");
  require_mean(swap_mean, "swap_mean");
  require_mean(loss_mean, "loss_mean");
  require_std(bs_std, "bs_std");
  require_std(swap_std, "swap_std");
  require_std(loss_std, "loss_std");
}

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

TrialRng::TrialRng(std::uint64_t master_seed, std::uint64_t trial_index)
    : engine_(mix_seed(mix_seed(master_seed) ^ trial_index)) {}

double TrialRng::uniform_open() {
  // 53 random bits, offset by half an ulp so neither endpoint is reachable.
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double TrialRng::standard_normal() { return normal_(engine_); }

int TrialRng::uniform_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

double rectified_gaussian(double mean, double std, TrialRng& rng) {
  return std::max(0.0, mean + std * rng.standard_normal());
}

Circuit realize(const Circuit& c, const NoiseParams& p, TrialRng& rng) {
  std::vector<Layer> layers;
  layers.reserve(c.layers().size());
  for (const auto& layer : c.layers()) {
    std::vector<Element> elements;
    elements.reserve(layer.size());
    for (const auto& e : layer.elements()) {
      switch (e.kind()) {
        case ElementKind::BeamSplitter: {
          const double r = p.bs_mean + p.bs_std * rng.standard_normal();
          elements.push_back(e.with_reflectivity(std::clamp(r, 0.0, 1.0)));
          break;
        }
        case ElementKind::Swap:
          elements.push_back(e.with_reflectivity(
              std::min(1.0, rectified_gaussian(p.swap_mean, p.swap_std, rng))));
          break;
        case ElementKind::PhaseShifter:
          elements.push_back(
              e.with_loss(std::min(1.0, rectified_gaussian(p.loss_mean, p.loss_std, rng))));
          break;
      }
    }
    layers.emplace_back(std::move(elements));
  }
  return Circuit(c.modes(), std::move(layers));
}

}  // namespace multiport
