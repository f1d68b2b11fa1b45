#include "multiport/generators.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace multiport {
namespace {

void require_power_of_two(int modes, int minimum, std::string_view what) {
  if (modes < minimum || !is_power_of_two(modes)) {
    throw std::invalid_argument(std::string(what) + ": modes must be a power of two >= " +
                                std::to_string(minimum) + ", got " + std::to_string(modes));
  }
}

Layer coupler_layer(int modes) {
  std::vector<Element> elements;
  for (int m = 1; m < modes; m += 2) elements.push_back(Element::beam_splitter(m, m + 1));
  return Layer(std::move(elements));
}

Circuit doubled(const Circuit& half) { return Circuit::side_by_side(half, half); }

// [Sigma^-1][F F][phases][Sigma][couplers][Sigma^-1]
Circuit double_qft(const Circuit& half_qft) {
  const int h = half_qft.modes();
  const int n = 2 * h;
  const Circuit sigma = shuffle_sigma(h);
  const Circuit sigma_inv = inverse(sigma);

  Circuit out = sigma_inv;
  out.append(doubled(half_qft));
  std::vector<Element> phases;
  for (int k = 1; k < h; ++k) {
    phases.push_back(Element::phase_shifter(h + k + 1, static_cast<double>(k) * std::numbers::pi / h));
  }
  if (!phases.empty()) out.append(Layer(std::move(phases)));
  out.append(sigma);
  out.append(coupler_layer(n));
  out.append(sigma_inv);
  return out;
}

}  // namespace

std::string_view to_string(CircuitFamily family) {
  switch (family) {
    case CircuitFamily::Qft:
      return "qft";
    case CircuitFamily::Shuffle:
      return "shuffle";
    case CircuitFamily::V:
      return "v";
    case CircuitFamily::W:
      return "w";
    case CircuitFamily::Phi:
      return "phi";
    case CircuitFamily::Prep:
      return "prep";
    case CircuitFamily::Oracle:
      return "oracle";
    case CircuitFamily::GroverSearch:
      return "grover-search";
  }
  return "unknown";
}

std::optional<CircuitFamily> parse_family(std::string_view name) {
  for (auto f : {CircuitFamily::Qft, CircuitFamily::Shuffle, CircuitFamily::V, CircuitFamily::W,
                 CircuitFamily::Phi, CircuitFamily::Prep, CircuitFamily::Oracle,
                 CircuitFamily::GroverSearch}) {
    if (to_string(f) == name) return f;
  }
  if (name == "grover") return CircuitFamily::GroverSearch;
  return std::nullopt;
}

bool is_power_of_two(int n) { return n > 0 && std::has_single_bit(static_cast<unsigned>(n)); }

int log2_exact(int n) {
  if (!is_power_of_two(n)) {
    throw std::invalid_argument("not a power of two: " + std::to_string(n));
  }
  return std::countr_zero(static_cast<unsigned>(n));
}

Circuit shuffle_sigma(int half) {
  if (half < 1) {
    throw std::invalid_argument("shuffle needs half >= 1, got " + std::to_string(half));
  }
  // Layer t swaps (h-t, h-t+1), (h-t+2, h-t+3), ..., (h+t, h+t+1).
  Circuit out(2 * half);
  for (int t = 0; t + 1 < half; ++t) {
    std::vector<Element> swaps;
    for (int m = half - t; m <= half + t; m += 2) swaps.push_back(Element::swap(m, m + 1));
    out.append(Layer(std::move(swaps)));
  }
  return out;
}

Circuit qft(int modes) {
  return qft(modes, Circuit(2, {Layer{Element::beam_splitter(1, 2)}}));
}

Circuit qft(int modes, const Circuit& base) {
  const int n = base.modes();
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("qft base must have an even number of modes, got " +
                                std::to_string(n));
  }
  if (modes < n || modes % n != 0 || !is_power_of_two(modes / n)) {
    throw std::invalid_argument("modes must be base·2^k (base " + std::to_string(n) + "), got " +
                                std::to_string(modes));
  }
  Circuit current = base;
  while (current.modes() < modes) current = double_qft(current);
  return current;
}

Circuit v_circuit(int modes) {
  require_power_of_two(modes, 2, "v");
  if (modes == 2) return Circuit(2, {Layer{Element::beam_splitter(1, 2)}});
  const int h = modes / 2;
  const Circuit sigma = shuffle_sigma(h);
  Circuit out = doubled(v_circuit(h));
  out.append(sigma);
  out.append(coupler_layer(modes));
  out.append(inverse(sigma));
  return out;
}

Circuit phi(int half) {
  require_power_of_two(half, 2, "phi");
  // Outer swaps bridge the halves; the inner odd/even network on modes
  // 1..half transposes modes 1 and half, narrowing by one mode per side.
  std::vector<Layer> inner;
  for (int t = 0; t < half / 2; ++t) {
    std::vector<Element> swaps;
    for (int m = 1 + t; m + 1 <= half - t; m += 2) swaps.push_back(Element::swap(m, m + 1));
    inner.emplace_back(std::move(swaps));
  }
  Circuit out(2 * half);
  out.append(Layer{Element::swap(half, half + 1)});
  for (const auto& layer : inner) out.append(layer);
  for (auto it = inner.rbegin() + 1; it != inner.rend(); ++it) out.append(*it);
  out.append(Layer{Element::swap(half, half + 1)});
  return out;
}

Circuit grover_inversion(int modes) {
  require_power_of_two(modes, 2, "grover inversion");
  if (modes == 2) return Circuit(2, {Layer{Element::swap(1, 2)}});
  const int h = modes / 2;
  const Circuit v_pair = doubled(v_circuit(h));
  Circuit out = doubled(grover_inversion(h));
  out.append(v_pair);
  out.append(phi(h));
  out.append(v_pair);
  return out;
}

Circuit prep(int modes) {
  require_power_of_two(modes, 2, "prep");
  if (modes == 2) return Circuit(2, {Layer{Element::beam_splitter(1, 2)}});
  // Split mode 1, walk the second half of the photon down to mode m + 1,
  // then prepare each half recursively.
  const int m = modes / 2;
  Circuit out(modes);
  out.append(Layer{Element::beam_splitter(1, 2)});
  for (int j = 2; j <= m; ++j) out.append(Layer{Element::swap(j, j + 1)});
  out.append(doubled(prep(m)));
  return out;
}

Circuit oracle(int modes, int solution) {
  if (solution < 1 || solution > modes) {
    throw std::invalid_argument("solution " + std::to_string(solution) + " outside [1, " +
                                std::to_string(modes) + "]");
  }
  return Circuit(modes, {Layer{Element::phase_shifter(solution, std::numbers::pi)}});
}

int grover_iterations(int modes) {
  return static_cast<int>(std::floor(std::numbers::pi / 4.0 * std::sqrt(static_cast<double>(modes))));
}

Circuit grover_search(int modes, int solution) {
  require_power_of_two(modes, 2, "grover search");
  const Circuit mark = oracle(modes, solution);
  const Circuit invert = grover_inversion(modes);
  Circuit out = prep(modes);
  for (int r = 0; r < grover_iterations(modes); ++r) {
    out.append(mark);
    out.append(invert);
  }
  return out;
}

Circuit generate(CircuitFamily family, int modes, std::optional<int> solution) {
  const auto half_of = [&](std::string_view what) {
    if (modes < 2 || modes % 2 != 0) {
      throw std::invalid_argument(std::string(what) + ": modes must be even, got " +
                                  std::to_string(modes));
    }
    return modes / 2;
  };
  const auto need_solution = [&]() {
    if (!solution) throw std::invalid_argument("a solution mode is required");
    return *solution;
  };
  switch (family) {
    case CircuitFamily::Qft:
      return qft(modes);
    case CircuitFamily::Shuffle:
      return shuffle_sigma(half_of("shuffle"));
    case CircuitFamily::V:
      return v_circuit(modes);
    case CircuitFamily::W:
      return grover_inversion(modes);
    case CircuitFamily::Phi:
      return phi(half_of("phi"));
    case CircuitFamily::Prep:
      return prep(modes);
    case CircuitFamily::Oracle:
      return oracle(modes, need_solution());
    case CircuitFamily::GroverSearch:
      return grover_search(modes, need_solution());
  }
  throw std::invalid_argument("unknown circuit family");
}

std::int64_t count_formula(CircuitFamily family, int modes) {
  const std::int64_t d = modes;
  switch (family) {
    case CircuitFamily::Qft: {
      require_power_of_two(modes, 2, "qft count");
      const std::int64_t lg = log2_exact(modes);
      return (3 * d * d + d * (lg - 7)) / 4 + 1;
    }
    case CircuitFamily::Shuffle: {
      const std::int64_t h = d / 2;
      return h * (h - 1) / 2;
    }
    case CircuitFamily::V:
      require_power_of_two(modes, 2, "v count");
      return d * (d - 1) / 2;
    case CircuitFamily::W: {
      require_power_of_two(modes, 2, "w count");
      const std::int64_t lg = log2_exact(modes);
      return (9 * d * d - d * (6 * lg + 4)) / 8 - 1;
    }
    case CircuitFamily::Phi: {
      require_power_of_two(modes / 2, 2, "phi count");
      const std::int64_t h = d / 2;
      return h * h / 4 + h / 2 + 1;
    }
    case CircuitFamily::Prep:
      require_power_of_two(modes, 2, "prep count");
      return d / 2 * log2_exact(modes);
    case CircuitFamily::Oracle:
      return 1;
    case CircuitFamily::GroverSearch:
      return count_formula(CircuitFamily::Prep, modes) +
             grover_iterations(modes) * (1 + count_formula(CircuitFamily::W, modes));
  }
  throw std::invalid_argument("unknown circuit family");
}

std::int64_t depth_formula(CircuitFamily family, int modes) {
  const std::int64_t d = modes;
  switch (family) {
    case CircuitFamily::Qft: {
      require_power_of_two(modes, 2, "qft depth");
      const std::int64_t lg = log2_exact(modes);
      return 3 * (d - 1) - 2 * lg;
    }
    case CircuitFamily::W: {
      require_power_of_two(modes, 2, "w depth");
      const std::int64_t lg = log2_exact(modes);
      return 5 * d - 2 * lg - lg * lg - 6;
    }
    default:
      throw std::invalid_argument("no closed-form depth for family " +
                                  std::string(to_string(family)));
  }
}

}  // namespace multiport
