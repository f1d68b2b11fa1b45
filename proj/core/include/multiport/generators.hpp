#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "multiport/circuit.hpp"

namespace multiport {

/// The recursive circuit families. Mode counts passed to generate() are the
/// total width of the produced circuit; shuffle and phi act on 2 * half modes.
enum class CircuitFamily : std::uint8_t { Qft, Shuffle, V, W, Phi, Prep, Oracle, GroverSearch };

std::string_view to_string(CircuitFamily family);
/// Accepts the CLI spellings: qft, shuffle, v, w, phi, prep, oracle, grover-search.
std::optional<CircuitFamily> parse_family(std::string_view name);

bool is_power_of_two(int n);
int log2_exact(int n);

/// Interleaves two halves of 2 * half modes: (1..2h) -> (1, h+1, 2, h+2, ..., h, 2h),
/// using half * (half - 1) / 2 adjacent swaps.
Circuit shuffle_sigma(int half);

/// Fourier transform on `modes` waveguides, doubled up from the two-mode
/// beam splitter.
Circuit qft(int modes);
/// Doubles `base` (any circuit realizing an even-size Fourier transform)
/// until it spans `modes`, which must be base.modes() * 2^k.
Circuit qft(int modes, const Circuit& base);

/// Walsh-Hadamard network of equal beam splitters; modes = 2^k.
Circuit v_circuit(int modes);

/// Swap network on 2 * half modes exchanging modes 1 and half + 1.
Circuit phi(int half);

/// Inversion about the mean 2|psi><psi| - I; modes = 2^k.
Circuit grover_inversion(int modes);

/// Maps a photon in mode 1 to the equal superposition over all modes.
Circuit prep(int modes);

/// Marks `solution` with a single pi phase shift.
Circuit oracle(int modes, int solution);

/// floor((pi / 4) * sqrt(modes))
int grover_iterations(int modes);

/// prep followed by grover_iterations() rounds of [oracle, inversion].
Circuit grover_search(int modes, int solution);

/// Builds any family by name. `solution` is required for Oracle and GroverSearch.
Circuit generate(CircuitFamily family, int modes, std::optional<int> solution = std::nullopt);

/// Closed-form element counts for the default constructions.
std::int64_t count_formula(CircuitFamily family, int modes);
/// Closed-form depths; defined for Qft and W.
std::int64_t depth_formula(CircuitFamily family, int modes);

}  // namespace multiport
