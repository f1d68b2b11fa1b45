#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "multiport/circuit.hpp"

namespace multiport {

inline constexpr int kNetlistSchemaVersion = 1;
std::string_view library_version();

struct NetlistMetadata {
  std::string family;
  std::map<std::string, std::int64_t> parameters;
  std::string generator;

  bool operator==(const NetlistMetadata&) const = default;
};

/// JSON netlist:
///
///   {
///     "schema_version": 1,
///     "modes": 4,
///     "metadata": {"family": "qft", "parameters": {"modes": 4}, "generator": "multiport 0.1.0"},
///     "layers": [
///       [{"kind": "swap", "modes": [2, 3]}],
///       [{"kind": "beam_splitter", "modes": [1, 2], "reflectivity": 0.5}, ...],
///       [{"kind": "phase_shifter", "modes": [4], "phase": "1/2 pi"}],
///       ...
///     ]
///   }
///
/// Swap reflectivity and phase-shifter loss are written only when nonzero.
struct NetlistDocument {
  int schema_version = kNetlistSchemaVersion;
  Circuit circuit{1};
  NetlistMetadata metadata;

  bool operator==(const NetlistDocument&) const = default;
};

std::string serialize_netlist(const NetlistDocument& doc);
/// Throws std::invalid_argument on malformed documents.
NetlistDocument parse_netlist(std::string_view text);

/// "k/n pi" (or "pi", "-pi", "k pi") when k * pi / n reproduces the value
/// bit for bit with n <= 4096; otherwise a round-trip decimal.
std::string format_phase(double phase);
double parse_phase(std::string_view text);

}  // namespace multiport
