#include "multiport/netlist.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace multiport {
namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

constexpr long long kMaxPhaseDenominator = 4096;

double pi_multiple(long long k, long long n) {
  return static_cast<double>(k) * std::numbers::pi / static_cast<double>(n);
}

long long parse_integer(std::string_view text) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("bad integer in phase: '" + std::string(text) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

ordered element_to_json(const Element& e) {
  ordered j;
  j["kind"] = std::string(to_string(e.kind()));
  switch (e.kind()) {
    case ElementKind::BeamSplitter:
      j["modes"] = {e.first_mode(), e.second_mode()};
      j["reflectivity"] = e.reflectivity();
      break;
    case ElementKind::Swap:
      j["modes"] = {e.first_mode(), e.second_mode()};
      if (e.reflectivity() != 0.0) j["reflectivity"] = e.reflectivity();
      break;
    case ElementKind::PhaseShifter:
      j["modes"] = {e.first_mode()};
      j["phase"] = format_phase(e.phase());
      if (e.loss() != 0.0) j["loss"] = e.loss();
      break;
  }
  return j;
}

Element element_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  const auto& modes = j.at("modes");
  if (kind == "beam_splitter" || kind == "swap") {
    if (modes.size() != 2) throw std::invalid_argument(kind + " needs two modes");
    const int first = modes[0].get<int>();
    const int second = modes[1].get<int>();
    if (kind == "beam_splitter") {
      return Element::beam_splitter(first, second, j.at("reflectivity").get<double>());
    }
    return Element::swap(first, second, j.value("reflectivity", 0.0));
  }
  if (kind == "phase_shifter") {
    if (modes.size() != 1) throw std::invalid_argument("phase_shifter needs one mode");
    const auto& phase = j.at("phase");
    const double theta =
        phase.is_string() ? parse_phase(phase.get<std::string>()) : phase.get<double>();
    return Element::phase_shifter(modes[0].get<int>(), theta, j.value("loss", 0.0));
  }
  throw std::invalid_argument("unknown element kind '" + kind + "'");
}

}  // namespace

std::string_view library_version() { return MULTIPORT_VERSION; }

std::string format_phase(double phase) {
  if (phase == 0.0) return "0";
  for (long long n = 1; n <= kMaxPhaseDenominator; ++n) {
    const auto k = std::llround(phase * static_cast<double>(n) / std::numbers::pi);
    if (k == 0 || pi_multiple(k, n) != phase) continue;
    if (n == 1) {
      if (k == 1) return "pi";
      if (k == -1) return "-pi";
      return fmt::format("{} pi", k);
    }
    return fmt::format("{}/{} pi", k, n);
  }
  return fmt::format("{}", phase);
}

double parse_phase(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty phase");
  if (text.ends_with("pi")) {
    auto coeff = trim(text.substr(0, text.size() - 2));
    if (coeff.empty()) return pi_multiple(1, 1);
    if (coeff == "-") return pi_multiple(-1, 1);
    const auto slash = coeff.find('/');
    if (slash == std::string_view::npos) return pi_multiple(parse_integer(coeff), 1);
    const long long n = parse_integer(trim(coeff.substr(slash + 1)));
    if (n <= 0) throw std::invalid_argument("phase denominator must be positive");
    return pi_multiple(parse_integer(trim(coeff.substr(0, slash))), n);
  }
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("bad phase '" + std::string(text) + "'");
  }
  return value;
}

std::string serialize_netlist(const NetlistDocument& doc) {
  // Hand-laid-out so each layer sits on one line and diffs stay readable.
  ordered meta;
  meta["family"] = doc.metadata.family;
  meta["parameters"] = doc.metadata.parameters;
  meta["generator"] = doc.metadata.generator;
  std::string out = fmt::format("{{\n  \"schema_version\": {},\n  \"modes\": {},\n  \"metadata\": {},\n",
                                doc.schema_version, doc.circuit.modes(), meta.dump());
  out += "  \"layers\": [";
  const auto& layers = doc.circuit.layers();
  for (std::size_t l = 0; l < layers.size(); ++l) {
    ordered elements = ordered::array();
    for (const auto& e : layers[l].elements()) elements.push_back(element_to_json(e));
    out += l == 0 ? "\n    " : ",\n    ";
    out += elements.dump();
  }
  out += layers.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

NetlistDocument parse_netlist(std::string_view text) {
  try {
    const json root = json::parse(text);
    NetlistDocument doc;
    doc.schema_version = root.at("schema_version").get<int>();
    if (doc.schema_version != kNetlistSchemaVersion) {
      throw std::invalid_argument("unsupported netlist schema version " +
                                  std::to_string(doc.schema_version));
    }
    std::vector<Layer> layers;
    for (const auto& layer_json : root.at("layers")) {
      std::vector<Element> elements;
      for (const auto& e : layer_json) elements.push_back(element_from_json(e));
      layers.emplace_back(std::move(elements));
    }
    doc.circuit = Circuit(root.at("modes").get<int>(), std::move(layers));
    if (root.contains("metadata")) {
      const auto& meta = root["metadata"];
      doc.metadata.family = meta.value("family", "");
      doc.metadata.generator = meta.value("generator", "");
      if (meta.contains("parameters")) {
        doc.metadata.parameters = meta["parameters"].get<std::map<std::string, std::int64_t>>();
      }
    }
    return doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed netlist: ") + e.what());
  }
}

}  // namespace multiport
