#include "multiport/results.hpp"

#include <charconv>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace multiport {
namespace {

template <typename T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument(fmt::format("bad {} value '{}'", what, text));
  }
  return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    fields.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace

std::string write_results_csv(const ExperimentSpec& spec, const SummaryStats& stats) {
  std::string out = "key,value\n";
  const auto row = [&out](std::string_view key, const auto& value) {
    out += fmt::format("{},{}\n", key, value);
  };
  row("kind", to_string(spec.kind));
  row("modes", spec.modes);
  row("trials", spec.trials);
  row("seed", spec.seed);
  row("convention", to_string(spec.convention));
  row("bs_mean", spec.noise.bs_mean);
  row("bs_std", spec.noise.bs_std);
  row("swap_mean", spec.noise.swap_mean);
  row("swap_std", spec.noise.swap_std);
  row("loss_mean", spec.noise.loss_mean);
  row("loss_std", spec.noise.loss_std);
  row("mean", stats.mean);
  row("std", stats.std);
  row("median", stats.median);
  out += "\n";
  out += write_histogram_csv(stats.histogram);
  return out;
}

std::string write_histogram_csv(std::span<const HistogramBin> bins) {
  std::string out = "bin_lower,bin_width,count\n";
  for (const auto& bin : bins) out += fmt::format("{},{},{}\n", bin.lower, bin.width, bin.count);
  return out;
}

ResultsDocument parse_results_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || strip_cr(line) != "key,value") {
    throw std::invalid_argument("results file must start with 'key,value'");
  }
  std::map<std::string, std::string, std::less<>> header;
  while (std::getline(in, line) && !strip_cr(line).empty()) {
    const auto fields = split(strip_cr(line), ',');
    if (fields.size() != 2) throw std::invalid_argument("bad header row '" + line + "'");
    header.emplace(std::string(fields[0]), std::string(fields[1]));
  }
  const auto field = [&header](std::string_view key) -> std::string_view {
    const auto it = header.find(key);
    if (it == header.end()) throw std::invalid_argument(fmt::format("missing key '{}'", key));
    return it->second;
  };

  ResultsDocument doc;
  const auto kind = parse_experiment_kind(field("kind"));
  const auto convention = parse_convention(field("convention"));
  if (!kind || !convention) throw std::invalid_argument("bad kind or convention");
  doc.spec.kind = *kind;
  doc.spec.convention = *convention;
  doc.spec.modes = parse_number<int>(field("modes"), "modes");
  doc.spec.trials = parse_number<std::size_t>(field("trials"), "trials");
  doc.spec.seed = parse_number<std::uint64_t>(field("seed"), "seed");
  doc.spec.noise.bs_mean = parse_number<double>(field("bs_mean"), "bs_mean");
  doc.spec.noise.bs_std = parse_number<double>(field("bs_std"), "bs_std");
  doc.spec.noise.swap_mean = parse_number<double>(field("swap_mean"), "swap_mean");
  doc.spec.noise.swap_std = parse_number<double>(field("swap_std"), "swap_std");
  doc.spec.noise.loss_mean = parse_number<double>(field("loss_mean"), "loss_mean");
  doc.spec.noise.loss_std = parse_number<double>(field("loss_std"), "loss_std");
  doc.stats.mean = parse_number<double>(field("mean"), "mean");
  doc.stats.std = parse_number<double>(field("std"), "std");
  doc.stats.median = parse_number<double>(field("median"), "median");

  if (!std::getline(in, line) || strip_cr(line) != "bin_lower,bin_width,count") {
    throw std::invalid_argument("missing histogram table");
  }
  while (std::getline(in, line)) {
    if (strip_cr(line).empty()) continue;
    const auto fields = split(strip_cr(line), ',');
    if (fields.size() != 3) throw std::invalid_argument("bad histogram row '" + line + "'");
    doc.stats.histogram.push_back({parse_number<double>(fields[0], "bin_lower"),
                                   parse_number<double>(fields[1], "bin_width"),
                                   parse_number<std::size_t>(fields[2], "count")});
  }
  return doc;
}

std::string write_fidelities_csv(std::span<const double> fidelities) {
  std::string out = "trial,fidelity\n";
  for (std::size_t k = 0; k < fidelities.size(); ++k) {
    out += fmt::format("{},{}\n", k, fidelities[k]);
  }
  return out;
}

std::vector<double> read_fidelities_csv(std::istream& in) {
  std::vector<double> values;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    const auto row = strip_cr(line);
    if (row.empty()) continue;
    const auto fields = split(row, ',');
    const auto last = fields.back();
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(last.data(), last.data() + last.size(), value);
    const bool numeric = ec == std::errc{} && ptr == last.data() + last.size();
    if (!numeric) {
      if (first) {
        first = false;
        continue;
      }
      throw std::invalid_argument("bad fidelity row '" + line + "'");
    }
    first = false;
    values.push_back(value);
  }
  return values;
}

NoiseParams apply_noise_config(std::string_view json_text, NoiseParams base) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed noise config: ") + e.what());
  }
  if (!root.is_object()) throw std::invalid_argument("noise config must be a JSON object");
  const std::map<std::string, double NoiseParams::*> fields = {
      {"bs_mean", &NoiseParams::bs_mean},     {"bs_std", &NoiseParams::bs_std},
      {"swap_mean", &NoiseParams::swap_mean}, {"swap_std", &NoiseParams::swap_std},
      {"loss_mean", &NoiseParams::loss_mean}, {"loss_std", &NoiseParams::loss_std},
  };
  for (const auto& [key, value] : root.items()) {
    const auto it = fields.find(key);
    if (it == fields.end()) throw std::invalid_argument("unknown noise config key '" + key + "'");
    if (!value.is_number()) throw std::invalid_argument("noise config '" + key + "' must be a number");
    base.*(it->second) = value.get<double>();
  }
  base.validate();
  return base;
}

}  // namespace multiport
