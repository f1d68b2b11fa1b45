#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "multiport/experiments.hpp"

namespace multiport {

/// Results CSV: a key,value header block (kind, modes, trials, seed,
/// convention, noise parameters, mean, std, median), one blank line, then
/// the histogram table bin_lower,bin_width,count. Doubles are written in
/// shortest round-trip form, so equal inputs give byte-identical files.
struct ResultsDocument {
  ExperimentSpec spec;
  SummaryStats stats;
};

std::string write_results_csv(const ExperimentSpec& spec, const SummaryStats& stats);
/// Throws std::invalid_argument on malformed input. spec.workers is not stored.
ResultsDocument parse_results_csv(std::string_view text);

/// One fidelity per line under a "trial,fidelity" header.
std::string write_fidelities_csv(std::span<const double> fidelities);
/// Reads the last column of each data row; a non-numeric first line is
/// treated as a header.
std::vector<double> read_fidelities_csv(std::istream& in);

std::string write_histogram_csv(std::span<const HistogramBin> bins);

/// Applies overrides from a JSON object with any of the keys bs_mean,
/// bs_std, swap_mean, swap_std, loss_mean, loss_std. Unknown keys are errors.
NoiseParams apply_noise_config(std::string_view json_text, NoiseParams base);

}  // namespace multiport
