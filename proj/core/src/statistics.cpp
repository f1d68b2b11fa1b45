#include "multiport/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace multiport {

double quantile_sorted(std::span<const double> sorted, double q) {
  if (sorted.empty()) throw std::invalid_argument("quantile of empty sample");
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

std::vector<HistogramBin> fd_histogram(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("histogram of empty sample");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());

  const double lo = sorted.front();
  const double hi = sorted.back();
  const double range = hi - lo;
  const double iqr = quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25);
  const double n = static_cast<double>(sorted.size());

  if (iqr <= 0.0 || range <= 0.0) {
    return {HistogramBin{lo, range > 0.0 ? range : 1.0, sorted.size()}};
  }

  const double width = 2.0 * iqr / std::cbrt(n);
  const auto bins = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(range / width)));
  std::vector<HistogramBin> out(bins);
  for (std::size_t k = 0; k < bins; ++k) {
    out[k].lower = lo + static_cast<double>(k) * width;
    out[k].width = width;
  }
  for (double v : sorted) {
    auto k = static_cast<std::size_t>(std::floor((v - lo) / width));
    out[std::min(k, bins - 1)].count += 1;
  }
  return out;
}

SummaryStats summarize(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("cannot summarize an empty sample");
  const double n = static_cast<double>(values.size());

  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / n;

  double sq = 0.0;
  for (double v : values) sq += (v - mean) * (v - mean);

  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());

  SummaryStats stats;
  stats.mean = mean;
  stats.std = std::sqrt(sq / n);
  stats.median = quantile_sorted(sorted, 0.5);
  stats.histogram = fd_histogram(sorted);
  return stats;
}

}  // namespace multiport
