#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace multiport {

struct HistogramBin {
  double lower = 0.0;
  double width = 0.0;
  std::size_t count = 0;

  bool operator==(const HistogramBin&) const = default;
};

struct SummaryStats {
  double mean = 0.0;
  /// Population standard deviation.
  double std = 0.0;
  double median = 0.0;
  std::vector<HistogramBin> histogram;

  bool operator==(const SummaryStats&) const = default;
};

/// Quantile by linear interpolation between order statistics at position
/// q * (n - 1). `sorted` must be ascending and non-empty.
double quantile_sorted(std::span<const double> sorted, double q);

/// Freedman-Diaconis histogram: width 2 * IQR * n^(-1/3), ceil((max - min) / width)
/// bins starting at min; the maximum lands in the last bin. When IQR or the
/// range is zero, everything goes into one bin of width (max - min), or 1.0
/// if all values are equal. Throws std::invalid_argument on empty input.
std::vector<HistogramBin> fd_histogram(std::span<const double> values);

/// Mean, population std, median and FD histogram. Summation runs in index
/// order so the result depends only on the values, not on how they were computed.
SummaryStats summarize(std::span<const double> values);

}  // namespace multiport
