#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lemcodec/params.hpp"

namespace lemcodec {

/// Reconstruction-quality measures of one series.
struct QualityReport {
  std::uint64_t n_peaks = 0;                  // #1 strict interior local maxima
  std::optional<double> mean_peak_gap;        // #2 mean index distance between consecutive peaks
  std::optional<double> mean_peak_value_gap;  // #3 mean |value difference| between consecutive peaks
  double mean_jump = 0.0;                     // #4 mean |x[i+1] - x[i]|
  std::uint64_t n_big_jumps = 0;              // #5 jumps larger than 10% of the value range
  double pct_tukey_outliers = 0.0;            // #6 percent of samples outside the Tukey fences

  friend bool operator==(const QualityReport&, const QualityReport&) = default;
};

/// Requires at least 3 samples. #2 and #3 are empty when fewer than two peaks exist.
QualityReport measure(std::span<const double> series);

/// Quantile by linear interpolation between order statistics of an ascending sample:
/// position p * (n - 1).
double quantile_sorted(std::span<const double> sorted, double p);

/// Upper bound on the compression ratio for a configuration.
///   standard, D > 1: 8B           standard, D == 1: 8cB
///   residual/delta, D > 1: 8B/9   residual/delta, D == 1: 8cB / (1 + 8c)
double max_ratio(Mode mode, std::uint32_t block_size, int dict_count, int max_count);

/// original / encoded; both must be positive.
double compression_ratio(std::uint64_t original_bytes, std::uint64_t encoded_bytes);

/// Writes "measure,<label>..." then one row per measure; absent values are left empty.
void write_report_csv(std::ostream& os, std::span<const std::pair<std::string, QualityReport>> columns);

}  // namespace lemcodec
