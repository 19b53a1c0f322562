#include "lemcodec/quality.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "lemcodec/error.hpp"

namespace lemcodec {

double quantile_sorted(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw InvalidArgument("quantile of an empty sample");
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

QualityReport measure(std::span<const double> series) {
  const std::size_t n = series.size();
  if (n < 3) throw InvalidArgument("quality measures need at least 3 samples");

  QualityReport r;

  std::vector<std::size_t> peaks;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (series[i - 1] < series[i] && series[i] > series[i + 1]) peaks.push_back(i);
  }
  r.n_peaks = peaks.size();
  if (peaks.size() >= 2) {
    double gap_sum = 0.0;
    double value_gap_sum = 0.0;
    for (std::size_t p = 1; p < peaks.size(); ++p) {
      gap_sum += static_cast<double>(peaks[p] - peaks[p - 1]);
      value_gap_sum += std::abs(series[peaks[p]] - series[peaks[p - 1]]);
    }
    const auto pairs = static_cast<double>(peaks.size() - 1);
    r.mean_peak_gap = gap_sum / pairs;
    r.mean_peak_value_gap = value_gap_sum / pairs;
  }

  const auto [lo_it, hi_it] = std::minmax_element(series.begin(), series.end());
  const double big = 0.1 * (*hi_it - *lo_it);
  double jump_sum = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double jump = std::abs(series[i + 1] - series[i]);
    jump_sum += jump;
    if (jump > big) ++r.n_big_jumps;
  }
  r.mean_jump = jump_sum / static_cast<double>(n - 1);

  std::vector<double> sorted(series.begin(), series.end());
  std::sort(sorted.begin(), sorted.end());
  const double q1 = quantile_sorted(sorted, 0.25);
  const double q3 = quantile_sorted(sorted, 0.75);
  const double iqr = q3 - q1;
  const double low_fence = q1 - 1.5 * iqr;
  const double high_fence = q3 + 1.5 * iqr;
  const auto outliers = std::count_if(series.begin(), series.end(),
                                      [&](double x) { return x < low_fence || x > high_fence; });
  r.pct_tukey_outliers = 100.0 * static_cast<double>(outliers) / static_cast<double>(n);
  return r;
}

double max_ratio(Mode mode, std::uint32_t block_size, int dict_count, int max_count) {
  if (block_size < 1 || dict_count < 1 || max_count < 1) {
    throw InvalidArgument("max_ratio needs positive block size, dictionary count and max count");
  }
  const double b = block_size;
  const double c = max_count;
  const bool single = dict_count == 1;
  if (mode == Mode::kStandard) return single ? 8.0 * c * b : 8.0 * b;
  return single ? 8.0 * c * b / (1.0 + 8.0 * c) : 8.0 * b / 9.0;
}

double compression_ratio(std::uint64_t original_bytes, std::uint64_t encoded_bytes) {
  if (original_bytes == 0 || encoded_bytes == 0) throw InvalidArgument("byte counts must be positive");
  return static_cast<double>(original_bytes) / static_cast<double>(encoded_bytes);
}

void write_report_csv(std::ostream& os, std::span<const std::pair<std::string, QualityReport>> columns) {
  os << "measure";
  for (const auto& [label, _] : columns) os << ',' << label;
  os << '\n' << std::setprecision(17);

  auto row = [&](const char* name, auto&& field) {
    os << name;
    for (const auto& [_, report] : columns) {
      os << ',';
      field(report);
    }
    os << '\n';
  };
  auto optional = [&](const std::optional<double>& v) {
    if (v) os << *v;
  };
  row("n_peaks", [&](const QualityReport& q) { os << q.n_peaks; });
  row("mean_peak_gap", [&](const QualityReport& q) { optional(q.mean_peak_gap); });
  row("mean_peak_value_gap", [&](const QualityReport& q) { optional(q.mean_peak_value_gap); });
  row("mean_jump", [&](const QualityReport& q) { os << q.mean_jump; });
  row("n_big_jumps", [&](const QualityReport& q) { os << q.n_big_jumps; });
  row("pct_tukey_outliers", [&](const QualityReport& q) { os << q.pct_tukey_outliers; });
}

}  // namespace lemcodec
