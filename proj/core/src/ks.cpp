#include "lemcodec/ks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "lemcodec/error.hpp"

namespace lemcodec {

namespace detail {

double ks_distance_sorted(std::span<const double> a, std::span<const double> b) noexcept {
  // Track the ECDF gap as the integer |i*nb - j*na| so equal gaps compare equal.
  const auto na = static_cast<std::int64_t>(a.size());
  const auto nb = static_cast<std::int64_t>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  std::int64_t best = 0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    const std::int64_t gap = static_cast<std::int64_t>(i) * nb - static_cast<std::int64_t>(j) * na;
    best = std::max(best, gap < 0 ? -gap : gap);
  }
  // Once one side is exhausted the gap only shrinks toward zero.
  return static_cast<double>(best) / (static_cast<double>(na) * static_cast<double>(nb));
}

}  // namespace detail

double ks_distance(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw InvalidArgument("ks_distance requires non-empty samples");
  if (!std::is_sorted(a.begin(), a.end()) || !std::is_sorted(b.begin(), b.end())) {
    throw InvalidArgument("ks_distance requires ascending samples");
  }
  return detail::ks_distance_sorted(a, b);
}

double kolmogorov_survival(double lambda) {
  if (lambda < 1e-8) return 1.0;
  const double l2 = lambda * lambda;
  if (lambda < 1.0) {
    // Jacobi dual form: the direct series converges slowly and sits at 1 +- 1e-12 here.
    const double pi = std::numbers::pi;
    double sum = 0.0;
    for (int k = 1;; k += 2) {
      const double term = std::exp(-static_cast<double>(k) * static_cast<double>(k) * pi * pi / (8.0 * l2));
      sum += term;
      if (term < 1e-17) break;
    }
    return std::clamp(1.0 - std::sqrt(2.0 * pi) / lambda * sum, 0.0, 1.0);
  }
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1;; ++k) {
    const double term = std::exp(-2.0 * static_cast<double>(k) * static_cast<double>(k) * l2);
    sum += sign * term;
    if (term < 1e-12) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

double ks_pvalue(double distance, std::size_t n_a, std::size_t n_b) {
  if (!(distance >= 0.0 && distance <= 1.0)) throw InvalidArgument("KS distance must lie in [0, 1]");
  if (n_a == 0 || n_b == 0) throw InvalidArgument("sample sizes must be positive");
  const double na = static_cast<double>(n_a);
  const double nb = static_cast<double>(n_b);
  return kolmogorov_survival(distance * std::sqrt(na * nb / (na + nb)));
}

KsResult ks_test(std::span<const double> a, std::span<const double> b) {
  KsResult r;
  r.distance = ks_distance(a, b);
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  r.lambda = r.distance * std::sqrt(na * nb / (na + nb));
  r.p_value = kolmogorov_survival(r.lambda);
  return r;
}

bool exchangeable(std::span<const double> sorted_candidate, const DictionaryEntry& entry, double alpha) {
  if (sorted_candidate.size() != entry.sorted_body.size()) {
    throw InvalidArgument("candidate and dictionary payload lengths differ");
  }
  const double d = detail::ks_distance_sorted(sorted_candidate, entry.sorted_body);
  const std::size_t n = sorted_candidate.size();
  return ks_pvalue(d, n, n) >= alpha;
}

}  // namespace lemcodec
