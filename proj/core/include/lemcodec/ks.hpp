#pragma once

#include <cstddef>
#include <span>

#include "lemcodec/dictionary.hpp"

namespace lemcodec {

/// Outcome of a two-sample Kolmogorov-Smirnov test.
struct KsResult {
  double distance = 0.0;  // sup_x |F_a(x) - F_b(x)|, in [0, 1]
  double lambda = 0.0;    // distance * sqrt(n_a n_b / (n_a + n_b))
  double p_value = 1.0;
};

/// Maximum gap between the empirical CDFs of two ascending, non-empty samples.
/// Ties are consumed on both sides before the gap is measured, so the supremum
/// is taken over right limits of the step functions.
double ks_distance(std::span<const double> a, std::span<const double> b);

/// Asymptotic Kolmogorov survival function Q(lambda) = 2 sum (-1)^(k-1) exp(-2 k^2 lambda^2).
double kolmogorov_survival(double lambda);

/// Standardizes `distance` for sample sizes n_a, n_b and returns Q(lambda), clamped to [0, 1].
double ks_pvalue(double distance, std::size_t n_a, std::size_t n_b);

KsResult ks_test(std::span<const double> a, std::span<const double> b);

/// True iff the candidate payload passes the KS test against `entry` at level `alpha`.
bool exchangeable(std::span<const double> sorted_candidate, const DictionaryEntry& entry, double alpha);

namespace detail {
// Unchecked variant used on the encoder hot path; inputs must already be sorted and non-empty.
double ks_distance_sorted(std::span<const double> a, std::span<const double> b) noexcept;
}  // namespace detail

}  // namespace lemcodec
