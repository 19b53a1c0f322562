#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace lemcodec {

/// x_i = x*_i + w_i with x*_{i+1} = x*_i + m, x*_0 = x0 and w_i ~ N(0, sigma_w^2).
struct TrendModel {
  double x0 = 0.0;
  double m = 0.0;
  double sigma_w = 0.0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

std::vector<double> gen_trend(const TrendModel& model);

enum class SimilarKind {
  kFirst,   // extra white noise on every sample
  kSecond,  // first flat_fraction*B+1 samples kept, the rest held at the last kept value
};

struct SimilarBlockSpec {
  SimilarKind kind = SimilarKind::kFirst;
  double sigma_w_prime = 0.0;  // kFirst
  double flat_fraction = 0.5;  // kSecond; flat_fraction * B must be an integer
};

/// Derives a similar series from `base`, block by block (samples past the last
/// full block are copied unchanged in kSecond).
std::vector<double> gen_similar(std::span<const double> base, const SimilarBlockSpec& spec, std::size_t block_size,
                                std::uint64_t seed);

struct LemmaConfig {
  SimilarKind kind = SimilarKind::kFirst;
  double m = 1.0;
  double sigma_w = 0.1;
  double similarity = 0.1;  // sigma_w' for kFirst, flat_fraction for kSecond
  std::size_t block_size = 64;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
};

struct LemmaTrial {
  double d_residual = 0.0;
  double d_delta = 0.0;
};

struct LemmaResult {
  double mean_d_residual = 0.0;
  double mean_d_delta = 0.0;
  std::vector<LemmaTrial> trials;
};

/// Per trial: one noisy trend block and a similar block derived from it; KS
/// distance between their residual bodies and between their delta bodies.
LemmaResult lemma_experiment(const LemmaConfig& config);

/// "trial,D_residual,D_delta" rows.
void write_lemma_csv(std::ostream& os, const LemmaResult& result);

}  // namespace lemcodec
