#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lemcodec/random.hpp"

namespace fixture {

/// B normal draws around `center`.
inline std::vector<double> noise_block(lemcodec::Rng& rng, std::size_t b, double center, double scale = 1.0) {
  std::vector<double> out(b);
  for (auto& v : out) v = center + scale * rng.normal();
  return out;
}

/// A shuffled copy of `block`; exchangeable with it at KS distance 0.
inline std::vector<double> permuted(lemcodec::Rng& rng, std::span<const double> block) {
  std::vector<double> out(block.begin(), block.end());
  rng.shuffle(std::span<double>(out));
  return out;
}

inline void append(std::vector<double>& series, std::span<const double> block) {
  series.insert(series.end(), block.begin(), block.end());
}

/// The ten-block, three-group scenario: groups G0, G0, G1, G0, G0, G1, G2, G0, G0, G0
/// with disjoint group supports (centers 0, 100, -100) and each block a
/// permutation of its group's prototype.
inline std::vector<double> three_group_series(std::size_t b, std::uint64_t seed) {
  lemcodec::Rng rng(seed);
  const std::vector<double> proto[3] = {noise_block(rng, b, 0.0), noise_block(rng, b, 100.0),
                                        noise_block(rng, b, -100.0)};
  const int groups[10] = {0, 0, 1, 0, 0, 1, 2, 0, 0, 0};
  std::vector<double> series;
  for (int g : groups) append(series, permuted(rng, proto[g]));
  return series;
}

}  // namespace fixture
