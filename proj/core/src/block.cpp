#include "lemcodec/block.hpp"

#include <cmath>

#include "lemcodec/error.hpp"

namespace lemcodec {

void require_finite(std::span<const double> samples, std::size_t offset) {
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!std::isfinite(samples[i])) throw NonFiniteSample(offset + i, samples[i]);
  }
}

Block::Block(std::vector<double> values, std::size_t first_index) : values_(std::move(values)) {
  require_finite(values_, first_index);
}

Segmentation segment(std::span<const double> series, std::size_t block_size) {
  if (block_size < 2) throw InvalidArgument("block size must be at least 2");
  require_finite(series);

  Segmentation out;
  const std::size_t n_blocks = series.size() / block_size;
  out.blocks.reserve(n_blocks);
  for (std::size_t j = 0; j < n_blocks; ++j) {
    auto window = series.subspan(j * block_size, block_size);
    out.blocks.emplace_back(std::vector<double>(window.begin(), window.end()), j * block_size);
  }
  auto rest = series.subspan(n_blocks * block_size);
  out.tail.assign(rest.begin(), rest.end());
  return out;
}

}  // namespace lemcodec
