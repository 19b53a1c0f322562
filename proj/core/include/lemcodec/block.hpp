#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace lemcodec {

/// One window of exactly B finite samples; the unit of exchangeability.
class Block {
 public:
  /// Throws NonFiniteSample (position relative to `first_index`) on NaN/Inf.
  explicit Block(std::vector<double> values, std::size_t first_index = 0);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }

  friend bool operator==(const Block&, const Block&) = default;

 private:
  std::vector<double> values_;
};

struct Segmentation {
  std::vector<Block> blocks;
  std::vector<double> tail;  // 0 <= tail.size() < B
};

/// Splits `series` into consecutive blocks of `block_size` plus a raw tail.
Segmentation segment(std::span<const double> series, std::size_t block_size);

/// Throws NonFiniteSample for the first NaN/Inf; `offset` is added to the reported position.
void require_finite(std::span<const double> samples, std::size_t offset = 0);

}  // namespace lemcodec
