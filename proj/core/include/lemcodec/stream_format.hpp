#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lemcodec/params.hpp"

namespace lemcodec {

// Encoded stream layout (all integers and doubles little-endian):
//
//   "ILEM" | version u8 | mode u8 | block_size u32 | dict_count u8 | max_count u8
//   | flags u8 | total_samples u64 | [range_min f64 | range_max f64]
//   | body | tail (total_samples mod block_size raw doubles)
//
// Multi-dictionary body, one record per block:
//   new block   index(=next free slot) payload
//   hit         index(< next free slot) [base f64 in residual/delta mode]
//   overwrite   0xFF index payload
// Single-dictionary body (dict_count == 1), per stored block:
//   payload count { [count bases in residual/delta mode] ; another count while count == max_count }
//
// payload = B doubles (standard) or base + B-1 transformed doubles (residual/delta).

inline constexpr std::array<std::uint8_t, 4> kMagic = {'I', 'L', 'E', 'M'};
inline constexpr std::uint8_t kFormatVersion = 1;
inline constexpr std::uint8_t kOverwriteMarker = 0xFF;
inline constexpr std::uint8_t kFlagRange = 0x01;
inline constexpr std::uint8_t kFlagGate = 0x02;

struct StreamHeader {
  Mode mode = Mode::kStandard;
  std::uint32_t block_size = 0;
  std::uint8_t dict_count = 0;
  std::uint8_t max_count = 0;
  bool gate_enabled = false;
  std::uint64_t total_samples = 0;
  std::optional<Range> range;

  std::size_t encoded_size() const noexcept { return range ? 37 : 21; }
  std::uint64_t block_count() const noexcept { return total_samples / block_size; }
  std::uint64_t tail_length() const noexcept { return total_samples % block_size; }

  static StreamHeader from_params(const CodecParams& params, std::uint64_t total_samples);

  friend bool operator==(const StreamHeader&, const StreamHeader&) = default;
};

/// Appends little-endian primitives to a byte vector.
class ByteWriter {
 public:
  explicit ByteWriter(std::vector<std::uint8_t>& out) : out_(out) {}

  void u8(std::uint8_t v) { out_.push_back(v); }
  void u32(std::uint32_t v);
  void u64(std::uint64_t v);
  void f64(double v);
  void f64s(std::span<const double> values);

 private:
  std::vector<std::uint8_t>& out_;
};

/// Bounds-checked little-endian reader; every read past the end throws StreamError(kTruncated).
class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::uint8_t u8();
  std::uint32_t u32();
  std::uint64_t u64();
  double f64();
  void f64s(std::size_t count, std::vector<double>& out);

  std::size_t offset() const noexcept { return pos_; }
  std::size_t remaining() const noexcept { return bytes_.size() - pos_; }

 private:
  void require(std::size_t n) const;

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

void write_header(ByteWriter& out, const StreamHeader& header);

/// Reads and validates a header; throws StreamError on bad magic/version/fields.
StreamHeader read_header(ByteReader& in);

}  // namespace lemcodec
