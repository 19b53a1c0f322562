#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lemcodec/decoder.hpp"
#include "lemcodec/encoder.hpp"
#include "lemcodec/params.hpp"

namespace lemcodec {

struct EncodeResult {
  std::vector<std::uint8_t> stream;
  EncoderStats stats;
};

/// Encodes a whole series in one call.
EncodeResult encode_with_stats(std::span<const double> series, const CodecParams& params);

inline std::vector<std::uint8_t> encode(std::span<const double> series, const CodecParams& params) {
  return encode_with_stats(series, params).stream;
}

/// Decodes a whole stream; the output holds exactly header.total_samples values.
std::vector<double> decode(std::span<const std::uint8_t> stream, std::uint64_t seed = 0);

}  // namespace lemcodec
