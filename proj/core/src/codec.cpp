#include "lemcodec/codec.hpp"

#include <algorithm>

namespace lemcodec {

EncodeResult encode_with_stats(std::span<const double> series, const CodecParams& params) {
  Encoder encoder(params);
  encoder.push(series);
  EncodeResult result;
  result.stream = encoder.finish();
  result.stats = encoder.stats();
  return result;
}

std::vector<double> decode(std::span<const std::uint8_t> stream, std::uint64_t seed) {
  Decoder decoder(stream, seed);
  std::vector<double> out;
  // The header is untrusted, so cap the up-front reservation.
  out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(decoder.header().total_samples, 1u << 24)));
  while (decoder.next_block(out)) {
  }
  decoder.finish(out);
  return out;
}

}  // namespace lemcodec
