#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lemcodec/dictionary.hpp"
#include "lemcodec/encoder.hpp"
#include "lemcodec/random.hpp"
#include "lemcodec/stream_format.hpp"

namespace lemcodec {

/// Single-threaded decoding session over an encoded stream. The dictionary
/// is rebuilt record by record, so after each next_block() it equals the
/// encoder's dictionary after the same block.
///
/// Standard-mode hits are reconstructed as a uniform random permutation of
/// the referenced entry, drawn from an Rng seeded with `seed`. Residual and
/// delta hits add the stored base back without permuting.
class Decoder {
 public:
  /// Parses the header immediately; throws StreamError if it is malformed.
  /// `stream` must outlive the decoder.
  explicit Decoder(std::span<const std::uint8_t> stream, std::uint64_t seed = 0);

  const StreamHeader& header() const noexcept { return header_; }
  const DictionaryBuffer& dictionary() const noexcept { return dict_; }
  std::uint64_t blocks_decoded() const noexcept { return blocks_done_; }

  /// Appends the next block's B samples to `out`. Returns nullopt once every block is decoded.
  std::optional<BlockDecision> next_block(std::vector<double>& out);

  /// Consumes trailing count bytes and the raw tail (appended to `out`), then
  /// verifies the stream is exhausted. Requires all blocks decoded.
  void finish(std::vector<double>& out);

 private:
  std::size_t body_offset() const noexcept { return is_transformed(header_.mode) ? 1 : 0; }
  DictionaryEntry read_payload();
  void emit_stored(const DictionaryEntry& entry, std::vector<double>& out) const;
  void emit_hit(const DictionaryEntry& entry, std::vector<double>& out);
  std::optional<BlockDecision> next_single(std::vector<double>& out);
  std::optional<BlockDecision> next_multi(std::vector<double>& out);
  void read_count();

  ByteReader in_;
  StreamHeader header_;
  DictionaryBuffer dict_;
  Rng rng_;
  std::uint64_t blocks_done_ = 0;

  // Single-dictionary state.
  std::uint64_t pending_hits_ = 0;
  bool expect_count_ = false;

  std::vector<double> scratch_;
};

}  // namespace lemcodec
