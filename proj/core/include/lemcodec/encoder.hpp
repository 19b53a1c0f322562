#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lemcodec/dictionary.hpp"
#include "lemcodec/params.hpp"

namespace lemcodec {

enum class RecordKind : std::uint8_t {
  kNew,        // stored into an empty slot
  kHit,        // represented by an existing slot
  kOverwrite,  // stored over the FIFO victim
};

/// What happened to one block, on either side of the codec.
struct BlockDecision {
  RecordKind kind = RecordKind::kNew;
  std::size_t slot = 0;

  friend bool operator==(const BlockDecision&, const BlockDecision&) = default;
};

struct EncoderStats {
  std::uint64_t blocks = 0;
  std::uint64_t hits = 0;
  std::uint64_t new_blocks = 0;
  std::uint64_t overwrites = 0;
  std::uint64_t gate_rejections = 0;  // entries skipped by the min/max check
  std::uint64_t ks_tests = 0;         // KS comparisons actually performed
};

/// Single-threaded encoding session. Feed samples with push() (any chunking)
/// or whole blocks with push_block(), then call finish() once.
class Encoder {
 public:
  explicit Encoder(CodecParams params);

  /// Appends samples; complete blocks are encoded immediately, the remainder is held.
  void push(std::span<const double> samples);

  /// Encodes exactly one block. Requires block.size() == B and no held partial samples.
  BlockDecision push_block(std::span<const double> block);

  /// Emits the complete stream: header, body and the held samples as the raw tail.
  std::vector<std::uint8_t> finish();

  const CodecParams& params() const noexcept { return params_; }
  const EncoderStats& stats() const noexcept { return stats_; }
  const DictionaryBuffer& dictionary() const noexcept { return dict_; }

 private:
  void flush_run();

  CodecParams params_;
  DictionaryBuffer dict_;
  EncoderStats stats_;
  std::vector<std::uint8_t> body_;
  std::vector<double> held_;
  std::uint64_t total_samples_ = 0;
  bool finished_ = false;

  // Single-dictionary run state: hits since the last emitted count byte.
  int run_ = 0;
  std::vector<double> run_bases_;

  // Scratch reused across blocks.
  std::vector<double> payload_;
  std::vector<double> sorted_;
};

}  // namespace lemcodec
