#include "lemcodec/decoder.hpp"

#include <cmath>
#include <string>

#include "lemcodec/error.hpp"
#include "lemcodec/transform.hpp"

namespace lemcodec {

Decoder::Decoder(std::span<const std::uint8_t> stream, std::uint64_t seed)
    : in_(stream), header_(read_header(in_)), dict_(header_.dict_count), rng_(seed) {}

namespace {

void require_finite_samples(std::span<const double> values, std::size_t offset) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw StreamError(StreamErrorKind::kNonFiniteSample, offset + 8 * i, "NaN or infinity in stream");
    }
  }
}

}  // namespace

DictionaryEntry Decoder::read_payload() {
  const std::size_t at = in_.offset();
  std::vector<double> payload;
  in_.f64s(header_.block_size, payload);
  require_finite_samples(payload, at);
  return DictionaryEntry::from_payload(std::move(payload), body_offset());
}

void Decoder::emit_stored(const DictionaryEntry& entry, std::vector<double>& out) const {
  if (!is_transformed(header_.mode)) {
    out.insert(out.end(), entry.payload.begin(), entry.payload.end());
    return;
  }
  auto block = inverse(entry.payload[0], entry.body(1), header_.mode, header_.range);
  out.insert(out.end(), block.begin(), block.end());
}

void Decoder::emit_hit(const DictionaryEntry& entry, std::vector<double>& out) {
  if (!is_transformed(header_.mode)) {
    scratch_.assign(entry.payload.begin(), entry.payload.end());
    rng_.shuffle(std::span<double>(scratch_));
    out.insert(out.end(), scratch_.begin(), scratch_.end());
    return;
  }
  const std::size_t at = in_.offset();
  const double base = in_.f64();
  require_finite_samples(std::span<const double>(&base, 1), at);
  auto block = inverse(base, entry.body(1), header_.mode, header_.range);
  out.insert(out.end(), block.begin(), block.end());
}

std::optional<BlockDecision> Decoder::next_block(std::vector<double>& out) {
  if (blocks_done_ == header_.block_count()) return std::nullopt;
  auto decision = header_.dict_count == 1 ? next_single(out) : next_multi(out);
  ++blocks_done_;
  return decision;
}

std::optional<BlockDecision> Decoder::next_multi(std::vector<double>& out) {
  const std::size_t at = in_.offset();
  const std::uint8_t tag = in_.u8();
  if (tag == kOverwriteMarker) {
    const std::size_t index_at = in_.offset();
    const std::uint8_t slot = in_.u8();
    if (!dict_.full() || slot >= dict_.size()) {
      throw StreamError(StreamErrorKind::kCorruptIndex, index_at,
                        "overwrite of slot " + std::to_string(slot) + " with " +
                            std::to_string(dict_.size()) + "/" + std::to_string(dict_.capacity()) +
                            " slots filled");
    }
    dict_.replace(slot, read_payload());
    emit_stored(dict_[slot], out);
    return BlockDecision{RecordKind::kOverwrite, slot};
  }
  if (tag == dict_.size() && !dict_.full()) {
    const std::size_t slot = dict_.insert(read_payload());
    emit_stored(dict_[slot], out);
    return BlockDecision{RecordKind::kNew, slot};
  }
  if (tag < dict_.size()) {
    emit_hit(dict_[tag], out);
    return BlockDecision{RecordKind::kHit, tag};
  }
  throw StreamError(StreamErrorKind::kCorruptIndex, at,
                    "index " + std::to_string(tag) + " with " + std::to_string(dict_.size()) +
                        " slots filled");
}

void Decoder::read_count() {
  const std::size_t at = in_.offset();
  const std::uint8_t count = in_.u8();
  if (count > header_.max_count) {
    throw StreamError(StreamErrorKind::kCorruptCount, at,
                      "count " + std::to_string(count) + " exceeds max_count " +
                          std::to_string(header_.max_count));
  }
  // Blocks not yet emitted, including the one being decoded now.
  const std::uint64_t remaining = header_.block_count() - blocks_done_;
  if (count > remaining) {
    throw StreamError(StreamErrorKind::kCorruptCount, at,
                      "count " + std::to_string(count) + " exceeds the " + std::to_string(remaining) +
                          " blocks left");
  }
  pending_hits_ = count;
  expect_count_ = count == header_.max_count;
}

std::optional<BlockDecision> Decoder::next_single(std::vector<double>& out) {
  while (pending_hits_ == 0 && expect_count_) read_count();
  if (pending_hits_ > 0) {
    --pending_hits_;
    emit_hit(dict_[0], out);
    return BlockDecision{RecordKind::kHit, 0};
  }
  auto entry = read_payload();
  RecordKind kind = RecordKind::kNew;
  if (dict_.size() == 0) {
    dict_.insert(std::move(entry));
  } else {
    dict_.replace(0, std::move(entry));
    kind = RecordKind::kOverwrite;
  }
  emit_stored(dict_[0], out);
  expect_count_ = true;
  return BlockDecision{kind, 0};
}

void Decoder::finish(std::vector<double>& out) {
  if (blocks_done_ != header_.block_count()) throw InvalidArgument("finish() before all blocks were decoded");
  if (header_.dict_count == 1) {
    // Only zero counts can remain once every block is out.
    while (expect_count_) read_count();
    if (pending_hits_ != 0) {
      throw StreamError(StreamErrorKind::kCorruptCount, in_.offset(), "hit count past the last block");
    }
  }
  const std::size_t at = in_.offset();
  const std::size_t before = out.size();
  in_.f64s(header_.tail_length(), out);
  require_finite_samples(std::span<const double>(out).subspan(before), at);
  if (in_.remaining() != 0) {
    throw StreamError(StreamErrorKind::kTrailingBytes, in_.offset(),
                      std::to_string(in_.remaining()) + " unread bytes");
  }
}

}  // namespace lemcodec
