#include "lemcodec/encoder.hpp"

#include <algorithm>

#include "lemcodec/block.hpp"
#include "lemcodec/error.hpp"
#include "lemcodec/gate.hpp"
#include "lemcodec/ks.hpp"
#include "lemcodec/stream_format.hpp"
#include "lemcodec/transform.hpp"

namespace lemcodec {

Encoder::Encoder(CodecParams params)
    : params_((params.validate(), params)), dict_(static_cast<std::size_t>(params.dict_count)) {
  held_.reserve(params_.block_size);
}

void Encoder::push(std::span<const double> samples) {
  if (finished_) throw InvalidArgument("encoder already finished");
  require_finite(samples, total_samples_ + held_.size());
  const std::size_t b = params_.block_size;
  while (!samples.empty()) {
    if (held_.empty() && samples.size() >= b) {
      push_block(samples.first(b));
      samples = samples.subspan(b);
      continue;
    }
    const std::size_t take = std::min(b - held_.size(), samples.size());
    held_.insert(held_.end(), samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(take));
    samples = samples.subspan(take);
    if (held_.size() == b) {
      std::vector<double> block;
      block.swap(held_);
      push_block(block);
      held_.reserve(b);
    }
  }
}

BlockDecision Encoder::push_block(std::span<const double> block) {
  if (finished_) throw InvalidArgument("encoder already finished");
  if (!held_.empty()) throw InvalidArgument("push_block with a partial block pending");
  if (block.size() != params_.block_size) throw InvalidArgument("block length differs from block_size");
  require_finite(block, total_samples_);

  const bool transformed = is_transformed(params_.mode);
  const std::size_t body_offset = transformed ? 1 : 0;

  payload_.clear();
  double base = 0.0;
  if (transformed) {
    auto t = forward(params_.mode, block, params_.range);
    base = t.base;
    payload_.push_back(t.base);
    payload_.insert(payload_.end(), t.body.begin(), t.body.end());
  } else {
    payload_.assign(block.begin(), block.end());
  }
  sorted_.assign(payload_.begin() + static_cast<std::ptrdiff_t>(body_offset), payload_.end());
  std::sort(sorted_.begin(), sorted_.end());
  const double cand_min = sorted_.front();
  const double cand_max = sorted_.back();

  std::optional<std::size_t> match;
  for (std::size_t slot = 0; slot < dict_.size(); ++slot) {
    const auto& entry = dict_[slot];
    if (params_.rtol && !minmax_pass(cand_min, cand_max, entry, *params_.rtol)) {
      ++stats_.gate_rejections;
      continue;
    }
    ++stats_.ks_tests;
    if (exchangeable(sorted_, entry, params_.alpha)) {
      match = slot;
      break;
    }
  }

  total_samples_ += block.size();
  ++stats_.blocks;
  ByteWriter out(body_);

  if (match) {
    ++stats_.hits;
    if (params_.single_dictionary()) {
      ++run_;
      if (transformed) run_bases_.push_back(base);
      if (run_ == params_.max_count) flush_run();
    } else {
      out.u8(static_cast<std::uint8_t>(*match));
      if (transformed) out.f64(base);
    }
    return {RecordKind::kHit, *match};
  }

  auto entry = DictionaryEntry::from_payload(payload_, body_offset);
  if (params_.single_dictionary()) {
    if (dict_.size() == 0) {
      ++stats_.new_blocks;
      dict_.insert(std::move(entry));
      out.f64s(payload_);
      return {RecordKind::kNew, 0};
    }
    // Close the previous block's count sequence before storing its successor.
    flush_run();
    ++stats_.overwrites;
    dict_.replace(0, std::move(entry));
    out.f64s(payload_);
    return {RecordKind::kOverwrite, 0};
  }

  if (!dict_.full()) {
    ++stats_.new_blocks;
    const std::size_t slot = dict_.insert(std::move(entry));
    out.u8(static_cast<std::uint8_t>(slot));
    out.f64s(payload_);
    return {RecordKind::kNew, slot};
  }
  ++stats_.overwrites;
  const std::size_t victim = dict_.fifo_victim();
  dict_.replace(victim, std::move(entry));
  out.u8(kOverwriteMarker);
  out.u8(static_cast<std::uint8_t>(victim));
  out.f64s(payload_);
  return {RecordKind::kOverwrite, victim};
}

void Encoder::flush_run() {
  ByteWriter out(body_);
  out.u8(static_cast<std::uint8_t>(run_));
  out.f64s(run_bases_);
  run_ = 0;
  run_bases_.clear();
}

std::vector<std::uint8_t> Encoder::finish() {
  if (finished_) throw InvalidArgument("encoder already finished");
  // A stored block is always followed by at least one count byte.
  if (params_.single_dictionary() && dict_.size() > 0) flush_run();
  finished_ = true;

  const auto header = StreamHeader::from_params(params_, total_samples_ + held_.size());
  std::vector<std::uint8_t> stream;
  stream.reserve(header.encoded_size() + body_.size() + 8 * held_.size());
  ByteWriter out(stream);
  write_header(out, header);
  stream.insert(stream.end(), body_.begin(), body_.end());
  out.f64s(held_);
  body_.clear();
  body_.shrink_to_fit();
  return stream;
}

}  // namespace lemcodec
