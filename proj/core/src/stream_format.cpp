#include "lemcodec/stream_format.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "lemcodec/error.hpp"

namespace lemcodec {

StreamHeader StreamHeader::from_params(const CodecParams& params, std::uint64_t total_samples) {
  StreamHeader h;
  h.mode = params.mode;
  h.block_size = params.block_size;
  h.dict_count = static_cast<std::uint8_t>(params.dict_count);
  h.max_count = static_cast<std::uint8_t>(params.max_count);
  h.gate_enabled = params.gate_enabled();
  h.total_samples = total_samples;
  h.range = params.range;
  return h;
}

void ByteWriter::u32(std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::u64(std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }

void ByteWriter::f64s(std::span<const double> values) {
  out_.reserve(out_.size() + 8 * values.size());
  for (double v : values) f64(v);
}

void ByteReader::require(std::size_t n) const {
  if (remaining() < n) {
    throw StreamError(StreamErrorKind::kTruncated, pos_,
                      "need " + std::to_string(n) + " bytes, have " + std::to_string(remaining()));
  }
}

std::uint8_t ByteReader::u8() {
  require(1);
  return bytes_[pos_++];
}

std::uint32_t ByteReader::u32() {
  require(4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(bytes_[pos_ + i]) << (8 * i);
  pos_ += 4;
  return v;
}

std::uint64_t ByteReader::u64() {
  require(8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(bytes_[pos_ + i]) << (8 * i);
  pos_ += 8;
  return v;
}

double ByteReader::f64() { return std::bit_cast<double>(u64()); }

void ByteReader::f64s(std::size_t count, std::vector<double>& out) {
  if (count > remaining() / 8) {
    throw StreamError(StreamErrorKind::kTruncated, pos_,
                      "need " + std::to_string(count) + " doubles, have " + std::to_string(remaining()) + " bytes");
  }
  out.reserve(out.size() + count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(f64());
}

void write_header(ByteWriter& out, const StreamHeader& header) {
  for (auto b : kMagic) out.u8(b);
  out.u8(kFormatVersion);
  out.u8(static_cast<std::uint8_t>(header.mode));
  out.u32(header.block_size);
  out.u8(header.dict_count);
  out.u8(header.max_count);
  std::uint8_t flags = 0;
  if (header.range) flags |= kFlagRange;
  if (header.gate_enabled) flags |= kFlagGate;
  out.u8(flags);
  out.u64(header.total_samples);
  if (header.range) {
    out.f64(header.range->min);
    out.f64(header.range->max);
  }
}

StreamHeader read_header(ByteReader& in) {
  for (auto expected : kMagic) {
    const std::size_t at = in.offset();
    if (in.remaining() == 0) throw StreamError(StreamErrorKind::kTruncated, at, "stream shorter than magic");
    if (in.u8() != expected) throw StreamError(StreamErrorKind::kBadMagic, at, "expected \"ILEM\"");
  }
  const std::size_t version_at = in.offset();
  if (const auto version = in.u8(); version != kFormatVersion) {
    throw StreamError(StreamErrorKind::kBadVersion, version_at, "version " + std::to_string(version));
  }

  StreamHeader h;
  const std::size_t mode_at = in.offset();
  const auto mode = in.u8();
  if (mode > 2) throw StreamError(StreamErrorKind::kBadHeader, mode_at, "mode " + std::to_string(mode));
  h.mode = static_cast<Mode>(mode);

  const std::size_t fields_at = in.offset();
  h.block_size = in.u32();
  h.dict_count = in.u8();
  h.max_count = in.u8();
  const auto flags = in.u8();
  h.total_samples = in.u64();
  if (h.block_size < 2) throw StreamError(StreamErrorKind::kBadHeader, fields_at, "block_size < 2");
  if (h.dict_count == 0) {
    throw StreamError(StreamErrorKind::kBadHeader, fields_at + 4, "dict_count out of range");
  }
  if (h.max_count == 0) throw StreamError(StreamErrorKind::kBadHeader, fields_at + 5, "max_count is zero");
  if ((flags & ~(kFlagRange | kFlagGate)) != 0) {
    throw StreamError(StreamErrorKind::kBadHeader, fields_at + 6, "unknown flag bits");
  }
  h.gate_enabled = (flags & kFlagGate) != 0;
  if (flags & kFlagRange) {
    if (h.mode == Mode::kStandard) throw StreamError(StreamErrorKind::kBadHeader, fields_at + 6, "range in standard mode");
    const std::size_t range_at = in.offset();
    Range r{in.f64(), in.f64()};
    if (!std::isfinite(r.min) || !std::isfinite(r.max) || !(r.min < r.max)) {
      throw StreamError(StreamErrorKind::kBadHeader, range_at, "invalid range");
    }
    h.range = r;
  }
  return h;
}

}  // namespace lemcodec
