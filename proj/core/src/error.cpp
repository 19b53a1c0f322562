#include "lemcodec/error.hpp"

#include <sstream>

namespace lemcodec {

namespace {

std::string non_finite_message(std::size_t position, double value) {
  std::ostringstream os;
  os << "non-finite sample " << value << " at position " << position;
  return os.str();
}

std::string stream_message(StreamErrorKind kind, std::size_t offset, const std::string& detail) {
  std::ostringstream os;
  os << "stream error (" << to_string(kind) << ") at byte " << offset;
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}

}  // namespace

NonFiniteSample::NonFiniteSample(std::size_t position, double value)
    : InvalidArgument(non_finite_message(position, value)), position_(position) {}

const char* to_string(StreamErrorKind kind) noexcept {
  switch (kind) {
    case StreamErrorKind::kBadMagic: return "bad magic";
    case StreamErrorKind::kBadVersion: return "unsupported version";
    case StreamErrorKind::kBadHeader: return "invalid header";
    case StreamErrorKind::kCorruptIndex: return "corrupt index";
    case StreamErrorKind::kCorruptCount: return "corrupt hit count";
    case StreamErrorKind::kNonFiniteSample: return "non-finite sample";
    case StreamErrorKind::kTruncated: return "truncated";
    case StreamErrorKind::kTrailingBytes: return "trailing bytes";
  }
  return "unknown";
}

StreamError::StreamError(StreamErrorKind kind, std::size_t offset, const std::string& detail)
    : Error(stream_message(kind, offset, detail)), kind_(kind), offset_(offset) {}

}  // namespace lemcodec
