#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lemcodec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter or input violates a documented precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Input samples contain NaN or infinity.
class NonFiniteSample : public InvalidArgument {
 public:
  NonFiniteSample(std::size_t position, double value);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

enum class StreamErrorKind {
  kBadMagic,
  kBadVersion,
  kBadHeader,
  kCorruptIndex,
  kCorruptCount,
  kNonFiniteSample,
  kTruncated,
  kTrailingBytes,
};

const char* to_string(StreamErrorKind kind) noexcept;

/// Malformed encoded stream. `offset` is the byte position where decoding stopped.
class StreamError : public Error {
 public:
  StreamError(StreamErrorKind kind, std::size_t offset, const std::string& detail);

  StreamErrorKind kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  StreamErrorKind kind_;
  std::size_t offset_;
};

}  // namespace lemcodec
