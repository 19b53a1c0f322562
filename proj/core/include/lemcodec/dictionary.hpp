#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace lemcodec {

/// A stored source distribution.
///
/// `payload` is exactly what was written to the stream: the B raw samples in
/// standard mode, or the base value followed by B-1 transformed values in
/// residual/delta mode. `sorted_body` is the part the KS test compares (the
/// whole payload, or the B-1 transformed values), sorted once at insertion.
struct DictionaryEntry {
  std::vector<double> payload;
  std::vector<double> sorted_body;
  double min = 0.0;
  double max = 0.0;
  std::uint64_t insertion_order = 0;

  /// `body_offset` is 0 in standard mode and 1 when payload[0] is a base value.
  static DictionaryEntry from_payload(std::vector<double> payload, std::size_t body_offset);

  std::span<const double> body(std::size_t body_offset) const noexcept {
    return std::span<const double>(payload).subspan(body_offset);
  }

  friend bool operator==(const DictionaryEntry&, const DictionaryEntry&) = default;
};

/// Slot table of at most `capacity` entries with FIFO replacement.
/// Slots [0, size()) are populated; new entries always go to the lowest empty slot.
class DictionaryBuffer {
 public:
  explicit DictionaryBuffer(std::size_t capacity);

  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t size() const noexcept { return slots_.size(); }
  bool full() const noexcept { return slots_.size() == capacity_; }

  const DictionaryEntry& operator[](std::size_t slot) const { return slots_.at(slot); }
  std::span<const DictionaryEntry> entries() const noexcept { return slots_; }

  /// Fills the next empty slot and returns its index. Requires !full().
  std::size_t insert(DictionaryEntry entry);

  /// Slot holding the oldest entry (smallest insertion order). Requires size() > 0.
  std::size_t fifo_victim() const;

  /// Overwrites a populated slot; the new entry becomes the youngest.
  void replace(std::size_t slot, DictionaryEntry entry);

  friend bool operator==(const DictionaryBuffer&, const DictionaryBuffer&) = default;

 private:
  std::size_t capacity_;
  std::vector<DictionaryEntry> slots_;
  std::uint64_t next_order_ = 0;
};

}  // namespace lemcodec
