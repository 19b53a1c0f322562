#include "lemcodec/dictionary.hpp"

#include <algorithm>

#include "lemcodec/error.hpp"

namespace lemcodec {

DictionaryEntry DictionaryEntry::from_payload(std::vector<double> payload, std::size_t body_offset) {
  if (payload.size() <= body_offset) throw InvalidArgument("dictionary payload has an empty body");
  DictionaryEntry entry;
  entry.sorted_body.assign(payload.begin() + static_cast<std::ptrdiff_t>(body_offset), payload.end());
  std::sort(entry.sorted_body.begin(), entry.sorted_body.end());
  entry.min = entry.sorted_body.front();
  entry.max = entry.sorted_body.back();
  entry.payload = std::move(payload);
  return entry;
}

DictionaryBuffer::DictionaryBuffer(std::size_t capacity) : capacity_(capacity) {
  if (capacity == 0) throw InvalidArgument("dictionary capacity must be positive");
  slots_.reserve(capacity);
}

std::size_t DictionaryBuffer::insert(DictionaryEntry entry) {
  if (full()) throw InvalidArgument("dictionary buffer is full");
  entry.insertion_order = next_order_++;
  slots_.push_back(std::move(entry));
  return slots_.size() - 1;
}

std::size_t DictionaryBuffer::fifo_victim() const {
  if (slots_.empty()) throw InvalidArgument("dictionary buffer is empty");
  auto oldest = std::min_element(slots_.begin(), slots_.end(), [](const auto& a, const auto& b) {
    return a.insertion_order < b.insertion_order;
  });
  return static_cast<std::size_t>(oldest - slots_.begin());
}

void DictionaryBuffer::replace(std::size_t slot, DictionaryEntry entry) {
  if (slot >= slots_.size()) throw InvalidArgument("replace on an empty dictionary slot");
  entry.insertion_order = next_order_++;
  slots_[slot] = std::move(entry);
}

}  // namespace lemcodec
