#include "lemcodec/params.hpp"

#include <cmath>
#include <string>

#include "lemcodec/error.hpp"

namespace lemcodec {

std::string_view to_string(Mode mode) noexcept {
  switch (mode) {
    case Mode::kStandard: return "standard";
    case Mode::kResidual: return "residual";
    case Mode::kDelta: return "delta";
  }
  return "unknown";
}

std::optional<Mode> parse_mode(std::string_view text) noexcept {
  if (text == "standard") return Mode::kStandard;
  if (text == "residual") return Mode::kResidual;
  if (text == "delta") return Mode::kDelta;
  return std::nullopt;
}

void CodecParams::validate() const {
  if (mode != Mode::kStandard && mode != Mode::kResidual && mode != Mode::kDelta) {
    throw InvalidArgument("unknown mode");
  }
  if (block_size < 2) throw InvalidArgument("block_size must be at least 2");
  if (dict_count < 1 || dict_count > kMaxDictCount) {
    throw InvalidArgument("dict_count must be in [1, 255], got " + std::to_string(dict_count));
  }
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("alpha must be in (0, 1)");
  if (rtol && !(*rtol >= 0.0 && std::isfinite(*rtol))) {
    throw InvalidArgument("rtol must be finite and non-negative");
  }
  if (max_count < 1 || max_count > kMaxHitCount) {
    throw InvalidArgument("max_count must be in [1, 255], got " + std::to_string(max_count));
  }
  if (range) {
    if (mode == Mode::kStandard) {
      throw InvalidArgument("range bounds require residual or delta mode");
    }
    if (!std::isfinite(range->min) || !std::isfinite(range->max) || !(range->min < range->max)) {
      throw InvalidArgument("range requires finite range_min < range_max");
    }
  }
}

}  // namespace lemcodec
