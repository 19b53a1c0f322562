#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace lemcodec {

enum class Mode : std::uint8_t {
  kStandard = 0,
  kResidual = 1,
  kDelta = 2,
};

std::string_view to_string(Mode mode) noexcept;
std::optional<Mode> parse_mode(std::string_view text) noexcept;

inline bool is_transformed(Mode mode) noexcept { return mode != Mode::kStandard; }

/// Bounded value range such as phase angles in [0, 360). Values wrap modulo `span()`.
struct Range {
  double min = 0.0;
  double max = 0.0;

  double span() const noexcept { return max - min; }
  friend bool operator==(const Range&, const Range&) = default;
};

/// Largest dictionary that leaves 0xFF free for the overwrite marker.
inline constexpr int kMaxDictCount = 255;
inline constexpr int kMaxHitCount = 255;

/// Tuning knobs of the codec. Defaults follow the evaluation configuration
/// (B = 32, D = 255, alpha = 0.01, c = 255, min/max gate off).
struct CodecParams {
  Mode mode = Mode::kStandard;
  std::uint32_t block_size = 32;
  int dict_count = 255;
  double alpha = 0.01;
  std::optional<double> rtol;  // min/max gate enabled iff set
  int max_count = 255;
  std::optional<Range> range;  // Residual/Delta only
  std::uint64_t permutation_seed = 0;

  bool single_dictionary() const noexcept { return dict_count == 1; }
  bool gate_enabled() const noexcept { return rtol.has_value(); }

  /// Throws InvalidArgument describing the first violated constraint.
  void validate() const;
};

}  // namespace lemcodec
