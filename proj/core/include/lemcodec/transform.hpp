#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lemcodec/params.hpp"

namespace lemcodec {

/// Base value plus B-1 residual or delta values.
struct TransformedBlock {
  double base = 0.0;
  std::vector<double> body;

  friend bool operator==(const TransformedBlock&, const TransformedBlock&) = default;
};

/// body[k-1] = x[k] - x[0]. With a range, each body value is shifted by whole
/// spans into [-span/2, span/2].
TransformedBlock residual_forward(std::span<const double> block, std::optional<Range> range = std::nullopt);

/// body[k-1] = x[k] - x[k-1], with the same range adjustment as residual_forward.
TransformedBlock delta_forward(std::span<const double> block, std::optional<Range> range = std::nullopt);

/// Dispatches on mode; mode must be Residual or Delta.
TransformedBlock forward(Mode mode, std::span<const double> block, std::optional<Range> range = std::nullopt);

/// Rebuilds the block. Delta accumulates left to right. With a range every
/// output is wrapped into [range.min, range.max).
std::vector<double> inverse(double base, std::span<const double> body, Mode mode,
                            std::optional<Range> range = std::nullopt);

inline std::vector<double> inverse(const TransformedBlock& t, Mode mode, std::optional<Range> range = std::nullopt) {
  return inverse(t.base, t.body, mode, range);
}

/// Shift by whole spans into [-span/2, span/2].
double adjust_to_half_span(double value, double span);

/// Shift by whole spans into [range.min, range.max).
double wrap_into(double value, const Range& range);

}  // namespace lemcodec
