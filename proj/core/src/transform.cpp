#include "lemcodec/transform.hpp"

#include <cmath>

#include "lemcodec/error.hpp"

namespace lemcodec {

namespace {

// Values more than this many spans away are first reduced with fmod (exact);
// the final shifts are always single add/subtract steps.
constexpr double kCoarseSpans = 4.0;

}  // namespace

double adjust_to_half_span(double value, double span) {
  const double half = span / 2.0;
  if (std::abs(value) > kCoarseSpans * span) value = std::fmod(value, span);
  while (value > half) value -= span;
  while (value < -half) value += span;
  return value;
}

double wrap_into(double value, const Range& range) {
  const double span = range.span();
  if (value < range.min - kCoarseSpans * span || value >= range.max + kCoarseSpans * span) {
    value = range.min + std::fmod(value - range.min, span);
  }
  while (value >= range.max) value -= span;
  while (value < range.min) value += span;
  // Rounding of value + span can land exactly on max.
  if (value >= range.max) value = range.min;
  return value;
}

TransformedBlock residual_forward(std::span<const double> block, std::optional<Range> range) {
  if (block.size() < 2) throw InvalidArgument("transform requires at least two samples");
  TransformedBlock t;
  t.base = block[0];
  t.body.reserve(block.size() - 1);
  for (std::size_t k = 1; k < block.size(); ++k) {
    double v = block[k] - block[0];
    if (range) v = adjust_to_half_span(v, range->span());
    t.body.push_back(v);
  }
  return t;
}

TransformedBlock delta_forward(std::span<const double> block, std::optional<Range> range) {
  if (block.size() < 2) throw InvalidArgument("transform requires at least two samples");
  TransformedBlock t;
  t.base = block[0];
  t.body.reserve(block.size() - 1);
  for (std::size_t k = 1; k < block.size(); ++k) {
    double v = block[k] - block[k - 1];
    if (range) v = adjust_to_half_span(v, range->span());
    t.body.push_back(v);
  }
  return t;
}

TransformedBlock forward(Mode mode, std::span<const double> block, std::optional<Range> range) {
  switch (mode) {
    case Mode::kResidual: return residual_forward(block, range);
    case Mode::kDelta: return delta_forward(block, range);
    case Mode::kStandard: break;
  }
  throw InvalidArgument("forward transform requires residual or delta mode");
}

std::vector<double> inverse(double base, std::span<const double> body, Mode mode, std::optional<Range> range) {
  if (mode == Mode::kStandard) throw InvalidArgument("inverse transform requires residual or delta mode");
  std::vector<double> out;
  out.reserve(body.size() + 1);
  const double first = range ? wrap_into(base, *range) : base;
  out.push_back(first);
  if (mode == Mode::kResidual) {
    for (double v : body) {
      const double x = base + v;
      out.push_back(range ? wrap_into(x, *range) : x);
    }
  } else {
    double running = first;
    for (double v : body) {
      running += v;
      if (range) running = wrap_into(running, *range);
      out.push_back(running);
    }
  }
  return out;
}

}  // namespace lemcodec
