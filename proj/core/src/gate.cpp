#include "lemcodec/gate.hpp"

#include <algorithm>
#include <cmath>

namespace lemcodec {

namespace {

bool within(double value, double center, double slack) {
  return center - slack <= value && value <= center + slack;
}

}  // namespace

bool minmax_pass(double candidate_min, double candidate_max, const DictionaryEntry& entry, double rtol) {
  const double width = entry.max - entry.min;
  if (width == 0.0) {
    const double slack_min = 1e-12 * std::max(1.0, std::abs(entry.min));
    const double slack_max = 1e-12 * std::max(1.0, std::abs(entry.max));
    return within(candidate_min, entry.min, slack_min) && within(candidate_max, entry.max, slack_max);
  }
  const double slack = width * rtol;
  return within(candidate_min, entry.min, slack) && within(candidate_max, entry.max, slack);
}

}  // namespace lemcodec
