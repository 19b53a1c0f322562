#pragma once

#include "lemcodec/dictionary.hpp"

namespace lemcodec {

/// Min/max pre-filter. With w = entry.max - entry.min, the candidate passes iff
///   entry.min - w*r <= candidate_min <= entry.min + w*r  and
///   entry.max - w*r <= candidate_max <= entry.max + w*r.
/// For a constant entry (w == 0) each end may differ by at most 1e-12 * max(1, |end|).
bool minmax_pass(double candidate_min, double candidate_max, const DictionaryEntry& entry, double rtol);

}  // namespace lemcodec
