#include "lemcodec/synth.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "lemcodec/error.hpp"
#include "lemcodec/ks.hpp"
#include "lemcodec/random.hpp"
#include "lemcodec/transform.hpp"

namespace lemcodec {

namespace {

std::size_t flat_count(double flat_fraction, std::size_t block_size) {
  if (!(flat_fraction > 0.0 && flat_fraction < 1.0)) throw InvalidArgument("flat_fraction must be in (0, 1)");
  const double scaled = flat_fraction * static_cast<double>(block_size);
  const double rounded = std::round(scaled);
  if (std::abs(scaled - rounded) > 1e-9) throw InvalidArgument("flat_fraction * block_size must be an integer");
  const auto kept = static_cast<std::size_t>(rounded);
  if (kept == 0 || kept >= block_size) throw InvalidArgument("flat_fraction leaves no held samples");
  return kept;
}

double sorted_body_distance(Mode mode, std::span<const double> a, std::span<const double> b) {
  auto ta = forward(mode, a).body;
  auto tb = forward(mode, b).body;
  std::sort(ta.begin(), ta.end());
  std::sort(tb.begin(), tb.end());
  return ks_distance(ta, tb);
}

}  // namespace

std::vector<double> gen_trend(const TrendModel& model) {
  if (model.n < 1) throw InvalidArgument("trend length must be positive");
  if (!(model.sigma_w >= 0.0)) throw InvalidArgument("sigma_w must be non-negative");
  Rng rng(model.seed);
  std::vector<double> out;
  out.reserve(model.n);
  double clean = model.x0;
  for (std::size_t i = 0; i < model.n; ++i) {
    const double noise = model.sigma_w > 0.0 ? model.sigma_w * rng.normal() : 0.0;
    out.push_back(clean + noise);
    clean += model.m;
  }
  return out;
}

std::vector<double> gen_similar(std::span<const double> base, const SimilarBlockSpec& spec, std::size_t block_size,
                                std::uint64_t seed) {
  if (block_size < 2) throw InvalidArgument("block size must be at least 2");
  std::vector<double> out(base.begin(), base.end());

  if (spec.kind == SimilarKind::kFirst) {
    if (!(spec.sigma_w_prime >= 0.0)) throw InvalidArgument("sigma_w' must be non-negative");
    if (spec.sigma_w_prime == 0.0) return out;
    Rng rng(seed);
    for (double& x : out) x += spec.sigma_w_prime * rng.normal();
    return out;
  }

  const std::size_t kept = flat_count(spec.flat_fraction, block_size);
  for (std::size_t start = 0; start + block_size <= out.size(); start += block_size) {
    const double held = out[start + kept];
    std::fill(out.begin() + static_cast<std::ptrdiff_t>(start + kept + 1),
              out.begin() + static_cast<std::ptrdiff_t>(start + block_size), held);
  }
  return out;
}

LemmaResult lemma_experiment(const LemmaConfig& config) {
  if (config.trials < 1) throw InvalidArgument("lemma experiment needs at least one trial");
  if (config.block_size < 2) throw InvalidArgument("block size must be at least 2");

  SimilarBlockSpec spec;
  spec.kind = config.kind;
  if (config.kind == SimilarKind::kFirst) {
    spec.sigma_w_prime = config.similarity;
  } else {
    spec.flat_fraction = config.similarity;
  }

  LemmaResult result;
  result.trials.reserve(config.trials);
  double sum_residual = 0.0;
  double sum_delta = 0.0;
  for (std::size_t t = 0; t < config.trials; ++t) {
    const std::uint64_t trial_seed = mix_seed(config.seed, t);
    const auto base = gen_trend({0.0, config.m, config.sigma_w, config.block_size, trial_seed});
    const auto similar = gen_similar(base, spec, config.block_size, mix_seed(trial_seed, 1));
    LemmaTrial trial;
    trial.d_residual = sorted_body_distance(Mode::kResidual, base, similar);
    trial.d_delta = sorted_body_distance(Mode::kDelta, base, similar);
    sum_residual += trial.d_residual;
    sum_delta += trial.d_delta;
    result.trials.push_back(trial);
  }
  const auto n = static_cast<double>(config.trials);
  result.mean_d_residual = sum_residual / n;
  result.mean_d_delta = sum_delta / n;
  return result;
}

void write_lemma_csv(std::ostream& os, const LemmaResult& result) {
  os << "trial,D_residual,D_delta\n" << std::setprecision(17);
  for (std::size_t t = 0; t < result.trials.size(); ++t) {
    os << t << ',' << result.trials[t].d_residual << ',' << result.trials[t].d_delta << '\n';
  }
}

}  // namespace lemcodec
