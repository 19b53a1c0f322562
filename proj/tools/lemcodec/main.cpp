// lemcodec command-line tool: encode, decode, analyze, spectrum, bench.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "lemcodec/codec.hpp"
#include "lemcodec/encoder.hpp"
#include "lemcodec/error.hpp"
#include "lemcodec/io.hpp"
#include "lemcodec/quality.hpp"
#include "lemcodec/random.hpp"
#include "lemcodec/spectrum.hpp"
#include "lemcodec/stream_format.hpp"
#include "lemcodec/synth.hpp"

namespace fs = std::filesystem;
using namespace lemcodec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitBenchFailed = 3;

std::vector<double> load_samples(const fs::path& path, bool csv) {
  return csv ? io::read_csv_column(path) : io::read_f64(path);
}

// Writes to `path`, or stdout when it is empty or "-".
template <class F>
void with_output(const std::string& path, F&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  write(out);
  if (!out) throw Error("failed writing " + path);
}

struct EncodeOptions {
  std::string input;
  std::string output;
  std::string mode = "standard";
  std::uint32_t block_size = 32;
  int dict_count = 255;
  double alpha = 0.01;
  int max_count = 255;
  std::optional<double> rtol;
  std::optional<double> range_min;
  std::optional<double> range_max;
  bool csv = false;
};

int run_encode(const EncodeOptions& o) {
  CodecParams p;
  const auto mode = parse_mode(o.mode);
  if (!mode) throw InvalidArgument("unknown mode " + o.mode);
  p.mode = *mode;
  p.block_size = o.block_size;
  p.dict_count = o.dict_count;
  p.alpha = o.alpha;
  p.max_count = o.max_count;
  p.rtol = o.rtol;
  if (o.range_min.has_value() != o.range_max.has_value()) {
    throw InvalidArgument("--range-min and --range-max must be given together");
  }
  if (o.range_min) p.range = Range{*o.range_min, *o.range_max};
  p.validate();

  const auto samples = load_samples(o.input, o.csv);
  const auto t0 = std::chrono::steady_clock::now();
  const auto result = encode_with_stats(samples, p);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  io::write_bytes(o.output, result.stream);

  const auto& s = result.stats;
  std::printf("samples          %zu\n", samples.size());
  std::printf("stream bytes     %zu\n", result.stream.size());
  std::printf("ratio            %.4f\n", compression_ratio(8 * samples.size(), result.stream.size()));
  std::printf("blocks           %llu\n", static_cast<unsigned long long>(s.blocks));
  std::printf("hits             %llu\n", static_cast<unsigned long long>(s.hits));
  std::printf("new blocks       %llu\n", static_cast<unsigned long long>(s.new_blocks));
  std::printf("overwrites       %llu\n", static_cast<unsigned long long>(s.overwrites));
  std::printf("gate rejections  %llu\n", static_cast<unsigned long long>(s.gate_rejections));
  std::printf("ks tests         %llu\n", static_cast<unsigned long long>(s.ks_tests));
  std::printf("wall time        %.3f s\n", secs);
  return kExitOk;
}

int run_decode(const std::string& input, const std::string& output, std::uint64_t seed, bool csv) {
  const auto stream = io::read_bytes(input);
  const auto samples = decode(stream, seed);
  if (csv) {
    io::write_csv_column(output, samples);
  } else {
    io::write_f64(output, samples);
  }
  std::printf("decoded %zu samples\n", samples.size());
  return kExitOk;
}

int run_analyze(const std::vector<std::string>& inputs, bool csv, const std::string& output) {
  std::vector<std::pair<std::string, QualityReport>> columns;
  for (const auto& path : inputs) columns.emplace_back(fs::path(path).filename().string(), measure(load_samples(path, csv)));
  if (columns.size() == 2 && columns[0].first == columns[1].first) {
    columns[0].first = "original";
    columns[1].first = "reconstructed";
  }
  with_output(output, [&](std::ostream& os) { write_report_csv(os, columns); });
  return kExitOk;
}

int run_spectrum(const std::string& input, std::optional<std::size_t> length, bool csv, const std::string& output) {
  const auto samples = load_samples(input, csv);
  std::size_t n = 1;
  if (length) {
    n = *length;
  } else {
    if (samples.size() < 2) throw InvalidArgument("spectrum needs at least two samples");
    while (n * 2 <= samples.size()) n *= 2;
  }
  const auto s = spectrum(samples, n);
  with_output(output, [&](std::ostream& os) { write_spectrum_csv(os, s); });
  return kExitOk;
}

struct BenchLine {
  std::string name;
  bool pass;
  std::string detail;
};

double stream_ratio(const std::vector<std::uint8_t>& stream, std::uint64_t samples) {
  ByteReader in(stream);
  const auto header = read_header(in);
  return compression_ratio(8 * samples, stream.size() - header.encoded_size());
}

std::string fixed(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

int run_bench(std::uint64_t seed, std::size_t trials, const std::string& csv_dir) {
  std::vector<BenchLine> lines;
  Rng rng(seed);
  std::vector<double> block(16);
  for (auto& v : block) v = rng.normal();

  {
    CodecParams p;
    p.block_size = 16;
    Encoder enc(p);
    const std::uint64_t reps = 62500;
    for (std::uint64_t i = 0; i < reps; ++i) enc.push_block(block);
    const double r = stream_ratio(enc.finish(), reps * 16);
    lines.push_back({"standard multi-dictionary bound (B=16, D=255)", r >= 0.9 * 128 && r <= 128,
                     "ratio " + fixed(r) + ", bound 128"});
  }
  {
    CodecParams p;
    p.block_size = 16;
    p.dict_count = 1;
    Encoder enc(p);
    const std::uint64_t reps = 1000000;
    for (std::uint64_t i = 0; i < reps; ++i) enc.push_block(block);
    const double bound = max_ratio(Mode::kStandard, 16, 1, 255);
    const double r = stream_ratio(enc.finish(), reps * 16);
    lines.push_back({"standard single-dictionary bound (B=16, c=255)", r >= 0.9 * bound && r <= bound,
                     "ratio " + fixed(r, 1) + ", bound " + fixed(bound, 1)});
  }
  {
    CodecParams p;
    p.mode = Mode::kResidual;
    p.block_size = 64;
    const std::uint64_t n = 64 * 100000;
    const auto ramp = gen_trend({0.0, 1.0, 0.0, n, seed});
    const double bound = max_ratio(Mode::kResidual, 64, 255, 255);
    const double r = stream_ratio(encode(ramp, p), n);
    lines.push_back({"residual multi-dictionary bound (B=64)", r >= 0.9 * bound && r <= bound,
                     "ratio " + fixed(r) + ", bound " + fixed(bound)});
  }
  const LemmaConfig configs[] = {
      {SimilarKind::kFirst, 1.0, 0.1, 0.1, 64, trials, seed},
      {SimilarKind::kSecond, 1.0, 0.05, 0.5, 64, trials, seed},
  };
  for (const auto& cfg : configs) {
    const bool first = cfg.kind == SimilarKind::kFirst;
    const auto r = lemma_experiment(cfg);
    const bool pass = first ? r.mean_d_residual < r.mean_d_delta : r.mean_d_delta < r.mean_d_residual;
    lines.push_back({first ? "first-kind similarity: residual beats delta" : "second-kind similarity: delta beats residual",
                     pass, "mean D residual " + fixed(r.mean_d_residual, 8) + ", delta " + fixed(r.mean_d_delta, 8)});
    if (!csv_dir.empty()) {
      fs::create_directories(csv_dir);
      with_output((fs::path(csv_dir) / (first ? "lemma_first_kind.csv" : "lemma_second_kind.csv")).string(),
                  [&](std::ostream& os) { write_lemma_csv(os, r); });
    }
  }

  bool all = true;
  for (const auto& l : lines) {
    std::printf("%s  %-48s %s\n", l.pass ? "PASS" : "FAIL", l.name.c_str(), l.detail.c_str());
    all = all && l.pass;
  }
  return all ? kExitOk : kExitBenchFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lemcodec: lossy time-series codec based on KS exchangeability"};
  app.require_subcommand(1);

  EncodeOptions enc;
  auto* encode_cmd = app.add_subcommand("encode", "Encode a binary64 (or CSV) series into a stream");
  encode_cmd->add_option("input", enc.input, "Input samples")->required();
  encode_cmd->add_option("output", enc.output, "Output stream")->required();
  encode_cmd->add_option("--mode", enc.mode, "standard, residual or delta")
      ->check(CLI::IsMember({"standard", "residual", "delta"}))
      ->capture_default_str();
  encode_cmd->add_option("-B,--block-size", enc.block_size, "Samples per block")->capture_default_str();
  encode_cmd->add_option("-D,--dict-count", enc.dict_count, "Dictionary entries (1..255)")->capture_default_str();
  encode_cmd->add_option("--alpha", enc.alpha, "KS p-value threshold")->capture_default_str();
  encode_cmd->add_option("-c,--max-count", enc.max_count, "Single-dictionary hit-count cap")->capture_default_str();
  encode_cmd->add_option("--rtol", enc.rtol, "Min/max gate relative tolerance (gate off when absent)");
  encode_cmd->add_option("--range-min", enc.range_min, "Lower bound of a wrapping value range");
  encode_cmd->add_option("--range-max", enc.range_max, "Upper bound of a wrapping value range");
  encode_cmd->add_flag("--csv", enc.csv, "Read a single-column CSV instead of binary64");

  std::string dec_in, dec_out;
  std::uint64_t seed = 0;
  bool dec_csv = false;
  auto* decode_cmd = app.add_subcommand("decode", "Decode a stream back to binary64 (or CSV)");
  decode_cmd->add_option("input", dec_in, "Input stream")->required();
  decode_cmd->add_option("output", dec_out, "Output samples")->required();
  decode_cmd->add_option("--seed", seed, "Permutation seed")->envname("LEMCODEC_SEED")->capture_default_str();
  decode_cmd->add_flag("--csv", dec_csv, "Write a single-column CSV instead of binary64");

  std::vector<std::string> an_inputs;
  std::string an_out;
  bool an_csv = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Quality measures for one series, or two side by side");
  analyze_cmd->add_option("inputs", an_inputs, "One or two sample files")->required()->expected(1, 2);
  analyze_cmd->add_option("-o,--output", an_out, "CSV destination (default stdout)");
  analyze_cmd->add_flag("--csv", an_csv, "Inputs are single-column CSV");

  std::string sp_in, sp_out;
  std::optional<std::size_t> sp_len;
  bool sp_csv = false;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Amplitude spectrum of a power-of-two prefix");
  spectrum_cmd->add_option("input", sp_in, "Input samples")->required();
  spectrum_cmd->add_option("-N,--length", sp_len, "Prefix length (default: largest power of two)");
  spectrum_cmd->add_option("-o,--output", sp_out, "CSV destination (default stdout)");
  spectrum_cmd->add_flag("--csv", sp_csv, "Input is single-column CSV");

  std::size_t trials = 1000;
  std::string bench_csv;
  auto* bench_cmd = app.add_subcommand("bench", "Bound-saturation and transform-lemma experiments");
  bench_cmd->add_option("--seed", seed, "Experiment seed")->envname("LEMCODEC_SEED")->capture_default_str();
  bench_cmd->add_option("--trials", trials, "Lemma trials")->check(CLI::PositiveNumber)->capture_default_str();
  bench_cmd->add_option("--csv-dir", bench_csv, "Write per-trial lemma CSVs here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*encode_cmd) return run_encode(enc);
    if (*decode_cmd) return run_decode(dec_in, dec_out, seed, dec_csv);
    if (*analyze_cmd) return run_analyze(an_inputs, an_csv, an_out);
    if (*spectrum_cmd) return run_spectrum(sp_in, sp_len, sp_csv, sp_out);
    if (*bench_cmd) return run_bench(seed, trials, bench_csv);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "lemcodec: %s\n", e.what());
    return kExitData;
  }
  return kExitUsage;
}
