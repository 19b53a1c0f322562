#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <cstring>
#include <vector>

#include "../support/fixtures.hpp"
#include "lemcodec/codec.hpp"
#include "lemcodec/error.hpp"
#include "lemcodec/gate.hpp"
#include "lemcodec/quality.hpp"
#include "lemcodec/stream_format.hpp"
#include "lemcodec/transform.hpp"

namespace lemcodec {
namespace {

using Bytes = std::vector<std::uint8_t>;

CodecParams standard(std::uint32_t b, int d) {
  CodecParams p;
  p.block_size = b;
  p.dict_count = d;
  return p;
}

std::size_t header_size(const Bytes& stream) {
  ByteReader in(stream);
  return read_header(in).encoded_size();
}

Bytes body_of(const Bytes& stream) {
  return Bytes(stream.begin() + static_cast<std::ptrdiff_t>(header_size(stream)), stream.end());
}

double f64_at(const Bytes& bytes, std::size_t at) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(bytes[at + i]) << (8 * i);
  return std::bit_cast<double>(v);
}

std::vector<double> sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(Encode, TenIdenticalBlocks) {
  Rng rng(1);
  const auto block = fixture::noise_block(rng, 16, 0.0);
  std::vector<double> series;
  for (int i = 0; i < 10; ++i) fixture::append(series, block);

  const auto result = encode_with_stats(series, standard(16, 2));
  const auto body = body_of(result.stream);
  ASSERT_EQ(body.size(), 1u + 128u + 9u);
  EXPECT_EQ(body[0], 0);
  for (std::size_t i = 0; i < 16; ++i) EXPECT_EQ(f64_at(body, 1 + 8 * i), block[i]);
  for (std::size_t i = 129; i < body.size(); ++i) EXPECT_EQ(body[i], 0);
  EXPECT_NEAR(compression_ratio(1280, body.size()), 9.2754, 1e-4);

  EXPECT_EQ(result.stats.blocks, 10u);
  EXPECT_EQ(result.stats.hits, 9u);
  EXPECT_EQ(result.stats.new_blocks, 1u);
  EXPECT_EQ(result.stats.ks_tests, 9u);
}

// Walks a standard-mode multi-dictionary body and returns one token per record:
// 'N'+slot for new blocks, 'H'+slot for hits, 'O'+slot for overwrites.
std::vector<std::string> standard_records(const Bytes& body, std::size_t b, std::size_t d) {
  std::vector<std::string> out;
  std::size_t filled = 0;
  std::size_t at = 0;
  while (at < body.size()) {
    const auto tag = body[at++];
    if (tag == 0xFF) {
      out.push_back("O" + std::to_string(body[at++]));
      at += 8 * b;
    } else if (tag == filled && filled < d) {
      out.push_back("N" + std::to_string(tag));
      ++filled;
      at += 8 * b;
    } else {
      out.push_back("H" + std::to_string(tag));
    }
  }
  return out;
}

TEST(Encode, ThreeGroupScenarioMultiDictionary) {
  const auto series = fixture::three_group_series(16, 77);
  const auto stream = encode(series, standard(16, 2));
  const std::vector<std::string> expected = {"N0", "H0", "N1", "H0", "H0", "H1", "O0", "O1", "H1", "H1"};
  EXPECT_EQ(standard_records(body_of(stream), 16, 2), expected);
  EXPECT_EQ(body_of(stream).size(), 4u * 128 + 2 + 2 * 2 + 6);  // four stored blocks, two markers with indices, six hits
}

TEST(Encode, ThreeGroupScenarioSingleDictionary) {
  const auto series = fixture::three_group_series(16, 77);
  const auto body = body_of(encode(series, standard(16, 1)));
  // Stored blocks 1,3,4,6,7,8 each followed by their hit count: 1,0,1,0,0,2.
  const std::uint8_t counts[] = {1, 0, 1, 0, 0, 2};
  ASSERT_EQ(body.size(), 6u * (128 + 1));
  for (int s = 0; s < 6; ++s) EXPECT_EQ(body[static_cast<std::size_t>(s) * 129 + 128], counts[s]);
}

std::vector<std::uint8_t> single_dict_counts(std::size_t repetitions, int c) {
  Rng rng(4);
  const auto block = fixture::noise_block(rng, 8, 0.0);
  std::vector<double> series;
  for (std::size_t i = 0; i <= repetitions; ++i) fixture::append(series, fixture::permuted(rng, block));
  auto p = standard(8, 1);
  p.max_count = c;
  const auto body = body_of(encode(series, p));
  return Bytes(body.begin() + 64, body.end());
}

TEST(Encode, HitCountContinuation) {
  EXPECT_EQ(single_dict_counts(7, 3), (Bytes{3, 3, 1}));
  EXPECT_EQ(single_dict_counts(6, 3), (Bytes{3, 3, 0}));
  EXPECT_EQ(single_dict_counts(0, 3), (Bytes{0}));
  EXPECT_EQ(single_dict_counts(2, 3), (Bytes{2}));
  EXPECT_EQ(single_dict_counts(600, 255), (Bytes{255, 255, 90}));
}

TEST(Decode, SingleDictionaryRoundTripPreservesMultisets) {
  for (int c : {1, 2, 3, 255}) {
    Rng rng(static_cast<std::uint64_t>(c));
    const auto block = fixture::noise_block(rng, 8, 0.0);
    std::vector<double> series;
    for (int i = 0; i < 20; ++i) fixture::append(series, fixture::permuted(rng, block));
    auto p = standard(8, 1);
    p.max_count = c;
    const auto out = decode(encode(series, p));
    ASSERT_EQ(out.size(), series.size());
    for (std::size_t j = 0; j < 20; ++j) {
      std::vector<double> got(out.begin() + 8 * j, out.begin() + 8 * (j + 1));
      EXPECT_EQ(sorted(got), sorted(block));
    }
  }
}

TEST(Decode, UniqueBlocksAreBitExact) {
  // Disjoint supports: no block is exchangeable with another.
  Rng rng(2);
  std::vector<double> series;
  for (int j = 0; j < 40; ++j) fixture::append(series, fixture::noise_block(rng, 32, 1000.0 * j, 0.1));
  series.push_back(0.125);  // tail
  for (int d : {1, 3, 255}) {
    const auto result = encode_with_stats(series, standard(32, d));
    EXPECT_EQ(result.stats.hits, 0u);
    EXPECT_EQ(decode(result.stream), series) << "D=" << d;
  }
}

TEST(Decode, StandardHitsArePermutations) {
  const auto series = fixture::three_group_series(16, 5);
  const auto stream = encode(series, standard(16, 255));
  const auto out = decode(stream, 0);
  ASSERT_EQ(out.size(), series.size());
  bool any_reordered = false;
  for (std::size_t j = 0; j < 10; ++j) {
    std::vector<double> a(series.begin() + 16 * j, series.begin() + 16 * (j + 1));
    std::vector<double> b(out.begin() + 16 * j, out.begin() + 16 * (j + 1));
    EXPECT_EQ(sorted(a), sorted(b)) << "block " << j;
    any_reordered = any_reordered || a != b;
  }
  EXPECT_TRUE(any_reordered);
}

TEST(Decode, SeedDeterminism) {
  const auto series = fixture::three_group_series(16, 6);
  const auto stream = encode(series, standard(16, 4));
  EXPECT_EQ(stream, encode(series, standard(16, 4)));
  EXPECT_EQ(decode(stream, 42), decode(stream, 42));
  const auto a = decode(stream, 1);
  const auto b = decode(stream, 2);
  EXPECT_NE(a, b);
  for (std::size_t j = 0; j < 10; ++j) {
    std::vector<double> x(a.begin() + 16 * j, a.begin() + 16 * (j + 1));
    std::vector<double> y(b.begin() + 16 * j, b.begin() + 16 * (j + 1));
    EXPECT_EQ(sorted(x), sorted(y));
  }
}

TEST(Encode, ResidualIncreasingBlocksLayout) {
  std::vector<double> series;
  for (int i = 0; i < 640; ++i) series.push_back(12.5 + 0.75 * i);
  CodecParams p;
  p.mode = Mode::kResidual;
  p.block_size = 64;
  p.dict_count = 255;

  const auto stream = encode(series, p);
  const auto body = body_of(stream);
  ASSERT_EQ(body.size(), 1u + 512u + 9u * 9u);
  EXPECT_EQ(body[0], 0);
  EXPECT_EQ(f64_at(body, 1), series[0]);
  for (std::size_t j = 1; j < 10; ++j) {
    const std::size_t at = 513 + 9 * (j - 1);
    EXPECT_EQ(body[at], 0);
    EXPECT_EQ(f64_at(body, at + 1), series[64 * j]);
  }
  const auto out = decode(stream);
  for (std::size_t j = 0; j < 10; ++j) EXPECT_EQ(out[64 * j], series[64 * j]);
  EXPECT_EQ(out, series);  // dyadic ramp: residual arithmetic is exact

  // Single dictionary: payload, one count of 9, then nine bases.
  p.dict_count = 1;
  const auto single = body_of(encode(series, p));
  ASSERT_EQ(single.size(), 512u + 1u + 72u);
  EXPECT_EQ(single[512], 9);
  for (std::size_t j = 1; j < 10; ++j) EXPECT_EQ(f64_at(single, 513 + 8 * (j - 1)), series[64 * j]);
  EXPECT_EQ(decode(encode(series, p)), series);
}

TEST(Encode, DeltaRangeWrapsOnDecode) {
  // Phase angle ramp crossing 360 several times.
  std::vector<double> series;
  for (int i = 0; i < 64 * 12; ++i) series.push_back(std::fmod(3.0 * i, 360.0));
  CodecParams p;
  p.mode = Mode::kDelta;
  p.block_size = 64;
  p.range = Range{0.0, 360.0};
  const auto result = encode_with_stats(series, p);
  EXPECT_EQ(result.stats.new_blocks, 1u);
  EXPECT_EQ(result.stats.hits, 11u);
  const auto out = decode(result.stream);
  EXPECT_EQ(out, series);
  for (double v : out) {
    EXPECT_GE(v, 0.0);
    EXPECT_LT(v, 360.0);
  }
}

TEST(Encode, TailIsStoredVerbatim) {
  std::vector<double> series = {1, 2, 3, 4, 5, 6, 7};
  const auto stream = encode(series, standard(4, 2));
  EXPECT_EQ(stream.size(), 21u + 1 + 32 + 3 * 8);
  EXPECT_EQ(decode(stream), series);

  const std::vector<double> short_series = {9.5, -1.0};
  const auto only_tail = encode(short_series, standard(4, 2));
  EXPECT_EQ(only_tail.size(), 21u + 16u);
  EXPECT_EQ(decode(only_tail), short_series);
  EXPECT_TRUE(decode(encode(std::vector<double>{}, standard(4, 1))).empty());
}

TEST(Encode, ChunkedPushMatchesOneShot) {
  Rng rng(12);
  std::vector<double> series;
  for (int i = 0; i < 1000; ++i) series.push_back(std::round(rng.normal() * 3));
  const auto expected = encode(series, standard(16, 8));
  Encoder enc(standard(16, 8));
  std::size_t at = 0;
  while (at < series.size()) {
    const std::size_t n = std::min<std::size_t>(1 + rng.below(40), series.size() - at);
    enc.push(std::span<const double>(series).subspan(at, n));
    at += n;
  }
  EXPECT_EQ(enc.finish(), expected);
}

TEST(Encode, RejectsBadInput) {
  std::vector<double> series(40, 1.0);
  series[17] = std::numeric_limits<double>::infinity();
  try {
    encode(series, standard(16, 2));
    FAIL();
  } catch (const NonFiniteSample& e) {
    EXPECT_EQ(e.position(), 17u);
  }
  EXPECT_THROW(encode(std::vector<double>(4, 0.0), standard(1, 2)), InvalidArgument);

  Encoder enc(standard(4, 2));
  enc.push(std::vector<double>{1, 2});
  EXPECT_THROW(enc.push_block(std::vector<double>{1, 2, 3, 4}), InvalidArgument);
  enc.finish();
  EXPECT_THROW(enc.finish(), InvalidArgument);
}

// Random streams mixing a few regimes, so that hits, fills and overwrites all occur.
std::vector<double> regime_series(Rng& rng, std::size_t blocks, std::size_t b, int regimes) {
  std::vector<std::vector<double>> protos;
  for (int r = 0; r < regimes; ++r) protos.push_back(fixture::noise_block(rng, b, 10.0 * r));
  std::vector<double> series;
  for (std::size_t j = 0; j < blocks; ++j) {
    const auto& proto = protos[rng.below(static_cast<std::uint64_t>(regimes))];
    auto blk = fixture::permuted(rng, proto);
    if (rng.below(4) == 0) blk[rng.below(b)] += rng.normal() * 5;  // perturb some blocks
    fixture::append(series, blk);
  }
  return series;
}

TEST(Codec, DecoderBufferMirrorsEncoder) {
  Rng rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    CodecParams p;
    p.mode = static_cast<Mode>(rng.below(3));
    p.block_size = static_cast<std::uint32_t>(4 + rng.below(20));
    p.dict_count = 1 + static_cast<int>(rng.below(5));
    p.max_count = 1 + static_cast<int>(rng.below(4));
    p.alpha = 0.01 + 0.3 * rng.uniform();
    if (rng.below(2) == 0) p.rtol = rng.uniform() * 0.5;
    const auto series = regime_series(rng, 50, p.block_size, 1 + static_cast<int>(rng.below(6)));

    Encoder enc(p);
    std::vector<DictionaryBuffer> snapshots;
    std::vector<BlockDecision> decisions;
    for (std::size_t j = 0; j < 50; ++j) {
      decisions.push_back(enc.push_block(std::span<const double>(series).subspan(j * p.block_size, p.block_size)));
      snapshots.push_back(enc.dictionary());
    }
    const auto stream = enc.finish();

    Decoder dec(stream, 3);
    std::vector<double> out;
    for (std::size_t j = 0; j < 50; ++j) {
      const auto got = dec.next_block(out);
      ASSERT_TRUE(got.has_value());
      ASSERT_EQ(*got, decisions[j]) << "trial " << trial << " block " << j;
      ASSERT_TRUE(dec.dictionary() == snapshots[j]) << "trial " << trial << " block " << j;
    }
    EXPECT_FALSE(dec.next_block(out).has_value());
    dec.finish(out);
    EXPECT_EQ(out.size(), series.size());
  }
}

TEST(Codec, GateSoundOnEveryHit) {
  Rng rng(123);
  for (int trial = 0; trial < 40; ++trial) {
    CodecParams p;
    p.mode = static_cast<Mode>(rng.below(3));
    p.block_size = 16;
    p.dict_count = 1 + static_cast<int>(rng.below(8));
    p.rtol = 0.05 + 0.3 * rng.uniform();
    const auto series = regime_series(rng, 80, 16, 3);
    Encoder enc(p);
    for (std::size_t j = 0; j < 80; ++j) {
      const auto block = std::span<const double>(series).subspan(j * 16, 16);
      const DictionaryBuffer before = enc.dictionary();
      const auto decision = enc.push_block(block);
      if (decision.kind != RecordKind::kHit) continue;
      std::vector<double> cmp;
      if (is_transformed(p.mode)) {
        cmp = forward(p.mode, block).body;
      } else {
        cmp.assign(block.begin(), block.end());
      }
      const auto [lo, hi] = std::minmax_element(cmp.begin(), cmp.end());
      ASSERT_TRUE(minmax_pass(*lo, *hi, before[decision.slot], *p.rtol));
    }
  }
}

TEST(Codec, GateSkipsKsTests) {
  Rng rng(8);
  const auto series = regime_series(rng, 400, 16, 6);
  auto p = standard(16, 255);
  const auto plain = encode_with_stats(series, p);
  p.rtol = 0.1;
  const auto gated = encode_with_stats(series, p);
  EXPECT_EQ(plain.stats.gate_rejections, 0u);
  EXPECT_GT(gated.stats.gate_rejections, 0u);
  EXPECT_LT(gated.stats.ks_tests, plain.stats.ks_tests);

  ByteReader in(gated.stream);
  EXPECT_TRUE(read_header(in).gate_enabled);
}

TEST(Codec, RatioNeverExceedsBound) {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    CodecParams p;
    p.mode = static_cast<Mode>(rng.below(3));
    p.block_size = static_cast<std::uint32_t>(2 + rng.below(30));
    p.dict_count = rng.below(2) == 0 ? 1 : 2 + static_cast<int>(rng.below(254));
    p.max_count = 1 + static_cast<int>(rng.below(255));
    // Highly repetitive input drives the ratio toward the bound.
    Rng data(rng.next_u64());
    const auto proto = fixture::noise_block(data, p.block_size, 0.0);
    std::vector<double> series;
    const std::size_t blocks = 1 + rng.below(3000);
    for (std::size_t j = 0; j < blocks; ++j) fixture::append(series, proto);
    series.resize(series.size() + rng.below(p.block_size), 0.5);

    const auto stream = encode(series, p);
    const std::size_t tail = series.size() % p.block_size;
    const std::uint64_t original = 8 * (series.size() - tail);
    const std::uint64_t encoded = stream.size() - header_size(stream) - 8 * tail;
    const double bound = max_ratio(p.mode, p.block_size, p.dict_count, p.max_count);
    ASSERT_LE(compression_ratio(original, encoded), bound) << "trial " << trial;
  }
}

TEST(Decode, HeaderErrors) {
  const auto good = encode(std::vector<double>(64, 1.0), standard(16, 2));
  auto expect_kind = [](Bytes bytes, StreamErrorKind kind) {
    try {
      decode(bytes);
      ADD_FAILURE() << "expected " << to_string(kind);
    } catch (const StreamError& e) {
      EXPECT_EQ(e.kind(), kind) << e.what();
    }
  };

  auto bad = good;
  bad[0] = 'X';
  expect_kind(bad, StreamErrorKind::kBadMagic);
  bad = good;
  bad[4] = 2;
  expect_kind(bad, StreamErrorKind::kBadVersion);
  bad = good;
  bad[5] = 7;
  expect_kind(bad, StreamErrorKind::kBadHeader);
  bad = good;
  bad[10] = 0;  // dict_count
  expect_kind(bad, StreamErrorKind::kBadHeader);
  bad = good;
  bad[12] = 0x01;  // range flag in standard mode (also truncates)
  expect_kind(bad, StreamErrorKind::kBadHeader);
  bad = good;
  bad.push_back(0);
  expect_kind(bad, StreamErrorKind::kTrailingBytes);
  bad = good;
  bad.pop_back();
  expect_kind(bad, StreamErrorKind::kTruncated);
  bad = good;
  bad[21 + 129] = 2;  // index beyond next_fill
  expect_kind(bad, StreamErrorKind::kCorruptIndex);
  expect_kind(Bytes{'I', 'L'}, StreamErrorKind::kTruncated);
}

TEST(Decode, SingleDictionaryCountErrors) {
  auto p = standard(4, 1);
  p.max_count = 3;
  const auto good = encode(std::vector<double>(4 * 5, 2.0), p);  // payload, counts 3, 1
  ASSERT_EQ(good.size(), 21u + 32u + 2u);
  auto bad = good;
  bad[21 + 32] = 4;  // above max_count
  EXPECT_THROW(decode(bad), StreamError);
  bad = good;
  bad[21 + 33] = 2;  // more hits than blocks
  EXPECT_THROW(decode(bad), StreamError);
}

TEST(Decode, EveryTruncationIsAStructuredError) {
  Rng rng(17);
  for (Mode mode : {Mode::kStandard, Mode::kResidual}) {
    for (int d : {1, 3}) {
      CodecParams p;
      p.mode = mode;
      p.block_size = 8;
      p.dict_count = d;
      const auto stream = encode(regime_series(rng, 30, 8, 4), p);
      for (std::size_t n = 0; n < stream.size(); ++n) {
        EXPECT_THROW(decode(Bytes(stream.begin(), stream.begin() + static_cast<std::ptrdiff_t>(n))), StreamError)
            << "prefix " << n;
      }
    }
  }
}

TEST(Decode, FuzzedStreamsNeverEscapeStructuredErrors) {
  Rng rng(2024);
  std::vector<Bytes> seeds;
  for (int d : {1, 2, 255}) {
    for (Mode mode : {Mode::kStandard, Mode::kResidual, Mode::kDelta}) {
      CodecParams p;
      p.mode = mode;
      p.block_size = 8;
      p.dict_count = d;
      p.max_count = 2;
      if (mode != Mode::kStandard) p.range = Range{-50, 50};
      seeds.push_back(encode(regime_series(rng, 40, 8, 3), p));
    }
  }
  int decoded = 0;
  for (int iter = 0; iter < 20000; ++iter) {
    auto bytes = seeds[rng.below(seeds.size())];
    const int edits = 1 + static_cast<int>(rng.below(4));
    for (int e = 0; e < edits; ++e) {
      switch (rng.below(3)) {
        case 0: bytes[rng.below(bytes.size())] = static_cast<std::uint8_t>(rng.below(256)); break;
        case 1: bytes.resize(rng.below(bytes.size() + 1)); break;
        default: bytes.insert(bytes.begin() + static_cast<std::ptrdiff_t>(rng.below(bytes.size() + 1)),
                              static_cast<std::uint8_t>(rng.below(256)));
      }
      if (bytes.empty()) break;
    }
    try {
      const auto out = decode(bytes);
      ByteReader in(bytes);
      ASSERT_EQ(out.size(), read_header(in).total_samples);
      ++decoded;
    } catch (const StreamError&) {
    }
  }
  EXPECT_GT(decoded, 0);
}

}  // namespace
}  // namespace lemcodec
