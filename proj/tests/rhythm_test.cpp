/**
 * @file rhythm_test.cpp
 * @brief Rational durations and rhythm transforms.
 */

#include <gtest/gtest.h>

#include <random>

#include "musnet/error.h"
#include "musnet/rhythm.h"
#include "oracles.h"

using namespace musnet;

namespace {

using R = Rational;

RhythmSeq seq(std::initializer_list<R> v) { return RhythmSeq(std::vector<R>(v)); }

RhythmSeq randomSeq(std::mt19937_64& rng, std::size_t maxLen) {
  const auto table = durationTable();
  std::vector<R> v(1 + rng() % maxLen);
  for (auto& d : v) d = table[rng() % table.size()].value;
  return RhythmSeq(v);
}

}  // namespace

TEST(DurationTable, SeventeenSymbols) {
  const std::vector<std::pair<std::string, R>> expected{
      {"w", R(1)},      {"h", R(1, 2)},   {"q", R(1, 4)},   {"e", R(1, 8)},    {"s", R(1, 16)},  {"t", R(1, 32)},
      {"wd", R(3, 2)},  {"hd", R(3, 4)},  {"qd", R(3, 8)},  {"ed", R(3, 16)},  {"sd", R(3, 32)}, {"qt", R(1, 6)},
      {"et", R(1, 12)}, {"st", R(1, 24)}, {"qq", R(1, 5)},  {"eq", R(1, 10)},  {"sq", R(1, 20)}};
  ASSERT_EQ(durationTable().size(), expected.size());
  for (const auto& [sym, value] : expected) EXPECT_EQ(durationOf(sym), value) << sym;
}

TEST(ParseDurations, Examples) {
  const std::vector<std::string> qee{"q", "e", "e"};
  EXPECT_EQ(parseDurations(qee), seq({R(1, 4), R(1, 8), R(1, 8)}));
  EXPECT_EQ(parseDurations(std::vector<std::string>{"w"}), seq({R(1)}));
  EXPECT_EQ(parseDurations(std::vector<std::string>{"qt", "qt", "qt"}), seq({R(1, 6), R(1, 6), R(1, 6)}));
  try {
    parseDurations(std::vector<std::string>{"x"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownDuration);
  }
}

TEST(ParseDurations, RenderRoundTrip) {
  std::vector<std::string> all;
  for (const auto& d : durationTable()) all.emplace_back(d.symbol);
  EXPECT_EQ(renderDurations(parseDurations(all)), all);
}

TEST(RhythmSeq, ParseAndValidate) {
  EXPECT_EQ(RhythmSeq::parse("[1/4,1/8,1/8]"), seq({R(1, 4), R(1, 8), R(1, 8)}));
  EXPECT_EQ(RhythmSeq::parse("[q, e, 1/8]"), seq({R(1, 4), R(1, 8), R(1, 8)}));
  EXPECT_EQ(seq({R(1, 4), R(1, 8)}).toString(), "[1/4,1/8]");
  EXPECT_THROW(RhythmSeq(std::vector<R>{}), Error);
  try {
    seq({R(1, 4), R(0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonPositiveDuration);
  }
}

TEST(RhythmTransforms, Examples) {
  EXPECT_EQ(augment(seq({R(1, 8), R(1, 8)}), R(1, 8)), seq({R(1, 4), R(1, 4)}));
  EXPECT_EQ(augment(seq({R(1, 4)}), R(0)), seq({R(1, 4)}));
  EXPECT_EQ(diminish(seq({R(1, 4)}), R(1, 8)), seq({R(1, 8)}));
  try {
    diminish(seq({R(1, 8)}), R(1, 8));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonPositiveDuration);
  }
  EXPECT_EQ(retrograde(seq({R(1, 4), R(1, 8), R(1, 8)})), seq({R(1, 8), R(1, 8), R(1, 4)}));
  EXPECT_EQ(retrograde(seq({R(1, 8)})), seq({R(1, 8)}));
  EXPECT_TRUE(isNonRetrogradable(seq({R(1, 8), R(1, 4), R(1, 8)})));
  EXPECT_FALSE(isNonRetrogradable(seq({R(1, 4), R(1, 8), R(1, 8)})));
  EXPECT_TRUE(isNonRetrogradable(seq({R(1, 2)})));
}

TEST(RhythmPrimeForm, Examples) {
  EXPECT_EQ(rhythmPrimeForm(seq({R(1, 4), R(1, 8), R(1, 8)})), seq({R(2), R(1), R(1)}));
  EXPECT_EQ(rhythmPrimeForm(seq({R(1), R(1), R(1)})), seq({R(1), R(1), R(1)}));
  EXPECT_EQ(rhythmPrimeForm(seq({R(3, 8), R(1, 4)})), seq({R(3), R(2)}));
}

TEST(RhythmPrimeForm, IntegralCoprimeIdempotent) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const RhythmSeq p = rhythmPrimeForm(randomSeq(rng, 6));
    std::int64_t g = 0;
    for (const auto& d : p.durations()) {
      EXPECT_EQ(d.denominator(), 1);
      g = std::gcd(g, d.numerator());
    }
    EXPECT_EQ(g, 1);
    EXPECT_EQ(rhythmPrimeForm(p), p);
  }
}

TEST(RhythmNormalOrder, Examples) {
  EXPECT_EQ(rhythmNormalOrder(seq({R(1, 4), R(1, 8), R(1, 8)})), seq({R(1, 8), R(1, 8), R(1, 4)}));
  EXPECT_EQ(rhythmNormalOrder(seq({R(1, 8), R(1, 8), R(1, 8)})), seq({R(1, 8), R(1, 8), R(1, 8)}));
  EXPECT_EQ(rhythmNormalOrder(seq({R(1, 8), R(1, 4)})), seq({R(1, 8), R(1, 4)}));
}

TEST(DurationVector, Examples) {
  EXPECT_EQ(durationVector(seq({R(1, 8), R(1, 8)})).counts, (std::vector<int>{1, 0, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(durationVector(seq({R(1, 8)})).counts, (std::vector<int>(9, 0)));
  EXPECT_EQ(durationVector(seq({R(1, 4), R(1, 4), R(1, 4)})).counts,
            (std::vector<int>{0, 2, 0, 1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(durationVector(seq({R(1, 4), R(1, 4), R(1, 4)})).toString(), "[0,2,0,1,0,0,0,0,0]");
}

TEST(DurationVector, MatchesOracle) {
  std::mt19937_64 rng(12);
  const auto refsSpan = defaultReferenceDurations();
  const std::vector<R> refs(refsSpan.begin(), refsSpan.end());
  for (int trial = 0; trial < 200; ++trial) {
    const RhythmSeq s = randomSeq(rng, 8);
    EXPECT_EQ(durationVector(s).counts, oracle::durationVector(s.durations(), refs));
  }
}

TEST(RhythmDistance, Examples) {
  const RhythmSeq s = seq({R(1, 4), R(1, 8), R(3, 16)});
  EXPECT_DOUBLE_EQ(rhythmDistance(s, s), 0.0);
  EXPECT_DOUBLE_EQ(rhythmDistance(seq({R(1, 4), R(1, 8)}), seq({R(1, 8), R(1, 4)})), 0.0);
  EXPECT_DOUBLE_EQ(rhythmDistance(seq({R(1, 4), R(1, 8)}), seq({R(1, 4), R(1, 4)})), 0.125);
  EXPECT_THROW(rhythmDistance(seq({R(1, 4)}), seq({R(1, 4), R(1, 4)})), Error);
}

TEST(RhythmDistance, SymmetricAndRotationInvariant) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const RhythmSeq a = randomSeq(rng, 5);
    std::vector<R> bv(a.size());
    for (auto& d : bv) d = durationTable()[rng() % 17].value;
    const RhythmSeq b(bv);
    EXPECT_NEAR(rhythmDistance(a, b), rhythmDistance(b, a), 1e-12);
    EXPECT_GE(rhythmDistance(a, b), 0.0);
    std::vector<R> rot = a.durations();
    std::rotate(rot.begin(), rot.begin() + static_cast<std::ptrdiff_t>(rng() % rot.size()), rot.end());
    EXPECT_DOUBLE_EQ(rhythmDistance(a, RhythmSeq(rot)), 0.0);
  }
}
