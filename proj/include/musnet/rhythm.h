/**
 * @file rhythm.h
 * @brief Rhythmic sequences as exact rational durations (whole note = 1).
 */

#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "musnet/metric.h"

namespace musnet {

using Rational = boost::rational<std::int64_t>;

/// Parses "3/8", "2" or "-1/4".
Rational parseRational(std::string_view text);
/// "1/4" for fractions, "2" for integers.
std::string formatRational(const Rational& value);

class RhythmSeq {
 public:
  /// Throws EmptySequence when empty and NonPositiveDuration on any value <= 0.
  explicit RhythmSeq(std::vector<Rational> durations);

  /// Bracketed form "[1/4,1/8,1/8]"; entries may also be duration symbols.
  static RhythmSeq parse(std::string_view text);

  const std::vector<Rational>& durations() const noexcept { return durations_; }
  std::size_t size() const noexcept { return durations_.size(); }
  const Rational& operator[](std::size_t i) const { return durations_[i]; }
  Rational total() const;
  std::string toString() const;

  friend bool operator==(const RhythmSeq&, const RhythmSeq&) = default;
  friend bool operator<(const RhythmSeq& a, const RhythmSeq& b) {
    return a.durations_ < b.durations_;
  }

 private:
  std::vector<Rational> durations_;
};

struct DurationSymbol {
  std::string_view symbol;
  Rational value;
};

/// The 17 named durations: w h q e s t, dotted (d suffix), triplet (t suffix)
/// and quintuplet (q suffix) variants.
std::span<const DurationSymbol> durationTable();

/// Symbol or fraction text to a duration; throws UnknownDuration.
Rational durationOf(std::string_view symbol);
std::optional<std::string_view> symbolOf(const Rational& value);

RhythmSeq parseDurations(std::span<const std::string> symbols);
/// Symbols where the table has one, fraction text otherwise.
std::vector<std::string> renderDurations(const RhythmSeq& s);

RhythmSeq augment(const RhythmSeq& s, const Rational& t);
/// Throws NonPositiveDuration if any duration would drop to zero or below.
RhythmSeq diminish(const RhythmSeq& s, const Rational& t);
RhythmSeq retrograde(const RhythmSeq& s);
bool isNonRetrogradable(const RhythmSeq& s);
/// Durations divided by their rational gcd.
RhythmSeq rhythmPrimeForm(const RhythmSeq& s);
/// Lexicographically least rotation.
RhythmSeq rhythmNormalOrder(const RhythmSeq& s);

struct DurationVector {
  std::vector<int> counts;

  std::string toString() const;
  friend bool operator==(const DurationVector&, const DurationVector&) = default;
};

/// 1/8, 2/8, ..., 9/8.
std::span<const Rational> defaultReferenceDurations();

/// Inter-onset interval content: onsets are the attack points of the events
/// (the final release is not an onset); every onset pair whose distance
/// equals a reference is counted against it.
DurationVector durationVector(const RhythmSeq& s,
                              std::span<const Rational> references = defaultReferenceDurations());

/// Minimal distance over cyclic rotations of b. Equal lengths required.
double rhythmDistance(const RhythmSeq& a, const RhythmSeq& b, MetricId metric = MetricId::Euclidean);

}  // namespace musnet
