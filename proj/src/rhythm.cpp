/**
 * @file rhythm.cpp
 * @brief Rhythmic sequence parsing, transforms and interval content.
 */

#include "musnet/rhythm.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>

#include "musnet/error.h"

namespace musnet {

namespace {

const std::array<DurationSymbol, 17> kDurationTable = {{
    {"w", Rational(1, 1)},   {"h", Rational(1, 2)},   {"q", Rational(1, 4)},
    {"e", Rational(1, 8)},   {"s", Rational(1, 16)},  {"t", Rational(1, 32)},
    {"wd", Rational(3, 2)},  {"hd", Rational(3, 4)},  {"qd", Rational(3, 8)},
    {"ed", Rational(3, 16)}, {"sd", Rational(3, 32)}, {"qt", Rational(1, 6)},
    {"et", Rational(1, 12)}, {"st", Rational(1, 24)}, {"qq", Rational(1, 5)},
    {"eq", Rational(1, 10)}, {"sq", Rational(1, 20)},
}};

const std::array<Rational, 9> kDefaultReferences = {
    Rational(1, 8), Rational(2, 8), Rational(3, 8), Rational(4, 8), Rational(5, 8),
    Rational(6, 8), Rational(7, 8), Rational(8, 8), Rational(9, 8),
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parseInt64(std::string_view text, std::int64_t& out) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size() && !text.empty();
}

Rational absRational(const Rational& r) { return r < 0 ? -r : r; }

}  // namespace

Rational parseRational(std::string_view text) {
  const std::string_view body = trim(text);
  const auto slash = body.find('/');
  std::int64_t num = 0;
  std::int64_t den = 1;
  const bool ok = slash == std::string_view::npos
                      ? parseInt64(body, num)
                      : parseInt64(trim(body.substr(0, slash)), num) &&
                            parseInt64(trim(body.substr(slash + 1)), den);
  if (!ok || den == 0) throw Error(ErrorCode::ParseError, "not a fraction: '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string formatRational(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

RhythmSeq::RhythmSeq(std::vector<Rational> durations) : durations_(std::move(durations)) {
  if (durations_.empty()) throw Error(ErrorCode::EmptySequence, "rhythm sequence has no durations");
  for (const auto& d : durations_) {
    if (d <= 0) throw Error(ErrorCode::NonPositiveDuration, "duration " + formatRational(d) + " is not positive");
  }
}

RhythmSeq RhythmSeq::parse(std::string_view text) {
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw Error(ErrorCode::ParseError, "unbalanced brackets in '" + std::string(text) + "'");
    body = trim(body.substr(1, body.size() - 2));
  }
  std::vector<Rational> out;
  while (!body.empty()) {
    const auto comma = body.find(',');
    out.push_back(durationOf(trim(body.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return RhythmSeq(std::move(out));
}

Rational RhythmSeq::total() const {
  return std::accumulate(durations_.begin(), durations_.end(), Rational(0));
}

std::string RhythmSeq::toString() const {
  std::string out = "[";
  for (std::size_t i = 0; i < durations_.size(); ++i) {
    if (i) out += ',';
    out += formatRational(durations_[i]);
  }
  out += ']';
  return out;
}

std::span<const DurationSymbol> durationTable() { return kDurationTable; }

Rational durationOf(std::string_view symbol) {
  const std::string_view key = trim(symbol);
  for (const auto& entry : kDurationTable) {
    if (entry.symbol == key) return entry.value;
  }
  if (!key.empty() && (std::isdigit(static_cast<unsigned char>(key.front())) || key.front() == '-' ||
                       key.front() == '+')) {
    try {
      return parseRational(key);
    } catch (const Error&) {
    }
  }
  throw Error(ErrorCode::UnknownDuration, "unknown duration '" + std::string(symbol) + "'");
}

std::optional<std::string_view> symbolOf(const Rational& value) {
  for (const auto& entry : kDurationTable) {
    if (entry.value == value) return entry.symbol;
  }
  return std::nullopt;
}

RhythmSeq parseDurations(std::span<const std::string> symbols) {
  std::vector<Rational> out;
  out.reserve(symbols.size());
  for (const auto& s : symbols) out.push_back(durationOf(s));
  return RhythmSeq(std::move(out));
}

std::vector<std::string> renderDurations(const RhythmSeq& s) {
  std::vector<std::string> out;
  for (const auto& d : s.durations()) {
    const auto symbol = symbolOf(d);
    out.emplace_back(symbol ? std::string(*symbol) : formatRational(d));
  }
  return out;
}

RhythmSeq augment(const RhythmSeq& s, const Rational& t) {
  std::vector<Rational> out = s.durations();
  for (auto& d : out) d += t;
  return RhythmSeq(std::move(out));
}

RhythmSeq diminish(const RhythmSeq& s, const Rational& t) { return augment(s, -t); }

RhythmSeq retrograde(const RhythmSeq& s) {
  return RhythmSeq({s.durations().rbegin(), s.durations().rend()});
}

bool isNonRetrogradable(const RhythmSeq& s) {
  return std::equal(s.durations().begin(), s.durations().end(), s.durations().rbegin());
}

RhythmSeq rhythmPrimeForm(const RhythmSeq& s) {
  // For reduced fractions gcd(a/b, c/d) = gcd(a, c) / lcm(b, d).
  std::int64_t num = 0;
  std::int64_t den = 1;
  for (const auto& d : s.durations()) {
    num = std::gcd(num, d.numerator());
    den = std::lcm(den, d.denominator());
  }
  const Rational unit(num, den);
  std::vector<Rational> out = s.durations();
  for (auto& d : out) d /= unit;
  return RhythmSeq(std::move(out));
}

RhythmSeq rhythmNormalOrder(const RhythmSeq& s) {
  const auto& d = s.durations();
  std::vector<Rational> best = d;
  std::vector<Rational> candidate(d.size());
  for (std::size_t r = 1; r < d.size(); ++r) {
    std::rotate_copy(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(r), d.end(), candidate.begin());
    if (candidate < best) best = candidate;
  }
  return RhythmSeq(std::move(best));
}

std::string DurationVector::toString() const {
  std::string out = "[";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(counts[i]);
  }
  out += ']';
  return out;
}

std::span<const Rational> defaultReferenceDurations() { return kDefaultReferences; }

DurationVector durationVector(const RhythmSeq& s, std::span<const Rational> references) {
  std::vector<Rational> onsets(s.size());
  Rational clock(0);
  for (std::size_t k = 0; k < s.size(); ++k) {
    onsets[k] = clock;
    clock += s[k];
  }
  DurationVector out{std::vector<int>(references.size(), 0)};
  for (std::size_t i = 0; i < onsets.size(); ++i) {
    for (std::size_t j = i + 1; j < onsets.size(); ++j) {
      const Rational interval = onsets[j] - onsets[i];
      for (std::size_t r = 0; r < references.size(); ++r) {
        if (references[r] == interval) ++out.counts[r];
      }
    }
  }
  return out;
}

double rhythmDistance(const RhythmSeq& a, const RhythmSeq& b, MetricId metric) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch, "rhythm distance between sequences of length " +
                                                  std::to_string(a.size()) + " and " +
                                                  std::to_string(b.size()));
  }
  const std::size_t n = a.size();
  std::optional<Rational> best;
  for (std::size_t k = 0; k < n; ++k) {
    Rational acc(0);
    for (std::size_t i = 0; i < n; ++i) {
      const Rational d = absRational(a[i] - b[(i + k) % n]);
      switch (metric) {
        case MetricId::Euclidean: acc += d * d; break;
        case MetricId::Taxicab: acc += d; break;
        case MetricId::Chebyshev: acc = std::max(acc, d); break;
      }
    }
    if (!best || acc < *best) best = acc;
  }
  const double value = boost::rational_cast<double>(*best);
  return metric == MetricId::Euclidean ? std::sqrt(value) : value;
}

}  // namespace musnet
