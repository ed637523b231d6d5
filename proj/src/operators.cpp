/**
 * @file operators.cpp
 * @brief Minimal voice leading, non-bijective matching and operator naming.
 */

#include "musnet/operators.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>
#include <optional>
#include <set>

#include "musnet/error.h"

namespace musnet {

namespace {

void requireSameTet(const PcSet& a, const PcSet& b) {
  if (a.tet() != b.tet()) {
    throw Error(ErrorCode::InvalidArgument, "temperaments differ: " + std::to_string(a.tet()) +
                                                " vs " + std::to_string(b.tet()));
  }
}

std::size_t distinctCount(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

std::vector<int> sortedPitches(const PcSet& s) {
  std::vector<int> v = s.pitches();
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

OperatorName OperatorName::distanceOp(std::vector<int> magnitudes) {
  for (auto& m : magnitudes) m = std::abs(m);
  std::erase(magnitudes, 0);
  std::sort(magnitudes.begin(), magnitudes.end(), std::greater<>());
  return OperatorName{Kind::Distance, std::move(magnitudes)};
}

OperatorName OperatorName::voiceLeadingOp(std::vector<int> components) {
  return OperatorName{Kind::VoiceLeading, std::move(components)};
}

OperatorName OperatorName::parse(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '{' && c != '}') compact += c;
  }
  const auto open = compact.find('(');
  if (open == std::string::npos || compact.back() != ')') {
    throw Error(ErrorCode::ParseError, "malformed operator name '" + std::string(text) + "'");
  }
  const std::string head = compact.substr(0, open);
  const std::vector<int> values = parseIntList(compact.substr(open + 1, compact.size() - open - 2));
  if (head == "O") return distanceOp(values);
  if (head == "R" || head == "VL") {
    if (values.empty()) throw Error(ErrorCode::ParseError, "empty voice-leading operator");
    return voiceLeadingOp(values);
  }
  throw Error(ErrorCode::ParseError, "unknown operator family '" + head + "'");
}

std::string OperatorName::toString() const {
  std::string out = kind == Kind::Distance ? "O(" : "R(";
  if (components.empty()) {
    out += '0';
  } else {
    for (std::size_t i = 0; i < components.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(components[i]);
    }
  }
  out += ')';
  return out;
}

std::vector<PcSet> applyDistanceOp(const PcSet& s, const OperatorName& op) {
  if (op.kind != OperatorName::Kind::Distance) {
    throw Error(ErrorCode::InvalidArgument, "expected a distance operator, got " + op.toString());
  }
  const std::size_t n = s.cardinality();
  if (op.components.size() > n) {
    throw Error(ErrorCode::DimensionMismatch, op.toString() + " has more components than " +
                                                  s.toString() + " has pitches");
  }
  const PcSet origin = normalOrder(s);
  const bool identity = op.components.empty();
  const std::size_t voices = distinctCount(s.pitches());

  std::vector<int> magnitudes(n, 0);
  for (std::size_t i = 0; i < op.components.size(); ++i) magnitudes[i] = std::abs(op.components[i]);
  std::sort(magnitudes.begin(), magnitudes.end());

  std::set<PcSet> results;
  do {
    std::vector<std::size_t> moving;
    for (std::size_t i = 0; i < n; ++i) {
      if (magnitudes[i] != 0) moving.push_back(i);
    }
    for (unsigned long mask = 0; mask < (1UL << moving.size()); ++mask) {
      std::vector<int> moved = s.pitches();
      for (std::size_t k = 0; k < moving.size(); ++k) {
        const std::size_t i = moving[k];
        moved[i] += (mask >> k & 1UL) ? -magnitudes[i] : magnitudes[i];
      }
      PcSet candidate(std::move(moved), s.tet(), false, true);
      if (distinctCount(candidate.pitches()) < voices) continue;
      PcSet normal = normalOrder(candidate);
      if (!identity && sortedPitches(normal) == sortedPitches(origin)) continue;
      results.insert(std::move(normal));
    }
  } while (std::next_permutation(magnitudes.begin(), magnitudes.end()));

  return {results.begin(), results.end()};
}

PcSet applyVlOp(const PcSet& s, const OperatorName& op) {
  if (op.kind != OperatorName::Kind::VoiceLeading) {
    throw Error(ErrorCode::InvalidArgument, "expected a voice-leading operator, got " + op.toString());
  }
  if (op.components.size() != s.cardinality()) {
    throw Error(ErrorCode::DimensionMismatch, op.toString() + " does not match the " +
                                                  std::to_string(s.cardinality()) + " voices of " +
                                                  s.toString());
  }
  std::vector<int> moved = normalOrder(s).pitches();
  for (std::size_t i = 0; i < moved.size(); ++i) moved[i] += op.components[i];
  return normalOrder(PcSet(std::move(moved), s.tet()));
}

VoiceLeading minimalVoiceLeading(const PcSet& a, const PcSet& b, MetricId metric) {
  requireSameTet(a, b);
  if (a.cardinality() != b.cardinality()) {
    throw Error(ErrorCode::DimensionMismatch, "voice leading between " + a.toString() + " and " +
                                                  b.toString() + " needs equal cardinality");
  }
  const int tet = a.tet();
  const std::vector<int> x = normalOrder(a).pitches();
  const std::vector<int> y = normalOrder(b).pitches();
  const std::size_t n = x.size();

  std::int64_t bestValue = std::numeric_limits<std::int64_t>::max();
  std::size_t bestRotation = 0;
  std::size_t bestVoice = n;  // n means no octave displacement
  int bestShift = 0;

  std::vector<std::int64_t> diff(n), term(n), prefixMax(n + 1), suffixMax(n + 1);
  for (std::size_t k = 0; k < n; ++k) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      diff[i] = y[(i + k) % n] - x[i];
      term[i] = normTerm(diff[i], metric);
      total = combineTerms(total, term[i], metric);
    }
    if (metric == MetricId::Chebyshev) {
      prefixMax[0] = 0;
      for (std::size_t i = 0; i < n; ++i) prefixMax[i + 1] = std::max(prefixMax[i], term[i]);
      suffixMax[n] = 0;
      for (std::size_t i = n; i-- > 0;) suffixMax[i] = std::max(suffixMax[i + 1], term[i]);
    }
    if (total < bestValue) {
      bestValue = total;
      bestRotation = k;
      bestVoice = n;
      bestShift = 0;
    }
    for (std::size_t j = 0; j < n; ++j) {
      for (int shift : {tet, -tet}) {
        const std::int64_t shifted = normTerm(diff[j] + shift, metric);
        const std::int64_t value = metric == MetricId::Chebyshev
                                       ? std::max({prefixMax[j], suffixMax[j + 1], shifted})
                                       : total - term[j] + shifted;
        if (value < bestValue) {
          bestValue = value;
          bestRotation = k;
          bestVoice = j;
          bestShift = shift;
        }
      }
    }
  }

  VoiceLeading out;
  out.distance = finishNorm(bestValue, metric);
  out.motion.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.motion[i] = y[(i + bestRotation) % n] - x[i] + (i == bestVoice ? bestShift : 0);
  }
  return out;
}

double vlDistance(const PcSet& a, const PcSet& b, MetricId metric) {
  return minimalVoiceLeading(a, b, metric).distance;
}

NonBijectiveResult nonbijDistance(const PcSet& a, const PcSet& b, MetricId metric) {
  requireSameTet(a, b);
  if (a.cardinality() == b.cardinality()) return {vlDistance(a, b, metric), b};

  const bool aLarger = a.cardinality() > b.cardinality();
  const PcSet& larger = aLarger ? a : b;
  const PcSet& smaller = aLarger ? b : a;
  const std::size_t extra = larger.cardinality() - smaller.cardinality();
  const std::size_t base = smaller.cardinality();

  // Non-decreasing index tuples in lexicographic order.
  std::vector<std::size_t> idx(extra, 0);
  std::optional<NonBijectiveResult> best;
  while (true) {
    std::vector<int> pitches = smaller.pitches();
    for (std::size_t i : idx) pitches.push_back(smaller[i]);
    PcSet multiset(std::move(pitches), smaller.tet(), false, true);
    const double d = aLarger ? vlDistance(larger, multiset, metric) : vlDistance(multiset, larger, metric);
    if (!best || d < best->distance) best = NonBijectiveResult{d, std::move(multiset)};

    std::size_t pos = extra;
    while (pos > 0 && idx[pos - 1] == base - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < extra; ++i) idx[i] = idx[pos - 1];
  }
  return *best;
}

double minimalDistance(const PcSet& a, const PcSet& b, MetricId metric) {
  if (a.cardinality() == b.cardinality()) return vlDistance(a, b, metric);
  return nonbijDistance(a, b, metric).distance;
}

GeneralizedOps generalizedOpsName(const PcSet& a, const PcSet& b, MetricId metric) {
  if (a.cardinality() == b.cardinality()) {
    return {a, b, OperatorName::voiceLeadingOp(minimalVoiceLeading(a, b, metric).motion)};
  }
  const PcSet doubled = nonbijDistance(a, b, metric).multiset;
  if (a.cardinality() > b.cardinality()) {
    return {a, doubled, OperatorName::voiceLeadingOp(minimalVoiceLeading(a, doubled, metric).motion)};
  }
  return {doubled, b, OperatorName::voiceLeadingOp(minimalVoiceLeading(doubled, b, metric).motion)};
}

OperatorName opsNameVl(const PcSet& a, const PcSet& b) { return generalizedOpsName(a, b).op; }

OperatorName opsNameDistance(const PcSet& a, const PcSet& b) {
  return OperatorName::distanceOp(generalizedOpsName(a, b).op.components);
}

}  // namespace musnet
