/**
 * @file operators.h
 * @brief Voice-leading metrics and the distance / voice-leading operator families.
 *
 * Two operator spellings are used throughout:
 *   - "O(a,b,...)": position-free distance operator, unsigned magnitudes sorted
 *     descending with zeros dropped ("O(0)" is the identity);
 *   - "R(n0,n1,...)": positional voice-leading operator on a normal-ordered set,
 *     one signed component per voice.
 */

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "musnet/metric.h"
#include "musnet/pitch.h"

namespace musnet {

struct OperatorName {
  enum class Kind { Distance, VoiceLeading };

  Kind kind = Kind::Distance;
  std::vector<int> components;

  /// Canonicalizes a Distance operator (absolute values, descending, no zeros).
  static OperatorName distanceOp(std::vector<int> magnitudes);
  static OperatorName voiceLeadingOp(std::vector<int> components);

  /// Accepts "O(...)", "R(...)" and "VL(...)".
  static OperatorName parse(std::string_view text);
  std::string toString() const;

  friend bool operator==(const OperatorName&, const OperatorName&) = default;
};

/// Every normal-ordered chord reachable by moving the voices of `s` by the
/// operator's magnitudes in any assignment and direction. Results in which two
/// voices collide, or that equal `s` under a non-zero operator, are dropped.
/// Sorted ascending, deduplicated.
std::vector<PcSet> applyDistanceOp(const PcSet& s, const OperatorName& op);

/// Adds the signed components to the normal order of `s` and re-normal-orders.
PcSet applyVlOp(const PcSet& s, const OperatorName& op);

/// An optimal alignment between two equal-cardinality sets.
struct VoiceLeading {
  double distance = 0.0;
  /// Signed motion of each voice of normalOrder(source).
  std::vector<int> motion;
};

/// Minimal voice leading: over cyclic pairings of the two sets with at most one
/// voice displaced by an octave (tet). Throws DimensionMismatch for unequal sizes.
VoiceLeading minimalVoiceLeading(const PcSet& a, const PcSet& b, MetricId metric = MetricId::Euclidean);

double vlDistance(const PcSet& a, const PcSet& b, MetricId metric = MetricId::Euclidean);

struct NonBijectiveResult {
  double distance = 0.0;
  /// The smaller set with pitches doubled up to the larger cardinality.
  PcSet multiset;
};

/// Minimal voice leading between sets of different cardinality, doubling
/// pitches of the smaller one. Duplications are tried in lexicographic order of
/// the doubled-index tuples; the first minimizer wins.
NonBijectiveResult nonbijDistance(const PcSet& a, const PcSet& b,
                                  MetricId metric = MetricId::Euclidean);

/// vlDistance for equal cardinalities, nonbijDistance otherwise.
double minimalDistance(const PcSet& a, const PcSet& b, MetricId metric = MetricId::Euclidean);

OperatorName opsNameDistance(const PcSet& a, const PcSet& b);
OperatorName opsNameVl(const PcSet& a, const PcSet& b);

struct GeneralizedOps {
  /// Voicing the operator acts on: `a` itself, or `a` doubled when it is smaller.
  PcSet source;
  /// Voicing the operator reaches: `b` itself, or `b` doubled when it is smaller.
  PcSet target;
  OperatorName op;
};

/// Voice-leading operator connecting two sets of any cardinalities.
GeneralizedOps generalizedOpsName(const PcSet& a, const PcSet& b,
                                  MetricId metric = MetricId::Euclidean);

}  // namespace musnet
