/**
 * @file pitch.h
 * @brief Pitch-class sets in an arbitrary equal temperament.
 *
 * A PcSet is an ordered multiset of pitch classes modulo `tet`. The default
 * construction deduplicates and sorts (the usual "set" reading); transforms
 * such as transpose() and invert() keep the positional order of their input
 * so they can be chained on ordered voicings.
 */

#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "musnet/metric.h"

namespace musnet {

class PcSet {
 public:
  /// Pitches are reduced modulo `tet`. Throws EmptySet on an empty input.
  explicit PcSet(std::vector<int> pitches, int tet = 12, bool unique = true, bool ordered = true);

  /// Parses the bracketed form "[0,4,7]".
  static PcSet parse(std::string_view text, int tet = 12, bool unique = true,
                     bool ordered = true);

  const std::vector<int>& pitches() const noexcept { return pitches_; }
  int tet() const noexcept { return tet_; }
  std::size_t cardinality() const noexcept { return pitches_.size(); }
  int operator[](std::size_t i) const { return pitches_[i]; }

  /// Bracketed textual form, e.g. "[7,11,2]".
  std::string toString() const;

  friend bool operator==(const PcSet&, const PcSet&) = default;
  friend auto operator<=>(const PcSet&, const PcSet&) = default;

 private:
  std::vector<int> pitches_;
  int tet_;
};

struct IntervalVector {
  std::vector<int> counts;

  std::string toString() const;
  friend bool operator==(const IntervalVector&, const IntervalVector&) = default;
};

/// Modulo that always lands in [0, m).
constexpr int floorMod(long long value, int m) {
  const long long r = value % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

/// Most compact cyclic rotation, packed from the left (see README for the tie rule).
PcSet normalOrder(const PcSet& s);
/// Normal order transposed so that its first pitch is 0.
PcSet normal0Order(const PcSet& s);

PcSet transpose(const PcSet& s, int t);
PcSet invert(const PcSet& s);
PcSet invertAround(const PcSet& s, int pivot);
PcSet multiply(const PcSet& s, int t);
/// Union of a's interval structure (relative to a's first pitch) built on every pitch of b.
PcSet multiplyBoulez(const PcSet& a, const PcSet& b);

PcSet primeForm(const PcSet& s);
IntervalVector intervalVector(const PcSet& s);
/// Successive intervals of the normal order; Nc - 1 entries.
std::vector<int> lisVector(const PcSet& s);

enum class NroOp { P, L, R };
NroOp parseNroOp(std::string_view name);
/// Neo-Riemannian P/L/R on a 12-TET major or minor triad; result in normal order.
PcSet nro(const PcSet& s, NroOp op);

double ivDistance(const IntervalVector& a, const IntervalVector& b,
                  MetricId metric = MetricId::Euclidean);

/// Shared parser for bracketed integer lists such as "[0,2,0,1]".
std::vector<int> parseIntList(std::string_view text);
std::string formatIntList(const std::vector<int>& values);

}  // namespace musnet
