/**
 * @file tone_row.h
 * @brief Serial transforms on tone rows (T, I, R, M).
 */

#pragma once

#include <string>
#include <vector>

namespace musnet {

/// A permutation of all `tet` pitch classes.
class ToneRow {
 public:
  explicit ToneRow(std::vector<int> pitches, int tet = 12);

  const std::vector<int>& pitches() const noexcept { return pitches_; }
  int tet() const noexcept { return tet_; }
  std::string toString() const;

  friend bool operator==(const ToneRow&, const ToneRow&) = default;

 private:
  std::vector<int> pitches_;
  int tet_;
};

ToneRow rowT(const ToneRow& r, int t);
/// Inversion about 0 followed by transposition by t.
ToneRow rowI(const ToneRow& r, int t = 0);
/// Retrograde followed by transposition by t.
ToneRow rowR(const ToneRow& r, int t = 0);
/// Throws NotInvertibleMultiplier unless gcd(t, tet) == 1.
ToneRow rowM(const ToneRow& r, int t);

}  // namespace musnet
