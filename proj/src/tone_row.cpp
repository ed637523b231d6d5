/**
 * @file tone_row.cpp
 * @brief Serial transforms on tone rows.
 */

#include "musnet/tone_row.h"

#include <algorithm>
#include <numeric>

#include "musnet/error.h"
#include "musnet/pitch.h"

namespace musnet {

ToneRow::ToneRow(std::vector<int> pitches, int tet) : pitches_(std::move(pitches)), tet_(tet) {
  if (tet_ <= 0) throw Error(ErrorCode::InvalidArgument, "tet must be positive");
  if (pitches_.size() != static_cast<std::size_t>(tet_)) {
    throw Error(ErrorCode::DimensionMismatch, "a tone row needs all " + std::to_string(tet_) +
                                                  " pitch classes");
  }
  std::vector<bool> seen(static_cast<std::size_t>(tet_), false);
  for (auto& p : pitches_) {
    p = floorMod(p, tet_);
    if (seen[static_cast<std::size_t>(p)]) {
      throw Error(ErrorCode::InvalidArgument, "pitch class " + std::to_string(p) + " repeats in row");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
}

std::string ToneRow::toString() const { return formatIntList(pitches_); }

ToneRow rowT(const ToneRow& r, int t) {
  std::vector<int> out = r.pitches();
  for (auto& p : out) p += t;
  return ToneRow(std::move(out), r.tet());
}

ToneRow rowI(const ToneRow& r, int t) {
  std::vector<int> out = r.pitches();
  for (auto& p : out) p = t - p;
  return ToneRow(std::move(out), r.tet());
}

ToneRow rowR(const ToneRow& r, int t) {
  std::vector<int> out(r.pitches().rbegin(), r.pitches().rend());
  return rowT(ToneRow(std::move(out), r.tet()), t);
}

ToneRow rowM(const ToneRow& r, int t) {
  if (std::gcd(t, r.tet()) != 1) {
    throw Error(ErrorCode::NotInvertibleMultiplier,
                std::to_string(t) + " is not a unit modulo " + std::to_string(r.tet()));
  }
  std::vector<int> out = r.pitches();
  for (auto& p : out) p = floorMod(static_cast<long long>(p) * t, r.tet());
  return ToneRow(std::move(out), r.tet());
}

}  // namespace musnet
