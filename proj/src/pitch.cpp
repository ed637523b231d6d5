/**
 * @file pitch.cpp
 * @brief PcSet construction, canonical orderings and group operations.
 */

#include "musnet/pitch.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include "musnet/error.h"

namespace musnet {

namespace {

void requireTet(int tet) {
  if (tet <= 0) throw Error(ErrorCode::InvalidArgument, "tet must be positive");
}

// Rotation r of the sorted pitches, with wrapped pitches raised by tet so the
// sequence ascends.
std::vector<int> unwrappedRotation(const std::vector<int>& sorted, std::size_t r, int tet) {
  const std::size_t n = sorted.size();
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = r + i;
    out[i] = sorted[k % n] + (k >= n ? tet : 0);
  }
  return out;
}

// Packed-left comparison: outer span first, then the spans of shorter
// prefixes working inward. Returns true when `a` is strictly more compact.
bool morePacked(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t k = a.size(); k-- > 1;) {
    const int sa = a[k] - a[0];
    const int sb = b[k] - b[0];
    if (sa != sb) return sa < sb;
  }
  return false;
}

std::vector<int> reduced(std::vector<int> v, int tet) {
  for (auto& p : v) p = floorMod(p, tet);
  return v;
}

}  // namespace

PcSet::PcSet(std::vector<int> pitches, int tet, bool unique, bool ordered)
    : pitches_(std::move(pitches)), tet_(tet) {
  requireTet(tet_);
  if (pitches_.empty()) throw Error(ErrorCode::EmptySet, "pitch-class set has no pitches");
  for (auto& p : pitches_) p = floorMod(p, tet_);
  if (unique) {
    std::vector<int> seen;
    seen.reserve(pitches_.size());
    for (int p : pitches_) {
      if (std::find(seen.begin(), seen.end(), p) == seen.end()) seen.push_back(p);
    }
    pitches_ = std::move(seen);
  }
  if (ordered) std::sort(pitches_.begin(), pitches_.end());
}

PcSet PcSet::parse(std::string_view text, int tet, bool unique, bool ordered) {
  return PcSet(parseIntList(text), tet, unique, ordered);
}

std::string PcSet::toString() const { return formatIntList(pitches_); }

std::string IntervalVector::toString() const { return formatIntList(counts); }

std::vector<int> parseIntList(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') {
      throw Error(ErrorCode::ParseError, "unbalanced brackets in '" + std::string(text) + "'");
    }
    body = trim(body.substr(1, body.size() - 2));
  }
  std::vector<int> out;
  if (body.empty()) return out;
  while (true) {
    const auto comma = body.find(',');
    const std::string_view field = trim(body.substr(0, comma));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
      throw Error(ErrorCode::ParseError, "not an integer list: '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

std::string formatIntList(const std::vector<int>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  out += ']';
  return out;
}

PcSet normalOrder(const PcSet& s) {
  std::vector<int> sorted = s.pitches();
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> best = unwrappedRotation(sorted, 0, s.tet());
  for (std::size_t r = 1; r < sorted.size(); ++r) {
    auto candidate = unwrappedRotation(sorted, r, s.tet());
    if (morePacked(candidate, best)) best = std::move(candidate);
  }
  return PcSet(reduced(std::move(best), s.tet()), s.tet(), false, false);
}

PcSet normal0Order(const PcSet& s) {
  const PcSet n = normalOrder(s);
  return transpose(n, -n[0]);
}

PcSet transpose(const PcSet& s, int t) {
  std::vector<int> out(s.pitches());
  for (auto& p : out) p = floorMod(static_cast<long long>(p) + t, s.tet());
  return PcSet(std::move(out), s.tet(), false, false);
}

PcSet invert(const PcSet& s) { return invertAround(s, 0); }

PcSet invertAround(const PcSet& s, int pivot) {
  std::vector<int> out(s.pitches());
  for (auto& p : out) p = floorMod(2LL * pivot - p, s.tet());
  return PcSet(std::move(out), s.tet(), false, false);
}

PcSet multiply(const PcSet& s, int t) {
  std::vector<int> out(s.pitches());
  for (auto& p : out) p = floorMod(static_cast<long long>(p) * t, s.tet());
  return PcSet(std::move(out), s.tet(), false, false);
}

PcSet multiplyBoulez(const PcSet& a, const PcSet& b) {
  if (a.tet() != b.tet()) throw Error(ErrorCode::InvalidArgument, "temperaments differ");
  const int anchor = a[0];
  std::vector<int> out;
  out.reserve(a.cardinality() * b.cardinality());
  for (int bj : b.pitches()) {
    for (int ai : a.pitches()) out.push_back(ai - anchor + bj);
  }
  return PcSet(std::move(out), a.tet());
}

PcSet primeForm(const PcSet& s) {
  const PcSet direct = normal0Order(s);
  const PcSet inverse = normal0Order(invert(s));
  return morePacked(inverse.pitches(), direct.pitches()) ? inverse : direct;
}

IntervalVector intervalVector(const PcSet& s) {
  const int tet = s.tet();
  IntervalVector iv{std::vector<int>(static_cast<std::size_t>(tet / 2), 0)};
  const auto& p = s.pitches();
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      const int d = floorMod(p[j] - p[i], tet);
      const int ic = std::min(d, tet - d);
      if (ic > 0) ++iv.counts[static_cast<std::size_t>(ic - 1)];
    }
  }
  return iv;
}

std::vector<int> lisVector(const PcSet& s) {
  const PcSet n = normalOrder(s);
  std::vector<int> out;
  for (std::size_t i = 1; i < n.cardinality(); ++i) out.push_back(floorMod(n[i] - n[i - 1], s.tet()));
  return out;
}

NroOp parseNroOp(std::string_view name) {
  if (name == "P") return NroOp::P;
  if (name == "L") return NroOp::L;
  if (name == "R") return NroOp::R;
  throw Error(ErrorCode::InvalidArgument, "unknown Neo-Riemannian operator '" + std::string(name) + "'");
}

PcSet nro(const PcSet& s, NroOp op) {
  const PcSet triad(s.pitches(), s.tet());
  if (s.tet() != 12 || triad.cardinality() != 3) {
    throw Error(ErrorCode::NotATriad, s.toString() + " is not a 12-TET triad");
  }
  const PcSet rooted = normal0Order(triad);
  const int root = normalOrder(triad)[0];
  const bool major = rooted.pitches() == std::vector<int>{0, 4, 7};
  const bool minor = rooted.pitches() == std::vector<int>{0, 3, 7};
  if (!major && !minor) {
    throw Error(ErrorCode::NotATriad, s.toString() + " is neither major nor minor");
  }
  auto majorOn = [](int r) { return PcSet({r, r + 4, r + 7}); };
  auto minorOn = [](int r) { return PcSet({r, r + 3, r + 7}); };
  PcSet image = triad;
  switch (op) {
    case NroOp::P: image = major ? minorOn(root) : majorOn(root); break;
    case NroOp::R: image = major ? minorOn(root + 9) : majorOn(root + 3); break;
    case NroOp::L: image = major ? minorOn(root + 4) : majorOn(root + 8); break;
  }
  return normalOrder(image);
}

double ivDistance(const IntervalVector& a, const IntervalVector& b, MetricId metric) {
  return distance(std::span<const int>(a.counts), std::span<const int>(b.counts), metric);
}

}  // namespace musnet
