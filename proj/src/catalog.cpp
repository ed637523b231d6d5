/**
 * @file catalog.cpp
 * @brief Dictionary enumeration and Z-relation detection.
 */

#include "musnet/catalog.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "musnet/csv.h"
#include "musnet/error.h"

namespace musnet {

namespace {

// Marks rows whose feature string matches a row with a different class key.
std::vector<std::string> markZRelations(Catalog& catalog, const std::vector<std::string>& classKeys) {
  std::map<std::string, std::set<std::string>> keysByFeature;
  for (std::size_t i = 0; i < catalog.rows.size(); ++i) {
    keysByFeature[catalog.rows[i].features].insert(classKeys[i]);
  }
  std::vector<std::string> zlist;
  for (auto& row : catalog.rows) {
    if (keysByFeature[row.features].size() > 1) {
      row.name += 'Z';
      zlist.push_back(row.name);
    }
  }
  return zlist;
}

// Visits all distinct arrangements of length `length` drawn from a multiset
// given as (value, multiplicity) pairs.
template <typename Visit>
void arrangements(std::vector<std::pair<Rational, int>>& pool, std::size_t length,
                  std::vector<Rational>& prefix, Visit&& visit) {
  if (prefix.size() == length) {
    visit(prefix);
    return;
  }
  for (auto& [value, left] : pool) {
    if (left == 0) continue;
    --left;
    prefix.push_back(value);
    arrangements(pool, length, prefix, visit);
    prefix.pop_back();
    ++left;
  }
}

CatalogResult rhythmCatalog(int nc, const std::set<std::vector<Rational>>& classes) {
  CatalogResult result;
  result.catalog.kind = CatalogKind::Rhythm;
  std::vector<std::string> keys;
  int k = 0;
  for (const auto& canonical : classes) {
    const RhythmSeq cell(canonical);
    CatalogRow row;
    row.name = std::to_string(nc) + "-" + std::to_string(++k);
    row.element = cell.toString();
    row.features = durationVector(cell).toString();
    row.nonRetrogradable = isNonRetrogradable(cell);
    keys.push_back(row.element);
    result.catalog.rows.push_back(std::move(row));
  }
  result.zlist = markZRelations(result.catalog, keys);
  return result;
}

}  // namespace

PcsOrder parsePcsOrder(std::string_view name) {
  if (name == "prime" || name == "0") return PcsOrder::Prime;
  if (name == "normal" || name == "1") return PcsOrder::Normal;
  if (name == "normal0" || name == "2") return PcsOrder::Normal0;
  throw Error(ErrorCode::InvalidArgument, "unknown ordering '" + std::string(name) + "'");
}

std::optional<std::size_t> Catalog::indexOf(std::string_view name) const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string_view rowName = rows[i].name;
    if (rowName == name) return i;
    if (!rowName.empty() && rowName.back() == 'Z' && rowName.substr(0, rowName.size() - 1) == name) {
      return i;
    }
  }
  return std::nullopt;
}

PcSet Catalog::pcsAt(std::size_t i) const {
  return PcSet::parse(rows.at(i).element, tet, false, false);
}

RhythmSeq Catalog::rhythmAt(std::size_t i) const { return RhythmSeq::parse(rows.at(i).element); }

std::vector<int> Catalog::featuresAt(std::size_t i) const { return parseIntList(rows.at(i).features); }

std::string Catalog::toCsv() const {
  std::ostringstream out;
  csv::writeRow(out, {"name", "element", "features"});
  for (const auto& row : rows) csv::writeRow(out, {row.name, row.element, row.features});
  return out.str();
}

Catalog Catalog::fromCsv(std::string_view text, CatalogKind kind, int tet) {
  Catalog catalog;
  catalog.kind = kind;
  catalog.tet = tet;
  const auto rows = csv::parse(text);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (i == 0 && !r.empty() && r[0] == "name") continue;
    if (r.size() < 3) {
      throw Error(ErrorCode::ParseError, "catalog line " + std::to_string(i + 1) + " has " +
                                             std::to_string(r.size()) + " fields, expected 3");
    }
    CatalogRow row{r[0], r[1], r[2]};
    if (kind == CatalogKind::Rhythm) row.nonRetrogradable = isNonRetrogradable(RhythmSeq::parse(row.element));
    catalog.rows.push_back(std::move(row));
  }
  return catalog;
}

CatalogResult pcsDictionary(int nc, int tet, PcsOrder order, const std::optional<std::vector<int>>& row) {
  if (tet <= 0) throw Error(ErrorCode::InvalidArgument, "tet must be positive");
  std::vector<int> pool;
  if (row) {
    for (int p : *row) {
      const int pc = floorMod(p, tet);
      if (std::find(pool.begin(), pool.end(), pc) == pool.end()) pool.push_back(pc);
    }
  } else {
    for (int p = 0; p < tet; ++p) pool.push_back(p);
  }
  if (nc < 1 || nc > static_cast<int>(pool.size())) {
    throw Error(ErrorCode::BadCardinality, "cardinality " + std::to_string(nc) + " outside [1, " +
                                               std::to_string(pool.size()) + "]");
  }

  // canonical form -> first enumerated member
  std::map<std::vector<int>, PcSet> classes;
  std::vector<bool> pick(pool.size(), false);
  std::fill(pick.begin(), pick.begin() + nc, true);
  do {
    std::vector<int> subset;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (pick[i]) subset.push_back(pool[i]);
    }
    const PcSet s(std::move(subset), tet);
    const PcSet key = order == PcsOrder::Prime ? primeForm(s) : normal0Order(s);
    classes.try_emplace(key.pitches(), s);
  } while (std::prev_permutation(pick.begin(), pick.end()));

  CatalogResult result;
  result.catalog.kind = CatalogKind::Pcs;
  result.catalog.tet = tet;
  std::vector<std::string> setClasses;
  int k = 0;
  for (const auto& [key, member] : classes) {
    const PcSet canonical(key, tet, false, false);
    PcSet element = canonical;
    if (order == PcsOrder::Normal) element = normalOrder(member);
    CatalogRow r;
    r.name = std::to_string(nc) + "-" + std::to_string(++k);
    r.element = element.toString();
    r.features = intervalVector(canonical).toString();
    setClasses.push_back(primeForm(canonical).toString());
    result.catalog.rows.push_back(std::move(r));
  }
  result.zlist = markZRelations(result.catalog, setClasses);
  return result;
}

CatalogResult rhythmDictionary(int nc, std::span<const std::string> symbols) {
  if (nc < 1 || nc > static_cast<int>(symbols.size())) {
    throw Error(ErrorCode::BadCardinality, "cell length " + std::to_string(nc) + " outside [1, " +
                                               std::to_string(symbols.size()) + "]");
  }
  std::map<Rational, int> counts;
  for (const auto& s : symbols) ++counts[durationOf(s)];
  std::vector<std::pair<Rational, int>> pool(counts.begin(), counts.end());

  std::set<std::vector<Rational>> classes;
  std::vector<Rational> prefix;
  arrangements(pool, static_cast<std::size_t>(nc), prefix, [&](const std::vector<Rational>& seq) {
    classes.insert(rhythmNormalOrder(RhythmSeq(seq)).durations());
  });
  return rhythmCatalog(nc, classes);
}

CatalogResult rhythmPDictionary(int n, int nc, const Rational& ref) {
  if (nc < 1 || nc > n) {
    throw Error(ErrorCode::BadCardinality, "cannot split " + std::to_string(n) + " units into " +
                                               std::to_string(nc) + " positive parts");
  }
  if (ref <= 0) throw Error(ErrorCode::NonPositiveDuration, "reference duration must be positive");

  std::set<std::vector<Rational>> classes;
  std::vector<int> parts;
  // Depth-first over compositions; `left` units remain for the open parts.
  auto visit = [&](auto&& self, int left) -> void {
    const int open = nc - static_cast<int>(parts.size());
    if (open == 1) {
      parts.push_back(left);
      std::vector<Rational> seq;
      for (int p : parts) seq.push_back(ref * p);
      classes.insert(rhythmNormalOrder(RhythmSeq(seq)).durations());
      parts.pop_back();
      return;
    }
    for (int p = 1; p <= left - (open - 1); ++p) {
      parts.push_back(p);
      self(self, left - p);
      parts.pop_back();
    }
  };
  visit(visit, n);
  return rhythmCatalog(nc, classes);
}

}  // namespace musnet
