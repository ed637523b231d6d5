/**
 * @file catalog.h
 * @brief Exhaustive dictionaries of pitch-class sets and rhythmic cells.
 *
 * A catalog row is (name, element, features) with the element and features in
 * their bracketed textual forms. Rows are named "<nc>-<k>", k counting from 1
 * in lexicographic order of the canonical elements, with a trailing "Z" when
 * the row shares its feature vector with a row of a different class.
 */

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "musnet/pitch.h"
#include "musnet/rhythm.h"

namespace musnet {

enum class CatalogKind { Pcs, Rhythm };

/// Prime: one row per set class (T/I). Normal and Normal0: one row per
/// transposition class, rendered in normal order or rooted on 0.
enum class PcsOrder { Prime, Normal, Normal0 };
PcsOrder parsePcsOrder(std::string_view name);

struct CatalogRow {
  std::string name;
  std::string element;
  std::string features;
  bool nonRetrogradable = false;
};

struct Catalog {
  CatalogKind kind = CatalogKind::Pcs;
  int tet = 12;
  std::vector<CatalogRow> rows;

  std::size_t size() const noexcept { return rows.size(); }
  /// Row index for a name, with or without its "Z" suffix.
  std::optional<std::size_t> indexOf(std::string_view name) const;

  PcSet pcsAt(std::size_t i) const;
  RhythmSeq rhythmAt(std::size_t i) const;
  std::vector<int> featuresAt(std::size_t i) const;

  /// CSV with header "name,element,features".
  std::string toCsv() const;
  static Catalog fromCsv(std::string_view text, CatalogKind kind, int tet = 12);
};

struct CatalogResult {
  Catalog catalog;
  /// Names of Z-related rows, in row order.
  std::vector<std::string> zlist;
};

/// All nc-subsets of [0, tet), or of the given pitches when `row` is set.
/// Throws BadCardinality unless 1 <= nc <= number of available pitches.
CatalogResult pcsDictionary(int nc, int tet = 12, PcsOrder order = PcsOrder::Prime,
                            const std::optional<std::vector<int>>& row = std::nullopt);

/// Distinct orderings of nc durations drawn from the symbol multiset, one row
/// per rotation class. Features are duration vectors.
CatalogResult rhythmDictionary(int nc, std::span<const std::string> symbols);

/// Compositions of n units of `ref` into nc positive parts, one row per rotation class.
CatalogResult rhythmPDictionary(int n, int nc, const Rational& ref);

}  // namespace musnet
