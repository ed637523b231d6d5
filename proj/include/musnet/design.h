/**
 * @file design.h
 * @brief Scale-free scaffolds mapped onto reference networks, and score assembly.
 */

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "musnet/catalog.h"
#include "musnet/graph.h"
#include "musnet/operators.h"
#include "musnet/postman.h"
#include "musnet/sonify.h"

namespace musnet {

/// Star seed on `nedges` nodes, then preferential attachment of `nedges`
/// distinct edges per arriving node. Requires 1 <= nedges < nnodes.
Graph barabasiAlbert(int nnodes, int nedges, std::uint64_t seed);

/// Union of vlNetworkByName over `names`; node set = catalog rows.
Graph networkHarmonyGen(const Catalog& c, const std::vector<OperatorName>& names,
                        MetricId metric = MetricId::Euclidean, unsigned jobs = 1);

struct ProbSlice {
  double thdw = 0.0;
  double thup = 1.5;
  double prob = 1.0;
};

/// Union of vlNetwork slices; slice k draws with seed + k. A pair present in
/// several slices keeps its first edge.
Graph networkHarmonyGen(const Catalog& c, const std::vector<ProbSlice>& slices,
                        MetricId metric = MetricId::Euclidean, std::uint64_t seed = 0, unsigned jobs = 1);

struct DesignParams {
  int nnodes = 10;
  int nedges = 1;
  int nstart = 0;
  std::uint64_t seed = 0;
  bool reverse = false;
};

struct DesignSequence {
  /// Node labels of the reference network, in route order.
  std::vector<std::string> items;
  PostmanRoute route;
  /// Reference node id assigned to each scaffold node.
  std::vector<int> assignment;

  std::string toJson() const;
  std::string routeJson() const;
  static DesignSequence fromJson(std::string_view text);
};

/// Ranks scaffold and reference nodes by degree and emits the reference labels
/// along the scaffold's postman route. Throws ScaffoldTooLarge when nnodes
/// exceeds the reference node count.
DesignSequence harmonicDesign(const Graph& ref, const DesignParams& p);
DesignSequence rhythmicDesign(const Graph& ref, const DesignParams& p);

/// Pairs chord k with the k-th duration of the concatenated rhythm cells
/// (cycled), scaled by fac. Chords are voiced upward from 60 + first pitch.
ScoreEvents scoreDesign(const std::vector<PcSet>& chords, const std::vector<RhythmSeq>& rhythms,
                        const Rational& fac = Rational(1), int velocity = 80);

}  // namespace musnet
