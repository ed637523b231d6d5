/**
 * @file community.h
 * @brief Louvain community detection and weighted modularity.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "musnet/graph.h"

namespace musnet {

struct Communities {
  /// Community id per node, aligned with Graph::nodes; ids numbered from 0 in
  /// order of first appearance.
  std::vector<int> partition;
  double modularity = 0.0;
  /// Modularity after each aggregation level, non-decreasing.
  std::vector<double> levels;
};

/// Multi-level greedy modularity maximization at resolution 1 on the
/// undirected weighted view of `g` (directed edges are symmetrized, self-loops
/// kept). The seed fixes the node visiting order; gain ties go to the lowest
/// community id. Graphs without edges get singleton communities and Q = 0.
Communities detectCommunities(const Graph& g, std::uint64_t seed = 0);

/// Newman weighted modularity of a partition (aligned with Graph::nodes).
double modularity(const Graph& g, const std::vector<int>& partition);

}  // namespace musnet
