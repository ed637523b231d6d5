/**
 * @file postman.h
 * @brief Route inspection (Chinese postman) on undirected weighted graphs.
 */

#pragma once

#include <string_view>
#include <vector>

#include "musnet/graph.h"

namespace musnet {

enum class MatchingMode { Exact, Greedy };
std::string_view matchingModeName(MatchingMode mode);

/// Odd-node counts up to this bound are matched exactly.
inline constexpr std::size_t kExactMatchingLimit = 14;

struct PostmanRoute {
  /// Closed walk of node ids, first == last == start.
  std::vector<int> route;
  double cost = 0.0;
  MatchingMode matching = MatchingMode::Exact;
  std::size_t oddNodes = 0;
};

/// Shortest closed walk from `start` covering every edge at least once.
/// Edge direction is ignored. Throws NoSuchNode for an unknown start and
/// Disconnected when some node is unreachable.
PostmanRoute chinesePostman(const Graph& g, int start);

}  // namespace musnet
