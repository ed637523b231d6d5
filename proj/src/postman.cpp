/**
 * @file postman.cpp
 * @brief Odd-node matching on shortest paths plus Hierholzer's circuit.
 */

#include "musnet/postman.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>
#include <tuple>

#include "musnet/error.h"

namespace musnet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Arc {
  std::size_t to;
  std::size_t edge;
};

struct ShortestPaths {
  std::vector<double> dist;
  std::vector<std::size_t> viaEdge;  // edge used to reach each node
  std::vector<std::size_t> prev;
};

ShortestPaths dijkstra(const std::vector<std::vector<Arc>>& adj, const std::vector<double>& weight,
                       std::size_t source) {
  const std::size_t n = adj.size();
  ShortestPaths sp{std::vector<double>(n, kInf), std::vector<std::size_t>(n, 0), std::vector<std::size_t>(n, n)};
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  sp.dist[source] = 0.0;
  queue.push({0.0, source});
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (d > sp.dist[u]) continue;
    for (const Arc& a : adj[u]) {
      const double nd = d + weight[a.edge];
      if (nd < sp.dist[a.to]) {
        sp.dist[a.to] = nd;
        sp.prev[a.to] = u;
        sp.viaEdge[a.to] = a.edge;
        queue.push({nd, a.to});
      }
    }
  }
  return sp;
}

// Pairs of positions into the odd-node list.
std::vector<std::pair<std::size_t, std::size_t>> exactMatching(const std::vector<std::vector<double>>& d) {
  const std::size_t k = d.size();
  const std::size_t full = (std::size_t{1} << k) - 1;
  std::vector<double> best(full + 1, kInf);
  std::vector<std::size_t> partner(full + 1, 0);
  best[0] = 0.0;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    const std::size_t i = static_cast<std::size_t>(std::countr_zero(mask));
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!(mask >> j & 1U)) continue;
      const std::size_t rest = mask & ~(std::size_t{1} << i) & ~(std::size_t{1} << j);
      const double c = best[rest] + d[i][j];
      if (c < best[mask]) {
        best[mask] = c;
        partner[mask] = j;
      }
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::size_t mask = full;
  while (mask != 0) {
    const std::size_t i = static_cast<std::size_t>(std::countr_zero(mask));
    const std::size_t j = partner[mask];
    pairs.emplace_back(i, j);
    mask &= ~(std::size_t{1} << i) & ~(std::size_t{1} << j);
  }
  return pairs;
}

std::vector<std::pair<std::size_t, std::size_t>> greedyMatching(const std::vector<std::vector<double>>& d) {
  const std::size_t k = d.size();
  std::vector<std::tuple<double, std::size_t, std::size_t>> candidates;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) candidates.emplace_back(d[i][j], i, j);
  }
  std::sort(candidates.begin(), candidates.end());
  std::vector<bool> used(k, false);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [c, i, j] : candidates) {
    if (used[i] || used[j]) continue;
    used[i] = used[j] = true;
    pairs.emplace_back(i, j);
  }
  return pairs;
}

}  // namespace

std::string_view matchingModeName(MatchingMode mode) {
  return mode == MatchingMode::Exact ? "exact" : "greedy";
}

PostmanRoute chinesePostman(const Graph& g, int start) {
  const auto startIndex = g.indexOfId(start);
  if (!startIndex) throw Error(ErrorCode::NoSuchNode, "start node " + std::to_string(start) + " not in graph");

  const std::size_t n = g.nodes.size();
  std::vector<double> weight;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  std::vector<std::vector<Arc>> adj(n);
  for (const auto& e : g.edges) {
    const auto s = g.indexOfId(e.source);
    const auto t = g.indexOfId(e.target);
    if (!s || !t) throw Error(ErrorCode::NoSuchNode, "edge references an unknown node");
    if (!(e.weight >= 0.0)) throw Error(ErrorCode::InvalidArgument, "edge weights must be non-negative");
    const std::size_t id = weight.size();
    weight.push_back(e.weight);
    ends.emplace_back(*s, *t);
    adj[*s].push_back({*t, id});
    if (*s != *t) adj[*t].push_back({*s, id});
  }

  // Connectivity over all nodes.
  {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{*startIndex};
    seen[*startIndex] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (const Arc& a : adj[u]) {
        if (!seen[a.to]) {
          seen[a.to] = true;
          ++reached;
          stack.push_back(a.to);
        }
      }
    }
    if (reached != n) throw Error(ErrorCode::Disconnected, "graph is not connected");
  }

  PostmanRoute result;
  std::vector<std::size_t> odd;
  for (std::size_t u = 0; u < n; ++u) {
    std::size_t deg = 0;
    for (const Arc& a : adj[u]) deg += (a.to == u) ? 2 : 1;
    if (deg % 2 == 1) odd.push_back(u);
  }
  result.oddNodes = odd.size();

  // Circuit edges: originals plus duplicates along matched shortest paths.
  std::vector<std::size_t> circuitEdges(weight.size());
  for (std::size_t i = 0; i < weight.size(); ++i) circuitEdges[i] = i;
  if (!odd.empty()) {
    std::vector<ShortestPaths> paths;
    paths.reserve(odd.size());
    for (std::size_t u : odd) paths.push_back(dijkstra(adj, weight, u));
    std::vector<std::vector<double>> d(odd.size(), std::vector<double>(odd.size(), 0.0));
    for (std::size_t i = 0; i < odd.size(); ++i) {
      for (std::size_t j = 0; j < odd.size(); ++j) d[i][j] = paths[i].dist[odd[j]];
    }
    result.matching = odd.size() <= kExactMatchingLimit ? MatchingMode::Exact : MatchingMode::Greedy;
    const auto pairs = result.matching == MatchingMode::Exact ? exactMatching(d) : greedyMatching(d);
    for (const auto& [i, j] : pairs) {
      for (std::size_t v = odd[j]; v != odd[i]; v = paths[i].prev[v]) circuitEdges.push_back(paths[i].viaEdge[v]);
    }
  }

  // Hierholzer over the augmented multigraph.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> multi(n);  // (to, slot)
  for (std::size_t slot = 0; slot < circuitEdges.size(); ++slot) {
    const auto [s, t] = ends[circuitEdges[slot]];
    multi[s].push_back({t, slot});
    if (s != t) multi[t].push_back({s, slot});
    result.cost += weight[circuitEdges[slot]];
  }
  std::vector<bool> used(circuitEdges.size(), false);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<std::size_t> stack{*startIndex};
  std::vector<std::size_t> circuit;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    auto& c = cursor[u];
    while (c < multi[u].size() && used[multi[u][c].second]) ++c;
    if (c == multi[u].size()) {
      circuit.push_back(u);
      stack.pop_back();
    } else {
      used[multi[u][c].second] = true;
      stack.push_back(multi[u][c].first);
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  result.route.reserve(circuit.size());
  for (std::size_t u : circuit) result.route.push_back(g.nodes[u].id);
  return result;
}

}  // namespace musnet
