/**
 * @file community.cpp
 * @brief Louvain local moving and aggregation.
 */

#include "musnet/community.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "musnet/error.h"

namespace musnet {

namespace {

// Symmetric weighted adjacency; a self-loop of weight w is stored as 2w on the
// diagonal so that row sums are the weighted degrees.
struct Adjacency {
  std::vector<std::map<int, double>> rows;

  double degree(int i) const {
    double k = 0.0;
    for (const auto& [j, w] : rows[static_cast<std::size_t>(i)]) k += w;
    return k;
  }
  double selfWeight(int i) const {
    const auto& row = rows[static_cast<std::size_t>(i)];
    const auto it = row.find(i);
    return it == row.end() ? 0.0 : it->second;
  }
};

Adjacency buildAdjacency(const Graph& g) {
  std::map<int, int> index;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) index[g.nodes[i].id] = static_cast<int>(i);
  Adjacency adj;
  adj.rows.resize(g.nodes.size());
  for (const auto& e : g.edges) {
    const auto s = index.find(e.source);
    const auto t = index.find(e.target);
    if (s == index.end() || t == index.end()) {
      throw Error(ErrorCode::NoSuchNode, "edge references an unknown node");
    }
    const int u = s->second;
    const int v = t->second;
    if (u == v) {
      adj.rows[static_cast<std::size_t>(u)][u] += 2.0 * e.weight;
    } else {
      adj.rows[static_cast<std::size_t>(u)][v] += e.weight;
      adj.rows[static_cast<std::size_t>(v)][u] += e.weight;
    }
  }
  return adj;
}

double adjacencyModularity(const Adjacency& adj, const std::vector<int>& community) {
  const std::size_t n = adj.rows.size();
  double twoM = 0.0;
  for (std::size_t i = 0; i < n; ++i) twoM += adj.degree(static_cast<int>(i));
  if (twoM <= 0.0) return 0.0;
  std::map<int, double> inside;
  std::map<int, double> total;
  for (std::size_t i = 0; i < n; ++i) {
    const int c = community[i];
    total[c] += adj.degree(static_cast<int>(i));
    for (const auto& [j, w] : adj.rows[i]) {
      if (community[static_cast<std::size_t>(j)] == c) inside[c] += w;
    }
  }
  double q = 0.0;
  for (const auto& [c, tot] : total) q += inside[c] / twoM - (tot / twoM) * (tot / twoM);
  return q;
}

// One local-moving phase. Returns true if any node changed community.
bool localMoving(const Adjacency& adj, std::vector<int>& community, std::mt19937_64& rng) {
  const int n = static_cast<int>(adj.rows.size());
  std::vector<double> k(static_cast<std::size_t>(n));
  double twoM = 0.0;
  for (int i = 0; i < n; ++i) {
    k[static_cast<std::size_t>(i)] = adj.degree(i);
    twoM += k[static_cast<std::size_t>(i)];
  }
  std::vector<double> tot(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) tot[static_cast<std::size_t>(community[static_cast<std::size_t>(i)])] += k[static_cast<std::size_t>(i)];

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  constexpr double kEpsilon = 1e-12;
  bool anyMove = false;
  bool improved = true;
  while (improved) {
    improved = false;
    for (int i : order) {
      const auto ui = static_cast<std::size_t>(i);
      const int home = community[ui];
      std::map<int, double> links;  // community -> weight from i (self-loop excluded)
      links[home] += 0.0;
      for (const auto& [j, w] : adj.rows[ui]) {
        if (j != i) links[community[static_cast<std::size_t>(j)]] += w;
      }
      tot[static_cast<std::size_t>(home)] -= k[ui];
      auto gain = [&](int c) { return links[c] - tot[static_cast<std::size_t>(c)] * k[ui] / twoM; };
      int best = home;
      double bestGain = gain(home);
      for (const auto& [c, w] : links) {
        const double g = gain(c);
        if (g > bestGain + kEpsilon) {
          best = c;
          bestGain = g;
        }
      }
      tot[static_cast<std::size_t>(best)] += k[ui];
      if (best != home) {
        community[ui] = best;
        improved = true;
        anyMove = true;
      }
    }
  }
  return anyMove;
}

// Renumbers ids to 0.. in order of first appearance; returns the count.
int renumber(std::vector<int>& community) {
  std::map<int, int> remap;
  for (auto& c : community) {
    const auto [it, inserted] = remap.try_emplace(c, static_cast<int>(remap.size()));
    c = it->second;
  }
  return static_cast<int>(remap.size());
}

Adjacency aggregate(const Adjacency& adj, const std::vector<int>& community, int count) {
  Adjacency out;
  out.rows.resize(static_cast<std::size_t>(count));
  for (std::size_t i = 0; i < adj.rows.size(); ++i) {
    const int ci = community[i];
    for (const auto& [j, w] : adj.rows[i]) {
      out.rows[static_cast<std::size_t>(ci)][community[static_cast<std::size_t>(j)]] += w;
    }
  }
  return out;
}

}  // namespace

double modularity(const Graph& g, const std::vector<int>& partition) {
  if (partition.size() != g.nodes.size()) {
    throw Error(ErrorCode::DimensionMismatch, "partition does not cover every node");
  }
  return adjacencyModularity(buildAdjacency(g), partition);
}

Communities detectCommunities(const Graph& g, std::uint64_t seed) {
  Communities result;
  const std::size_t n = g.nodes.size();
  result.partition.resize(n);
  std::iota(result.partition.begin(), result.partition.end(), 0);
  if (n == 0) return result;

  Adjacency adj = buildAdjacency(g);
  double twoM = 0.0;
  for (std::size_t i = 0; i < n; ++i) twoM += adj.degree(static_cast<int>(i));
  if (twoM <= 0.0) return result;

  std::mt19937_64 rng(seed);
  std::vector<int> membership(n);
  std::iota(membership.begin(), membership.end(), 0);
  result.levels.push_back(adjacencyModularity(adj, membership));

  while (true) {
    std::vector<int> community(adj.rows.size());
    std::iota(community.begin(), community.end(), 0);
    const bool moved = localMoving(adj, community, rng);
    const int count = renumber(community);
    if (!moved) break;
    for (auto& m : membership) m = community[static_cast<std::size_t>(m)];
    adj = aggregate(adj, community, count);
    std::vector<int> identity(static_cast<std::size_t>(count));
    std::iota(identity.begin(), identity.end(), 0);
    result.levels.push_back(adjacencyModularity(adj, identity));
    if (count == 1) break;
  }

  renumber(membership);
  result.partition = membership;
  result.modularity = modularity(g, membership);
  return result;
}

}  // namespace musnet
