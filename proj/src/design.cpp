/**
 * @file design.cpp
 * @brief Preferential-attachment scaffolds and degree-rank assignment.
 */

#include "musnet/design.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include <json.hpp>

#include "musnet/error.h"
#include "musnet/netgen.h"

namespace musnet {

namespace {

Graph unionOf(const Catalog& c, const std::vector<Graph>& parts) {
  Graph out;
  for (std::size_t i = 0; i < c.size(); ++i) out.nodes.push_back({static_cast<int>(i), c.rows[i].element});
  std::map<std::pair<int, int>, Edge> edges;
  for (const auto& g : parts) {
    for (const auto& e : g.edges) edges.try_emplace({e.source, e.target}, e);
  }
  for (auto& [key, e] : edges) out.edges.push_back(std::move(e));
  return out;
}

// Node indices sorted by degree (descending unless ascending), ties by id.
std::vector<std::size_t> rankByDegree(const Graph& g, bool ascending) {
  const std::vector<double> deg = g.degrees();
  std::vector<std::size_t> order(g.nodes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (deg[a] != deg[b]) return ascending ? deg[a] < deg[b] : deg[a] > deg[b];
    return g.nodes[a].id < g.nodes[b].id;
  });
  return order;
}

DesignSequence design(const Graph& ref, const DesignParams& p) {
  if (ref.nodes.empty()) throw Error(ErrorCode::EmptySequence, "reference network has no nodes");
  if (p.nnodes < 1) throw Error(ErrorCode::InvalidArgument, "nnodes must be at least 1");
  if (static_cast<std::size_t>(p.nnodes) > ref.nodes.size()) {
    throw Error(ErrorCode::ScaffoldTooLarge, "scaffold of " + std::to_string(p.nnodes) + " nodes exceeds the " +
                                                 std::to_string(ref.nodes.size()) + "-node reference network");
  }
  const std::vector<std::size_t> refRank = rankByDegree(ref, false);
  const auto refSize = static_cast<long long>(ref.nodes.size());
  auto refAt = [&](long long k) {
    return refRank[static_cast<std::size_t>(((k + p.nstart) % refSize + refSize) % refSize)];
  };

  DesignSequence out;
  if (p.nnodes == 1) {
    const std::size_t r = refAt(0);
    out.items.push_back(ref.nodes[r].label);
    out.assignment.push_back(ref.nodes[r].id);
    out.route.route = {0};
    return out;
  }

  const Graph scaffold = barabasiAlbert(p.nnodes, p.nedges, p.seed);
  const std::vector<std::size_t> scaffoldRank = rankByDegree(scaffold, p.reverse);
  std::vector<std::size_t> assigned(scaffold.nodes.size());
  for (std::size_t k = 0; k < scaffoldRank.size(); ++k) assigned[scaffoldRank[k]] = refAt(static_cast<long long>(k));
  for (std::size_t v = 0; v < assigned.size(); ++v) out.assignment.push_back(ref.nodes[assigned[v]].id);

  out.route = chinesePostman(scaffold, scaffold.nodes[scaffoldRank.front()].id);
  for (int v : out.route.route) out.items.push_back(ref.nodes[assigned[static_cast<std::size_t>(v)]].label);
  return out;
}

// Ascending voicing from middle C plus the first pitch class.
std::vector<int> voice(const PcSet& chord) {
  const PcSet n = normalOrder(chord);
  std::vector<int> notes;
  int prev = 60 + n[0];
  notes.push_back(prev);
  for (std::size_t i = 1; i < n.cardinality(); ++i) {
    const int step = floorMod(n[i] - n[i - 1], 12);
    prev += step == 0 ? 12 : step;
    notes.push_back(prev);
  }
  return notes;
}

}  // namespace

Graph barabasiAlbert(int nnodes, int nedges, std::uint64_t seed) {
  if (nedges < 1 || nedges >= nnodes) {
    throw Error(ErrorCode::InvalidArgument, "need 1 <= nedges < nnodes");
  }
  Graph g;
  const auto n = static_cast<std::size_t>(nnodes);
  const auto m = static_cast<std::size_t>(nedges);
  for (std::size_t i = 0; i < n; ++i) g.nodes.push_back({static_cast<int>(i), std::to_string(i)});
  std::vector<std::uint64_t> degree(n, 0);
  for (std::size_t v = 1; v < m; ++v) {
    g.edges.push_back({0, static_cast<int>(v), 1.0, std::nullopt});
    ++degree[0];
    ++degree[v];
  }

  std::mt19937_64 rng(seed);
  for (std::size_t v = m; v < n; ++v) {
    std::vector<bool> chosen(v, false);
    std::vector<std::size_t> targets;
    while (targets.size() < m) {
      std::uint64_t total = 0;
      for (std::size_t u = 0; u < v; ++u) {
        if (!chosen[u]) total += degree[u];
      }
      std::size_t pick = 0;
      if (total == 0) {
        std::uint64_t r = rng() % (v - targets.size());
        for (std::size_t u = 0; u < v; ++u) {
          if (chosen[u]) continue;
          if (r == 0) {
            pick = u;
            break;
          }
          --r;
        }
      } else {
        std::uint64_t r = rng() % total;
        for (std::size_t u = 0; u < v; ++u) {
          if (chosen[u]) continue;
          if (r < degree[u]) {
            pick = u;
            break;
          }
          r -= degree[u];
        }
      }
      chosen[pick] = true;
      targets.push_back(pick);
    }
    for (std::size_t u : targets) {
      g.edges.push_back({static_cast<int>(u), static_cast<int>(v), 1.0, std::nullopt});
      ++degree[u];
      ++degree[v];
    }
  }
  return g;
}

Graph networkHarmonyGen(const Catalog& c, const std::vector<OperatorName>& names, MetricId metric, unsigned jobs) {
  std::vector<Graph> parts;
  for (const auto& name : names) parts.push_back(vlNetworkByName(c, name, metric, jobs));
  return unionOf(c, parts);
}

Graph networkHarmonyGen(const Catalog& c, const std::vector<ProbSlice>& slices, MetricId metric,
                        std::uint64_t seed, unsigned jobs) {
  std::vector<Graph> parts;
  for (std::size_t k = 0; k < slices.size(); ++k) {
    NetworkParams p;
    p.thdw = slices[k].thdw;
    p.thup = slices[k].thup;
    p.prob = slices[k].prob;
    p.metric = metric;
    p.seed = seed + k;
    p.jobs = jobs;
    parts.push_back(vlNetwork(c, p));
  }
  return unionOf(c, parts);
}

DesignSequence harmonicDesign(const Graph& ref, const DesignParams& p) { return design(ref, p); }

DesignSequence rhythmicDesign(const Graph& ref, const DesignParams& p) { return design(ref, p); }

std::string DesignSequence::toJson() const {
  nlohmann::json doc;
  doc["items"] = items;
  return doc.dump(2);
}

std::string DesignSequence::routeJson() const {
  nlohmann::json doc;
  doc["route"] = route.route;
  doc["cost"] = route.cost;
  doc["matching"] = std::string(matchingModeName(route.matching));
  doc["odd_nodes"] = route.oddNodes;
  doc["assignment"] = assignment;
  return doc.dump(2);
}

DesignSequence DesignSequence::fromJson(std::string_view text) {
  DesignSequence d;
  try {
    const auto doc = nlohmann::json::parse(text);
    d.items = doc.at("items").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("design sequence JSON: ") + e.what());
  }
  return d;
}

ScoreEvents scoreDesign(const std::vector<PcSet>& chords, const std::vector<RhythmSeq>& rhythms,
                        const Rational& fac, int velocity) {
  if (chords.empty()) throw Error(ErrorCode::EmptySequence, "no chords to score");
  if (fac <= 0) throw Error(ErrorCode::NonPositiveDuration, "duration factor must be positive");
  std::vector<Rational> durations;
  for (const auto& cell : rhythms) durations.insert(durations.end(), cell.durations().begin(), cell.durations().end());
  if (durations.empty()) throw Error(ErrorCode::EmptySequence, "no rhythm cells to score");

  ScoreEvents out;
  for (std::size_t k = 0; k < chords.size(); ++k) {
    if (chords[k].tet() != 12) throw Error(ErrorCode::InvalidArgument, "scores need 12-TET chords");
    out.events.push_back({voice(chords[k]), durations[k % durations.size()] * fac, velocity});
  }
  return out;
}

}  // namespace musnet
