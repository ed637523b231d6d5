/**
 * @file graph.cpp
 * @brief Graph helpers and CSV export/import.
 */

#include "musnet/graph.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include "musnet/csv.h"
#include "musnet/error.h"

namespace musnet {

std::string formatWeight(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::optional<std::size_t> Graph::indexOfId(int id) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].id == id) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Graph::indexOfLabel(std::string_view label) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].label == label) return i;
  }
  return std::nullopt;
}

std::vector<double> Graph::degrees() const {
  std::map<int, std::size_t> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) index[nodes[i].id] = i;
  std::vector<double> deg(nodes.size(), 0.0);
  for (const auto& e : edges) {
    deg[index.at(e.source)] += 1.0;
    deg[index.at(e.target)] += 1.0;
  }
  return deg;
}

double Graph::totalWeight() const {
  double total = 0.0;
  for (const auto& e : edges) total += e.weight;
  return total;
}

std::string Graph::nodesCsv() const {
  std::ostringstream out;
  csv::writeRow(out, {"Id", "Label"});
  for (const auto& n : nodes) csv::writeRow(out, {std::to_string(n.id), n.label});
  return out.str();
}

std::string Graph::edgesCsv() const {
  bool labeled = false;
  for (const auto& e : edges) labeled = labeled || e.label.has_value();
  std::ostringstream out;
  csv::Row header{"Source", "Target", "Weight"};
  if (labeled) header.emplace_back("Label");
  csv::writeRow(out, header);
  for (const auto& e : edges) {
    csv::Row row{std::to_string(e.source), std::to_string(e.target), formatWeight(e.weight)};
    if (labeled) row.push_back(e.label.value_or(""));
    csv::writeRow(out, row);
  }
  return out.str();
}

Graph Graph::fromCsv(std::string_view nodesText, std::string_view edgesText, bool directed) {
  auto toInt = [](const std::string& s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw Error(ErrorCode::ParseError, "bad node id '" + s + "'");
    return v;
  };
  Graph g;
  g.directed = directed;
  const auto nodeRows = csv::parse(nodesText);
  for (std::size_t i = 0; i < nodeRows.size(); ++i) {
    const auto& r = nodeRows[i];
    if (i == 0 && !r.empty() && r[0] == "Id") continue;
    if (r.size() < 2) throw Error(ErrorCode::ParseError, "nodes line " + std::to_string(i + 1));
    g.nodes.push_back({toInt(r[0]), r[1]});
  }
  const auto edgeRows = csv::parse(edgesText);
  for (std::size_t i = 0; i < edgeRows.size(); ++i) {
    const auto& r = edgeRows[i];
    if (i == 0 && !r.empty() && r[0] == "Source") continue;
    if (r.size() < 3) throw Error(ErrorCode::ParseError, "edges line " + std::to_string(i + 1));
    Edge e{toInt(r[0]), toInt(r[1]), 0.0, std::nullopt};
    try {
      e.weight = std::stod(r[2]);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad weight '" + r[2] + "'");
    }
    if (r.size() > 3 && !r[3].empty()) e.label = r[3];
    if (!g.indexOfId(e.source) || !g.indexOfId(e.target)) {
      throw Error(ErrorCode::NoSuchNode, "edge " + r[0] + "-" + r[1] + " references an unknown node");
    }
    g.edges.push_back(std::move(e));
  }
  return g;
}

Graph undirectedProjection(const Graph& g) {
  Graph out;
  out.nodes = g.nodes;
  out.directed = false;
  std::map<std::pair<int, int>, std::size_t> index;
  for (const auto& e : g.edges) {
    if (e.source == e.target) continue;
    const auto key = std::minmax(e.source, e.target);
    const auto [it, inserted] = index.try_emplace({key.first, key.second}, out.edges.size());
    if (inserted) {
      out.edges.push_back({key.first, key.second, e.weight, std::nullopt});
    } else {
      out.edges[it->second].weight += e.weight;
    }
  }
  return out;
}

double averageDegree(const Graph& g) {
  if (g.nodes.empty()) return 0.0;
  const Graph u = undirectedProjection(g);
  return 2.0 * static_cast<double>(u.edges.size()) / static_cast<double>(u.nodes.size());
}

void NetworkParams::validate() const {
  if (!(thdw < thup)) {
    throw Error(ErrorCode::InvalidArgument, "lower threshold " + formatWeight(thdw) +
                                                " must be below upper threshold " + formatWeight(thup));
  }
  if (thdw < 0.0) throw Error(ErrorCode::InvalidArgument, "lower threshold must be non-negative");
  if (!(prob > 0.0 && prob <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "edge probability must lie in (0, 1]");
  }
  if (jobs == 0) throw Error(ErrorCode::InvalidArgument, "jobs must be at least 1");
}

}  // namespace musnet
