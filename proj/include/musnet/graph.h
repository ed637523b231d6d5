/**
 * @file graph.h
 * @brief Weighted node/edge graphs and their Gephi-style CSV form.
 *
 * nodes.csv carries "Id,Label"; edges.csv carries "Source,Target,Weight" plus a
 * "Label" column when any edge is labeled. Weights are raw distances (or
 * transition counts for sequence networks), never inverted.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "musnet/metric.h"

namespace musnet {

struct Node {
  int id = 0;
  std::string label;
};

struct Edge {
  int source = 0;
  int target = 0;
  double weight = 0.0;
  std::optional<std::string> label;
};

struct Graph {
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  bool directed = false;

  std::optional<std::size_t> indexOfId(int id) const;
  std::optional<std::size_t> indexOfLabel(std::string_view label) const;
  std::vector<double> degrees() const;  // weighted=false: edge counts per node index
  double totalWeight() const;

  std::string nodesCsv() const;
  std::string edgesCsv() const;
  static Graph fromCsv(std::string_view nodesText, std::string_view edgesText, bool directed = false);
};

/// Shortest decimal text that round-trips the double.
std::string formatWeight(double value);

/// Undirected simple projection: antiparallel weights are summed, self-loops dropped.
Graph undirectedProjection(const Graph& g);

/// 2 * |undirected edges| / |nodes| on the projection.
double averageDegree(const Graph& g);

/// Threshold-network parameters. Edges need thdw < d < thup and, when
/// prob < 1, a seeded uniform draw below prob.
struct NetworkParams {
  double thup = 1.5;
  double thdw = 0.0;
  MetricId metric = MetricId::Euclidean;
  double prob = 1.0;
  std::uint64_t seed = 0;
  unsigned jobs = 1;

  /// Throws InvalidArgument when thdw >= thup, thdw < 0 or prob outside (0, 1].
  void validate() const;
};

}  // namespace musnet
