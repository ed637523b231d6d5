/**
 * @file netgen.h
 * @brief Threshold, ego and operator-name networks over catalogs.
 *
 * Node ids are catalog row indices and node labels are the element texts.
 * Undirected edges are emitted once per pair (i < j) in row-major pair order,
 * independent of the worker count.
 */

#pragma once

#include <string_view>

#include "musnet/catalog.h"
#include "musnet/graph.h"
#include "musnet/operators.h"

namespace musnet {

/// Edges between rows whose interval vectors lie at distance in (thdw, thup).
Graph pcsNetwork(const Catalog& c, const NetworkParams& p);

struct EgoParams {
  double thupEgo = 1.5;
  double thdwEgo = 0.0;
  double thup = 1.5;
  double thdw = 0.0;
  MetricId metric = MetricId::Euclidean;
};

struct EgoNetwork {
  /// Focal node first, then its alters; edges ego -> alter.
  Graph ego;
  /// The alters and the edges among them.
  Graph alters;
};

/// `focus` is a row name (with or without "Z") or an element text.
/// Throws NoSuchNode when nothing matches.
EgoNetwork egoNetwork(const Catalog& c, std::string_view focus, const EgoParams& p);

/// Edges weighted by minimal voice-leading distance between elements, labeled
/// with the voice-leading operator from the lower to the higher row.
Graph vlNetwork(const Catalog& c, const NetworkParams& p);

/// Edges between rows whose distance-operator name equals `name`; weight is
/// the voice-leading distance.
Graph vlNetworkByName(const Catalog& c, const OperatorName& name,
                      MetricId metric = MetricId::Euclidean, unsigned jobs = 1);

/// Threshold network over duration-vector features.
Graph rhythmNetwork(const Catalog& c, const NetworkParams& p);

/// Threshold network over rhythmDistance between elements.
Graph rLeadNetwork(const Catalog& c, const NetworkParams& p);

}  // namespace musnet
