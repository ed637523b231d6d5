/**
 * @file score.h
 * @brief Chord-progression and orchestration networks from symbolic sequences.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "musnet/catalog.h"
#include "musnet/community.h"
#include "musnet/graph.h"
#include "musnet/pitch.h"

namespace musnet {

struct ChordSequence {
  int tet = 12;
  std::vector<PcSet> chords;

  /// {"tet":12,"chords":[[0,4,7],...]}; "tet" defaults to 12.
  static ChordSequence fromJson(std::string_view text);
  std::string toJson() const;
};

/// Throws EmptySequence when the file holds no chords.
ChordSequence readChordSequence(const std::filesystem::path& path);

/// Distinct normal-order chords in order of first appearance, interval-vector features.
Catalog scoreDictionary(const ChordSequence& s);

struct ScoreNetwork {
  /// Directed; one node per distinct normal-order chord, edge weight = transition count.
  Graph graph;
  /// Occurrences per node, aligned with graph.nodes.
  std::vector<int> counts;
  double avgdeg = 0.0;
  double modularity = 0.0;
  std::vector<int> partition;
};

/// Edge labels are voice-leading operators when `general`, distance operators otherwise.
ScoreNetwork scoreNetwork(const ChordSequence& s, bool general = true,
                          MetricId metric = MetricId::Euclidean, std::uint64_t seed = 0);

/// scoreNetwork on chords [start, end). Throws EmptySequence on an empty slice.
ScoreNetwork scoreSubNetwork(const ChordSequence& s, std::size_t start, std::size_t end,
                             bool general = true, MetricId metric = MetricId::Euclidean,
                             std::uint64_t seed = 0);

struct OrchVector {
  /// One 0/1 entry per instrument.
  std::vector<int> bits;
  /// Binary value with the first instrument as most significant bit.
  std::uint64_t num = 0;

  static OrchVector fromBits(std::vector<int> bits);
};

struct Orchestration {
  std::vector<std::string> instruments;
  std::vector<OrchVector> beats;
};

/// Header row of instrument names, then one 0/1 row per beat.
Orchestration parseOrchestration(std::string_view csvText);

struct OrchNetwork {
  /// Directed; one node per distinct vector (label = num), weight = transition count.
  Graph graph;
  double avgdeg = 0.0;
  double modularity = 0.0;
  std::vector<int> partition;
};

OrchNetwork orchestralNetwork(const std::vector<OrchVector>& seq, std::uint64_t seed = 0);

}  // namespace musnet
