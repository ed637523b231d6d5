/**
 * @file score.cpp
 * @brief Chord-sequence ingestion, progression and orchestration networks.
 */

#include "musnet/score.h"

#include <map>

#include <json.hpp>

#include "musnet/csv.h"
#include "musnet/error.h"
#include "musnet/operators.h"

namespace musnet {

namespace {

void summarize(const Graph& g, std::uint64_t seed, double& avgdeg, double& q, std::vector<int>& partition) {
  const Graph undirected = undirectedProjection(g);
  avgdeg = averageDegree(g);
  const Communities c = detectCommunities(undirected, seed);
  q = c.modularity;
  partition = c.partition;
}

}  // namespace

ChordSequence ChordSequence::fromJson(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("chord sequence JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("chords") || !doc["chords"].is_array()) {
    throw Error(ErrorCode::ParseError, "chord sequence JSON needs a \"chords\" array");
  }
  ChordSequence s;
  s.tet = doc.value("tet", 12);
  if (s.tet < 1) throw Error(ErrorCode::InvalidArgument, "tet must be positive");
  for (const auto& chord : doc["chords"]) {
    if (!chord.is_array()) throw Error(ErrorCode::ParseError, "each chord must be an integer array");
    std::vector<int> pitches;
    for (const auto& p : chord) {
      if (!p.is_number_integer()) throw Error(ErrorCode::ParseError, "chord pitches must be integers");
      pitches.push_back(p.get<int>());
    }
    s.chords.emplace_back(std::move(pitches), s.tet);
  }
  if (s.chords.empty()) throw Error(ErrorCode::EmptySequence, "no chords in sequence");
  return s;
}

std::string ChordSequence::toJson() const {
  nlohmann::json doc;
  doc["tet"] = tet;
  doc["chords"] = nlohmann::json::array();
  for (const auto& c : chords) doc["chords"].push_back(c.pitches());
  return doc.dump();
}

ChordSequence readChordSequence(const std::filesystem::path& path) {
  const std::string text = csv::readText(path.string());
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    throw Error(ErrorCode::EmptySequence, "empty chord sequence file " + path.string());
  }
  return ChordSequence::fromJson(text);
}

Catalog scoreDictionary(const ChordSequence& s) {
  if (s.chords.empty()) throw Error(ErrorCode::EmptySequence, "no chords in sequence");
  Catalog c;
  c.kind = CatalogKind::Pcs;
  c.tet = s.tet;
  std::map<PcSet, bool> seen;
  std::map<std::size_t, int> perCardinality;
  for (const auto& chord : s.chords) {
    PcSet n = normalOrder(chord);
    if (!seen.emplace(n, true).second) continue;
    const int k = ++perCardinality[n.cardinality()];
    c.rows.push_back({std::to_string(n.cardinality()) + "-" + std::to_string(k), n.toString(),
                      intervalVector(n).toString(), false});
  }
  return c;
}

ScoreNetwork scoreNetwork(const ChordSequence& s, bool general, MetricId metric, std::uint64_t seed) {
  if (s.chords.empty()) throw Error(ErrorCode::EmptySequence, "no chords in sequence");
  ScoreNetwork out;
  out.graph.directed = true;
  std::map<PcSet, std::size_t> index;
  std::vector<PcSet> chords;
  std::vector<std::size_t> steps;
  for (const auto& chord : s.chords) {
    PcSet n = normalOrder(chord);
    auto [it, inserted] = index.try_emplace(n, chords.size());
    if (inserted) {
      out.graph.nodes.push_back({static_cast<int>(chords.size()), n.toString()});
      out.counts.push_back(0);
      chords.push_back(n);
    }
    ++out.counts[it->second];
    steps.push_back(it->second);
  }

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edgeIndex;
  for (std::size_t k = 0; k + 1 < steps.size(); ++k) {
    const auto key = std::make_pair(steps[k], steps[k + 1]);
    auto [it, inserted] = edgeIndex.try_emplace(key, out.graph.edges.size());
    if (inserted) {
      const GeneralizedOps ops = generalizedOpsName(chords[key.first], chords[key.second], metric);
      const OperatorName label = general ? ops.op : OperatorName::distanceOp(ops.op.components);
      out.graph.edges.push_back({static_cast<int>(key.first), static_cast<int>(key.second), 0.0, label.toString()});
    }
    out.graph.edges[it->second].weight += 1.0;
  }

  summarize(out.graph, seed, out.avgdeg, out.modularity, out.partition);
  return out;
}

ScoreNetwork scoreSubNetwork(const ChordSequence& s, std::size_t start, std::size_t end, bool general,
                             MetricId metric, std::uint64_t seed) {
  end = std::min(end, s.chords.size());
  if (start >= end) throw Error(ErrorCode::EmptySequence, "empty chord range");
  ChordSequence slice;
  slice.tet = s.tet;
  slice.chords.assign(s.chords.begin() + static_cast<std::ptrdiff_t>(start),
                      s.chords.begin() + static_cast<std::ptrdiff_t>(end));
  return scoreNetwork(slice, general, metric, seed);
}

OrchVector OrchVector::fromBits(std::vector<int> bits) {
  if (bits.size() > 64) throw Error(ErrorCode::InvalidArgument, "at most 64 instruments");
  OrchVector v;
  for (int b : bits) {
    if (b != 0 && b != 1) throw Error(ErrorCode::ParseError, "orchestration entries must be 0 or 1");
    v.num = (v.num << 1) | static_cast<std::uint64_t>(b);
  }
  v.bits = std::move(bits);
  return v;
}

Orchestration parseOrchestration(std::string_view csvText) {
  const auto table = csv::parse(csvText);
  if (table.empty()) throw Error(ErrorCode::EmptySequence, "empty orchestration table");
  Orchestration o;
  o.instruments = table.front();
  for (std::size_t r = 1; r < table.size(); ++r) {
    if (table[r].size() != o.instruments.size()) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(r + 1) + ": expected " +
                                             std::to_string(o.instruments.size()) + " columns");
    }
    std::vector<int> bits;
    for (const auto& field : table[r]) {
      if (field == "0") {
        bits.push_back(0);
      } else if (field == "1") {
        bits.push_back(1);
      } else {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(r + 1) + ": entries must be 0 or 1");
      }
    }
    o.beats.push_back(OrchVector::fromBits(std::move(bits)));
  }
  if (o.beats.empty()) throw Error(ErrorCode::EmptySequence, "orchestration table has no beats");
  return o;
}

OrchNetwork orchestralNetwork(const std::vector<OrchVector>& seq, std::uint64_t seed) {
  if (seq.empty()) throw Error(ErrorCode::EmptySequence, "empty orchestration sequence");
  OrchNetwork out;
  out.graph.directed = true;
  std::map<std::uint64_t, std::size_t> index;
  std::vector<std::size_t> steps;
  for (const auto& v : seq) {
    auto [it, inserted] = index.try_emplace(v.num, out.graph.nodes.size());
    if (inserted) out.graph.nodes.push_back({static_cast<int>(v.num), std::to_string(v.num)});
    steps.push_back(it->second);
  }
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edgeIndex;
  for (std::size_t k = 0; k + 1 < steps.size(); ++k) {
    const auto key = std::make_pair(steps[k], steps[k + 1]);
    auto [it, inserted] = edgeIndex.try_emplace(key, out.graph.edges.size());
    if (inserted) {
      out.graph.edges.push_back({out.graph.nodes[key.first].id, out.graph.nodes[key.second].id, 0.0, std::nullopt});
    }
    out.graph.edges[it->second].weight += 1.0;
  }
  summarize(out.graph, seed, out.avgdeg, out.modularity, out.partition);
  return out;
}

}  // namespace musnet
