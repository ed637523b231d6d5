/**
 * @file netgen_test.cpp
 * @brief Threshold, ego and operator-name networks.
 */

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <set>
#include <tuple>
#include <algorithm>

#include "musnet/error.h"
#include "musnet/netgen.h"
#include "oracles.h"

using namespace musnet;

namespace {

using EdgeKey = std::tuple<int, int, double>;

std::set<EdgeKey> edgeSet(const Graph& g) {
  std::set<EdgeKey> out;
  for (const auto& e : g.edges) out.insert({e.source, e.target, e.weight});
  return out;
}

NetworkParams params(double thdw, double thup, double prob = 1.0, std::uint64_t seed = 0, unsigned jobs = 1) {
  NetworkParams p;
  p.thdw = thdw;
  p.thup = thup;
  p.prob = prob;
  p.seed = seed;
  p.jobs = jobs;
  return p;
}

Catalog catalogOf(const std::vector<std::string>& elements, CatalogKind kind) {
  Catalog c;
  c.kind = kind;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    std::string features;
    if (kind == CatalogKind::Pcs) {
      features = intervalVector(PcSet::parse(elements[i])).toString();
    } else {
      features = durationVector(RhythmSeq::parse(elements[i])).toString();
    }
    c.rows.push_back({"r" + std::to_string(i), elements[i], features, false});
  }
  return c;
}

}  // namespace

TEST(NetworkParams, Validation) {
  EXPECT_THROW(params(0.2, 0.1).validate(), Error);
  EXPECT_THROW(params(0.5, 0.5).validate(), Error);
  EXPECT_THROW(params(0.0, 1.0, 0.0).validate(), Error);
  EXPECT_THROW(params(0.0, 1.0, 1.5).validate(), Error);
  EXPECT_THROW(params(0.0, 1.0, 1.0, 0, 0).validate(), Error);
  EXPECT_NO_THROW(params(0.0, 1.0).validate());
}

TEST(PcsNetwork, TrichordsMatchBruteForce) {
  const Catalog c = pcsDictionary(3, 12).catalog;
  const Graph g = pcsNetwork(c, params(0.0, 1.5));
  std::set<EdgeKey> expected;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      const auto a = oracle::intervalVector(c.pcsAt(i).pitches(), 12);
      const auto b = oracle::intervalVector(c.pcsAt(j).pitches(), 12);
      double s = 0;
      for (std::size_t k = 0; k < a.size(); ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
      const double d = std::sqrt(s);
      if (d > 0.0 && d < 1.5) expected.insert({static_cast<int>(i), static_cast<int>(j), d});
    }
  }
  EXPECT_EQ(edgeSet(g), expected);
  EXPECT_EQ(g.nodes.size(), 12U);
  EXPECT_EQ(g.nodes[0].label, c.rows[0].element);
}

TEST(PcsNetwork, UnboundedUpperThresholdLinksDistinctFeatures) {
  const Catalog c = pcsDictionary(4, 12).catalog;
  const Graph g = pcsNetwork(c, params(0.0, std::numeric_limits<double>::infinity()));
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) distinct += c.rows[i].features != c.rows[j].features;
  }
  EXPECT_EQ(g.edges.size(), distinct);
}

TEST(PcsNetwork, ThresholdSoundnessAndSimplicity) {
  const Catalog c = pcsDictionary(5, 12).catalog;
  const Graph g = pcsNetwork(c, params(1.0, 2.5));
  std::set<std::pair<int, int>> pairs;
  for (const auto& e : g.edges) {
    EXPECT_GT(e.weight, 1.0);
    EXPECT_LT(e.weight, 2.5);
    EXPECT_LT(e.source, e.target);
    EXPECT_TRUE(pairs.insert({e.source, e.target}).second);
  }
}

TEST(PcsNetwork, DeterministicAcrossWorkersAndSeeds) {
  const Catalog c = pcsDictionary(5, 12).catalog;
  const Graph one = pcsNetwork(c, params(0.0, 3.0, 0.5, 7, 1));
  const Graph four = pcsNetwork(c, params(0.0, 3.0, 0.5, 7, 4));
  EXPECT_EQ(one.edgesCsv(), four.edgesCsv());
  EXPECT_EQ(one.edgesCsv(), pcsNetwork(c, params(0.0, 3.0, 0.5, 7, 3)).edgesCsv());
  const Graph full = pcsNetwork(c, params(0.0, 3.0));
  EXPECT_LT(one.edges.size(), full.edges.size());
  EXPECT_NE(one.edgesCsv(), pcsNetwork(c, params(0.0, 3.0, 0.5, 8)).edgesCsv());
  const auto sub = edgeSet(one);
  const auto all = edgeSet(full);
  EXPECT_TRUE(std::includes(all.begin(), all.end(), sub.begin(), sub.end()));
}

TEST(EgoNetwork, HandComputedCatalog) {
  // Interval vectors: [0,0,1,1,1,0], [1,1,1,1,1,1], [0,0,4,0,0,2].
  const Catalog c = catalogOf({"[0,4,7]", "[0,1,4,6]", "[0,3,6,9]"}, CatalogKind::Pcs);
  EgoParams p;
  p.thupEgo = 2.0;
  p.thdwEgo = 0.0;
  p.thup = 10.0;
  p.thdw = 0.0;
  const EgoNetwork ego = egoNetwork(c, "r0", p);
  // d(r0,r1) = sqrt(3) < 2, d(r0,r2) = sqrt(9+1+1+4) = sqrt(15) > 2.
  ASSERT_EQ(ego.ego.edges.size(), 1U);
  EXPECT_EQ(ego.ego.edges[0].target, 1);
  EXPECT_DOUBLE_EQ(ego.ego.edges[0].weight, std::sqrt(3.0));
  EXPECT_EQ(ego.alters.nodes.size(), 1U);
  EXPECT_TRUE(ego.alters.edges.empty());

  p.thupEgo = 4.0;
  const EgoNetwork wide = egoNetwork(c, "[0,4,7]", p);
  ASSERT_EQ(wide.ego.edges.size(), 2U);
  ASSERT_EQ(wide.alters.edges.size(), 1U);
  // d(r1,r2) = sqrt(1+1+9+1+1+1) = sqrt(14).
  EXPECT_DOUBLE_EQ(wide.alters.edges[0].weight, std::sqrt(14.0));
}

TEST(EgoNetwork, EmptyAndRestriction) {
  const Catalog c = pcsDictionary(4, 12).catalog;
  EgoParams p;
  p.thupEgo = 0.5;
  EXPECT_TRUE(egoNetwork(c, "4-1", p).ego.edges.empty());
  p.thupEgo = 1.5;
  const auto ego = egoNetwork(c, "4-1", p);
  const auto all = edgeSet(pcsNetwork(c, params(0.0, 1.5)));
  for (const auto& e : ego.alters.edges) EXPECT_TRUE(all.count({e.source, e.target, e.weight}));
  try {
    egoNetwork(c, "nope", p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoSuchNode);
  }
}

TEST(VlNetwork, MatchesOracleAndLabels) {
  const Catalog c = pcsDictionary(3, 12).catalog;
  const Graph g = vlNetwork(c, params(0.0, 2.5));
  std::set<std::pair<int, int>> expected;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      const double d = oracle::vlDistance(c.pcsAt(i).pitches(), c.pcsAt(j).pitches(), 12, MetricId::Euclidean);
      if (d > 0.0 && d < 2.5) expected.insert({static_cast<int>(i), static_cast<int>(j)});
    }
  }
  std::set<std::pair<int, int>> got;
  for (const auto& e : g.edges) {
    got.insert({e.source, e.target});
    const PcSet a = c.pcsAt(static_cast<std::size_t>(e.source));
    const PcSet b = c.pcsAt(static_cast<std::size_t>(e.target));
    EXPECT_EQ(e.label.value_or(""), opsNameVl(a, b).toString());
    EXPECT_EQ(applyVlOp(a, OperatorName::parse(*e.label)), normalOrder(b));
  }
  EXPECT_EQ(got, expected);
  EXPECT_EQ(vlNetwork(c, params(0.0, 2.5, 1.0, 0, 3)).edgesCsv(), g.edgesCsv());
}

TEST(VlNetworkByName, UnitOperator) {
  const Catalog c = pcsDictionary(3, 12).catalog;
  const Graph g = vlNetworkByName(c, OperatorName::parse("O(1)"));
  ASSERT_FALSE(g.edges.empty());
  for (const auto& e : g.edges) {
    EXPECT_DOUBLE_EQ(vlDistance(c.pcsAt(static_cast<std::size_t>(e.source)), c.pcsAt(static_cast<std::size_t>(e.target))),
                     1.0);
  }
  // Same edges as a threshold network just around distance 1.
  std::set<std::pair<int, int>> byName, byThreshold;
  for (const auto& e : g.edges) byName.insert({e.source, e.target});
  for (const auto& e : vlNetwork(c, params(0.0, 1.0 + 1e-9)).edges) byThreshold.insert({e.source, e.target});
  EXPECT_EQ(byName, byThreshold);

  EXPECT_TRUE(vlNetworkByName(c, OperatorName::parse("O(0)")).edges.empty());
}

TEST(VlNetworkByName, MajorMinorEdge) {
  const Catalog c = pcsDictionary(3, 12, PcsOrder::Normal0).catalog;
  std::size_t maj = c.size(), min = c.size();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.rows[i].element == "[0,4,7]") maj = i;
    if (c.rows[i].element == "[0,3,7]") min = i;
  }
  ASSERT_LT(maj, c.size());
  ASSERT_LT(min, c.size());
  const Graph g = vlNetworkByName(c, OperatorName::parse("O(1)"));
  bool found = false;
  for (const auto& e : g.edges) {
    found = found || (std::minmax(e.source, e.target) ==
                      std::minmax(static_cast<int>(maj), static_cast<int>(min)));
  }
  EXPECT_TRUE(found);
}

TEST(RhythmNetworks, ThresholdsAndOracle) {
  const std::vector<std::string> sym{"q", "e", "e", "s"};
  const Catalog c = rhythmDictionary(3, sym).catalog;
  const Graph g = rhythmNetwork(c, params(0.0, 2.0));
  for (const auto& e : g.edges) {
    const auto a = c.featuresAt(static_cast<std::size_t>(e.source));
    const auto b = c.featuresAt(static_cast<std::size_t>(e.target));
    double s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
    EXPECT_DOUBLE_EQ(e.weight, std::sqrt(s));
    EXPECT_GT(e.weight, 0.0);
    EXPECT_LT(e.weight, 2.0);
  }

  const Graph r = rLeadNetwork(c, params(0.0, 0.2));
  std::size_t expected = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      const auto a = c.rhythmAt(i).durations();
      const auto b = c.rhythmAt(j).durations();
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < b.size(); ++k) {
        double s = 0;
        for (std::size_t t = 0; t < a.size(); ++t) {
          const double diff = boost::rational_cast<double>(a[t] - b[(t + k) % b.size()]);
          s += diff * diff;
        }
        best = std::min(best, std::sqrt(s));
      }
      expected += best > 0.0 && best < 0.2;
    }
  }
  EXPECT_EQ(r.edges.size(), expected);
}
