/**
 * @file netgen.cpp
 * @brief Pairwise network construction with deterministic parallel evaluation.
 */

#include "musnet/netgen.h"

#include <functional>
#include <optional>
#include <random>
#include <thread>

#include "musnet/error.h"

namespace musnet {

namespace {

struct PairResult {
  double weight = 0.0;
  std::optional<std::string> label;
};

using PairFn = std::function<std::optional<PairResult>(std::size_t, std::size_t)>;

Graph nodesFromCatalog(const Catalog& c) {
  Graph g;
  g.nodes.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) g.nodes.push_back({static_cast<int>(i), c.rows[i].element});
  return g;
}

// One draw per candidate pair, in pair order.
std::vector<char> acceptMask(std::size_t n, double prob, std::uint64_t seed) {
  const std::size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
  std::vector<char> mask(pairs, 1);
  if (prob >= 1.0) return mask;
  std::mt19937_64 rng(seed);
  for (auto& m : mask) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    m = u < prob ? 1 : 0;
  }
  return mask;
}

std::size_t pairIndex(std::size_t n, std::size_t i, std::size_t j) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

Graph pairwiseNetwork(const Catalog& c, unsigned jobs, const std::vector<char>& mask, const PairFn& fn) {
  Graph g = nodesFromCatalog(c);
  const std::size_t n = c.size();
  std::vector<std::vector<Edge>> rows(n);

  auto work = [&](std::size_t worker, std::size_t stride) {
    for (std::size_t i = worker; i < n; i += stride) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!mask[pairIndex(n, i, j)]) continue;
        if (auto r = fn(i, j)) {
          rows[i].push_back({static_cast<int>(i), static_cast<int>(j), r->weight, std::move(r->label)});
        }
      }
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, n));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          work(w, workers);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  for (auto& row : rows) {
    for (auto& e : row) g.edges.push_back(std::move(e));
  }
  return g;
}

bool inside(double d, double lo, double hi) { return lo < d && d < hi; }

Graph featureNetwork(const Catalog& c, const NetworkParams& p) {
  p.validate();
  std::vector<std::vector<int>> features;
  features.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) features.push_back(c.featuresAt(i));
  return pairwiseNetwork(c, p.jobs, acceptMask(c.size(), p.prob, p.seed),
                         [&](std::size_t i, std::size_t j) -> std::optional<PairResult> {
                           const double d = distance(features[i], features[j], p.metric);
                           if (!inside(d, p.thdw, p.thup)) return std::nullopt;
                           return PairResult{d, std::nullopt};
                         });
}

std::string stripSpaces(std::string_view text) {
  std::string out;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') out.push_back(ch);
  }
  return out;
}

std::size_t locate(const Catalog& c, std::string_view focus) {
  if (auto i = c.indexOf(focus)) return *i;
  const std::string element = stripSpaces(focus);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.rows[i].element == element) return i;
  }
  throw Error(ErrorCode::NoSuchNode, "no catalog row matches '" + std::string(focus) + "'");
}

}  // namespace

Graph pcsNetwork(const Catalog& c, const NetworkParams& p) { return featureNetwork(c, p); }

Graph rhythmNetwork(const Catalog& c, const NetworkParams& p) { return featureNetwork(c, p); }

EgoNetwork egoNetwork(const Catalog& c, std::string_view focus, const EgoParams& p) {
  if (!(p.thdwEgo < p.thupEgo) || !(p.thdw < p.thup)) {
    throw Error(ErrorCode::InvalidArgument, "lower threshold must be below upper threshold");
  }
  const std::size_t center = locate(c, focus);
  const std::vector<int> fc = c.featuresAt(center);

  EgoNetwork out;
  out.ego.nodes.push_back({static_cast<int>(center), c.rows[center].element});
  std::vector<std::size_t> alters;
  std::vector<std::vector<int>> features;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i == center) continue;
    std::vector<int> f = c.featuresAt(i);
    const double d = distance(fc, f, p.metric);
    if (!inside(d, p.thdwEgo, p.thupEgo)) continue;
    alters.push_back(i);
    features.push_back(std::move(f));
    out.ego.nodes.push_back({static_cast<int>(i), c.rows[i].element});
    out.ego.edges.push_back({static_cast<int>(center), static_cast<int>(i), d, std::nullopt});
  }
  for (std::size_t a = 0; a < alters.size(); ++a) {
    out.alters.nodes.push_back({static_cast<int>(alters[a]), c.rows[alters[a]].element});
    for (std::size_t b = a + 1; b < alters.size(); ++b) {
      const double d = distance(features[a], features[b], p.metric);
      if (inside(d, p.thdw, p.thup)) {
        out.alters.edges.push_back({static_cast<int>(alters[a]), static_cast<int>(alters[b]), d, std::nullopt});
      }
    }
  }
  return out;
}

Graph vlNetwork(const Catalog& c, const NetworkParams& p) {
  p.validate();
  std::vector<PcSet> elements;
  elements.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) elements.push_back(c.pcsAt(i));
  return pairwiseNetwork(c, p.jobs, acceptMask(c.size(), p.prob, p.seed),
                         [&](std::size_t i, std::size_t j) -> std::optional<PairResult> {
                           const double d = minimalDistance(elements[i], elements[j], p.metric);
                           if (!inside(d, p.thdw, p.thup)) return std::nullopt;
                           return PairResult{d, generalizedOpsName(elements[i], elements[j], p.metric).op.toString()};
                         });
}

Graph vlNetworkByName(const Catalog& c, const OperatorName& name, MetricId metric, unsigned jobs) {
  if (jobs == 0) throw Error(ErrorCode::InvalidArgument, "jobs must be at least 1");
  const std::string wanted = OperatorName::distanceOp(name.components).toString();
  std::vector<PcSet> elements;
  elements.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) elements.push_back(c.pcsAt(i));
  return pairwiseNetwork(c, jobs, acceptMask(c.size(), 1.0, 0),
                         [&](std::size_t i, std::size_t j) -> std::optional<PairResult> {
                           if (opsNameDistance(elements[i], elements[j]).toString() != wanted) return std::nullopt;
                           const double d = minimalDistance(elements[i], elements[j], metric);
                           if (!(d > 0.0)) return std::nullopt;
                           return PairResult{d, wanted};
                         });
}

Graph rLeadNetwork(const Catalog& c, const NetworkParams& p) {
  p.validate();
  std::vector<RhythmSeq> elements;
  elements.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) elements.push_back(c.rhythmAt(i));
  return pairwiseNetwork(c, p.jobs, acceptMask(c.size(), p.prob, p.seed),
                         [&](std::size_t i, std::size_t j) -> std::optional<PairResult> {
                           if (elements[i].size() != elements[j].size()) return std::nullopt;
                           const double d = rhythmDistance(elements[i], elements[j], p.metric);
                           if (!inside(d, p.thdw, p.thup)) return std::nullopt;
                           return PairResult{d, std::nullopt};
                         });
}

}  // namespace musnet
