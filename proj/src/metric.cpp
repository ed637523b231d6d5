/**
 * @file metric.cpp
 * @brief Euclidean, taxicab and Chebyshev norms.
 */

#include "musnet/metric.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "musnet/error.h"

namespace musnet {

MetricId parseMetric(std::string_view name) {
  if (name == "euclidean") return MetricId::Euclidean;
  if (name == "taxicab" || name == "cityblock" || name == "manhattan") return MetricId::Taxicab;
  if (name == "chebyshev") return MetricId::Chebyshev;
  throw Error(ErrorCode::InvalidArgument, "unknown metric '" + std::string(name) + "'");
}

std::string_view metricName(MetricId metric) {
  switch (metric) {
    case MetricId::Euclidean: return "euclidean";
    case MetricId::Taxicab: return "taxicab";
    case MetricId::Chebyshev: return "chebyshev";
  }
  return "euclidean";
}

namespace {

template <typename T>
double genericDistance(std::span<const T> a, std::span<const T> b, MetricId metric) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch, "vectors of length " + std::to_string(a.size()) +
                                                  " and " + std::to_string(b.size()));
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = std::abs(static_cast<double>(a[i]) - static_cast<double>(b[i]));
    switch (metric) {
      case MetricId::Euclidean: acc += d * d; break;
      case MetricId::Taxicab: acc += d; break;
      case MetricId::Chebyshev: acc = std::max(acc, d); break;
    }
  }
  return metric == MetricId::Euclidean ? std::sqrt(acc) : acc;
}

}  // namespace

double distance(std::span<const double> a, std::span<const double> b, MetricId metric) {
  return genericDistance(a, b, metric);
}

double distance(std::span<const int> a, std::span<const int> b, MetricId metric) {
  return genericDistance(a, b, metric);
}

std::int64_t normTerm(std::int64_t diff, MetricId metric) {
  return metric == MetricId::Euclidean ? diff * diff : std::llabs(diff);
}

std::int64_t combineTerms(std::int64_t acc, std::int64_t term, MetricId metric) {
  return metric == MetricId::Chebyshev ? std::max(acc, term) : acc + term;
}

double finishNorm(std::int64_t acc, MetricId metric) {
  return metric == MetricId::Euclidean ? std::sqrt(static_cast<double>(acc))
                                       : static_cast<double>(acc);
}

}  // namespace musnet
