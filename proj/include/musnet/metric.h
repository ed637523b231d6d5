/**
 * @file metric.h
 * @brief Vector norms used by every distance in the library.
 */

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace musnet {

enum class MetricId { Euclidean, Taxicab, Chebyshev };

/// Accepts "euclidean", "taxicab" (alias "cityblock"/"manhattan") and "chebyshev".
MetricId parseMetric(std::string_view name);
std::string_view metricName(MetricId metric);

double distance(std::span<const double> a, std::span<const double> b, MetricId metric);
double distance(std::span<const int> a, std::span<const int> b, MetricId metric);

// Integer-valued accumulators over a difference vector. For Euclidean the
// accumulated value is the squared norm, so comparisons stay exact.
std::int64_t normTerm(std::int64_t diff, MetricId metric);
std::int64_t combineTerms(std::int64_t acc, std::int64_t term, MetricId metric);
double finishNorm(std::int64_t acc, MetricId metric);

}  // namespace musnet
