#pragma once

#include <boost/math/distributions/chi_squared.hpp>

#include <cmath>
#include <map>
#include <vector>

#include "hypertrees/core_model.hpp"

namespace hypertrees::testing {

inline Hypertree tree(int n, std::vector<Hyperedge> edges) {
  return validate_hypertree(Hypergraph(n, std::move(edges)));
}

/// Pearson statistic of observed counts against the uniform distribution
/// over `outcomes` cells (unseen cells count as zero).
template <typename Key>
double chi_square_uniform(const std::map<Key, long>& observed, long outcomes, long draws) {
  const double expected = static_cast<double>(draws) / static_cast<double>(outcomes);
  double stat = 0;
  for (const auto& [key, count] : observed) {
    const double d = static_cast<double>(count) - expected;
    stat += d * d / expected;
  }
  stat += static_cast<double>(outcomes - static_cast<long>(observed.size())) * expected;
  return stat;
}

/// Critical value above which uniformity is rejected at the given level.
inline double chi_square_critical(long degrees_of_freedom, double significance) {
  boost::math::chi_squared dist(static_cast<double>(degrees_of_freedom));
  return boost::math::quantile(boost::math::complement(dist, significance));
}

/// |observed/draws - p| <= 3 sigma with sigma = sqrt(p(1-p)/draws).
inline bool within_three_sigma(long observed, long draws, double p) {
  const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(draws));
  return std::abs(static_cast<double>(observed) / static_cast<double>(draws) - p) <= 3 * sigma;
}

}  // namespace hypertrees::testing
