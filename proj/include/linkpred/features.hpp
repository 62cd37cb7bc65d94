#pragma once

#include "linkpred/snapshot.hpp"

namespace linkpred {

// The five mutual-information counts between a user pair.
struct FeatureVector {
  std::uint32_t mutual_friends = 0;
  std::uint32_t mutual_schools = 0;
  std::uint32_t mutual_groups = 0;
  std::uint32_t mutual_ips = 0;
  std::uint32_t mutual_interactions = 0;

  bool operator==(const FeatureVector&) const = default;
};

// Per-feature weights, same order as FeatureVector. All finite and >= 0.
struct FeatureWeights {
  double friends = 0.5;
  double schools = 0.3;
  double groups = 0.2;
  double ips = 0.0;
  double interactions = 0.0;

  bool operator==(const FeatureWeights&) const = default;
};

inline constexpr FeatureWeights kZeroWeights{0.0, 0.0, 0.0, 0.0, 0.0};

// Throws std::out_of_range when either user is unknown.
FeatureVector feature_vector(const Snapshot& snapshot, UserId u, UserId v);

// Sum over common neighbors z of 1/ln(deg(z)). Every common neighbor has
// degree >= 2, so each term is finite and positive.
double adamic_adar(const Snapshot& snapshot, UserId u, UserId v);

// Weighted log-sum of the counts: sum_i w_i * ln(S_i + 1), natural log.
double affinity(const FeatureVector& fv, const FeatureWeights& weights);

}  // namespace linkpred
