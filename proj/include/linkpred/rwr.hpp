#pragma once

#include "linkpred/candidates.hpp"
#include "linkpred/features.hpp"
#include "linkpred/snapshot.hpp"

namespace linkpred {

// Per-target subgraph the walk runs on: the target, its friends, and its
// candidates, with every friendship edge among them carrying a positive
// strength.
struct LocalGraph {
  std::vector<UserId> vertices;  // target first, then friends asc, then candidates
  std::unordered_map<UserId, std::uint32_t> index_of;
  // Symmetric sparse strengths: edges[i] holds (j, strength) for every
  // friendship between vertices[i] and vertices[j].
  std::vector<std::vector<std::pair<std::uint32_t, double>>> edges;

  std::size_t vertex_count() const { return vertices.size(); }
};

struct RwrParams {
  double alpha = 0.4;       // restart probability, in (0,1)
  double epsilon = 1e-4;    // L1 convergence threshold, > 0
  std::uint32_t max_iters = 50;
};

struct RwrDistribution {
  std::vector<UserId> vertices;  // same order as the local graph
  std::vector<double> prob;
  std::uint32_t iterations = 0;

  // Test/diagnostic accessor; linear scan. Throws for unknown vertices.
  double at(UserId u) const;
};

// Vertex set is {u} + friends(u) + cands.members; each friendship edge
// (v, w) inside it gets strength 1 + affinity(feature_vector(v, w), weights).
// The +1 floor keeps edges with zero mutual information traversable and
// makes the all-zero-weights case coincide with unit strengths.
LocalGraph build_local_graph(const Snapshot& snapshot, UserId u, const CandidateSet& cands,
                             const FeatureWeights& weights);

// Power iteration of r <- (1-alpha) * r * A + alpha * e starting from the
// restart vector e (all mass on u). A normalizes each vertex's strengths to
// a row-stochastic transition; rows without edges teleport to u. Stops when
// the L1 change drops below epsilon or after max_iters iterations.
RwrDistribution rwr_distribution(const LocalGraph& g, UserId u, const RwrParams& params);

}  // namespace linkpred
