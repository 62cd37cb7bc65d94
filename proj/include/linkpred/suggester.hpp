#pragma once

#include <iosfwd>

#include "linkpred/rwr.hpp"

namespace linkpred {

struct SuggestionParams {
  FeatureWeights feature_weights;
  double w_direct = 0.4;
  double w_indirect = 0.6;
  RwrParams rwr;
  std::size_t candidate_limit = 10000;
  std::uint32_t min_mutual = 5;
};

struct SuggestionEntry {
  UserId candidate = 0;
  double score = 0.0;

  bool operator==(const SuggestionEntry&) const = default;
};

// Ranked by score descending, ties by ascending candidate id. Never contains
// the target, a current friend, or a duplicate.
struct SuggestionList {
  UserId target = 0;
  std::vector<SuggestionEntry> entries;

  bool operator==(const SuggestionList&) const = default;
};

// w_direct * aff + w_indirect * psi.
double score_candidate(double aff, double psi, const SuggestionParams& params);

// Full pipeline for one target: candidate selection, local-graph RWR for the
// indirect term, pairwise affinity for the direct term, combined score, rank.
SuggestionList suggest(const Snapshot& snapshot, UserId u, const SuggestionParams& params);

// `target<TAB>rank<TAB>candidate<TAB>score` rows, score at 6 decimals.
void write_suggestions(std::ostream& out, const SuggestionList& list,
                       std::size_t top = kNoCandidateLimit);

}  // namespace linkpred
