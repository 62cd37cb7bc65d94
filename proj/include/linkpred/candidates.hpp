#pragma once

#include <limits>

#include "linkpred/snapshot.hpp"

namespace linkpred {

inline constexpr std::size_t kNoCandidateLimit = std::numeric_limits<std::size_t>::max();

// Friends-of-friends of the target that cleared the mutual-count threshold,
// ordered by mutual count descending, ties by ascending id.
struct CandidateSet {
  UserId target = 0;
  std::vector<UserId> members;
  std::unordered_map<UserId, std::uint32_t> mutual_count;
};

// Enumerates vertices two hops from u (excluding u and its friends), counts
// shared neighbors in one pass over the friends' adjacency lists, keeps
// those with count >= min_mutual, and truncates to the limit best.
// min_mutual must be >= 1; throws std::out_of_range for unknown users.
CandidateSet select_candidates(const Snapshot& snapshot, UserId u, std::size_t limit,
                               std::uint32_t min_mutual);

}  // namespace linkpred
