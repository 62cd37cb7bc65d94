#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace linkpred {

using UserId = std::uint32_t;
using AttrValue = std::uint32_t;
using Timestamp = std::int64_t;

// Attribute namespaces a snapshot can carry. Company values are loadable
// (the legacy scorer consumes them) but are not a FeatureVector field.
enum class AttrKind : std::uint8_t { School = 0, Group = 1, Ip = 2, Company = 3 };
inline constexpr std::size_t kAttrKindCount = 4;

const char* to_string(AttrKind kind);
std::optional<AttrKind> attr_kind_from_token(std::string_view token);

struct EdgeRecord {
  UserId u = 0;
  UserId v = 0;
  Timestamp t = 0;

  bool operator==(const EdgeRecord&) const = default;
};

// Unordered pair packed into one map key, low id in the high word.
constexpr std::uint64_t pair_key(UserId a, UserId b) {
  const UserId lo = a < b ? a : b;
  const UserId hi = a < b ? b : a;
  return (static_cast<std::uint64_t>(lo) << 32) | hi;
}

class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Immutable friendship graph plus per-user attributes and pairwise
// interaction counts. Friendship edges are stored once per unordered pair;
// both directions are synthesized on access, so the symmetry invariant
// cannot be violated. Safe for concurrent reads once built.
class Snapshot {
 public:
  class Builder;

  const std::vector<UserId>& users() const { return users_; }
  std::size_t user_count() const { return users_.size(); }
  std::size_t edge_count() const { return edge_time_.size(); }

  bool has_user(UserId u) const { return adjacency_.contains(u); }

  // Neighbors in ascending id order. Throws std::out_of_range for unknown users.
  std::span<const UserId> neighbors(UserId u) const;
  std::size_t degree(UserId u) const { return neighbors(u).size(); }

  bool are_friends(UserId a, UserId b) const;
  std::optional<Timestamp> edge_time(UserId a, UserId b) const;

  // Empty span when the user has no values of that kind; values ascending.
  std::span<const AttrValue> attributes(UserId u, AttrKind kind) const;

  // 0 when no interaction record exists for the pair.
  std::uint32_t interaction_count(UserId a, UserId b) const;

  // All edges as records with u < v, sorted by (u, v).
  std::vector<EdgeRecord> edge_records() const;

  // Deterministic re-serialization in the three flat-file formats;
  // load_snapshot on the output reproduces this snapshot exactly.
  void save(const std::filesystem::path& edges_path,
            const std::filesystem::path& attrs_path,
            const std::filesystem::path& interactions_path) const;

  bool operator==(const Snapshot&) const = default;

 private:
  std::vector<UserId> users_;  // ascending
  std::unordered_map<UserId, std::vector<UserId>> adjacency_;
  std::unordered_map<std::uint64_t, Timestamp> edge_time_;
  std::unordered_map<UserId, std::array<std::vector<AttrValue>, kAttrKindCount>> attributes_;
  std::unordered_map<std::uint64_t, std::uint32_t> interactions_;
};

// Single-threaded construction; build() finalizes sort order and hands out
// the immutable snapshot.
class Snapshot::Builder {
 public:
  Builder& add_user(UserId u);
  // Undirected; duplicate records keep the earliest timestamp.
  // Throws std::invalid_argument on self-loops.
  Builder& add_edge(UserId u, UserId v, Timestamp t);
  Builder& add_attribute(UserId u, AttrKind kind, AttrValue value);
  // Counts for the same unordered pair are summed. Throws on self-pairs.
  Builder& add_interaction(UserId u, UserId v, std::uint32_t count);

  Snapshot build();

 private:
  Snapshot snap_;
};

// Raw record list in file order; validates syntax and rejects self-loops.
// Errors carry the path and 1-based line number.
std::vector<EdgeRecord> read_edge_file(const std::filesystem::path& path);

Snapshot load_snapshot(const std::filesystem::path& edges_path,
                       const std::optional<std::filesystem::path>& attrs_path = {},
                       const std::optional<std::filesystem::path>& interactions_path = {});

// Same as load_snapshot but with the edge set already in memory, so a
// temporally split subset can be combined with the attribute files.
Snapshot snapshot_from_edges(const std::vector<EdgeRecord>& edges,
                             const std::optional<std::filesystem::path>& attrs_path = {},
                             const std::optional<std::filesystem::path>& interactions_path = {});

struct TemporalSplit {
  std::vector<EdgeRecord> train;  // t <= boundary
  std::vector<EdgeRecord> test;   // t >  boundary
};

TemporalSplit temporal_split(const std::vector<EdgeRecord>& edges, Timestamp boundary);

struct FilterResult {
  Snapshot filtered;
  std::vector<UserId> eligible;  // ascending
};

// Keeps users with at least min_new incident edges in new_edges, drops
// adjacency entries that point outside that set or duplicate a new edge.
FilterResult apply_user_filter(const Snapshot& snapshot,
                               const std::vector<EdgeRecord>& new_edges,
                               std::uint32_t min_new);

// Independent re-check of the structural invariants; one message per
// violation, empty when the snapshot is sound.
std::vector<std::string> validate_snapshot(const Snapshot& snapshot);

}  // namespace linkpred
