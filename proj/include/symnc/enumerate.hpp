#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "symnc/construct.hpp"
#include "symnc/noncross.hpp"

namespace symnc {

inline constexpr int kDefaultEnumerationCap = 16;

/// An orbit of k-subsets under I -> I (+)_n k.
struct Orbit {
  IndexSet representative;       ///< lexicographically smallest member
  std::vector<IndexSet> members;  ///< canonical order
  bool self_compatible = false;   ///< members pairwise noncrossing
  bool interval = false;          ///< members are cyclic intervals of [n]

  int size() const { return static_cast<int>(members.size()); }
};

/// Partition of all k-subsets of [n] into +k orbits, ordered by representative.
struct OrbitAtlas {
  int k = 0;
  int n = 0;
  std::vector<Orbit> orbits;

  std::size_t subset_count() const;
};

/// Throws CapExceeded when n > cap (cap itself may not exceed 63).
OrbitAtlas build_atlas(int k, int n, int cap = kDefaultEnumerationCap);

/// Search graph: one vertex per self-compatible non-interval orbit, edges
/// between orbits whose union is still noncrossing. Interval orbits are
/// compatible with everything and are kept aside as the seed.
class CompatibilityGraph {
 public:
  explicit CompatibilityGraph(const OrbitAtlas& atlas);

  std::size_t vertex_count() const { return vertices_.size(); }
  /// Orbit index in the atlas of search vertex v.
  std::size_t orbit_of_vertex(std::size_t v) const { return vertices_[v]; }
  int weight(std::size_t v) const { return weights_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const {
    return ((adjacency_[u][v / 64] >> (v % 64)) & 1U) != 0;
  }
  const std::vector<std::uint64_t>& neighbours(std::size_t v) const { return adjacency_[v]; }
  const std::vector<std::size_t>& seed_orbits() const { return seed_; }
  int seed_weight() const { return seed_weight_; }
  std::size_t words() const { return words_; }

 private:
  std::vector<std::size_t> vertices_;  // sorted by decreasing orbit size
  std::vector<int> weights_;
  std::vector<std::vector<std::uint64_t>> adjacency_;
  std::vector<std::size_t> seed_;
  int seed_weight_ = 0;
  std::size_t words_ = 0;
};

struct EnumerateOptions {
  bool count_only = false;
  int cap = kDefaultEnumerationCap;
  int threads = 1;
  /// Stop after this many collections (the count is then a lower bound).
  std::optional<std::uint64_t> limit;
};

struct EnumerationResult {
  int k = 0;
  int n = 0;
  std::uint64_t count = 0;
  bool truncated = false;              ///< stopped early because of `limit`
  std::vector<Collection> collections;  ///< canonical order; empty when count_only
  std::size_t orbit_count = 0;
  std::size_t search_vertices = 0;
};

/// All symmetric maximal (k,n)-noncrossing collections, counted as raw sets
/// of sets (rotations of one another are distinct).
EnumerationResult enumerate_symmetric_maximal(int k, int n, const EnumerateOptions& options = {});

struct ExistenceRow {
  int k = 0;
  int n = 0;
  ConditionReport condition;
  std::optional<bool> search_found;  ///< absent when n exceeds the cap
  bool agrees() const { return !search_found || *search_found == condition.satisfied; }
};

/// One row per 1 <= k <= n <= max_n; the search column is filled up to `cap`.
std::vector<ExistenceRow> existence_table(int max_n, int cap = kDefaultEnumerationCap);

}  // namespace symnc
