#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "symnc/cyclic.hpp"
#include "symnc/index_set.hpp"

namespace symnc {

/// A set of k-element subsets of [n], kept in canonical (lexicographic) order.
class Collection {
 public:
  Collection(int n, int k) : n_(n), k_(k) {}
  /// Validates that every member is a k-subset of [n]; sorts and drops duplicates.
  Collection(int n, int k, std::vector<IndexSet> sets);

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  const std::vector<IndexSet>& sets() const { return sets_; }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }
  const IndexSet& operator[](std::size_t i) const { return sets_[i]; }

  bool contains(const IndexSet& s) const;
  /// Position of s in canonical order, or nullopt.
  std::optional<std::size_t> index_of(const IndexSet& s) const;

  friend bool operator==(const Collection&, const Collection&) = default;

 private:
  int n_;
  int k_;
  std::vector<IndexSet> sets_;
};

/// k(n-k)+1, the size of every maximal (k,n)-noncrossing collection.
constexpr long long maximal_size(int k, int n) {
  return static_cast<long long>(k) * (n - k) + 1;
}

/// True iff some a < b < c < d (cyclically) has a, c in I\J and b, d in J\I.
/// Implemented as a single cyclic walk counting alternations between the two
/// differences.
bool crossing(const IndexSet& lhs, const IndexSet& rhs, int n);

/// nullopt when the collection is pairwise noncrossing, else a witness pair.
std::optional<std::pair<IndexSet, IndexSet>> first_crossing_pair(const Collection& c);
inline bool all_noncrossing(const Collection& c) { return !first_crossing_pair(c).has_value(); }

/// All distinct shifts of `set` by multiples of `step` modulo n.
Collection orbit(const IndexSet& set, int step, int n);

/// True iff shifting every member by k modulo n permutes the collection.
bool is_symmetric(const Collection& c);
/// Shift of a single member that falls outside the collection, if any.
std::optional<IndexSet> symmetry_witness(const Collection& c);

/// {[n] \ I : I in C} over (n-k, n).
Collection complement_collection(const Collection& c);

/// Every k-element cyclic interval of [n] (n of them for 0 < k < n).
std::vector<IndexSet> ground_intervals(int k, int n);

}  // namespace symnc
