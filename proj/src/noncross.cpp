#include "symnc/noncross.hpp"

#include <algorithm>
#include <string>

#include "symnc/error.hpp"

namespace symnc {

Collection::Collection(int n, int k, std::vector<IndexSet> sets)
    : n_(n), k_(k), sets_(std::move(sets)) {
  if (n < 1 || n > kMaxN || k < 0 || k > n) {
    throw Error(ErrorCode::InvalidRange,
                "(k,n) = (" + std::to_string(k) + "," + std::to_string(n) + ")");
  }
  const IndexSet ground = IndexSet::full(n);
  for (const auto& s : sets_) {
    if (s.size() != k || !s.is_subset_of(ground)) {
      throw Error(ErrorCode::InvalidRange,
                  s.to_string() + " is not a " + std::to_string(k) + "-subset of [" +
                      std::to_string(n) + "]");
    }
  }
  std::sort(sets_.begin(), sets_.end());
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool Collection::contains(const IndexSet& s) const {
  return std::binary_search(sets_.begin(), sets_.end(), s);
}

std::optional<std::size_t> Collection::index_of(const IndexSet& s) const {
  auto it = std::lower_bound(sets_.begin(), sets_.end(), s);
  if (it == sets_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - sets_.begin());
}

bool crossing(const IndexSet& lhs, const IndexSet& rhs, int /*n*/) {
  const IndexSet only_l = lhs - rhs;
  const IndexSet only_r = rhs - lhs;
  if (only_l.size() < 2 || only_r.size() < 2) return false;
  int changes = 0;
  int first = -1;
  int prev = -1;
  (only_l | only_r).for_each([&](int i) {
    const int side = only_l.contains(i) ? 1 : 0;
    if (first < 0) first = side;
    else if (side != prev) ++changes;
    prev = side;
  });
  if (prev != first) ++changes;
  return changes >= 4;
}

std::optional<std::pair<IndexSet, IndexSet>> first_crossing_pair(const Collection& c) {
  const auto& s = c.sets();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (crossing(s[i], s[j], c.n())) return std::make_pair(s[i], s[j]);
    }
  }
  return std::nullopt;
}

Collection orbit(const IndexSet& set, int step, int n) {
  std::vector<IndexSet> members{set};
  for (IndexSet cur = shift_set(set, step, n); cur != set; cur = shift_set(cur, step, n)) {
    members.push_back(cur);
  }
  return Collection(n, set.size(), std::move(members));
}

std::optional<IndexSet> symmetry_witness(const Collection& c) {
  for (const auto& s : c) {
    IndexSet shifted = shift_set(s, c.k(), c.n());
    if (!c.contains(shifted)) return s;
  }
  return std::nullopt;
}

bool is_symmetric(const Collection& c) { return !symmetry_witness(c).has_value(); }

Collection complement_collection(const Collection& c) {
  const IndexSet ground = IndexSet::full(c.n());
  std::vector<IndexSet> out;
  out.reserve(c.size());
  for (const auto& s : c) out.push_back(ground - s);
  return Collection(c.n(), c.n() - c.k(), std::move(out));
}

std::vector<IndexSet> ground_intervals(int k, int n) {
  std::vector<IndexSet> out;
  for (int a = 1; a <= n; ++a) out.push_back(IndexSet::cyclic_run(a, k, n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace symnc
