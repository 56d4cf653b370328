#pragma once

#include <compare>

#include "symnc/index_set.hpp"

namespace symnc {

/// The cyclic order on [n] with successor x -> x+1 (n -> 1).
struct CyclicGround {
  int n = 1;

  explicit CyclicGround(int size);
  IndexSet all() const { return IndexSet::full(n); }
};

/// A nonempty subset Q of [n] carrying the cyclic order induced from [n].
class SubOrder {
 public:
  SubOrder(CyclicGround ground, IndexSet members);
  /// The whole ground set [n].
  explicit SubOrder(CyclicGround ground);

  int n() const { return ground_.n; }
  const IndexSet& members() const { return members_; }
  int size() const { return members_.size(); }
  bool contains(int x) const { return members_.contains(x); }

  /// Next member clockwise. Throws MemberNotInSubset if x is not a member.
  int successor(int x) const;
  /// Inverse of successor.
  int predecessor(int x) const;
  /// successor applied `steps` times (negative steps walk backwards).
  int advance(int x, int steps) const;

 private:
  void require_member(int x) const;

  CyclicGround ground_;
  IndexSet members_;
};

/// a (+)_n b, with b reduced modulo n first. Result lies in [1, n].
constexpr int add_mod(int a, long long b, int n) {
  long long r = (static_cast<long long>(a) - 1 + b) % n;
  if (r < 0) r += n;
  return static_cast<int>(r) + 1;
}

/// {add_mod(i, t, n) : i in I}
IndexSet shift_set(const IndexSet& set, long long t, int n);

/// The cyclic interval [a, b] of Q: a, S(a), ..., b.
IndexSet interval(const SubOrder& q, int a, int b);

/// Compares a and b in the linear order on Q whose minimum is `base`.
std::strong_ordering cmp_linear(int base, int a, int b, const SubOrder& q);

/// True iff `set` (a subset of Q) is a cyclic interval of Q. The empty set
/// and Q itself count as intervals.
bool is_interval(const SubOrder& q, const IndexSet& set);

/// Convenience: interval test against the whole of [n].
bool is_interval_of_ground(const IndexSet& set, int n);

}  // namespace symnc
