#include "symnc/cyclic.hpp"

#include <string>

#include "symnc/error.hpp"

namespace symnc {

CyclicGround::CyclicGround(int size) : n(size) {
  if (size < 1 || size > kMaxN) {
    throw Error(ErrorCode::InvalidRange, "ground size " + std::to_string(size) + " outside [1," +
                                             std::to_string(kMaxN) + "]");
  }
}

SubOrder::SubOrder(CyclicGround ground, IndexSet members) : ground_(ground), members_(members) {
  if (members_.empty()) throw Error(ErrorCode::InvalidRange, "sub-order must be nonempty");
  if (!members_.is_subset_of(ground_.all())) {
    throw Error(ErrorCode::InvalidRange, "members outside [1," + std::to_string(ground_.n) + "]");
  }
}

SubOrder::SubOrder(CyclicGround ground) : SubOrder(ground, ground.all()) {}

void SubOrder::require_member(int x) const {
  if (!members_.contains(x)) {
    throw Error(ErrorCode::MemberNotInSubset,
                std::to_string(x) + " is not in " + members_.to_string());
  }
}

int SubOrder::successor(int x) const {
  require_member(x);
  int next = members_.next_after(x);
  return next != 0 ? next : members_.min();
}

int SubOrder::predecessor(int x) const {
  require_member(x);
  int prev = members_.prev_before(x);
  return prev != 0 ? prev : members_.max();
}

int SubOrder::advance(int x, int steps) const {
  require_member(x);
  const int m = size();
  steps %= m;
  if (steps < 0) steps += m;
  for (int i = 0; i < steps; ++i) x = successor(x);
  return x;
}

IndexSet shift_set(const IndexSet& set, long long t, int n) {
  const int r = static_cast<int>(((t % n) + n) % n);
  return set.rotated(r, n);
}

IndexSet interval(const SubOrder& q, int a, int b) {
  if (!q.contains(b)) {
    throw Error(ErrorCode::MemberNotInSubset, std::to_string(b) + " is not in " +
                                                  q.members().to_string());
  }
  IndexSet out;
  int x = a;
  out = out.with(x);
  while (x != b) {
    x = q.successor(x);
    out = out.with(x);
  }
  return out;
}

std::strong_ordering cmp_linear(int base, int a, int b, const SubOrder& q) {
  for (int x : {base, a, b}) {
    if (!q.contains(x)) {
      throw Error(ErrorCode::MemberNotInSubset,
                  std::to_string(x) + " is not in " + q.members().to_string());
    }
  }
  const int n = q.n();
  const int ka = (a - base + n) % n;
  const int kb = (b - base + n) % n;
  return ka <=> kb;
}

bool is_interval(const SubOrder& q, const IndexSet& set) {
  if (set.empty() || set == q.members()) return true;
  if (!set.is_subset_of(q.members())) return false;
  // A proper interval has exactly one member whose predecessor in Q lies outside it.
  int starts = 0;
  bool ok = true;
  set.for_each([&](int x) {
    if (!set.contains(q.predecessor(x)) && ++starts > 1) ok = false;
  });
  return ok && starts == 1;
}

bool is_interval_of_ground(const IndexSet& set, int n) {
  return is_interval(SubOrder(CyclicGround(n)), set);
}

}  // namespace symnc
