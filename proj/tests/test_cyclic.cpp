#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "symnc/cyclic.hpp"
#include "symnc/error.hpp"

using namespace symnc;
using fixtures::S;

namespace {

IndexSet random_subset(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  IndexSet s;
  for (int i = 1; i <= n; ++i) {
    if (coin(rng)) s = s.with(i);
  }
  return s;
}

}  // namespace

TEST_CASE("index sets") {
  const IndexSet s = S({1, 2, 3, 5});
  CHECK(s.size() == 4);
  CHECK(s.key() == "1-2-3-5");
  CHECK(s.to_string() == "{1,2,3,5}");
  CHECK(s.min() == 1);
  CHECK(s.max() == 5);
  CHECK(s.next_after(3) == 5);
  CHECK(s.next_after(5) == 0);
  CHECK(s.prev_before(5) == 3);
  CHECK(s.prev_before(1) == 0);
  CHECK(IndexSet{}.empty());

  const IndexSet wide = S({64, 65, 128, 129, 700, 1024});
  CHECK(wide.elements() == std::vector<int>{64, 65, 128, 129, 700, 1024});
  CHECK(wide.next_after(65) == 128);
  CHECK(wide.prev_before(700) == 129);
  CHECK(wide.max() == 1024);

  const std::vector<int> bad{3, 2};
  CHECK_THROWS_AS(IndexSet::from_elements(bad, 5), Error);
  const std::vector<int> out_of_range{1, 6};
  CHECK_THROWS_AS(IndexSet::from_elements(out_of_range, 5), Error);
}

TEST_CASE("index set order is lexicographic on element lists") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 140);
    const IndexSet a = random_subset(rng, n, 0.3);
    const IndexSet b = random_subset(rng, n, 0.3);
    const auto ea = oracle::to_set(a);
    const auto eb = oracle::to_set(b);
    CHECK((a < b) == (ea < eb));
    CHECK((a == b) == (ea == eb));
  }
}

TEST_CASE("add_mod") {
  CHECK(add_mod(9, 4, 10) == 3);
  CHECK(add_mod(1, 0, 10) == 1);
  CHECK(add_mod(2, 2 * 9, 10) == 10);
  CHECK(add_mod(3, -4, 10) == 9);
  // Iterating the successor reaches the same element as one big step.
  int x = 2;
  for (int i = 0; i < 9; ++i) x = add_mod(x, 2, 10);
  CHECK(x == add_mod(2, 18, 10));
}

TEST_CASE("shift_set") {
  CHECK(shift_set(S({1, 5, 9, 13}), 4, 20) == S({5, 9, 13, 17}));
  CHECK(shift_set(S({1, 5, 9}), 10, 10) == S({1, 5, 9}));
  IndexSet s = S({1, 2, 3, 5});
  for (int i = 0; i < 5; ++i) s = shift_set(s, 2, 10);
  CHECK(s == S({1, 2, 3, 5}));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 200);
    const int t = static_cast<int>(rng() % 400) - 200;
    const IndexSet a = random_subset(rng, n, 0.4);
    CHECK(oracle::to_set(shift_set(a, t, n)) == oracle::shift(oracle::to_set(a), t, n));
  }
}

TEST_CASE("successor and predecessor") {
  const SubOrder q(CyclicGround(8), S({1, 3, 4, 6, 7}));
  CHECK(q.successor(7) == 1);
  CHECK(q.successor(1) == 3);
  CHECK(q.predecessor(1) == 7);
  CHECK_THROWS_AS(q.successor(2), Error);
  try {
    q.successor(2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MemberNotInSubset);
  }

  const SubOrder single(CyclicGround(5), S({4}));
  CHECK(single.successor(4) == 4);

  const SubOrder p4(CyclicGround(28), S({1, 2, 3, 5, 8, 9, 10, 12, 15, 16, 17, 19, 22, 23, 24, 26}));
  CHECK(p4.size() == 16);
  CHECK(p4.successor(26) == 1);

  // successor is a bijection and |Q| steps return to the start
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 60);
    IndexSet m = random_subset(rng, n, 0.5);
    if (m.empty()) m = m.with(1);
    const SubOrder sub(CyclicGround(n), m);
    m.for_each([&](int x) {
      CHECK(sub.predecessor(sub.successor(x)) == x);
      CHECK(sub.advance(x, sub.size()) == x);
    });
  }
}

TEST_CASE("intervals") {
  const SubOrder ground(CyclicGround(8));
  CHECK(interval(ground, 7, 3) == S({7, 8, 1, 2, 3}));
  CHECK(interval(ground, 4, 4) == S({4}));
  CHECK_THROWS_AS(interval(SubOrder(CyclicGround(8), S({1, 2})), 1, 5), Error);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 40);
    IndexSet m = random_subset(rng, n, 0.5);
    if (m.empty()) m = m.with(n);
    const SubOrder q(CyclicGround(n), m);
    const auto elems = m.elements();
    const int b = elems[rng() % elems.size()];
    CHECK(interval(q, q.successor(b), b) == m);

    // [a,b] and [S(b), P(a)] split Q when [a,b] is proper
    const int a = elems[rng() % elems.size()];
    const IndexSet left = interval(q, a, b);
    if (left != m) {
      const IndexSet right = interval(q, q.successor(b), q.predecessor(a));
      CHECK((left | right) == m);
      CHECK((left & right).empty());
    }
  }
}

TEST_CASE("cmp_linear") {
  const SubOrder ground(CyclicGround(8));
  CHECK(cmp_linear(7, 2, 5, ground) == std::strong_ordering::less);
  CHECK(cmp_linear(7, 8, 1, ground) == std::strong_ordering::less);
  CHECK(cmp_linear(7, 6, 7, ground) == std::strong_ordering::greater);
  CHECK(cmp_linear(3, 4, 4, ground) == std::strong_ordering::equal);
  CHECK_THROWS_AS(cmp_linear(1, 2, 3, SubOrder(CyclicGround(8), S({1, 3}))), Error);

  for (int n = 1; n <= 12; ++n) {
    const SubOrder q{CyclicGround(n)};
    for (int base = 1; base <= n; ++base) {
      std::vector<int> all;
      for (int i = 1; i <= n; ++i) all.push_back(i);
      std::sort(all.begin(), all.end(), [&](int a, int b) { return cmp_linear(base, a, b, q) < 0; });
      for (int j = 0; j < n; ++j) CHECK(all[static_cast<std::size_t>(j)] == add_mod(base, j, n));
    }
  }
}

TEST_CASE("is_interval") {
  const SubOrder g8(CyclicGround(8));
  CHECK(is_interval(g8, S({7, 8, 1, 2, 3})));
  CHECK_FALSE(is_interval(SubOrder(CyclicGround(4)), S({1, 3})));
  CHECK(is_interval(g8, IndexSet{}));
  CHECK(is_interval(g8, IndexSet::full(8)));
  // {7,1,3} is an interval of Q = {1,3,4,6,7} but not of [8]
  const SubOrder q(CyclicGround(8), S({1, 3, 4, 6, 7}));
  CHECK(is_interval(q, S({7, 1, 3})));
  CHECK_FALSE(is_interval_of_ground(S({7, 1, 3}), 8));

  for (int n = 1; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (const auto& s : oracle::k_subsets(k, n)) {
        CHECK(is_interval_of_ground(oracle::from_set(s), n) == oracle::is_cyclic_interval(s, n));
      }
    }
  }
}

TEST_CASE("interval lemmas") {
  // A proper interval is convex in its own linear order, and any a < b < c < d
  // with a, c inside forces b or d inside.
  for (int n = 4; n <= 9; ++n) {
    const SubOrder g{CyclicGround(n)};
    for (int a0 = 1; a0 <= n; ++a0) {
      for (int len = 1; len < n; ++len) {
        const IndexSet I = interval(g, a0, add_mod(a0, len - 1, n));
        I.for_each([&](int a) {
          I.for_each([&](int c) {
            for (int b = 1; b <= n; ++b) {
              if (cmp_linear(a0, a, b, g) < 0 && cmp_linear(a0, b, c, g) < 0) CHECK(I.contains(b));
            }
          });
        });
        for (const auto& quad : oracle::k_subsets(4, n)) {
          // every rotation of the ascending quadruple is a cyclic a < b < c < d
          for (int r = 0; r < 4; ++r) {
            const int a = quad[static_cast<std::size_t>(r)];
            const int b = quad[static_cast<std::size_t>((r + 1) % 4)];
            const int c = quad[static_cast<std::size_t>((r + 2) % 4)];
            const int d = quad[static_cast<std::size_t>((r + 3) % 4)];
            if (I.contains(a) && I.contains(c)) CHECK((I.contains(b) || I.contains(d)));
          }
        }
      }
    }
  }
}
