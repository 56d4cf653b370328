#include <doctest.h>

#include "fixtures.hpp"
#include "symnc/construct.hpp"
#include "symnc/error.hpp"
#include "symnc/verify.hpp"

using namespace symnc;
using fixtures::S;

TEST_CASE("the (4,10) example verifies") {
  const auto r = verify(fixtures::example_4_10(), true);
  CHECK(r.sizes_ok);
  CHECK(r.pairwise_noncrossing);
  CHECK(r.cardinality == 25);
  CHECK(r.required == 25);
  CHECK(r.maximal);
  CHECK(r.symmetric);
  CHECK(r.contains_all_intervals);
  CHECK(r.passed());
}

TEST_CASE("failures are reported with witnesses") {
  const auto only_intervals = verify(Collection(10, 4, ground_intervals(4, 10)), true);
  CHECK(only_intervals.pairwise_noncrossing);
  CHECK_FALSE(only_intervals.cardinality_ok);
  CHECK_FALSE(only_intervals.maximal);
  CHECK_FALSE(only_intervals.passed());

  const auto crossing_pair = verify(Collection(4, 2, {S({1, 3}), S({2, 4})}), false);
  CHECK_FALSE(crossing_pair.pairwise_noncrossing);
  REQUIRE(crossing_pair.crossing_witness.has_value());
  CHECK(crossing_pair.crossing_witness->first == S({1, 3}));
  CHECK_FALSE(crossing_pair.missing_interval == std::nullopt);

  // a fan of diagonals from 1 triangulates the hexagon but is not symmetric
  std::vector<IndexSet> fan = ground_intervals(2, 6);
  for (int x : {3, 4, 5}) fan.push_back(S({1, x}));
  const auto lop = verify(Collection(6, 2, fan), true);
  CHECK(lop.maximal);
  CHECK_FALSE(lop.symmetric);
  CHECK(lop.symmetry_witness.has_value());
  CHECK(verify(Collection(6, 2, fan), false).passed());
  CHECK(verify(fixtures::square_2_4(), true).passed());

  const auto sized = verify_sets(5, 2, {S({1, 2}), S({1, 2, 3})}, false);
  CHECK_FALSE(sized.sizes_ok);
  REQUIRE(sized.bad_size_witness.has_value());
  CHECK(*sized.bad_size_witness == S({1, 2, 3}));
}

TEST_CASE("constructed collections verify") {
  CHECK(verify(construct_general(8, 18), true).passed());
  CHECK(verify(construct_general(7, 28), true).passed());
  CHECK(verify(construct_general(10, 45), true).passed());
}

TEST_CASE("inclusion maximality by brute force") {
  CHECK(inclusion_maximal_bruteforce(fixtures::example_4_10()));
  CHECK(inclusion_maximal_bruteforce(fixtures::square_2_4()));
  CHECK_FALSE(inclusion_maximal_bruteforce(Collection(10, 4, ground_intervals(4, 10))));
  CHECK_FALSE(inclusion_maximal_bruteforce(Collection(4, 2, ground_intervals(2, 4))));
  try {
    inclusion_maximal_bruteforce(construct_general(1, 13));
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
  CHECK(inclusion_maximal_bruteforce(construct_general(1, 13), 13));
}

TEST_CASE("subset iteration") {
  int count = 0;
  IndexSet prev;
  for_each_k_subset(3, 7, [&](const IndexSet& s) {
    CHECK(s.size() == 3);
    CHECK(s.max() <= 7);
    if (count > 0) CHECK(prev != s);
    prev = s;
    ++count;
  });
  CHECK(count == 35);
  count = 0;
  for_each_k_subset(0, 4, [&](const IndexSet& s) {
    CHECK(s.empty());
    ++count;
  });
  CHECK(count == 1);
}
