#pragma once

#include <vector>

#include "oracle.hpp"
#include "symnc/noncross.hpp"

namespace fixtures {

inline symnc::IndexSet S(std::initializer_list<int> xs) { return symnc::IndexSet(xs); }

/// The symmetric maximal (4,10) collection generated by five sets under +2.
inline std::vector<oracle::Set> example_4_10_sets() {
  const std::vector<oracle::Set> generators{{1, 2, 3, 4}, {1, 2, 3, 5}, {2, 3, 4, 5}, {2, 3, 5, 7}, {1, 3, 5, 7}};
  std::vector<oracle::Set> out;
  for (const auto& g : generators) {
    for (int t = 0; t < 10; t += 2) out.push_back(oracle::shift(g, t, 10));
  }
  return out;
}

inline symnc::Collection example_4_10() {
  std::vector<symnc::IndexSet> sets;
  for (const auto& s : example_4_10_sets()) sets.push_back(oracle::from_set(s));
  return symnc::Collection(10, 4, sets);
}

/// Intervals of [4] plus the diagonal {1,3}: a triangulated square.
inline symnc::Collection square_2_4() {
  return symnc::Collection(4, 2, {S({1, 2}), S({2, 3}), S({3, 4}), S({1, 4}), S({1, 3})});
}

}  // namespace fixtures
