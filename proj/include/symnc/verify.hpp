#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "symnc/noncross.hpp"

namespace symnc {

/// Outcome of checking a collection. `maximal` follows the cardinality
/// criterion: a noncrossing collection is maximal iff it has k(n-k)+1 members.
struct VerifyReport {
  int n = 0;
  int k = 0;

  bool sizes_ok = true;
  std::optional<IndexSet> bad_size_witness;

  bool pairwise_noncrossing = true;
  std::optional<std::pair<IndexSet, IndexSet>> crossing_witness;

  long long cardinality = 0;
  long long required = 0;
  bool cardinality_ok = false;

  bool maximal = false;

  bool symmetry_requested = false;
  bool symmetric = false;
  std::optional<IndexSet> symmetry_witness;

  bool contains_all_intervals = false;
  std::optional<IndexSet> missing_interval;

  /// Every requested check passed.
  bool passed() const {
    return sizes_ok && maximal && contains_all_intervals && (!symmetry_requested || symmetric);
  }
};

VerifyReport verify(const Collection& c, bool expect_symmetric);

/// Like verify, but tolerates members of the wrong size (external input).
VerifyReport verify_sets(int n, int k, const std::vector<IndexSet>& sets, bool expect_symmetric);

inline constexpr int kDefaultBruteForceCap = 12;

/// True iff no k-subset outside C is noncrossing with every member.
/// Throws CapExceeded when n > cap.
bool inclusion_maximal_bruteforce(const Collection& c, int cap = kDefaultBruteForceCap);

/// Calls f(set) for every k-subset of [n] in increasing mask order (n <= 63).
template <class F>
void for_each_k_subset(int k, int n, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(IndexSet{});
    return;
  }
  std::uint64_t s = (1ULL << k) - 1;
  const std::uint64_t last = s << (n - k);
  while (true) {
    f(IndexSet::from_low_word(s));
    if (s == last) return;
    // Gosper's hack: next mask with the same popcount.
    const std::uint64_t low = s & (~s + 1);
    const std::uint64_t ripple = s + low;
    s = (((ripple ^ s) >> 2) / low) | ripple;
  }
}

}  // namespace symnc
