#include "symnc/verify.hpp"

#include <algorithm>
#include <string>

#include "symnc/error.hpp"

namespace symnc {

VerifyReport verify(const Collection& c, bool expect_symmetric) {
  VerifyReport r;
  r.n = c.n();
  r.k = c.k();
  r.symmetry_requested = expect_symmetric;

  r.crossing_witness = first_crossing_pair(c);
  r.pairwise_noncrossing = !r.crossing_witness.has_value();

  r.cardinality = static_cast<long long>(c.size());
  r.required = maximal_size(c.k(), c.n());
  r.cardinality_ok = r.cardinality == r.required;
  r.maximal = r.pairwise_noncrossing && r.cardinality_ok;

  r.symmetry_witness = symmetry_witness(c);
  r.symmetric = !r.symmetry_witness.has_value();

  r.contains_all_intervals = true;
  for (const auto& iv : ground_intervals(c.k(), c.n())) {
    if (!c.contains(iv)) {
      r.contains_all_intervals = false;
      r.missing_interval = iv;
      break;
    }
  }
  return r;
}

VerifyReport verify_sets(int n, int k, const std::vector<IndexSet>& sets, bool expect_symmetric) {
  const IndexSet ground = IndexSet::full(n);
  std::vector<IndexSet> usable;
  std::optional<IndexSet> bad;
  for (const auto& s : sets) {
    if (s.size() == k && s.is_subset_of(ground)) usable.push_back(s);
    else if (!bad) bad = s;
  }
  VerifyReport r = verify(Collection(n, k, std::move(usable)), expect_symmetric);
  if (bad) {
    r.sizes_ok = false;
    r.bad_size_witness = bad;
    r.cardinality = static_cast<long long>(sets.size());
    r.cardinality_ok = false;
    r.maximal = false;
  }
  return r;
}

bool inclusion_maximal_bruteforce(const Collection& c, int cap) {
  if (c.n() > cap || c.n() > 63) {
    throw Error(ErrorCode::CapExceeded,
                "n = " + std::to_string(c.n()) + " exceeds brute-force cap " + std::to_string(cap));
  }
  bool maximal = true;
  for_each_k_subset(c.k(), c.n(), [&](const IndexSet& candidate) {
    if (!maximal || c.contains(candidate)) return;
    const bool compatible = std::none_of(c.begin(), c.end(), [&](const IndexSet& member) {
      return crossing(candidate, member, c.n());
    });
    if (compatible) maximal = false;
  });
  return maximal;
}

}  // namespace symnc
