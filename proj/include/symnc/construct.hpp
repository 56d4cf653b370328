#pragma once

#include <optional>
#include <vector>

#include "symnc/cyclic.hpp"
#include "symnc/noncross.hpp"

namespace symnc {

/// Arithmetic behind the existence criterion: k must be congruent to 0, 1 or
/// -1 modulo d = n / gcd(k, n).
struct ConditionReport {
  int k = 0;
  int n = 0;
  int g = 0;  ///< gcd(k, n)
  int d = 0;  ///< n / g
  bool satisfied = false;
  int c = 0;  ///< residue in {-1, 0, 1} when satisfied
  int p = 0;  ///< k = d*p + c
};

/// Residues are tried in the order 0, 1, -1 (they coincide when d <= 2).
/// Throws InvalidRange unless n >= 1 and 0 <= k <= n.
ConditionReport condition_star(int k, int n);

/// (a + kZ) intersected with [n].
IndexSet orbit_of(int a, int k, int n);

/// A total order on the k residue classes modulo k, given by representatives
/// in {1, ..., k}; classes earlier in the list are consumed first.
class ClassOrder {
 public:
  /// Throws InvalidRange unless `representatives` is a permutation of [k].
  explicit ClassOrder(std::vector<int> representatives);

  /// k, k-1, ..., 1
  static ClassOrder reverse_natural(int k);
  /// The tail g+1..k in reverse natural order, followed by `head` (a
  /// permutation of [g], default g, g-1, ..., 1).
  static ClassOrder for_general(int k, int g, std::optional<std::vector<int>> head = std::nullopt);

  int k() const { return static_cast<int>(reps_.size()); }
  int at(int stage) const { return reps_.at(static_cast<std::size_t>(stage - 1)); }
  const std::vector<int>& representatives() const { return reps_; }
  /// Every class in {g+1..k} precedes every class in {1..g}.
  bool respects_general_constraint(int g) const;

  friend bool operator==(const ClassOrder&, const ClassOrder&) = default;

 private:
  std::vector<int> reps_;
};

/// One stage of the n = dk construction.
struct StagePlan {
  int stage = 0;
  int k = 0;
  int d = 0;
  int representative = 0;  ///< a_s; 0 for a stage past the last class
  IndexSet stage_set;      ///< P_s: [dk] minus the classes of earlier stages
  IndexSet stage_class;    ///< the class of a_s
  /// trimmed[h-1] = P_s minus the class elements S^m(a_s), h <= m < d.
  std::vector<IndexSet> trimmed;
  /// B_s in canonical order.
  std::vector<IndexSet> block;
};

/// Builds the stage-s block B_s. Requires (k, dk) to satisfy the condition.
/// Throws StageOutOfRange unless 1 <= s <= k - p + 1.
StagePlan build_stage(int k, int d, const ClassOrder& order, int stage);

/// Smallest h with I(i, h) = I for a member I of the stage block; this is
/// the number of stage-class elements in I. Throws NotAStageMember.
int minimal_h(const IndexSet& set, const StagePlan& plan);

/// The k successive elements of `ordered` starting at `start`; empty when
/// `ordered` has fewer than k members.
IndexSet successive_run(const SubOrder& ordered, int start, int k);

struct DkConstruction {
  int k = 0;
  int d = 0;
  ClassOrder order{std::vector<int>{}};
  std::vector<StagePlan> stages;
  std::vector<Collection> layers;  ///< layers[s-1] = orbit closure of B_s under +k
  Collection collection{1, 0};
};

DkConstruction construct_dk_detailed(int k, int d, std::optional<ClassOrder> order = std::nullopt);
Collection construct_dk(int k, int d, std::optional<ClassOrder> order = std::nullopt);

/// The order-preserving bijection F: [n] -> A = classes of 1..g inside [dk],
/// F(a + g*x) = a + k*x.
class Relabeling {
 public:
  Relabeling(int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }
  int g() const { return g_; }
  int d() const { return d_; }
  int apply(int x) const;
  int invert(int y) const;
  IndexSet apply(const IndexSet& s) const;
  IndexSet invert(const IndexSet& s) const;
  /// The image A of [n].
  IndexSet image() const;

 private:
  int k_, n_, g_, d_;
  std::vector<int> forward_;   // forward_[x-1] = F(x)
  std::vector<int> backward_;  // backward_[y-1] = F^{-1}(y) or 0
};

/// Throws ConditionNotSatisfied if (k, n) fails the condition.
Relabeling relabel_F(int k, int n);

struct GeneralConstruction {
  ConditionReport condition;
  std::optional<DkConstruction> dk;  ///< absent for k = 0
  Collection collection{1, 0};
};

/// `order` may be empty (defaults), a head permutation of [g], or a full
/// class order of length k that respects the general constraint.
GeneralConstruction construct_general_detailed(int k, int n,
                                               std::optional<std::vector<int>> order = std::nullopt);
Collection construct_general(int k, int n, std::optional<std::vector<int>> order = std::nullopt);

}  // namespace symnc
