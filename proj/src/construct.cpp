#include "symnc/construct.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "symnc/error.hpp"

namespace symnc {

namespace {

std::string pair_str(int k, int n) {
  return "(" + std::to_string(k) + "," + std::to_string(n) + ")";
}

ConditionReport require_condition(int k, int n) {
  ConditionReport report = condition_star(k, n);
  if (!report.satisfied) {
    throw Error(ErrorCode::ConditionNotSatisfied,
                pair_str(k, n) + ": k mod d = " + std::to_string(k % report.d) +
                    " with d = " + std::to_string(report.d));
  }
  return report;
}

}  // namespace

ConditionReport condition_star(int k, int n) {
  if (n < 1 || k < 0 || k > n) throw Error(ErrorCode::InvalidRange, pair_str(k, n));
  ConditionReport r;
  r.k = k;
  r.n = n;
  r.g = std::gcd(k, n);
  r.d = n / r.g;
  const int residue = k % r.d;
  if (residue == 0) {
    r.satisfied = true;
    r.c = 0;
  } else if (residue == 1) {
    r.satisfied = true;
    r.c = 1;
  } else if (residue == r.d - 1) {
    r.satisfied = true;
    r.c = -1;
  }
  if (r.satisfied) r.p = (k - r.c) / r.d;
  return r;
}

IndexSet orbit_of(int a, int k, int n) {
  if (a < 1 || a > n) throw Error(ErrorCode::InvalidRange, "class representative " + std::to_string(a));
  IndexSet out;
  const int step = k % n == 0 ? n : k;
  for (int x = a; !out.contains(x); x = add_mod(x, step, n)) out = out.with(x);
  return out;
}

ClassOrder::ClassOrder(std::vector<int> representatives) : reps_(std::move(representatives)) {
  std::vector<int> sorted = reps_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 1) {
      throw Error(ErrorCode::InvalidRange, "class order must be a permutation of 1.." +
                                               std::to_string(sorted.size()));
    }
  }
}

ClassOrder ClassOrder::reverse_natural(int k) {
  std::vector<int> reps(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) reps[static_cast<std::size_t>(i)] = k - i;
  return ClassOrder(std::move(reps));
}

ClassOrder ClassOrder::for_general(int k, int g, std::optional<std::vector<int>> head) {
  std::vector<int> reps;
  for (int a = k; a > g; --a) reps.push_back(a);
  if (head) {
    ClassOrder checked(*head);  // validates the head as a permutation of [g]
    if (checked.k() != g) {
      throw Error(ErrorCode::InvalidRange, "head order must list the " + std::to_string(g) +
                                               " classes 1.." + std::to_string(g));
    }
    reps.insert(reps.end(), head->begin(), head->end());
  } else {
    for (int a = g; a >= 1; --a) reps.push_back(a);
  }
  return ClassOrder(std::move(reps));
}

bool ClassOrder::respects_general_constraint(int g) const {
  bool seen_head = false;
  for (int a : reps_) {
    if (a <= g) seen_head = true;
    else if (seen_head) return false;
  }
  return true;
}

IndexSet successive_run(const SubOrder& ordered, int start, int k) {
  if (ordered.size() < k) return {};
  IndexSet out;
  int x = start;
  for (int j = 0; j < k; ++j) {
    out = out.with(x);
    x = ordered.successor(x);
  }
  return out;
}

StagePlan build_stage(int k, int d, const ClassOrder& order, int stage) {
  if (k < 1 || d < 1 || static_cast<long long>(k) * d > kMaxN) {
    throw Error(ErrorCode::InvalidRange, "(k,d) = (" + std::to_string(k) + "," + std::to_string(d) + ")");
  }
  const int n = k * d;
  const ConditionReport cond = require_condition(k, n);
  if (order.k() != k) throw Error(ErrorCode::InvalidRange, "class order has wrong length");
  const int last = k - cond.p + 1;
  if (stage < 1 || stage > last) {
    throw Error(ErrorCode::StageOutOfRange,
                "stage " + std::to_string(stage) + " outside [1," + std::to_string(last) + "]");
  }

  StagePlan plan;
  plan.stage = stage;
  plan.k = k;
  plan.d = d;
  IndexSet remaining = IndexSet::full(n);
  for (int t = 1; t < stage && t <= k; ++t) remaining = remaining - orbit_of(order.at(t), k, n);
  plan.stage_set = remaining;
  if (stage > k) return plan;  // only reachable when p = 0; nothing is left

  const int a = order.at(stage);
  plan.representative = a;
  plan.stage_class = orbit_of(a, k, n);
  const CyclicGround ground(n);
  const SubOrder stage_order(ground, plan.stage_set);
  const SubOrder class_order(ground, plan.stage_class);

  // trimmed[h-1] drops S^m(a) for h <= m < d from P_s.
  plan.trimmed.reserve(static_cast<std::size_t>(d));
  for (int h = 1; h <= d; ++h) {
    IndexSet dropped;
    for (int m = h; m < d; ++m) dropped = dropped.with(class_order.advance(a, m));
    plan.trimmed.push_back(plan.stage_set - dropped);
  }

  const int first = stage_order.successor(add_mod(a, -k, n));
  const IndexSet starts = interval(stage_order, first, a);
  std::vector<IndexSet> block;
  starts.for_each([&](int i) {
    for (int h = 1; h <= d; ++h) {
      const IndexSet& trimmed = plan.trimmed[static_cast<std::size_t>(h - 1)];
      if (trimmed.size() < k) continue;
      if (!trimmed.contains(i)) {
        throw std::logic_error("start " + std::to_string(i) + " missing from trimmed stage set");
      }
      block.push_back(successive_run(SubOrder(ground, trimmed), i, k));
    }
  });
  std::sort(block.begin(), block.end());
  block.erase(std::unique(block.begin(), block.end()), block.end());
  plan.block = std::move(block);
  return plan;
}

int minimal_h(const IndexSet& set, const StagePlan& plan) {
  if (!std::binary_search(plan.block.begin(), plan.block.end(), set)) {
    throw Error(ErrorCode::NotAStageMember,
                set.to_string() + " is not in stage " + std::to_string(plan.stage));
  }
  return (set & plan.stage_class).size();
}

DkConstruction construct_dk_detailed(int k, int d, std::optional<ClassOrder> order) {
  if (k < 1 || d < 1 || static_cast<long long>(k) * d > kMaxN) {
    throw Error(ErrorCode::InvalidRange, "(k,d) = (" + std::to_string(k) + "," + std::to_string(d) + ")");
  }
  const int n = k * d;
  const ConditionReport cond = require_condition(k, n);
  DkConstruction out;
  out.k = k;
  out.d = d;
  out.order = order ? *order : ClassOrder::reverse_natural(k);
  std::vector<IndexSet> all;
  for (int s = 1; s <= k - cond.p + 1; ++s) {
    StagePlan plan = build_stage(k, d, out.order, s);
    std::vector<IndexSet> layer;
    for (const auto& b : plan.block) {
      for (const auto& member : orbit(b, k, n)) layer.push_back(member);
    }
    Collection layer_collection(n, k, std::move(layer));
    all.insert(all.end(), layer_collection.begin(), layer_collection.end());
    out.layers.push_back(std::move(layer_collection));
    out.stages.push_back(std::move(plan));
  }
  out.collection = Collection(n, k, std::move(all));
  return out;
}

Collection construct_dk(int k, int d, std::optional<ClassOrder> order) {
  return construct_dk_detailed(k, d, std::move(order)).collection;
}

Relabeling::Relabeling(int k, int n) {
  const ConditionReport cond = require_condition(k, n);
  if (k == 0) throw Error(ErrorCode::InvalidRange, "relabeling needs k >= 1");
  k_ = k;
  n_ = n;
  g_ = cond.g;
  d_ = cond.d;
  const int dk = d_ * k_;
  if (dk > kMaxN) throw Error(ErrorCode::InvalidRange, "d*k exceeds " + std::to_string(kMaxN));
  forward_.assign(static_cast<std::size_t>(n), 0);
  backward_.assign(static_cast<std::size_t>(dk), 0);
  for (int a = 1; a <= g_; ++a) {
    for (int x = 0; x < d_; ++x) {
      const int from = a + g_ * x;
      const int to = a + k_ * x;
      forward_[static_cast<std::size_t>(from - 1)] = to;
      backward_[static_cast<std::size_t>(to - 1)] = from;
    }
  }
}

int Relabeling::apply(int x) const {
  if (x < 1 || x > n_) throw Error(ErrorCode::InvalidRange, "F argument " + std::to_string(x));
  return forward_[static_cast<std::size_t>(x - 1)];
}

int Relabeling::invert(int y) const {
  if (y < 1 || y > d_ * k_ || backward_[static_cast<std::size_t>(y - 1)] == 0) {
    throw Error(ErrorCode::MemberNotInSubset, std::to_string(y) + " is not in the image of F");
  }
  return backward_[static_cast<std::size_t>(y - 1)];
}

IndexSet Relabeling::apply(const IndexSet& s) const {
  IndexSet out;
  s.for_each([&](int x) { out = out.with(apply(x)); });
  return out;
}

IndexSet Relabeling::invert(const IndexSet& s) const {
  IndexSet out;
  s.for_each([&](int y) { out = out.with(invert(y)); });
  return out;
}

IndexSet Relabeling::image() const {
  IndexSet out;
  for (int y : forward_) out = out.with(y);
  return out;
}

Relabeling relabel_F(int k, int n) { return Relabeling(k, n); }

GeneralConstruction construct_general_detailed(int k, int n, std::optional<std::vector<int>> order) {
  GeneralConstruction out;
  out.condition = require_condition(k, n);
  if (k == 0) {
    out.collection = Collection(n, 0, {IndexSet{}});
    return out;
  }
  const int g = out.condition.g;
  const int d = out.condition.d;
  if (static_cast<long long>(d) * k > kMaxN) {
    throw Error(ErrorCode::InvalidRange,
                pair_str(k, n) + " needs an auxiliary ground set of size d*k = " +
                    std::to_string(d * k) + " > " + std::to_string(kMaxN));
  }

  ClassOrder full_order = ClassOrder::reverse_natural(k);
  if (order && static_cast<int>(order->size()) == k && k != g) {
    full_order = ClassOrder(*order);
    if (!full_order.respects_general_constraint(g)) {
      throw Error(ErrorCode::InvalidRange,
                  "class order must list every class above " + std::to_string(g) +
                      " before the classes 1.." + std::to_string(g));
    }
  } else {
    full_order = ClassOrder::for_general(k, g, std::move(order));
  }

  out.dk = construct_dk_detailed(k, d, full_order);
  const Relabeling relabel(k, n);
  std::vector<IndexSet> kept;
  // Keep the layers built after the k - g classes outside 1..g were consumed.
  for (std::size_t s = static_cast<std::size_t>(k - g); s < out.dk->layers.size(); ++s) {
    for (const auto& member : out.dk->layers[s]) kept.push_back(relabel.invert(member));
  }
  out.collection = Collection(n, k, std::move(kept));
  return out;
}

Collection construct_general(int k, int n, std::optional<std::vector<int>> order) {
  return construct_general_detailed(k, n, std::move(order)).collection;
}

}  // namespace symnc
