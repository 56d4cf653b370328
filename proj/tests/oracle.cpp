#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace oracle {

Set to_set(const symnc::IndexSet& s) {
  Set out;
  for (int i = 1; i <= symnc::kMaxN; ++i) {
    if (s.contains(i)) out.push_back(i);
  }
  return out;
}

symnc::IndexSet from_set(const Set& s) {
  symnc::IndexSet out;
  for (int i : s) out = out.with(i);
  return out;
}

namespace {

bool has(const Set& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

}  // namespace

bool crossing(const Set& I, const Set& J, int n) {
  auto only_i = [&](int x) { return has(I, x) && !has(J, x); };
  auto only_j = [&](int x) { return has(J, x) && !has(I, x); };
  // Every cyclic order of four points is a rotation of a linear one, so it is
  // enough to test both alternation patterns on linear quadruples.
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) {
        for (int d = c + 1; d <= n; ++d) {
          if (only_i(a) && only_j(b) && only_i(c) && only_j(d)) return true;
          if (only_j(a) && only_i(b) && only_j(c) && only_i(d)) return true;
        }
      }
    }
  }
  return false;
}

Set shift(const Set& I, int t, int n) {
  Set out;
  for (int x : I) out.push_back(((x - 1 + t) % n + n) % n + 1);
  std::sort(out.begin(), out.end());
  return out;
}

Set complement(const Set& I, int n) {
  Set out;
  for (int x = 1; x <= n; ++x) {
    if (!has(I, x)) out.push_back(x);
  }
  return out;
}

bool is_cyclic_interval(const Set& I, int n) {
  if (I.empty() || static_cast<int>(I.size()) == n) return true;
  for (int start = 1; start <= n; ++start) {
    Set run;
    for (std::size_t j = 0; j < I.size(); ++j) run.push_back((start - 1 + static_cast<int>(j)) % n + 1);
    std::sort(run.begin(), run.end());
    if (run == I) return true;
  }
  return false;
}

namespace {

// Cyclic successor of x among the members of p.
int successor_in(const Set& p, int x) {
  auto it = std::upper_bound(p.begin(), p.end(), x);
  return it == p.end() ? p.front() : *it;
}

}  // namespace

std::vector<Set> stage_block(int k, int d, const std::vector<int>& order, int s) {
  const int n = d * k;
  auto cls = [&](int a) {
    Set c;
    for (int x = 1; x <= n; ++x) {
      if ((x - a) % k == 0) c.push_back(x);
    }
    return c;
  };
  if (s > static_cast<int>(order.size())) return {};
  Set removed;
  for (int t = 0; t + 1 < s; ++t) {
    for (int x : cls(order[static_cast<std::size_t>(t)])) removed.push_back(x);
  }
  std::sort(removed.begin(), removed.end());
  Set ps;
  for (int x = 1; x <= n; ++x) {
    if (!has(removed, x)) ps.push_back(x);
  }
  const int a = order[static_cast<std::size_t>(s - 1)];
  // S^m(a) walks the class of a cyclically: a, a+k, a+2k, ...
  auto class_step = [&](int m) { return (a - 1 + m * k) % n + 1; };

  // i ranges over the interval of P_s from S_{P_s}(a - k) up to a.
  const int before = ((a - 1 - k) % n + n) % n + 1;
  Set starts;
  for (int i = successor_in(ps, before);; i = successor_in(ps, i)) {
    starts.push_back(i);
    if (i == a) break;
  }

  std::set<Set> block;
  for (int h = 1; h <= d; ++h) {
    Set psh;
    for (int x : ps) {
      bool drop = false;
      for (int m = h; m < d; ++m) drop = drop || x == class_step(m);
      if (!drop) psh.push_back(x);
    }
    if (static_cast<int>(psh.size()) < k) continue;
    for (int i : starts) {
      if (!has(psh, i)) continue;
      Set run{i};
      int x = i;
      for (int j = 1; j < k; ++j) {
        x = successor_in(psh, x);
        run.push_back(x);
      }
      std::sort(run.begin(), run.end());
      block.insert(run);
    }
  }
  return {block.begin(), block.end()};
}

std::vector<Set> construct_dk(int k, int d, const std::vector<int>& order) {
  const int n = d * k;
  std::set<Set> all;
  for (int s = 1; s <= static_cast<int>(order.size()); ++s) {
    for (const auto& b : stage_block(k, d, order, s)) {
      for (int x = 0; x < d; ++x) all.insert(shift(b, x * k, n));
    }
  }
  return {all.begin(), all.end()};
}

std::vector<Set> k_subsets(int k, int n) {
  std::vector<Set> out;
  Set cur;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int x = from; x <= n; ++x) {
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

std::uint64_t count_symmetric_maximal(int k, int n) {
  const auto subsets = k_subsets(k, n);
  std::set<Set> seen;
  std::vector<std::vector<Set>> orbits;
  for (const auto& s : subsets) {
    if (seen.count(s)) continue;
    std::vector<Set> orbit;
    Set cur = s;
    do {
      orbit.push_back(cur);
      seen.insert(cur);
      cur = shift(cur, k, n);
    } while (cur != s);
    orbits.push_back(orbit);
  }
  const long long target = static_cast<long long>(k) * (n - k) + 1;
  auto compatible = [&](const std::vector<Set>& a, const std::vector<Set>& b) {
    for (const auto& x : a) {
      for (const auto& y : b) {
        if (crossing(x, y, n)) return false;
      }
    }
    return true;
  };
  std::vector<bool> self_ok;
  for (const auto& o : orbits) self_ok.push_back(compatible(o, o));
  std::vector<std::vector<bool>> pair_ok(orbits.size(), std::vector<bool>(orbits.size(), false));
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (!self_ok[i]) continue;
    for (std::size_t j = i + 1; j < orbits.size(); ++j) {
      if (self_ok[j]) pair_ok[i][j] = pair_ok[j][i] = compatible(orbits[i], orbits[j]);
    }
  }

  std::uint64_t count = 0;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, long long)> rec = [&](std::size_t next, long long size) {
    if (size == target) {
      ++count;
      return;
    }
    for (std::size_t i = next; i < orbits.size(); ++i) {
      if (!self_ok[i]) continue;
      if (size + static_cast<long long>(orbits[i].size()) > target) continue;
      bool ok = true;
      for (std::size_t c : chosen) ok = ok && pair_ok[c][i];
      if (!ok) continue;
      chosen.push_back(i);
      rec(i + 1, size + static_cast<long long>(orbits[i].size()));
      chosen.pop_back();
    }
  };
  rec(0, 0);
  return count;
}

}  // namespace oracle
