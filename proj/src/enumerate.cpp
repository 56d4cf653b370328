#include "symnc/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_map>

#include "symnc/error.hpp"
#include "symnc/verify.hpp"

namespace symnc {

std::size_t OrbitAtlas::subset_count() const {
  std::size_t total = 0;
  for (const auto& o : orbits) total += o.members.size();
  return total;
}

OrbitAtlas build_atlas(int k, int n, int cap) {
  if (n < 1 || k < 0 || k > n) {
    throw Error(ErrorCode::InvalidRange, "(k,n) = (" + std::to_string(k) + "," + std::to_string(n) + ")");
  }
  if (n > cap || n > 63) {
    throw Error(ErrorCode::CapExceeded,
                "n = " + std::to_string(n) + " exceeds enumeration cap " + std::to_string(cap));
  }
  OrbitAtlas atlas;
  atlas.k = k;
  atlas.n = n;
  std::unordered_map<IndexSet, std::size_t, IndexSetHash> seen;
  // Subsets arrive in increasing mask order, which is not lexicographic, so
  // representatives are fixed up after each orbit is closed.
  for_each_k_subset(k, n, [&](const IndexSet& s) {
    if (seen.contains(s)) return;
    Orbit o;
    const std::size_t id = atlas.orbits.size();
    for (IndexSet cur = s;; ) {
      o.members.push_back(cur);
      seen.emplace(cur, id);
      cur = shift_set(cur, k, n);
      if (cur == s) break;
    }
    std::sort(o.members.begin(), o.members.end());
    o.representative = o.members.front();
    o.interval = is_interval_of_ground(o.representative, n);
    o.self_compatible = std::none_of(o.members.begin(), o.members.end(), [&](const IndexSet& m) {
      return crossing(o.representative, m, n);
    });
    atlas.orbits.push_back(std::move(o));
  });
  std::sort(atlas.orbits.begin(), atlas.orbits.end(),
            [](const Orbit& a, const Orbit& b) { return a.representative < b.representative; });
  return atlas;
}

CompatibilityGraph::CompatibilityGraph(const OrbitAtlas& atlas) {
  for (std::size_t i = 0; i < atlas.orbits.size(); ++i) {
    const Orbit& o = atlas.orbits[i];
    if (o.interval) {
      seed_.push_back(i);
      seed_weight_ += o.size();
    } else if (o.self_compatible) {
      vertices_.push_back(i);
    }
  }
  std::stable_sort(vertices_.begin(), vertices_.end(), [&](std::size_t a, std::size_t b) {
    return atlas.orbits[a].size() > atlas.orbits[b].size();
  });
  const std::size_t count = vertices_.size();
  words_ = (count + 63) / 64;
  weights_.reserve(count);
  for (std::size_t v : vertices_) weights_.push_back(atlas.orbits[v].size());
  adjacency_.assign(count, std::vector<std::uint64_t>(words_, 0));
  // Rotation equivariance: one representative against the other orbit suffices.
  for (std::size_t u = 0; u < count; ++u) {
    const Orbit& ou = atlas.orbits[vertices_[u]];
    for (std::size_t v = u + 1; v < count; ++v) {
      const Orbit& ov = atlas.orbits[vertices_[v]];
      const bool ok = std::none_of(ov.members.begin(), ov.members.end(), [&](const IndexSet& m) {
        return crossing(ou.representative, m, atlas.n);
      });
      if (ok) {
        adjacency_[u][v / 64] |= 1ULL << (v % 64);
        adjacency_[v][u / 64] |= 1ULL << (u % 64);
      }
    }
  }
}

namespace {

using Bits = std::vector<std::uint64_t>;

class CliqueSearch {
 public:
  CliqueSearch(const CompatibilityGraph& graph, int target, bool keep, std::optional<std::uint64_t> limit,
               std::atomic<std::uint64_t>& global_found)
      : graph_(graph), target_(target), keep_(keep), limit_(limit), global_found_(global_found) {
    // Group vertices by weight so that the weight of a candidate set is a few popcounts.
    std::map<int, Bits> by_weight;
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
      auto& bits = by_weight[graph.weight(v)];
      bits.resize(graph.words(), 0);
      bits[v / 64] |= 1ULL << (v % 64);
    }
    for (auto& [w, bits] : by_weight) weight_classes_.emplace_back(w, std::move(bits));
  }

  void run_top(std::size_t v) {
    if (stopped()) return;
    const int w = graph_.weight(v);
    if (w > target_) return;
    Bits candidates(graph_.words(), 0);
    const auto& nb = graph_.neighbours(v);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      std::uint64_t later = ~0ULL;
      if (i < v / 64) later = 0;
      else if (i == v / 64) later = (v % 64 == 63) ? 0 : (~0ULL << (v % 64 + 1));
      candidates[i] = nb[i] & later;
    }
    chosen_.push_back(v);
    expand(candidates, target_ - w);
    chosen_.pop_back();
  }

  /// Top-level call when nothing needs to be added (the seed alone is maximal).
  void emit_empty() { emit(); }

  std::uint64_t found() const { return found_; }
  std::vector<std::vector<std::size_t>>& cliques() { return cliques_; }

 private:
  bool stopped() const { return limit_ && global_found_.load(std::memory_order_relaxed) >= *limit_; }

  long long weight_of(const Bits& p) const {
    long long total = 0;
    for (const auto& [w, mask] : weight_classes_) {
      int c = 0;
      for (std::size_t i = 0; i < p.size(); ++i) c += std::popcount(p[i] & mask[i]);
      total += static_cast<long long>(w) * c;
    }
    return total;
  }

  void emit() {
    if (limit_) {
      const auto before = global_found_.fetch_add(1, std::memory_order_relaxed);
      if (before >= *limit_) return;
    }
    ++found_;
    if (keep_) cliques_.push_back(chosen_);
  }

  void expand(Bits& p, int deficit) {
    if (deficit == 0) {
      emit();
      return;
    }
    if (stopped() || weight_of(p) < deficit) return;
    for (std::size_t i = 0; i < p.size(); ++i) {
      while (p[i] != 0) {
        const std::size_t v = i * 64 + static_cast<std::size_t>(std::countr_zero(p[i]));
        p[i] &= p[i] - 1;
        const int w = graph_.weight(v);
        if (w <= deficit) {
          Bits next(p.size());
          const auto& nb = graph_.neighbours(v);
          for (std::size_t j = 0; j < p.size(); ++j) next[j] = p[j] & nb[j];
          chosen_.push_back(v);
          expand(next, deficit - w);
          chosen_.pop_back();
        }
        if (stopped() || weight_of(p) < deficit) return;
      }
    }
  }

  const CompatibilityGraph& graph_;
  int target_;
  bool keep_;
  std::optional<std::uint64_t> limit_;
  std::atomic<std::uint64_t>& global_found_;
  std::vector<std::pair<int, Bits>> weight_classes_;
  std::vector<std::size_t> chosen_;
  std::vector<std::vector<std::size_t>> cliques_;
  std::uint64_t found_ = 0;
};

}  // namespace

EnumerationResult enumerate_symmetric_maximal(int k, int n, const EnumerateOptions& options) {
  const OrbitAtlas atlas = build_atlas(k, n, options.cap);
  const CompatibilityGraph graph(atlas);
  EnumerationResult result;
  result.k = k;
  result.n = n;
  result.orbit_count = atlas.orbits.size();
  result.search_vertices = graph.vertex_count();

  const long long required = maximal_size(k, n);
  const long long deficit = required - graph.seed_weight();
  const bool keep = !options.count_only;
  std::atomic<std::uint64_t> global_found{0};

  std::vector<std::vector<std::size_t>> cliques;
  if (deficit == 0) {
    CliqueSearch search(graph, 0, keep, options.limit, global_found);
    search.emit_empty();
    result.count = search.found();
    cliques = std::move(search.cliques());
  } else if (deficit > 0) {
    const int threads = std::max(1, options.threads);
    std::vector<CliqueSearch> searches;
    searches.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      searches.emplace_back(graph, static_cast<int>(deficit), keep, options.limit, global_found);
    }
    auto work = [&](int t) {
      for (std::size_t v = static_cast<std::size_t>(t); v < graph.vertex_count();
           v += static_cast<std::size_t>(threads)) {
        searches[static_cast<std::size_t>(t)].run_top(v);
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }
    for (auto& s : searches) {
      result.count += s.found();
      for (auto& c : s.cliques()) cliques.push_back(std::move(c));
    }
  }
  result.truncated = options.limit.has_value() && global_found.load() >= *options.limit &&
                     result.count >= *options.limit;

  if (keep) {
    result.collections.reserve(cliques.size());
    for (const auto& clique : cliques) {
      std::vector<IndexSet> sets;
      for (std::size_t o : graph.seed_orbits()) {
        const auto& m = atlas.orbits[o].members;
        sets.insert(sets.end(), m.begin(), m.end());
      }
      for (std::size_t v : clique) {
        const auto& m = atlas.orbits[graph.orbit_of_vertex(v)].members;
        sets.insert(sets.end(), m.begin(), m.end());
      }
      result.collections.emplace_back(n, k, std::move(sets));
    }
    std::sort(result.collections.begin(), result.collections.end(),
              [](const Collection& a, const Collection& b) { return a.sets() < b.sets(); });
  }
  return result;
}

std::vector<ExistenceRow> existence_table(int max_n, int cap) {
  std::vector<ExistenceRow> rows;
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 1; k <= n; ++k) {
      ExistenceRow row;
      row.k = k;
      row.n = n;
      row.condition = condition_star(k, n);
      if (n <= cap && n <= 63) {
        EnumerateOptions opts;
        opts.count_only = true;
        opts.cap = cap;
        opts.limit = 1;
        row.search_found = enumerate_symmetric_maximal(k, n, opts).count > 0;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace symnc
