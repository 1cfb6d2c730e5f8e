#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "geodekit/certificates.hpp"
#include "geodekit/distance_oracle.hpp"
#include "geodekit/graph.hpp"
#include "geodekit/limits.hpp"
#include "geodekit/vertex_set.hpp"

namespace geodekit {

struct GeodeticResult {
  SolveStatus status = SolveStatus::proved;
  int value = -1;
  VertexSet witness;
  int lower = 0;
  int upper = 0;
  std::optional<LimitKind> limit_hit;
};

struct FeasibilityResult {
  SolveStatus status = SolveStatus::proved;
  bool feasible = false;
  std::optional<SgCertificate> certificate;
  std::optional<LimitKind> limit_hit;
};

struct SgResult {
  SolveStatus status = SolveStatus::proved;
  int value = -1;
  std::optional<SgCertificate> certificate;
  int lower = 0;
  int upper = 0;
  std::optional<LimitKind> limit_hit;
};

struct CoreResult {
  SolveStatus status = SolveStatus::proved;
  int value = -1;
  std::optional<CoreCertificate> certificate;
  int lower = 0;
  int upper = 0;
  std::optional<LimitKind> limit_hit;
};

struct SgSetEnumeration {
  SolveStatus status = SolveStatus::proved;
  int size = -1;
  std::vector<VertexSet> sets;
  bool complete = false;
  std::optional<LimitKind> limit_hit;
};

struct BoolResult {
  SolveStatus status = SolveStatus::proved;
  bool value = false;
  std::optional<LimitKind> limit_hit;
};

struct LowerBoundResult {
  SolveStatus status = SolveStatus::proved;
  bool holds = false;
  int smaller_value = -1;  // size of a smaller strong geodetic set, when found
  std::optional<LimitKind> limit_hit;
};

namespace detail {

// Intervals for all vertex pairs, computed once per solve.
class IntervalTable {
public:
  explicit IntervalTable(const DistanceOracle& o) : n_(o.vertex_count()) {
    table_.resize(static_cast<std::size_t>(n_) * n_);
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        table_[static_cast<std::size_t>(u) * n_ + v] = o.interval(u, v);
      }
    }
  }

  const VertexSet& at(int u, int v) const {
    if (u > v) std::swap(u, v);
    return table_[static_cast<std::size_t>(u) * n_ + v];
  }

private:
  int n_;
  std::vector<VertexSet> table_;
};

// Backtracking search for a per-pair geodesic assignment whose union covers
// every vertex. Branches on an uncovered vertex with the fewest covering
// options, where an option is (unassigned pair, geodesic through the
// vertex). Assigning a pair fixes it permanently along that branch, so the
// search is complete: any cover must route some pair through the chosen
// vertex. Pairs never branched on get the lexicographically first geodesic
// at the end.
class CoverSearch {
public:
  CoverSearch(const DistanceOracle& oracle, const IntervalTable& itable,
              std::vector<std::pair<int, int>> pairs, const VertexSet& base,
              Budget& budget, std::int64_t geodesic_cap)
      : oracle_(&oracle),
        budget_(&budget),
        cap_(geodesic_cap),
        n_(oracle.vertex_count()),
        pairs_(std::move(pairs)),
        uncovered_(base.complement()),
        cover_count_(static_cast<std::size_t>(oracle.vertex_count()), 0),
        reach_scratch_(oracle.vertex_count()) {
    intervals_.reserve(pairs_.size());
    layers_.reserve(pairs_.size());
    for (auto [u, v] : pairs_) {
      const VertexSet& iv = itable.at(u, v);
      intervals_.push_back(&iv);
      const int len = oracle.distance(u, v);
      // One mask per internal distance layer; a geodesic covers at most one
      // vertex of each.
      std::vector<VertexSet> layers(static_cast<std::size_t>(std::max(0, len - 1)),
                                    VertexSet(n_));
      for (int w = iv.find_first(); w != -1; w = iv.find_next(w)) {
        const int d = oracle.distance(u, w);
        if (d >= 1 && d <= len - 1) layers[static_cast<std::size_t>(d - 1)].set(w);
      }
      layers_.push_back(std::move(layers));
    }
    assigned_.assign(pairs_.size(), false);
    paths_.resize(pairs_.size());
    for (int v = 0; v < n_; ++v) {
      if (base.test(v)) cover_count_[static_cast<std::size_t>(v)] = 1;
    }
  }

  bool run() {
    // Every pair receives a path in any full assignment, so pairs with a
    // unique geodesic can be fixed up front.
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      if (oracle_->geodesic_count(pairs_[p].first, pairs_[p].second) == 1) {
        assign(p, oracle_->first_geodesic(pairs_[p].first, pairs_[p].second));
      }
    }
    return dfs();
  }

  // True when some refutation skipped options because a pair had more
  // geodesics through the branch vertex than the cap allows; an infeasible
  // answer is then not a proof.
  bool truncated() const { return truncated_; }

  std::vector<PairPath> assignment() const {
    std::vector<PairPath> out;
    out.reserve(pairs_.size());
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      out.push_back(PairPath{pairs_[p].first, pairs_[p].second, paths_[p]});
    }
    return out;
  }

private:
  bool dfs() {
    budget_->node();
    if (uncovered_.empty()) {
      for (std::size_t p = 0; p < pairs_.size(); ++p) {
        if (!assigned_[p]) paths_[p] = oracle_->first_geodesic(pairs_[p].first, pairs_[p].second);
      }
      return true;
    }
    // Union prune: every uncovered vertex must lie in some unassigned
    // pair's interval.
    reach_scratch_.clear();
    std::int64_t capacity = 0;
    const int need = uncovered_.count();
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      if (assigned_[p]) continue;
      reach_scratch_ |= *intervals_[p];
      for (const VertexSet& layer : layers_[p]) {
        if (layer.intersects(uncovered_)) ++capacity;
      }
    }
    if (capacity < need || !uncovered_.is_subset_of(reach_scratch_)) return false;

    // Branch vertex: fewest covering options, preferring vertices whose
    // options enumerate completely under the cap.
    int branch = -1;
    std::uint64_t best_opts = kCountSaturated;
    bool best_trunc = true;
    for (int w = uncovered_.find_first(); w != -1; w = uncovered_.find_next(w)) {
      std::uint64_t opts = 0;
      bool trunc = false;
      for (std::size_t p = 0; p < pairs_.size(); ++p) {
        if (assigned_[p]) continue;
        std::uint64_t c = oracle_->geodesic_count_through(pairs_[p].first, w, pairs_[p].second);
        if (c == 0) continue;
        if (c > static_cast<std::uint64_t>(cap_)) trunc = true;
        opts = saturating_add(opts, c);
      }
      if (opts == 0) return false;  // w cannot be covered on this branch
      if ((best_trunc && !trunc) || (trunc == best_trunc && opts < best_opts)) {
        branch = w;
        best_opts = opts;
        best_trunc = trunc;
      }
    }
    SearchLimits enum_limits;
    enum_limits.geodesic_cap = cap_;
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      if (assigned_[p]) continue;
      auto [u, v] = pairs_[p];
      std::uint64_t c = oracle_->geodesic_count_through(u, branch, v);
      if (c == 0) continue;
      if (c > static_cast<std::uint64_t>(cap_)) {
        truncated_ = true;
        continue;
      }
      auto en = oracle_->enumerate_geodesics(u, v, branch, enum_limits);
      for (Path& path : en.paths) {
        assign(p, std::move(path));
        if (dfs()) return true;
        unassign(p);
      }
    }
    return false;
  }

  void assign(std::size_t p, Path path) {
    assigned_[p] = true;
    for (int x : path) {
      if (cover_count_[static_cast<std::size_t>(x)]++ == 0) uncovered_.reset(x);
    }
    paths_[p] = std::move(path);
  }

  void unassign(std::size_t p) {
    assigned_[p] = false;
    for (int x : paths_[p]) {
      if (--cover_count_[static_cast<std::size_t>(x)] == 0) uncovered_.set(x);
    }
    paths_[p].clear();
  }

  const DistanceOracle* oracle_;
  Budget* budget_;
  std::int64_t cap_;
  int n_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<const VertexSet*> intervals_;
  std::vector<std::vector<VertexSet>> layers_;
  std::vector<bool> assigned_;
  std::vector<Path> paths_;
  VertexSet uncovered_;
  std::vector<int> cover_count_;
  VertexSet reach_scratch_;
  bool truncated_ = false;
};

// Calls fn with every k-subset of pool merged with the forced vertices, in
// lexicographic order of the merged sets; fn returns false to stop.
template <typename Fn>
void for_each_candidate(const std::vector<int>& forced, const std::vector<int>& pool, int r,
                        Fn&& fn) {
  if (r < 0 || r > static_cast<int>(pool.size())) return;
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::vector<int> members;
  while (true) {
    members.clear();
    members.reserve(forced.size() + static_cast<std::size_t>(r));
    std::size_t fi = 0;
    for (int i = 0; i < r; ++i) {
      int x = pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
      while (fi < forced.size() && forced[fi] < x) members.push_back(forced[fi++]);
      members.push_back(x);
    }
    while (fi < forced.size()) members.push_back(forced[fi++]);
    if (!fn(members)) return;
    int i = r - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == static_cast<int>(pool.size()) - r + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

inline VertexSet set_of(const std::vector<int>& members, int n) {
  VertexSet s(n);
  for (int v : members) s.set(v);
  return s;
}

inline std::vector<std::pair<int, int>> all_pairs(const std::vector<int>& members) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(members.size() * (members.size() - 1) / 2);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      pairs.emplace_back(members[i], members[j]);
    }
  }
  return pairs;
}

inline std::vector<std::pair<int, int>> pairs_meeting(const std::vector<int>& core,
                                                      const std::vector<int>& members) {
  std::vector<std::pair<int, int>> pairs;
  VertexSet in_core = set_of(core, members.empty() ? 1 : members.back() + 1);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (in_core.test(members[i]) || in_core.test(members[j])) {
        pairs.emplace_back(members[i], members[j]);
      }
    }
  }
  return pairs;
}

// Necessary conditions: candidates whose intervals cannot reach every
// vertex, or whose total path capacity falls short, are rejected without a
// search.
inline bool cover_possible(const DistanceOracle& o, const IntervalTable& it,
                           const std::vector<std::pair<int, int>>& pairs,
                           const VertexSet& base, const VertexSet& full, int n) {
  VertexSet possible = base;
  std::int64_t capacity = base.count();
  std::vector<std::uint64_t> layer_hit;
  for (auto [u, v] : pairs) {
    const VertexSet& iv = it.at(u, v);
    possible |= iv;
    // A geodesic covers at most one new vertex per internal distance layer.
    const int len = o.distance(u, v);
    layer_hit.assign(static_cast<std::size_t>(std::max(0, len - 1) + 63) / 64, 0);
    for (int w = iv.find_first(); w != -1; w = iv.find_next(w)) {
      if (base.test(w)) continue;
      const int d = o.distance(u, w);
      if (d >= 1 && d <= len - 1) {
        layer_hit[static_cast<std::size_t>(d - 1) >> 6] |= std::uint64_t{1} << ((d - 1) & 63);
      }
    }
    for (std::uint64_t word : layer_hit) capacity += std::popcount(word);
  }
  return capacity >= n && possible == full;
}

struct SizeScanResult {
  bool any_feasible = false;
  bool truncated = false;
};

// Scans all size-k candidate sets (forced vertices always included) in
// lexicographic order; on_feasible(members, search) returns false to stop.
template <typename OnFeasible>
SizeScanResult scan_sg_size(const DistanceOracle& o, const IntervalTable& it,
                            const std::vector<int>& forced, const std::vector<int>& pool, int k,
                            Budget& budget, OnFeasible&& on_feasible) {
  SizeScanResult res;
  const int n = o.vertex_count();
  const VertexSet full = VertexSet::full(n);
  const std::int64_t cap = budget.limits().geodesic_cap;
  for_each_candidate(forced, pool, k - static_cast<int>(forced.size()),
                     [&](const std::vector<int>& members) {
                       budget.node();
                       VertexSet base = set_of(members, n);
                       auto pairs = all_pairs(members);
                       if (!cover_possible(o, it, pairs, base, full, n)) return true;
                       CoverSearch search(o, it, std::move(pairs), base, budget, cap);
                       if (search.run()) {
                         res.any_feasible = true;
                         return on_feasible(members, search);
                       }
                       if (search.truncated()) res.truncated = true;
                       return true;
                     });
  return res;
}

// Smallest k with k + C(k,2) * (diam - 1) >= n; every strong geodetic set
// is at least this large.
inline int sg_counting_lower_bound(int n, int diam) {
  for (int k = 1; k < n; ++k) {
    std::int64_t cover = k + static_cast<std::int64_t>(k) * (k - 1) / 2 * (diam - 1);
    if (cover >= n) return k;
  }
  return n;
}

struct CoreScan {
  enum class Kind { found, refuted, truncated } kind = Kind::refuted;
  int value = -1;
  std::vector<int> core;
  std::vector<PairPath> paths;
};

// Ascending search for a smallest core of `members`, up to max_size.
inline CoreScan core_search(const DistanceOracle& o, const IntervalTable& it,
                            const std::vector<int>& members, Budget& budget, int max_size) {
  CoreScan out;
  const int n = o.vertex_count();
  const VertexSet full = VertexSet::full(n);
  const VertexSet base = set_of(members, n);
  const std::int64_t cap = budget.limits().geodesic_cap;
  bool truncated = false;
  for (int c = 1; c <= max_size; ++c) {
    bool found = false;
    for_each_candidate({}, members, c, [&](const std::vector<int>& core) {
      budget.node();
      auto pairs = pairs_meeting(core, members);
      if (!cover_possible(o, it, pairs, base, full, n)) return true;
      CoverSearch search(o, it, std::move(pairs), base, budget, cap);
      if (search.run()) {
        out.kind = CoreScan::Kind::found;
        out.value = c;
        out.core = core;
        out.paths = search.assignment();
        found = true;
        return false;
      }
      if (search.truncated()) truncated = true;
      return true;
    });
    if (found) return out;
    if (truncated) {
      out.kind = CoreScan::Kind::truncated;
      return out;
    }
  }
  out.kind = CoreScan::Kind::refuted;
  return out;
}

}  // namespace detail

// True iff the union of intervals over pairs of s, together with s itself,
// covers every vertex.
inline bool is_geodetic_set(const DistanceOracle& o, const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("is_geodetic_set: empty set");
  const int n = o.vertex_count();
  VertexSet covered = s;
  for (int u = s.find_first(); u != -1; u = s.find_next(u)) {
    for (int v = s.find_next(u); v != -1; v = s.find_next(v)) {
      covered |= o.interval(u, v);
    }
  }
  return covered == VertexSet::full(n);
}

inline bool is_geodetic_set(const Graph& g, const VertexSet& s) {
  DistanceOracle o(g);
  return is_geodetic_set(o, s);
}

// Minimum geodetic set; the witness is the lexicographically least optimum.
inline GeodeticResult geodetic_number(const Graph& g, const SearchLimits& limits = {}) {
  g.require_connected("geodetic_number");
  const int n = g.vertex_count();
  GeodeticResult out;
  out.witness = VertexSet(n);
  if (n == 1) {
    out.value = 1;
    out.witness.set(0);
    return out;
  }
  DistanceOracle o(g);
  detail::IntervalTable itable(o);
  const VertexSet full = VertexSet::full(n);
  const VertexSet forced_set = simplicial_vertices(g);
  std::vector<int> forced = forced_set.to_vector();
  std::vector<int> pool;
  for (int v = 0; v < n; ++v) {
    if (!forced_set.test(v)) pool.push_back(v);
  }
  Budget budget(limits);
  int k = std::max(2, static_cast<int>(forced.size()));
  try {
    for (; k <= n; ++k) {
      bool done = false;
      detail::for_each_candidate(forced, pool, k - static_cast<int>(forced.size()),
                                 [&](const std::vector<int>& members) {
                                   budget.node();
                                   VertexSet covered = detail::set_of(members, n);
                                   for (std::size_t i = 0; i < members.size() && covered != full;
                                        ++i) {
                                     for (std::size_t j = i + 1; j < members.size(); ++j) {
                                       covered |= itable.at(members[i], members[j]);
                                     }
                                   }
                                   if (covered == full) {
                                     out.value = k;
                                     out.witness = detail::set_of(members, n);
                                     done = true;
                                     return false;
                                   }
                                   return true;
                                 });
      if (done) return out;
    }
  } catch (const BudgetExhausted& e) {
    out.status = SolveStatus::inconclusive;
    out.lower = k;
    out.upper = n;
    out.limit_hit = e.kind;
    return out;
  }
  throw std::logic_error("geodetic_number: search fell through");
}

// Decides whether s admits a per-pair geodesic assignment covering V.
inline FeasibilityResult is_strong_geodetic_set(const Graph& g, const VertexSet& s,
                                                const SearchLimits& limits = {}) {
  g.require_connected("is_strong_geodetic_set");
  const int n = g.vertex_count();
  if (s.empty() || s.universe() != n) {
    throw std::invalid_argument("is_strong_geodetic_set: set empty or wrong universe");
  }
  FeasibilityResult out;
  if (n == 1) {
    out.feasible = true;
    out.certificate = SgCertificate{s, {}};
    return out;
  }
  DistanceOracle o(g);
  detail::IntervalTable itable(o);
  Budget budget(limits);
  auto members = s.to_vector();
  auto pairs = detail::all_pairs(members);
  detail::CoverSearch search(o, itable, std::move(pairs), s, budget, limits.geodesic_cap);
  try {
    if (search.run()) {
      out.feasible = true;
      out.certificate = SgCertificate{s, search.assignment()};
      return out;
    }
  } catch (const BudgetExhausted& e) {
    out.status = SolveStatus::inconclusive;
    out.limit_hit = e.kind;
    return out;
  }
  if (search.truncated()) {
    out.status = SolveStatus::inconclusive;
    out.limit_hit = LimitKind::geodesic_cap;
    return out;
  }
  return out;  // proved infeasible
}

// Exact strong geodetic number with certificate; returns the
// lexicographically least optimal set. Simplicial vertices are forced into
// every candidate. The optional geodetic lower bound is off by default.
inline SgResult strong_geodetic_number(const Graph& g, const SearchLimits& limits = {},
                                       bool use_geodetic_lower = false) {
  g.require_connected("strong_geodetic_number");
  const int n = g.vertex_count();
  SgResult out;
  if (n == 1) {
    out.value = 1;
    out.certificate = SgCertificate{VertexSet::of(1, {0}), {}};
    return out;
  }
  DistanceOracle o(g);
  detail::IntervalTable itable(o);
  const VertexSet forced_set = simplicial_vertices(g);
  std::vector<int> forced = forced_set.to_vector();
  std::vector<int> pool;
  for (int v = 0; v < n; ++v) {
    if (!forced_set.test(v)) pool.push_back(v);
  }
  int lb = std::max({2, static_cast<int>(forced.size()),
                     detail::sg_counting_lower_bound(n, o.diameter())});
  if (use_geodetic_lower) {
    auto gres = geodetic_number(g, limits);
    if (gres.status == SolveStatus::proved) lb = std::max(lb, gres.value);
  }
  Budget budget(limits);
  int k = lb;
  try {
    for (; k <= n; ++k) {
      auto scan = detail::scan_sg_size(o, itable, forced, pool, k, budget,
                                       [&](const std::vector<int>& members,
                                           detail::CoverSearch& search) {
                                         out.value = k;
                                         out.certificate =
                                             SgCertificate{detail::set_of(members, n),
                                                           search.assignment()};
                                         return false;
                                       });
      if (scan.any_feasible) return out;
      if (scan.truncated) {
        out.status = SolveStatus::inconclusive;
        out.lower = k;
        out.upper = n;
        out.limit_hit = LimitKind::geodesic_cap;
        return out;
      }
    }
  } catch (const BudgetExhausted& e) {
    out.status = SolveStatus::inconclusive;
    out.lower = k;
    out.upper = n;
    out.limit_hit = e.kind;
    return out;
  }
  throw std::logic_error("strong_geodetic_number: search fell through");
}

// Proves sg(G) >= k by refuting every smaller size, or reports the size of
// a smaller strong geodetic set it found instead.
inline LowerBoundResult sg_at_least(const Graph& g, int k, const SearchLimits& limits = {}) {
  g.require_connected("sg_at_least");
  const int n = g.vertex_count();
  LowerBoundResult out;
  if (n == 1) {
    out.holds = k <= 1;
    out.smaller_value = k <= 1 ? -1 : 1;
    return out;
  }
  DistanceOracle o(g);
  detail::IntervalTable itable(o);
  const VertexSet forced_set = simplicial_vertices(g);
  std::vector<int> forced = forced_set.to_vector();
  std::vector<int> pool;
  for (int v = 0; v < n; ++v) {
    if (!forced_set.test(v)) pool.push_back(v);
  }
  int lb = std::max({2, static_cast<int>(forced.size()),
                     detail::sg_counting_lower_bound(n, o.diameter())});
  Budget budget(limits);
  try {
    for (int size = lb; size < k; ++size) {
      if (size < static_cast<int>(forced.size())) continue;
      auto scan =
          detail::scan_sg_size(o, itable, forced, pool, size, budget,
                               [&](const std::vector<int>&, detail::CoverSearch&) { return false; });
      if (scan.any_feasible) {
        out.holds = false;
        out.smaller_value = size;
        return out;
      }
      if (scan.truncated) {
        out.status = SolveStatus::inconclusive;
        out.limit_hit = LimitKind::geodesic_cap;
        return out;
      }
    }
  } catch (const BudgetExhausted& e) {
    out.status = SolveStatus::inconclusive;
    out.limit_hit = e.kind;
    return out;
  }
  out.holds = true;
  return out;
}

// All minimum strong geodetic sets, in lexicographic order.
inline SgSetEnumeration enumerate_min_sg_sets(const Graph& g, const SearchLimits& limits = {}) {
  SgSetEnumeration out;
  auto sg = strong_geodetic_number(g, limits);
  if (sg.status != SolveStatus::proved) {
    out.status = SolveStatus::inconclusive;
    out.limit_hit = sg.limit_hit;
    return out;
  }
  out.size = sg.value;
  const int n = g.vertex_count();
  if (n == 1) {
    out.sets.push_back(VertexSet::of(1, {0}));
    out.complete = true;
    return out;
  }
  DistanceOracle o(g);
  detail::IntervalTable itable(o);
  const VertexSet forced_set = simplicial_vertices(g);
  std::vector<int> forced = forced_set.to_vector();
  std::vector<int> pool;
  for (int v = 0; v < n; ++v) {
    if (!forced_set.test(v)) pool.push_back(v);
  }
  Budget budget(limits);
  try {
    auto scan = detail::scan_sg_size(o, itable, forced, pool, sg.value, budget,
                                     [&](const std::vector<int>& members, detail::CoverSearch&) {
                                       out.sets.push_back(detail::set_of(members, n));
                                       return true;
                                     });
    out.complete = !scan.truncated;
    if (scan.truncated) {
      out.status = SolveStatus::inconclusive;
      out.limit_hit = LimitKind::geodesic_cap;
    }
  } catch (const BudgetExhausted& e) {
    out.status = SolveStatus::inconclusive;
    out.complete = false;
    out.limit_hit = e.kind;
  }
  return out;
}

// Smallest core of a given strong geodetic set; rejects sets that are not
// strong geodetic.
inline CoreResult sgc_of_set(const Graph& g, const VertexSet& s, const SearchLimits& limits = {}) {
  g.require_connected("sgc_of_set");
  const int n = g.vertex_count();
  CoreResult out;
  auto feas = is_strong_geodetic_set(g, s, limits);
  if (feas.status != SolveStatus::proved) {
    out.status = SolveStatus::inconclusive;
    out.lower = 1;
    out.upper = s.count();
    out.limit_hit = feas.limit_hit;
    return out;
  }
  if (!feas.feasible) throw std::invalid_argument("sgc_of_set: set is not strong geodetic");
  if (n == 1) {
    out.value = 1;
    out.certificate = CoreCertificate{s, s, {}};
    return out;
  }
  DistanceOracle o(g);
  detail::IntervalTable itable(o);
  Budget budget(limits);
  auto members = s.to_vector();
  try {
    auto scan = detail::core_search(o, itable, members, budget, static_cast<int>(members.size()));
    if (scan.kind == detail::CoreScan::Kind::found) {
      out.value = scan.value;
      out.certificate = CoreCertificate{s, detail::set_of(scan.core, n), std::move(scan.paths)};
      return out;
    }
    // The full set is always a core of itself, so only truncation lands here.
    out.status = SolveStatus::inconclusive;
    out.lower = 1;
    out.upper = s.count();
    out.limit_hit = LimitKind::geodesic_cap;
    return out;
  } catch (const BudgetExhausted& e) {
    out.status = SolveStatus::inconclusive;
    out.lower = 1;
    out.upper = s.count();
    out.limit_hit = e.kind;
    return out;
  }
}

// sgc(G): minimum of sgc over all minimum strong geodetic sets. Returns the
// first (lexicographically least) set attaining the minimum, with its core
// certificate.
inline CoreResult strong_geodetic_core_number(const Graph& g, const SearchLimits& limits = {}) {
  g.require_connected("strong_geodetic_core_number");
  const int n = g.vertex_count();
  CoreResult out;
  if (n == 1) {
    out.value = 1;
    out.certificate = CoreCertificate{VertexSet::of(1, {0}), VertexSet::of(1, {0}), {}};
    return out;
  }
  auto sg = strong_geodetic_number(g, limits);
  if (sg.status != SolveStatus::proved) {
    out.status = SolveStatus::inconclusive;
    out.lower = 1;
    out.upper = std::max(1, n - 1);
    out.limit_hit = sg.limit_hit;
    return out;
  }
  DistanceOracle o(g);
  detail::IntervalTable itable(o);
  const VertexSet forced_set = simplicial_vertices(g);
  std::vector<int> forced = forced_set.to_vector();
  std::vector<int> pool;
  for (int v = 0; v < n; ++v) {
    if (!forced_set.test(v)) pool.push_back(v);
  }
  Budget budget(limits);
  bool truncated = false;
  try {
    auto scan = detail::scan_sg_size(
        o, itable, forced, pool, sg.value, budget,
        [&](const std::vector<int>& members, detail::CoverSearch&) {
          const int ceiling = out.certificate ? out.value - 1 : static_cast<int>(members.size());
          auto core = detail::core_search(o, itable, members, budget, ceiling);
          if (core.kind == detail::CoreScan::Kind::found) {
            out.value = core.value;
            out.certificate = CoreCertificate{detail::set_of(members, n),
                                              detail::set_of(core.core, n),
                                              std::move(core.paths)};
          } else if (core.kind == detail::CoreScan::Kind::truncated) {
            truncated = true;
          }
          return !(out.certificate && out.value == 1);
        });
    truncated = truncated || scan.truncated;
  } catch (const BudgetExhausted& e) {
    // The certificate, when present, still witnesses the upper bound.
    out.status = SolveStatus::inconclusive;
    out.lower = 1;
    out.upper = out.certificate ? out.value : std::max(1, n - 1);
    out.limit_hit = e.kind;
    return out;
  }
  if (out.certificate && out.value == 1) return out;  // cannot be beaten
  if (truncated || !out.certificate) {
    out.status = SolveStatus::inconclusive;
    out.lower = 1;
    out.upper = out.certificate ? out.value : std::max(1, n - 1);
    out.limit_hit = LimitKind::geodesic_cap;
    return out;
  }
  return out;
}

// Unique shortest path between every vertex pair.
inline bool is_geodetic_graph(const Graph& g) {
  g.require_connected("is_geodetic_graph");
  DistanceOracle o(g);
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (o.geodesic_count(u, v) != 1) return false;
    }
  }
  return true;
}

// g(G) == sg(G); geodetic graphs short-circuit to true.
inline BoolResult is_generalized_geodetic(const Graph& g, const SearchLimits& limits = {}) {
  g.require_connected("is_generalized_geodetic");
  BoolResult out;
  if (is_geodetic_graph(g)) {
    out.value = true;
    return out;
  }
  auto gres = geodetic_number(g, limits);
  auto sres = strong_geodetic_number(g, limits);
  if (gres.status == SolveStatus::proved && sres.status == SolveStatus::proved) {
    out.value = gres.value == sres.value;
    return out;
  }
  // sg >= g always, so a proved g below the bracket floor of sg settles it.
  if (gres.status == SolveStatus::proved && sres.status == SolveStatus::inconclusive &&
      sres.lower > gres.value) {
    out.value = false;
    return out;
  }
  out.status = SolveStatus::inconclusive;
  out.limit_hit = sres.limit_hit ? sres.limit_hit : gres.limit_hit;
  return out;
}

// Exhaustive search for a partition into two nonempty convex parts; vertex 0
// is pinned to the first part. Guarded to n <= 20.
inline std::optional<std::pair<VertexSet, VertexSet>> has_convex_2_partition(const Graph& g) {
  g.require_connected("has_convex_2_partition");
  const int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("has_convex_2_partition: need n >= 2");
  if (n > 20) {
    throw std::invalid_argument("has_convex_2_partition: exhaustive search limited to n <= 20");
  }
  const VertexSet simp = simplicial_vertices(g);
  if (int v = simp.find_first(); v != -1) {
    // {v} and its complement: no geodesic between other vertices can pass
    // through a simplicial vertex.
    VertexSet a(n);
    a.set(v);
    return std::make_pair(a, a.complement());
  }
  DistanceOracle o(g);
  detail::IntervalTable itable(o);
  std::optional<std::pair<VertexSet, VertexSet>> result;
  // parts[0]/parts[1] with interval closures; assign vertices 1..n-1.
  std::function<bool(int, VertexSet&, VertexSet&, VertexSet&, VertexSet&)> rec =
      [&](int v, VertexSet& a, VertexSet& b, VertexSet& ca, VertexSet& cb) -> bool {
    if (v == n) {
      if (b.empty()) return false;
      result = std::make_pair(a, b);
      return true;
    }
    for (int side = 0; side < 2; ++side) {
      VertexSet& part = side == 0 ? a : b;
      VertexSet& closure = side == 0 ? ca : cb;
      VertexSet& other = side == 0 ? b : a;
      VertexSet& other_closure = side == 0 ? cb : ca;
      if (other_closure.test(v)) continue;  // v is demanded by the other part
      VertexSet new_closure = closure;
      for (int u = part.find_first(); u != -1; u = part.find_next(u)) {
        new_closure |= itable.at(u, v);
      }
      if (new_closure.intersects(other)) continue;
      part.set(v);
      if (rec(v + 1, a, b, side == 0 ? new_closure : ca, side == 0 ? cb : new_closure)) {
        return true;
      }
      part.reset(v);
    }
    return false;
  };
  VertexSet a(n), b(n), ca(n), cb(n);
  a.set(0);
  ca.set(0);
  if (rec(1, a, b, ca, cb)) return result;
  return std::nullopt;
}

}  // namespace geodekit
