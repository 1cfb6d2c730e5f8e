#pragma once

// Test-only reference implementations. Everything here recomputes distances
// and geodesics on its own and decides feasibility by brute force over the
// full cross product of per-pair geodesic choices, so it shares no code
// path with the solvers it checks.

#include <algorithm>
#include <queue>
#include <vector>

#include "geodekit/graph.hpp"
#include "geodekit/vertex_set.hpp"

namespace oracle {

inline std::vector<int> bfs(const geodekit::Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::queue<int> q;
  dist[static_cast<std::size_t>(source)] = 0;
  q.push(source);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

inline void collect_paths(const geodekit::Graph& g, const std::vector<int>& dist_to_target,
                          geodekit::Path& cur, int target,
                          std::vector<geodekit::Path>& out) {
  int at = cur.back();
  if (at == target) {
    out.push_back(cur);
    return;
  }
  for (int w : g.neighbors(at)) {
    if (dist_to_target[static_cast<std::size_t>(w)] ==
        dist_to_target[static_cast<std::size_t>(at)] - 1) {
      cur.push_back(w);
      collect_paths(g, dist_to_target, cur, target, out);
      cur.pop_back();
    }
  }
}

inline std::vector<geodekit::Path> all_geodesics(const geodekit::Graph& g, int u, int v) {
  auto dist = bfs(g, v);
  geodekit::Path cur{u};
  std::vector<geodekit::Path> out;
  collect_paths(g, dist, cur, v, out);
  return out;
}

// Tries every combination of one geodesic per listed pair.
inline bool cover_exists(const geodekit::Graph& g,
                         const std::vector<std::pair<int, int>>& pairs,
                         const geodekit::VertexSet& base) {
  const int n = g.vertex_count();
  std::vector<std::vector<geodekit::Path>> choices;
  choices.reserve(pairs.size());
  for (auto [u, v] : pairs) choices.push_back(all_geodesics(g, u, v));
  std::vector<std::size_t> pick(pairs.size(), 0);
  const geodekit::VertexSet full = geodekit::VertexSet::full(n);
  while (true) {
    geodekit::VertexSet covered = base;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      for (int x : choices[p][pick[p]]) covered.set(x);
    }
    if (covered == full) return true;
    std::size_t p = 0;
    while (p < pairs.size() && ++pick[p] == choices[p].size()) {
      pick[p] = 0;
      ++p;
    }
    if (p == pairs.size()) return false;
  }
}

inline bool is_strong_geodetic(const geodekit::Graph& g, const std::vector<int>& members) {
  const int n = g.vertex_count();
  if (n == 1) return members.size() == 1;
  geodekit::VertexSet base(n);
  for (int v : members) base.set(v);
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      pairs.emplace_back(members[i], members[j]);
    }
  }
  return cover_exists(g, pairs, base);
}

template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  if (k > n) return;
  while (true) {
    if (!fn(idx)) return;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

inline int sg(const geodekit::Graph& g) {
  const int n = g.vertex_count();
  if (n == 1) return 1;
  for (int k = 2; k <= n; ++k) {
    bool found = false;
    for_each_subset(n, k, [&](const std::vector<int>& members) {
      if (is_strong_geodetic(g, members)) {
        found = true;
        return false;
      }
      return true;
    });
    if (found) return k;
  }
  return n;
}

inline std::vector<std::vector<int>> min_sg_sets(const geodekit::Graph& g) {
  std::vector<std::vector<int>> out;
  const int n = g.vertex_count();
  if (n == 1) return {{0}};
  const int k = sg(g);
  for_each_subset(n, k, [&](const std::vector<int>& members) {
    if (is_strong_geodetic(g, members)) out.push_back(members);
    return true;
  });
  return out;
}

inline int sgc_of_set(const geodekit::Graph& g, const std::vector<int>& members) {
  const int n = g.vertex_count();
  if (n == 1) return 1;
  geodekit::VertexSet base(n);
  for (int v : members) base.set(v);
  for (int c = 1; c <= static_cast<int>(members.size()); ++c) {
    bool found = false;
    for_each_subset(static_cast<int>(members.size()), c, [&](const std::vector<int>& pick) {
      geodekit::VertexSet in_core(n);
      for (int i : pick) in_core.set(members[static_cast<std::size_t>(i)]);
      std::vector<std::pair<int, int>> pairs;
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          if (in_core.test(members[i]) || in_core.test(members[j])) {
            pairs.emplace_back(members[i], members[j]);
          }
        }
      }
      if (cover_exists(g, pairs, base)) {
        found = true;
        return false;
      }
      return true;
    });
    if (found) return c;
  }
  return static_cast<int>(members.size());
}

inline int sgc(const geodekit::Graph& g) {
  int best = g.vertex_count();
  for (const auto& members : min_sg_sets(g)) {
    best = std::min(best, sgc_of_set(g, members));
    if (best == 1) break;
  }
  return best;
}

inline int g_number(const geodekit::Graph& g) {
  const int n = g.vertex_count();
  if (n == 1) return 1;
  std::vector<std::vector<int>> dist;
  dist.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) dist.push_back(bfs(g, v));
  const geodekit::VertexSet full = geodekit::VertexSet::full(n);
  for (int k = 2; k <= n; ++k) {
    bool found = false;
    for_each_subset(n, k, [&](const std::vector<int>& members) {
      geodekit::VertexSet covered(n);
      for (int v : members) covered.set(v);
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          int a = members[i], b = members[j];
          for (int w = 0; w < n; ++w) {
            if (dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(w)] +
                    dist[static_cast<std::size_t>(w)][static_cast<std::size_t>(b)] ==
                dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
              covered.set(w);
            }
          }
        }
      }
      if (covered == full) {
        found = true;
        return false;
      }
      return true;
    });
    if (found) return k;
  }
  return n;
}

}  // namespace oracle
