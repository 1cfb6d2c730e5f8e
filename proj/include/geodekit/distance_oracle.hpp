#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "geodekit/graph.hpp"
#include "geodekit/limits.hpp"

namespace geodekit {

// Geodesic counts saturate at this value instead of overflowing.
inline constexpr std::uint64_t kCountSaturated = std::numeric_limits<std::uint64_t>::max();

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s < a ? kCountSaturated : s;
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kCountSaturated / b) return kCountSaturated;
  return a * b;
}

struct GeodesicEnumeration {
  std::vector<Path> paths;
  bool complete = true;
  std::optional<LimitKind> limit_hit;
};

// All-pairs hop distances plus per-pair geodesic counts for a connected
// graph. The shortest-path DAG toward any target is derived from the
// distance matrix: w is downhill from u toward v iff uw is an edge and
// dist(w,v) = dist(u,v) - 1.
class DistanceOracle {
public:
  explicit DistanceOracle(const Graph& g) : g_(&g), n_(g.vertex_count()) {
    g.require_connected("DistanceOracle");
    dist_.assign(static_cast<std::size_t>(n_) * n_, -1);
    cnt_.assign(static_cast<std::size_t>(n_) * n_, 0);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n_));
    for (int s = 0; s < n_; ++s) {
      bfs_from(s, order);
      // Geodesic counting over the BFS DAG, in nondecreasing distance order.
      cnt(s, s) = 1;
      for (int v : order) {
        if (v == s) continue;
        std::uint64_t total = 0;
        for (int w : g.neighbors(v)) {
          if (dist(s, w) == dist(s, v) - 1) total = saturating_add(total, cnt(s, w));
        }
        cnt(s, v) = total;
      }
      diameter_ = std::max(diameter_, dist(s, order.back()));
    }
  }

  const Graph& graph() const { return *g_; }
  int vertex_count() const { return n_; }
  int diameter() const { return diameter_; }

  int distance(int u, int v) const { return dist(u, v); }

  // Number of distinct u,v-geodesics; kCountSaturated means "too many to count".
  std::uint64_t geodesic_count(int u, int v) const { return cnt(u, v); }

  bool on_geodesic(int u, int w, int v) const {
    return dist(u, w) + dist(w, v) == dist(u, v);
  }

  std::uint64_t geodesic_count_through(int u, int w, int v) const {
    if (!on_geodesic(u, w, v)) return 0;
    return saturating_mul(cnt(u, w), cnt(w, v));
  }

  // {w : d(u,w) + d(w,v) = d(u,v)}, i.e. every vertex on some u,v-geodesic.
  VertexSet interval(int u, int v) const {
    VertexSet s(n_);
    for (int w = 0; w < n_; ++w) {
      if (on_geodesic(u, w, v)) s.set(w);
    }
    return s;
  }

  // Neighbors of u that start a geodesic toward v.
  std::vector<int> downhill(int u, int v) const {
    std::vector<int> out;
    for (int w : g_->neighbors(u)) {
      if (dist(w, v) == dist(u, v) - 1) out.push_back(w);
    }
    return out;
  }

  // Lexicographically least u,v-geodesic (smallest next vertex at each step).
  Path first_geodesic(int u, int v) const {
    Path p{u};
    int cur = u;
    while (cur != v) {
      int step = -1;
      for (int w : g_->neighbors(cur)) {
        if (dist(w, v) == dist(cur, v) - 1) {
          step = w;
          break;
        }
      }
      p.push_back(step);
      cur = step;
    }
    return p;
  }

  // All u,v-geodesics in lexicographic order, optionally restricted to those
  // through a given vertex. A count above the cap yields an explicit
  // incomplete result instead of a truncated list.
  GeodesicEnumeration enumerate_geodesics(int u, int v, std::optional<int> through,
                                          const SearchLimits& limits = {}) const {
    GeodesicEnumeration out;
    if (through) {
      if (!on_geodesic(u, *through, v)) return out;  // empty, complete
      std::uint64_t total = geodesic_count_through(u, *through, v);
      if (total > static_cast<std::uint64_t>(limits.geodesic_cap)) {
        out.complete = false;
        out.limit_hit = LimitKind::geodesic_cap;
        return out;
      }
      std::vector<Path> heads = enumerate_all(u, *through);
      std::vector<Path> tails = enumerate_all(*through, v);
      out.paths.reserve(static_cast<std::size_t>(total));
      for (const Path& h : heads) {
        for (const Path& t : tails) {
          Path joined = h;
          joined.insert(joined.end(), t.begin() + 1, t.end());
          out.paths.push_back(std::move(joined));
        }
      }
      return out;
    }
    if (cnt(u, v) > static_cast<std::uint64_t>(limits.geodesic_cap)) {
      out.complete = false;
      out.limit_hit = LimitKind::geodesic_cap;
      return out;
    }
    out.paths = enumerate_all(u, v);
    return out;
  }

  // True iff every geodesic between members of s stays inside s.
  bool is_convex(const VertexSet& s) const {
    if (s.empty()) throw std::invalid_argument("is_convex: empty set");
    for (int u = s.find_first(); u != -1; u = s.find_next(u)) {
      for (int v = s.find_next(u); v != -1; v = s.find_next(v)) {
        for (int w = 0; w < n_; ++w) {
          if (!s.test(w) && on_geodesic(u, w, v)) return false;
        }
      }
    }
    return true;
  }

private:
  int& dist(int u, int v) { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
  int dist(int u, int v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
  std::uint64_t& cnt(int u, int v) { return cnt_[static_cast<std::size_t>(u) * n_ + v]; }
  std::uint64_t cnt(int u, int v) const { return cnt_[static_cast<std::size_t>(u) * n_ + v]; }

  void bfs_from(int s, std::vector<int>& order) {
    order.clear();
    order.push_back(s);
    dist(s, s) = 0;
    std::size_t head = 0;
    while (head < order.size()) {
      int v = order[head++];
      for (int w : g_->neighbors(v)) {
        if (dist(s, w) < 0) {
          dist(s, w) = dist(s, v) + 1;
          order.push_back(w);
        }
      }
    }
  }

  std::vector<Path> enumerate_all(int u, int v) const {
    std::vector<Path> out;
    Path cur{u};
    extend(cur, v, out);
    return out;
  }

  void extend(Path& cur, int target, std::vector<Path>& out) const {
    int at = cur.back();
    if (at == target) {
      out.push_back(cur);
      return;
    }
    for (int w : g_->neighbors(at)) {
      if (dist(w, target) == dist(at, target) - 1) {
        cur.push_back(w);
        extend(cur, target, out);
        cur.pop_back();
      }
    }
  }

  const Graph* g_;
  int n_;
  int diameter_ = 0;
  std::vector<int> dist_;
  std::vector<std::uint64_t> cnt_;
};

inline DistanceOracle distance_oracle(const Graph& g) { return DistanceOracle(g); }

}  // namespace geodekit
