#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "geodekit/vertex_set.hpp"

namespace geodekit {

// A walk given as a vertex sequence; geodesics are produced in this form.
using Path = std::vector<int>;

using EdgeList = std::vector<std::pair<int, int>>;

// Immutable simple undirected graph on vertices 0..n-1.
// Construction canonicalizes edges (u < v, sorted), builds sorted neighbor
// lists and per-vertex neighbor bitsets, and records connectivity.
class Graph {
public:
  Graph() = default;

  Graph(int n, const EdgeList& edges) : n_(n) {
    if (n <= 0) throw std::invalid_argument("graph must have at least one vertex");
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n) {
        throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                    "," + std::to_string(v) + ")");
      }
      if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
      edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
      throw std::invalid_argument("duplicate edge");
    }
    adj_.assign(static_cast<std::size_t>(n), {});
    adj_set_.assign(static_cast<std::size_t>(n), VertexSet(n));
    for (auto [u, v] : edges_) {
      adj_[static_cast<std::size_t>(u)].push_back(v);
      adj_[static_cast<std::size_t>(v)].push_back(u);
      adj_set_[static_cast<std::size_t>(u)].set(v);
      adj_set_[static_cast<std::size_t>(v)].set(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    connected_ = compute_connected();
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const EdgeList& edges() const { return edges_; }

  const std::vector<int>& neighbors(int v) const { return adj_[check(v)]; }
  const VertexSet& neighbor_set(int v) const { return adj_set_[check(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[check(v)].size()); }

  bool adjacent(int u, int v) const { return adj_set_[check(u)].test(v); }

  bool connected() const { return connected_; }

  void require_connected(const std::string& who) const {
    if (!connected_) throw std::invalid_argument(who + ": graph is disconnected");
  }

private:
  std::size_t check(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex index " + std::to_string(v));
    return static_cast<std::size_t>(v);
  }

  bool compute_connected() const {
    if (n_ == 0) return false;
    std::vector<int> stack{0};
    VertexSet seen(n_);
    seen.set(0);
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj_[static_cast<std::size_t>(v)]) {
        if (!seen.test(w)) {
          seen.set(w);
          ++reached;
          stack.push_back(w);
        }
      }
    }
    return reached == n_;
  }

  int n_ = 0;
  EdgeList edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<VertexSet> adj_set_;
  bool connected_ = false;
};

inline Graph build_graph(int n, const EdgeList& edges) { return Graph(n, edges); }

// Vertices whose neighborhood induces a complete graph.
inline VertexSet simplicial_vertices(const Graph& g) {
  const int n = g.vertex_count();
  VertexSet out(n);
  for (int v = 0; v < n; ++v) {
    bool ok = true;
    for (int u : g.neighbors(v)) {
      VertexSet others = g.neighbor_set(v);
      others.reset(u);
      if (!others.is_subset_of(g.neighbor_set(u))) {
        ok = false;
        break;
      }
    }
    if (ok) out.set(v);
  }
  return out;
}

}  // namespace geodekit
