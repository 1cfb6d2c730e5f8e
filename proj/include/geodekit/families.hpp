#pragma once

#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "geodekit/graph.hpp"

namespace geodekit {

inline Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path_graph: n >= 1 required");
  EdgeList e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n >= 3 required");
  EdgeList e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph: n >= 1 required");
  EdgeList e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return Graph(n, e);
}

// Parts are contiguous index ranges, in the given order.
inline Graph complete_multipartite(const std::vector<int>& parts) {
  if (parts.size() < 2) throw std::invalid_argument("complete_multipartite: need >= 2 parts");
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("complete_multipartite: part sizes must be >= 1");
  }
  const int n = std::accumulate(parts.begin(), parts.end(), 0);
  std::vector<int> part_of(static_cast<std::size_t>(n));
  int at = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int j = 0; j < parts[i]; ++j) part_of[static_cast<std::size_t>(at++)] = static_cast<int>(i);
  }
  EdgeList e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) {
        e.emplace_back(u, v);
      }
    }
  }
  return Graph(n, e);
}

// K_{1,n}; vertex 0 is the center.
inline Graph star_graph(int n) {
  if (n < 1) throw std::invalid_argument("star_graph: n >= 1 required");
  return complete_multipartite({1, n});
}

// Complete multipartite graph of order n with parts of size 2 (plus one part
// of size 1 when n is odd).
inline Graph cocktail_party_graph(int n) {
  if (n < 3) throw std::invalid_argument("cocktail_party_graph: n >= 3 required");
  std::vector<int> parts(static_cast<std::size_t>(n / 2), 2);
  if (n % 2 == 1) parts.push_back(1);
  return complete_multipartite(parts);
}

inline Graph tree_from_edges(int n, const EdgeList& edges) {
  Graph g(n, edges);
  if (!g.connected() || g.edge_count() != n - 1) {
    throw std::invalid_argument("tree_from_edges: edges do not form a tree");
  }
  return g;
}

// Clique 0..m-1, independent set m..m+n-1, all cross edges.
inline Graph split_graph(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("split_graph: m, n >= 1 required");
  EdgeList e;
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v) e.emplace_back(u, v);
  }
  for (int u = 0; u < m; ++u) {
    for (int v = m; v < m + n; ++v) e.emplace_back(u, v);
  }
  return Graph(m + n, e);
}

// Subdivide every edge once. Original vertices keep their indices; the
// subdivision vertex of the k-th canonical edge gets index n + k.
inline Graph subdivision(const Graph& g) {
  g.require_connected("subdivision");
  const int n = g.vertex_count();
  EdgeList e;
  int next = n;
  for (auto [u, v] : g.edges()) {
    e.emplace_back(u, next);
    e.emplace_back(next, v);
    ++next;
  }
  return Graph(next, e);
}

// Subdivision graph plus a clique on all subdivision vertices.
inline Graph hat_subdivision(const Graph& g) {
  g.require_connected("hat_subdivision");
  if (g.edge_count() < 2) {
    throw std::invalid_argument("hat_subdivision: need at least two edges");
  }
  const int n = g.vertex_count();
  const int m = g.edge_count();
  Graph s = subdivision(g);
  EdgeList e = s.edges();
  for (int a = n; a < n + m; ++a) {
    for (int b = a + 1; b < n + m; ++b) e.emplace_back(a, b);
  }
  return Graph(n + m, e);
}

// Join of K_k and K_s with every edge not inside K_s subdivided d-1 times,
// and a clique added on the middle-position vertices of the subdivided
// paths. Layout: K_k vertices 0..k-1, K_s vertices k..k+s-1, then one block
// of d-1 internal vertices per subdivided edge (K_k pairs in lex order, then
// cross pairs (u, v) ordered by u then v); position 1 is adjacent to the
// first endpoint.
inline Graph h_graph(int k, int s, int d) {
  if (k < 1 || s < 0 || d < 2) throw std::invalid_argument("h_graph: need k>=1, s>=0, d>=2");
  EdgeList e;
  for (int u = k; u < k + s; ++u) {
    for (int v = u + 1; v < k + s; ++v) e.emplace_back(u, v);
  }
  std::vector<std::pair<int, int>> subdivided;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) subdivided.emplace_back(i, j);
  }
  for (int u = 0; u < k; ++u) {
    for (int v = k; v < k + s; ++v) subdivided.emplace_back(u, v);
  }
  const int base = k + s;
  std::vector<int> middles;
  for (std::size_t b = 0; b < subdivided.size(); ++b) {
    const int first = base + static_cast<int>(b) * (d - 1);
    e.emplace_back(subdivided[b].first, first);
    for (int pos = 1; pos < d - 1; ++pos) e.emplace_back(first + pos - 1, first + pos);
    e.emplace_back(first + d - 2, subdivided[b].second);
    middles.push_back(first + d / 2 - 1);
    if (d % 2 == 1) middles.push_back(first + d / 2);
  }
  for (std::size_t a = 0; a < middles.size(); ++a) {
    for (std::size_t b = a + 1; b < middles.size(); ++b) {
      // Consecutive middle positions of one block are already joined.
      if (d % 2 == 1 && b == a + 1 && a % 2 == 0) continue;
      e.emplace_back(middles[a], middles[b]);
    }
  }
  const int n = base + static_cast<int>(subdivided.size()) * (d - 1);
  return Graph(n, e);
}

// Middle-clique vertex set of h_graph(k, s, d), matching its layout.
inline VertexSet h_graph_middle_set(int k, int s, int d) {
  const int blocks = k * (k - 1) / 2 + k * s;
  const int n = k + s + blocks * (d - 1);
  VertexSet out(n);
  for (int b = 0; b < blocks; ++b) {
    const int first = k + s + b * (d - 1);
    out.set(first + d / 2 - 1);
    if (d % 2 == 1) out.set(first + d / 2);
  }
  return out;
}

// Replace each leaf of a tree by a clique joined to the leaf's former
// support vertex. Non-leaf vertices come first (in ascending original
// order), then the per-leaf cliques in ascending leaf order. A two-vertex
// tree yields the complete graph on n1 + n2 vertices.
inline Graph clique_tree(const Graph& tree, const std::vector<int>& sizes) {
  if (!tree.connected() || tree.edge_count() != tree.vertex_count() - 1) {
    throw std::invalid_argument("clique_tree: first argument is not a tree");
  }
  for (int s : sizes) {
    if (s < 1) throw std::invalid_argument("clique_tree: clique sizes must be >= 1");
  }
  const int tn = tree.vertex_count();
  if (tn < 2) throw std::invalid_argument("clique_tree: tree must have at least two vertices");
  if (tn == 2) {
    if (sizes.size() != 2) throw std::invalid_argument("clique_tree: need one size per leaf");
    return complete_graph(sizes[0] + sizes[1]);
  }
  std::vector<int> leaves;
  std::vector<int> internal;
  for (int v = 0; v < tn; ++v) {
    (tree.degree(v) == 1 ? leaves : internal).push_back(v);
  }
  if (sizes.size() != leaves.size()) {
    throw std::invalid_argument("clique_tree: need one size per leaf, tree has " +
                                std::to_string(leaves.size()) + " leaves");
  }
  std::vector<int> relabel(static_cast<std::size_t>(tn), -1);
  for (std::size_t i = 0; i < internal.size(); ++i) {
    relabel[static_cast<std::size_t>(internal[i])] = static_cast<int>(i);
  }
  EdgeList e;
  for (auto [u, v] : tree.edges()) {
    int ru = relabel[static_cast<std::size_t>(u)];
    int rv = relabel[static_cast<std::size_t>(v)];
    if (ru >= 0 && rv >= 0) e.emplace_back(ru, rv);
  }
  int next = static_cast<int>(internal.size());
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const int support = relabel[static_cast<std::size_t>(tree.neighbors(leaves[i])[0])];
    const int first = next;
    next += sizes[i];
    for (int a = first; a < next; ++a) {
      e.emplace_back(a, support);
      for (int b = a + 1; b < next; ++b) e.emplace_back(a, b);
    }
  }
  return Graph(next, e);
}

// Complete graph K_k with every edge replaced by n disjoint length-2 paths,
// plus a universal vertex. Layout: 0..k-1 the original vertices, then n
// middle vertices per pair (pairs in lex order), universal vertex last.
inline Graph counterexample_graph(int k, int n) {
  if (k < 2 || n < 1) throw std::invalid_argument("counterexample_graph: need k>=2, n>=1");
  EdgeList e;
  int next = k;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      for (int c = 0; c < n; ++c) {
        e.emplace_back(i, next);
        e.emplace_back(next, j);
        ++next;
      }
    }
  }
  const int universal = next;
  for (int v = 0; v < universal; ++v) e.emplace_back(v, universal);
  return Graph(universal + 1, e);
}

// Higher-diameter variant: K_k with each edge replaced by n disjoint paths
// of length 2p, plus a subdivided star K_{1,k} (each star edge a path of
// length p-1) whose leaves attach to distinct original vertices and whose
// center is joined to all middle vertices. Layout: originals 0..k-1, path
// internals per (pair, copy) block (positions 1..2p-1, position 1 adjacent
// to the smaller endpoint), star center, then per-branch star internals
// followed by the branch leaf.
inline Graph counterexample_high_diameter(int k, int n, int p) {
  if (k < 2 || n < 1 || p < 2) {
    throw std::invalid_argument("counterexample_high_diameter: need k>=2, n>=1, p>=2");
  }
  EdgeList e;
  int next = k;
  std::vector<int> middles;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      for (int c = 0; c < n; ++c) {
        const int first = next;
        next += 2 * p - 1;
        e.emplace_back(i, first);
        for (int t = 1; t < 2 * p - 1; ++t) e.emplace_back(first + t - 1, first + t);
        e.emplace_back(next - 1, j);
        middles.push_back(first + p - 1);
      }
    }
  }
  const int center = next++;
  for (int m : middles) e.emplace_back(center, m);
  for (int i = 0; i < k; ++i) {
    int prev = center;
    for (int t = 0; t < p - 2; ++t) {
      e.emplace_back(prev, next);
      prev = next++;
    }
    const int leaf = next++;
    e.emplace_back(prev, leaf);
    e.emplace_back(leaf, i);
  }
  return Graph(next, e);
}

// Uniform random labeled tree via a random Pruefer sequence.
inline Graph random_tree(int n, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("random_tree: n >= 1 required");
  if (n == 1) return Graph(1, {});
  if (n == 2) return Graph(2, {{0, 1}});
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> prufer(static_cast<std::size_t>(n - 2));
  for (int& x : prufer) x = pick(rng);
  // Decode: repeatedly join the smallest remaining leaf to the next entry.
  std::vector<int> deg(static_cast<std::size_t>(n), 1);
  for (int x : prufer) ++deg[static_cast<std::size_t>(x)];
  EdgeList e;
  for (int x : prufer) {
    for (int v = 0; v < n; ++v) {
      if (deg[static_cast<std::size_t>(v)] == 1) {
        e.emplace_back(v, x);
        deg[static_cast<std::size_t>(v)] = 0;
        --deg[static_cast<std::size_t>(x)];
        break;
      }
    }
  }
  int a = -1;
  for (int v = 0; v < n; ++v) {
    if (deg[static_cast<std::size_t>(v)] == 1) {
      if (a < 0) {
        a = v;
      } else {
        e.emplace_back(a, v);
      }
    }
  }
  return tree_from_edges(n, e);
}

}  // namespace geodekit
