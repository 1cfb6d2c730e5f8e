#pragma once

#include <stdexcept>
#include <utility>

#include "geodekit/graph.hpp"

namespace geodekit {

// Bijection between product vertices and factor pairs; the product vertex
// for (g, h) is g * n(H) + h.
struct ProductVertexMap {
  int n_g = 0;
  int n_h = 0;

  int encode(int g, int h) const { return g * n_h + h; }
  int g_of(int x) const { return x / n_h; }
  int h_of(int x) const { return x % n_h; }
};

struct CartesianProduct {
  Graph graph;
  ProductVertexMap map;
};

// (g,h) ~ (g',h') iff equal in one coordinate and adjacent in the other.
inline CartesianProduct cartesian_product(const Graph& g, const Graph& h) {
  g.require_connected("cartesian_product");
  h.require_connected("cartesian_product");
  ProductVertexMap map{g.vertex_count(), h.vertex_count()};
  EdgeList e;
  for (int a = 0; a < map.n_g; ++a) {
    for (auto [x, y] : h.edges()) e.emplace_back(map.encode(a, x), map.encode(a, y));
  }
  for (int b = 0; b < map.n_h; ++b) {
    for (auto [x, y] : g.edges()) e.emplace_back(map.encode(x, b), map.encode(y, b));
  }
  return CartesianProduct{Graph(map.n_g * map.n_h, e), map};
}

enum class Factor { g, h };

inline VertexSet project(const ProductVertexMap& map, const VertexSet& s, Factor f) {
  VertexSet out(f == Factor::g ? map.n_g : map.n_h);
  for (int x = s.find_first(); x != -1; x = s.find_next(x)) {
    out.set(f == Factor::g ? map.g_of(x) : map.h_of(x));
  }
  return out;
}

// Coordinate image of a path with consecutive repeats collapsed.
inline Path project(const ProductVertexMap& map, const Path& p, Factor f) {
  Path out;
  for (int x : p) {
    int c = f == Factor::g ? map.g_of(x) : map.h_of(x);
    if (out.empty() || out.back() != c) out.push_back(c);
  }
  return out;
}

}  // namespace geodekit
