#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "geodekit/graph.hpp"

namespace geodekit {

namespace detail {

inline int pair_bit(int u, int v, int n) {
  // Upper-triangle bit layout, (u,v) with u < v.
  if (u > v) std::swap(u, v);
  return v * (v - 1) / 2 + u;
  (void)n;
}

inline bool mask_connected(std::uint32_t mask, int n) {
  std::uint32_t seen = 1;
  std::uint32_t frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < n; ++v) {
      if (!(frontier >> v & 1)) continue;
      for (int w = 0; w < n; ++w) {
        if (w != v && (mask >> pair_bit(std::min(v, w), std::max(v, w), n) & 1)) {
          next |= std::uint32_t{1} << w;
        }
      }
    }
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == (std::uint32_t{1} << n) - 1;
}

}  // namespace detail

// All connected graphs on n vertices up to isomorphism (canonical
// minimum-mask representative per class), for n <= 6. Canonicalization is
// brute force over all n! relabelings, which is the point at this scale.
inline std::vector<Graph> connected_graphs_up_to_iso(int n) {
  if (n < 1 || n > 6) {
    throw std::invalid_argument("connected_graphs_up_to_iso: supported for 1 <= n <= 6");
  }
  std::vector<Graph> out;
  if (n == 1) {
    out.emplace_back(1, EdgeList{});
    return out;
  }
  const int bits = n * (n - 1) / 2;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << bits); ++mask) {
    if (!detail::mask_connected(mask, n)) continue;
    std::uint32_t best = mask;
    std::iota(perm.begin(), perm.end(), 0);
    bool minimal = true;
    while (std::next_permutation(perm.begin(), perm.end())) {
      std::uint32_t relabeled = 0;
      for (int v = 1; v < n && relabeled <= best; ++v) {
        for (int u = 0; u < v; ++u) {
          if (mask >> detail::pair_bit(u, v, n) & 1) {
            int pu = perm[static_cast<std::size_t>(u)];
            int pv = perm[static_cast<std::size_t>(v)];
            relabeled |= std::uint32_t{1} << detail::pair_bit(std::min(pu, pv),
                                                              std::max(pu, pv), n);
          }
        }
      }
      if (relabeled < best) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    EdgeList edges;
    for (int v = 1; v < n; ++v) {
      for (int u = 0; u < v; ++u) {
        if (mask >> detail::pair_bit(u, v, n) & 1) edges.emplace_back(u, v);
      }
    }
    out.emplace_back(n, edges);
  }
  return out;
}

}  // namespace geodekit
