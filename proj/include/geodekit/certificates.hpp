#pragma once

#include <algorithm>
#include <queue>
#include <string>
#include <vector>

#include <json.hpp>

#include "geodekit/graph.hpp"
#include "geodekit/vertex_set.hpp"

namespace geodekit {

// One fixed geodesic for the unordered pair {u, v}, u < v; the path runs
// from u to v.
struct PairPath {
  int u = 0;
  int v = 0;
  Path path;
};

// Witness that a set is strong geodetic: one geodesic per pair of members
// whose union covers every vertex.
struct SgCertificate {
  VertexSet set;
  std::vector<PairPath> paths;
};

// Witness that `core` is a strong geodetic core for `set`: geodesics for
// exactly the pairs meeting the core cover every vertex.
struct CoreCertificate {
  VertexSet set;
  VertexSet core;
  std::vector<PairPath> paths;
};

namespace detail {

// The checker recomputes distances on its own so that certificate
// verification shares nothing with the solver path.
inline std::vector<int> checker_bfs(const Graph& g, int source) {
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

inline bool fail(std::string* reason, const std::string& why) {
  if (reason) *reason = why;
  return false;
}

inline bool check_assignment(const Graph& g, const VertexSet& set,
                             const std::vector<std::pair<int, int>>& expected_pairs,
                             const std::vector<PairPath>& paths, std::string* reason) {
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> seen;
  VertexSet covered(n);
  for (const PairPath& pp : paths) {
    if (pp.u < 0 || pp.u >= n || pp.v < 0 || pp.v >= n || pp.u >= pp.v) {
      return fail(reason, "malformed pair");
    }
    if (!set.test(pp.u) || !set.test(pp.v)) return fail(reason, "pair endpoint outside set");
    seen.emplace_back(pp.u, pp.v);
    if (pp.path.empty() || pp.path.front() != pp.u || pp.path.back() != pp.v) {
      return fail(reason, "path does not join its pair");
    }
    VertexSet on_path(n);
    for (std::size_t i = 0; i < pp.path.size(); ++i) {
      int x = pp.path[i];
      if (x < 0 || x >= n) return fail(reason, "path vertex out of range");
      if (on_path.test(x)) return fail(reason, "path repeats a vertex");
      on_path.set(x);
      if (i > 0 && !g.adjacent(pp.path[i - 1], x)) {
        return fail(reason, "path uses a non-edge");
      }
    }
    const auto dist = checker_bfs(g, pp.u);
    if (static_cast<int>(pp.path.size()) - 1 != dist[static_cast<std::size_t>(pp.v)]) {
      return fail(reason, "path is not a geodesic");
    }
    covered |= on_path;
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    return fail(reason, "pair assigned twice");
  }
  if (seen != expected_pairs) return fail(reason, "assigned pairs do not match the required pairs");
  if (covered != VertexSet::full(n)) return fail(reason, "paths do not cover every vertex");
  return true;
}

}  // namespace detail

inline bool verify_sg_certificate(const Graph& g, const SgCertificate& cert,
                                  std::string* reason = nullptr) {
  const int n = g.vertex_count();
  if (cert.set.universe() != n || cert.set.empty()) {
    return detail::fail(reason, "certificate set empty or wrong universe");
  }
  if (n == 1) {
    if (!cert.paths.empty()) return detail::fail(reason, "single-vertex certificate has paths");
    return true;
  }
  std::vector<std::pair<int, int>> expected;
  const auto members = cert.set.to_vector();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      expected.emplace_back(members[i], members[j]);
    }
  }
  return detail::check_assignment(g, cert.set, expected, cert.paths, reason);
}

inline bool verify_core_certificate(const Graph& g, const CoreCertificate& cert,
                                    std::string* reason = nullptr) {
  const int n = g.vertex_count();
  if (cert.set.universe() != n || cert.set.empty()) {
    return detail::fail(reason, "certificate set empty or wrong universe");
  }
  if (cert.core.universe() != n || !cert.core.is_subset_of(cert.set)) {
    return detail::fail(reason, "core is not a subset of the set");
  }
  if (n == 1) {
    if (!cert.paths.empty()) return detail::fail(reason, "single-vertex certificate has paths");
    return cert.core == cert.set;
  }
  if (cert.core.empty()) return detail::fail(reason, "empty core");
  std::vector<std::pair<int, int>> expected;
  const auto members = cert.set.to_vector();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (cert.core.test(members[i]) || cert.core.test(members[j])) {
        expected.emplace_back(members[i], members[j]);
      }
    }
  }
  return detail::check_assignment(g, cert.set, expected, cert.paths, reason);
}

namespace detail {

inline nlohmann::ordered_json paths_to_json(const std::vector<PairPath>& paths) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const PairPath& pp : paths) {
    arr.push_back({{"pair", {pp.u, pp.v}}, {"path", pp.path}});
  }
  return arr;
}

inline std::vector<PairPath> paths_from_json(const nlohmann::json& arr) {
  std::vector<PairPath> out;
  for (const auto& item : arr) {
    PairPath pp;
    pp.u = item.at("pair").at(0).get<int>();
    pp.v = item.at("pair").at(1).get<int>();
    pp.path = item.at("path").get<Path>();
    out.push_back(std::move(pp));
  }
  return out;
}

inline VertexSet set_from_json(const nlohmann::json& arr, int universe) {
  VertexSet s(universe);
  for (const auto& v : arr) s.set(v.get<int>());
  return s;
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const SgCertificate& cert, int value) {
  return {{"set", cert.set.to_vector()},
          {"paths", detail::paths_to_json(cert.paths)},
          {"value", value},
          {"status", "proved"}};
}

inline nlohmann::ordered_json to_json(const CoreCertificate& cert, int value) {
  return {{"set", cert.set.to_vector()},
          {"core", cert.core.to_vector()},
          {"paths", detail::paths_to_json(cert.paths)},
          {"value", value},
          {"status", "proved"}};
}

inline SgCertificate sg_certificate_from_json(const nlohmann::json& j, int universe) {
  return SgCertificate{detail::set_from_json(j.at("set"), universe),
                       detail::paths_from_json(j.at("paths"))};
}

inline CoreCertificate core_certificate_from_json(const nlohmann::json& j, int universe) {
  return CoreCertificate{detail::set_from_json(j.at("set"), universe),
                         detail::set_from_json(j.at("core"), universe),
                         detail::paths_from_json(j.at("paths"))};
}

}  // namespace geodekit
