#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "geodekit/distance_oracle.hpp"
#include "geodekit/families.hpp"
#include "geodekit/family_spec.hpp"
#include "geodekit/product.hpp"

using namespace geodekit;

TEST_CASE("standard families") {
  CHECK(path_graph(1).vertex_count() == 1);
  CHECK(path_graph(5).edge_count() == 4);
  CHECK(cycle_graph(6).edge_count() == 6);
  CHECK(star_graph(4).degree(0) == 4);

  Graph cocktail6 = cocktail_party_graph(6);
  CHECK(cocktail6.vertex_count() == 6);
  CHECK(cocktail6.edge_count() == 12);  // complement of a perfect matching
  for (int v = 0; v < 6; ++v) CHECK(cocktail6.degree(v) == 4);
  CHECK(!cocktail6.adjacent(0, 1));
  CHECK(cocktail6.adjacent(0, 2));

  Graph cocktail7 = cocktail_party_graph(7);
  CHECK(cocktail7.vertex_count() == 7);
  CHECK(cocktail7.degree(6) == 6);  // the odd singleton part sees everyone

  Graph k711 = complete_multipartite({7, 11});
  CHECK(k711.vertex_count() == 18);
  CHECK(k711.edge_count() == 77);

  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
  CHECK_THROWS_AS(complete_multipartite({3}), std::invalid_argument);
  CHECK_THROWS_AS(tree_from_edges(4, {{0, 1}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(tree_from_edges(3, {{0, 1}, {1, 2}, {0, 2}}), std::invalid_argument);
}

TEST_CASE("split graphs") {
  Graph s = split_graph(3, 3);
  CHECK(s.vertex_count() == 6);
  CHECK(s.edge_count() == 12);
  CHECK(split_graph(1, 1).edge_count() == 1);
  for (int v = 3; v < 6; ++v) CHECK(s.degree(v) == 3);
}

TEST_CASE("subdivision") {
  Graph sk3 = subdivision(complete_graph(3));
  CHECK(sk3.vertex_count() == 6);
  CHECK(sk3.edge_count() == 6);
  for (int v = 0; v < 6; ++v) CHECK(sk3.degree(v) == 2);  // a 6-cycle
  CHECK(sk3.connected());

  Graph sp2 = subdivision(path_graph(2));
  CHECK(sp2.vertex_count() == 3);
  CHECK(sp2.edge_count() == 2);

  Graph sk4 = subdivision(complete_graph(4));
  CHECK(sk4.vertex_count() == 10);
  CHECK(sk4.edge_count() == 12);
}

TEST_CASE("hat subdivision") {
  Graph hat4 = hat_subdivision(complete_graph(4));
  CHECK(hat4.vertex_count() == 10);
  CHECK(hat4.edge_count() == 27);
  CHECK(simplicial_vertices(hat4) == VertexSet::of(10, {0, 1, 2, 3}));
  // Subdivision vertices form a clique.
  for (int a = 4; a < 10; ++a) {
    for (int b = a + 1; b < 10; ++b) CHECK(hat4.adjacent(a, b));
  }
  // Originals sit at distance 2 or 3 from each other.
  DistanceOracle o(hat4);
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) {
      CHECK(o.distance(u, v) >= 2);
      CHECK(o.distance(u, v) <= 3);
    }
  }

  Graph hat3 = hat_subdivision(complete_graph(3));
  CHECK(hat3.vertex_count() == 6);
  CHECK(hat3.edge_count() == 9);

  CHECK_THROWS_AS(hat_subdivision(path_graph(2)), std::invalid_argument);
}

TEST_CASE("middle-clique join graph") {
  Graph h = h_graph(3, 2, 4);
  CHECK(h.vertex_count() == 32);  // k + s + (ks + C(k,2))(d-1)
  CHECK(h.edge_count() == 1 + 9 * 4 + 36);
  VertexSet mid = h_graph_middle_set(3, 2, 4);
  CHECK(mid.count() == 9);
  auto mids = mid.to_vector();
  for (std::size_t i = 0; i < mids.size(); ++i) {
    for (std::size_t j = i + 1; j < mids.size(); ++j) CHECK(h.adjacent(mids[i], mids[j]));
  }
  CHECK(h.adjacent(3, 4));  // the K_s side stays unsubdivided
  CHECK(!h.adjacent(0, 1));
  CHECK(DistanceOracle(h).diameter() == 4);

  // Odd d: both central positions enter the clique.
  Graph h3 = h_graph(2, 1, 3);
  VertexSet mid3 = h_graph_middle_set(2, 1, 3);
  CHECK(mid3.count() == 2 * (1 + 2));
  CHECK(DistanceOracle(h3).diameter() == 3);
}

TEST_CASE("clique trees") {
  // All sizes 1 reproduces the tree: internal vertices first, then leaves.
  Graph spider = tree_from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}});
  Graph same = clique_tree(spider, {1, 1, 1});
  CHECK(same.vertex_count() == 5);
  CHECK(same.edge_count() == 4);
  // Explicit relabeling: internals 1,2 -> 0,1; leaves 0,3,4 -> 2,3,4.
  std::vector<int> relabel{2, 0, 1, 3, 4};
  for (auto [u, v] : spider.edges()) {
    CHECK(same.adjacent(relabel[static_cast<std::size_t>(u)],
                        relabel[static_cast<std::size_t>(v)]));
  }

  Graph k5 = clique_tree(path_graph(2), {2, 3});
  CHECK(k5.vertex_count() == 5);
  CHECK(k5.edge_count() == 10);

  Graph fig = clique_tree(tree_from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}}), {3, 2, 2});
  CHECK(fig.vertex_count() == 9);
  CHECK(fig.edge_count() == 13);

  CHECK_THROWS_AS(clique_tree(cycle_graph(3), {1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(clique_tree(path_graph(3), {1}), std::invalid_argument);
}

TEST_CASE("thickened complete graph with apex") {
  Graph g = counterexample_graph(4, 2);
  CHECK(g.vertex_count() == 17);
  CHECK(g.edge_count() == 40);
  CHECK(g.degree(16) == 16);  // universal vertex
  for (int m = 4; m < 16; ++m) CHECK(g.degree(m) == 3);
  CHECK(!g.adjacent(0, 1));  // original edges are replaced, not kept

  // Every replacement vertex lies on geodesics only between its own two
  // endpoints (besides trivial pairs involving itself).
  DistanceOracle o(g);
  for (int m = 4; m < 16; ++m) {
    std::vector<int> ends;
    for (int w : g.neighbors(m)) {
      if (w != 16) ends.push_back(w);
    }
    REQUIRE(ends.size() == 2);
    for (int a = 0; a < 17; ++a) {
      for (int b = a + 1; b < 17; ++b) {
        if (a == m || b == m) continue;
        if (o.on_geodesic(a, m, b)) {
          CHECK(a == ends[0]);
          CHECK(b == ends[1]);
        }
      }
    }
  }
}

TEST_CASE("high-diameter variant") {
  Graph g = counterexample_high_diameter(4, 2, 2);
  CHECK(g.vertex_count() == 45);
  CHECK(g.edge_count() == 68);
  CHECK(DistanceOracle(g).diameter() == 4);
  // p = 2: the star part is an unsubdivided K_{1,4}, center joined to all
  // 12 middle vertices and 4 branch leaves.
  CHECK(g.degree(40) == 16);

  Graph g3 = counterexample_high_diameter(4, 2, 3);
  CHECK(g3.vertex_count() == 73);
  CHECK(DistanceOracle(g3).diameter() == 6);
}

TEST_CASE("cartesian products") {
  auto c4 = cartesian_product(path_graph(2), path_graph(2));
  CHECK(c4.graph.vertex_count() == 4);
  CHECK(c4.graph.edge_count() == 4);
  for (int v = 0; v < 4; ++v) CHECK(c4.graph.degree(v) == 2);

  auto k33 = cartesian_product(complete_graph(3), complete_graph(3));
  CHECK(k33.graph.vertex_count() == 9);
  CHECK(k33.graph.edge_count() == 18);

  // Every layer is a relabeled copy of its factor.
  Graph g = path_graph(4), h = cycle_graph(3);
  auto prod = cartesian_product(g, h);
  for (int b = 0; b < 3; ++b) {
    for (int u = 0; u < 4; ++u) {
      for (int v = u + 1; v < 4; ++v) {
        CHECK(prod.graph.adjacent(prod.map.encode(u, b), prod.map.encode(v, b)) ==
              g.adjacent(u, v));
      }
    }
  }
  // Product distances add coordinatewise.
  DistanceOracle og(g), oh(h), op(prod.graph);
  for (int a = 0; a < 4; ++a) {
    for (int x = 0; x < 3; ++x) {
      for (int b = 0; b < 4; ++b) {
        for (int y = 0; y < 3; ++y) {
          CHECK(op.distance(prod.map.encode(a, x), prod.map.encode(b, y)) ==
                og.distance(a, b) + oh.distance(x, y));
        }
      }
    }
  }
}

TEST_CASE("projections") {
  auto prod = cartesian_product(path_graph(3), path_graph(3));
  // A full second-factor layer projects to a single vertex.
  VertexSet layer(9);
  for (int h = 0; h < 3; ++h) layer.set(prod.map.encode(1, h));
  CHECK(project(prod.map, layer, Factor::g) == VertexSet::of(3, {1}));

  // Projected geodesics are geodesics of the factor.
  DistanceOracle op(prod.graph);
  auto en = op.enumerate_geodesics(prod.map.encode(0, 0), prod.map.encode(2, 2), std::nullopt);
  DistanceOracle og(path_graph(3));
  for (const Path& p : en.paths) {
    Path proj = project(prod.map, p, Factor::g);
    CHECK(static_cast<int>(proj.size()) - 1 == og.distance(proj.front(), proj.back()));
  }

  // Projection distributes over union.
  VertexSet a(9), b(9);
  a.set(prod.map.encode(0, 1));
  a.set(prod.map.encode(2, 0));
  b.set(prod.map.encode(1, 1));
  CHECK(project(prod.map, a | b, Factor::h) ==
        (project(prod.map, a, Factor::h) | project(prod.map, b, Factor::h)));
}

TEST_CASE("random trees are trees") {
  std::mt19937_64 rng(123);
  for (int i = 0; i < 50; ++i) {
    Graph t = random_tree(4 + i % 9, rng);
    CHECK(t.connected());
    CHECK(t.edge_count() == t.vertex_count() - 1);
  }
}

TEST_CASE("family spec grammar") {
  CHECK(parse_family_spec("P5").vertex_count() == 5);
  CHECK(parse_family_spec("C6").edge_count() == 6);
  CHECK(parse_family_spec("K4").edge_count() == 6);
  CHECK(parse_family_spec("hat(K4)").vertex_count() == 10);
  CHECK(parse_family_spec("H(3,2,4)").vertex_count() == 32);
  CHECK(parse_family_spec("cocktail(6)").edge_count() == 12);
  CHECK(parse_family_spec("cex(4,2)").vertex_count() == 17);
  CHECK(parse_family_spec("cexhd(4,2,2)").vertex_count() == 45);
  CHECK(parse_family_spec("product(P4,P3)").vertex_count() == 12);
  CHECK(parse_family_spec("kpartite(7,11)").vertex_count() == 18);
  CHECK(parse_family_spec("split(3,3)").edge_count() == 12);
  CHECK(parse_family_spec("tree(0-1,1-2,1-3)").vertex_count() == 4);
  CHECK(parse_family_spec("cliquetree(P3,2,2)").vertex_count() == 5);
  CHECK(parse_family_spec("subdiv(K3)").vertex_count() == 6);
  CHECK(parse_family_spec(" product( K3 , K3 ) ").vertex_count() == 9);

  CHECK_THROWS_AS(parse_family_spec("wat(3)"), ParseError);
  CHECK_THROWS_AS(parse_family_spec("path(2,3)"), ParseError);
  CHECK_THROWS_AS(parse_family_spec("P5junk"), ParseError);
  CHECK_THROWS_AS(parse_family_spec("tree(0-1,2-3)"), std::invalid_argument);
}
