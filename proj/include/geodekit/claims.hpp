#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "geodekit/bounds.hpp"
#include "geodekit/families.hpp"
#include "geodekit/product.hpp"
#include "geodekit/small_graphs.hpp"
#include "geodekit/solvers.hpp"

namespace geodekit {

enum class ClaimClass { fast, standard, long_running };

inline std::string to_string(ClaimClass c) {
  switch (c) {
    case ClaimClass::fast: return "fast";
    case ClaimClass::standard: return "standard";
    case ClaimClass::long_running: return "long";
  }
  return "?";
}

enum class ClaimStatus { pass, fail, inconclusive };

inline std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

// Where an expected value comes from: a closed-form formula, or a value
// derived independently (brute force, enumeration, construction counting).
enum class Provenance { closed_form, derived };

inline std::string to_string(Provenance p) {
  return p == Provenance::closed_form ? "closed-form" : "derived";
}

struct ClaimOptions {
  SearchLimits limits;
  std::uint64_t seed = 20240701;  // random-tree claims only
};

struct ClaimOutcome {
  ClaimStatus status = ClaimStatus::pass;
  std::string detail;
};

struct Claim {
  std::string id;
  std::string statement;
  ClaimClass klass = ClaimClass::fast;
  Provenance provenance = Provenance::closed_form;
  std::function<ClaimOutcome(const ClaimOptions&)> run;
};

namespace detail {

// Accumulates named value checks into a deterministic detail string.
class ClaimCheck {
public:
  template <typename T>
  void eq(const std::string& name, const T& got, const T& want) {
    std::ostringstream os;
    os << name << "=" << got;
    if (!(got == want)) {
      os << " (expected " << want << ")";
      failed_ = true;
    }
    push(os.str());
  }

  void is_true(const std::string& name, bool got) {
    push(name + "=" + (got ? "yes" : "NO"));
    if (!got) failed_ = true;
  }

  void note(const std::string& text) { push(text); }

  void inconclusive(const std::string& what) {
    push("inconclusive: " + what);
    hit_limit_ = true;
  }

  ClaimOutcome outcome() const {
    ClaimOutcome out;
    out.detail = detail_;
    if (failed_) {
      out.status = ClaimStatus::fail;
    } else if (hit_limit_) {
      out.status = ClaimStatus::inconclusive;
    }
    return out;
  }

  // Unwraps a proved value or records the miss; callers must skip dependent
  // checks when this returns false.
  template <typename Result>
  bool proved(const std::string& name, const Result& r, int* value) {
    if (r.status != SolveStatus::proved) {
      inconclusive(name + " hit " + (r.limit_hit ? to_string(*r.limit_hit) : "a budget"));
      return false;
    }
    *value = r.value;
    return true;
  }

private:
  void push(const std::string& s) {
    if (!detail_.empty()) detail_ += "  ";
    detail_ += s;
  }

  std::string detail_;
  bool failed_ = false;
  bool hit_limit_ = false;
};

inline std::string set_to_string(const VertexSet& s) {
  std::string out = "[";
  bool first = true;
  for (int v = s.find_first(); v != -1; v = s.find_next(v)) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "]";
}

inline std::vector<Claim> build_registry() {
  std::vector<Claim> reg;

  reg.push_back(Claim{
      "hat-k4",
      "the hat-subdivision of K4 has sg = 4 with the four original vertices as its unique "
      "minimum set, and core number 3",
      ClaimClass::fast, Provenance::closed_form, [](const ClaimOptions& opt) {
        ClaimCheck c;
        Graph g = hat_subdivision(complete_graph(4));
        int sg = 0;
        if (c.proved("sg", strong_geodetic_number(g, opt.limits), &sg)) c.eq("sg", sg, 4);
        auto sets = enumerate_min_sg_sets(g, opt.limits);
        if (sets.status == SolveStatus::proved) {
          c.eq<std::size_t>("min-set-count", sets.sets.size(), 1);
          if (!sets.sets.empty()) {
            c.eq("unique-set", set_to_string(sets.sets[0]), std::string("[0,1,2,3]"));
          }
        } else {
          c.inconclusive("set enumeration");
        }
        int sgc = 0;
        if (c.proved("sgc", strong_geodetic_core_number(g, opt.limits), &sgc)) c.eq("sgc", sgc, 3);
        return c.outcome();
      }});

  reg.push_back(Claim{
      "bipartite-7-11",
      "in K_{7,11} the 7-side is the unique minimum strong geodetic set (sg = 7) with core "
      "number 2, while the 8-vertex set of five 7-side and three 11-side vertices has core "
      "number 4",
      ClaimClass::standard, Provenance::derived, [](const ClaimOptions& opt) {
        ClaimCheck c;
        Graph g = complete_multipartite({7, 11});
        int sg = 0;
        if (c.proved("sg", strong_geodetic_number(g, opt.limits), &sg)) c.eq("sg", sg, 7);
        auto sets = enumerate_min_sg_sets(g, opt.limits);
        if (sets.status == SolveStatus::proved) {
          c.eq<std::size_t>("min-set-count", sets.sets.size(), 1);
          if (!sets.sets.empty()) {
            c.eq("unique-set", set_to_string(sets.sets[0]), std::string("[0,1,2,3,4,5,6]"));
          }
        } else {
          c.inconclusive("set enumeration");
        }
        VertexSet s(18), t(18);
        for (int v = 0; v <= 6; ++v) s.set(v);
        for (int v = 0; v <= 4; ++v) t.set(v);
        for (int v = 7; v <= 9; ++v) t.set(v);
        int sgc_s = 0, sgc_t = 0;
        if (c.proved("sgc(S)", sgc_of_set(g, s, opt.limits), &sgc_s)) c.eq("sgc(S)", sgc_s, 2);
        if (c.proved("sgc(T)", sgc_of_set(g, t, opt.limits), &sgc_t)) c.eq("sgc(T)", sgc_t, 4);
        return c.outcome();
      }});

  reg.push_back(Claim{
      "cocktail-party",
      "cocktail-party graphs of order 6..9 have sg = n - floor(n/3) and sgc = floor(n/3)",
      ClaimClass::standard, Provenance::closed_form, [](const ClaimOptions& opt) {
        ClaimCheck c;
        for (int n = 6; n <= 9; ++n) {
          Graph g = cocktail_party_graph(n);
          int sg = 0, sgc = 0;
          std::string tag = "n" + std::to_string(n);
          if (c.proved(tag + ".sg", strong_geodetic_number(g, opt.limits), &sg)) {
            c.eq(tag + ".sg", sg, n - n / 3);
          }
          if (c.proved(tag + ".sgc", strong_geodetic_core_number(g, opt.limits), &sgc)) {
            c.eq(tag + ".sgc", sgc, n / 3);
          }
        }
        return c.outcome();
      }});

  reg.push_back(Claim{
      "bipartite-triangular",
      "sg(K_{n,C(n,2)}) = n for n = 3, 4",
      ClaimClass::fast, Provenance::closed_form, [](const ClaimOptions& opt) {
        ClaimCheck c;
        for (int n = 3; n <= 4; ++n) {
          Graph g = complete_multipartite({n, n * (n - 1) / 2});
          int sg = 0;
          std::string tag = "n" + std::to_string(n) + ".sg";
          if (c.proved(tag, strong_geodetic_number(g, opt.limits), &sg)) c.eq(tag, sg, n);
        }
        return c.outcome();
      }});

  reg.push_back(Claim{
      "h-graph-3-2-4",
      "the middle-clique join H(3,2,4) has 32 vertices, diameter 4, sg = 5, sgc = 3, and its "
      "(sgc, sg, diam, n) tuple meets the capacity inequality with equality",
      ClaimClass::standard, Provenance::closed_form, [](const ClaimOptions& opt) {
        ClaimCheck c;
        Graph g = h_graph(3, 2, 4);
        c.eq("n", g.vertex_count(), 32);
        DistanceOracle o(g);
        c.eq("diam", o.diameter(), 4);
        int sg = 0, sgc = 0;
        if (c.proved("sg", strong_geodetic_number(g, opt.limits), &sg)) c.eq("sg", sg, 5);
        if (c.proved("sgc", strong_geodetic_core_number(g, opt.limits), &sgc)) c.eq("sgc", sgc, 3);
        if (sg == 5 && sgc == 3) {
          c.is_true("capacity-tight", eq1_tight(sgc, sg, 4, 32));
        }
        return c.outcome();
      }});

  reg.push_back(Claim{
      "small-graph-bounds",
      "over every connected graph with at most 6 vertices: g <= sg, sg < n unless complete, "
      "sgc lies in its bracket, the capacity inequality holds, and sgc = 1 when n <= 5",
      ClaimClass::long_running, Provenance::derived, [](const ClaimOptions& opt) {
        ClaimCheck c;
        int graphs = 0;
        for (int n = 1; n <= 6; ++n) {
          for (const Graph& g : connected_graphs_up_to_iso(n)) {
            ++graphs;
            auto gres = geodetic_number(g, opt.limits);
            auto sres = strong_geodetic_number(g, opt.limits);
            auto cres = strong_geodetic_core_number(g, opt.limits);
            if (gres.status != SolveStatus::proved || sres.status != SolveStatus::proved ||
                cres.status != SolveStatus::proved) {
              c.inconclusive("solver budget on n=" + std::to_string(n));
              return c.outcome();
            }
            const bool complete = g.edge_count() == n * (n - 1) / 2;
            bool ok = gres.value <= sres.value;
            if (!complete) ok = ok && sres.value < n;
            if (n <= 5) ok = ok && cres.value == 1;
            if (n >= 2 && !complete) {
              auto range = sgc_bounds(n, sres.value, DistanceOracle(g).diameter());
              ok = ok && range.lower <= cres.value && cres.value <= range.upper;
              ok = ok && eq1_holds(cres.value, sres.value, DistanceOracle(g).diameter(), n);
            }
            if (!ok) {
              c.is_true("graph#" + std::to_string(graphs), false);
              return c.outcome();
            }
          }
        }
        c.eq("graphs-checked", graphs, 143);
        c.is_true("all-bounds-hold", true);
        return c.outcome();
      }});

  reg.push_back(Claim{
      "tree-cores",
      "200 random trees on up to 12 vertices all have core number 1",
      ClaimClass::fast, Provenance::closed_form, [](const ClaimOptions& opt) {
        ClaimCheck c;
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<int> size(4, 12);
        for (int i = 0; i < 200; ++i) {
          Graph t = random_tree(size(rng), rng);
          auto res = strong_geodetic_core_number(t, opt.limits);
          if (res.status != SolveStatus::proved) {
            c.inconclusive("tree " + std::to_string(i));
            return c.outcome();
          }
          if (res.value != 1) {
            c.eq("tree" + std::to_string(i) + ".sgc", res.value, 1);
            return c.outcome();
          }
        }
        c.note("seed=" + std::to_string(opt.seed));
        c.is_true("all-200-trees-sgc-1", true);
        return c.outcome();
      }});

  reg.push_back(Claim{
      "product-exact-values",
      "exact product values: sg(K3 x K3) = 5 meets the core product bound, sg(Pn x P3) = 4 "
      "for n = 3..6, sg(K4 x K2) = 4, and the 5-vertex double-clique tree times K2 gives 4; "
      "every product also respects the core bound",
      ClaimClass::standard, Provenance::closed_form, [](const ClaimOptions& opt) {
        ClaimCheck c;
        auto solve_product = [&](const Graph& a, const Graph& b, const std::string& tag,
                                 int expected) {
          Graph p = cartesian_product(a, b).graph;
          int sg = 0;
          if (c.proved(tag, strong_geodetic_number(p, opt.limits), &sg)) c.eq(tag, sg, expected);
          return sg;
        };
        int v33 = solve_product(complete_graph(3), complete_graph(3), "sg(K3xK3)", 5);
        c.eq<std::int64_t>("core-bound(K3xK3)", product_upper_sgc(3, 1, 3, 3, 1, 3), v33);
        for (int n = 3; n <= 6; ++n) {
          solve_product(path_graph(n), path_graph(3), "sg(P" + std::to_string(n) + "xP3)", 4);
        }
        solve_product(complete_graph(4), complete_graph(2), "sg(K4xK2)", 4);
        Graph ct = clique_tree(path_graph(3), {2, 2});
        solve_product(ct, complete_graph(2), "sg(CTxK2)", 4);
        return c.outcome();
      }});

  reg.push_back(Claim{
      "rook-4x4-exact-value",
      "the published closed form 2n-1 is claimed to be the exact value of sg(K_n x K_n); for "
      "n = 4 that pins sg(K4 x K4) = 7. Exhaustive search refutes it: a 6-vertex strong "
      "geodetic set exists (and no 5-vertex one), so only the inequality sg <= 2n-1 survives",
      ClaimClass::standard, Provenance::closed_form, [](const ClaimOptions& opt) {
        ClaimCheck c;
        Graph p = cartesian_product(complete_graph(4), complete_graph(4)).graph;
        int sg = 0;
        if (c.proved("sg(K4xK4)", strong_geodetic_number(p, opt.limits), &sg)) {
          c.eq("sg(K4xK4)", sg, 7);
          c.is_true("bound-sg<=7", sg <= product_upper_sgc(4, 1, 4, 4, 1, 4));
        }
        return c.outcome();
      }});

  reg.push_back(Claim{
      "product-projection",
      "for each product above, the first-factor projection of the proved minimum set is a "
      "geodetic set of that factor",
      ClaimClass::standard, Provenance::derived, [](const ClaimOptions& opt) {
        ClaimCheck c;
        std::vector<std::pair<Graph, Graph>> cases;
        cases.emplace_back(complete_graph(3), complete_graph(3));
        cases.emplace_back(complete_graph(4), complete_graph(4));
        for (int n = 3; n <= 6; ++n) cases.emplace_back(path_graph(n), path_graph(3));
        cases.emplace_back(complete_graph(4), complete_graph(2));
        cases.emplace_back(clique_tree(path_graph(3), {2, 2}), complete_graph(2));
        int idx = 0;
        for (const auto& [a, b] : cases) {
          auto prod = cartesian_product(a, b);
          auto res = strong_geodetic_number(prod.graph, opt.limits);
          std::string tag = "case" + std::to_string(idx++);
          if (res.status != SolveStatus::proved) {
            c.inconclusive(tag);
            continue;
          }
          VertexSet proj = project(prod.map, res.certificate->set, Factor::g);
          c.is_true(tag + ".projection-geodetic", is_geodetic_set(a, proj));
        }
        return c.outcome();
      }});

  reg.push_back(Claim{
      "convex-partition-prism",
      "the hat-subdivision of K4 is generalized geodetic (g = sg = 4) with core number 3 "
      "exceeding sg/2, K2 admits a convex 2-partition, and accordingly its prism has sg >= 5",
      ClaimClass::standard, Provenance::derived, [](const ClaimOptions& opt) {
        ClaimCheck c;
        Graph g = hat_subdivision(complete_graph(4));
        int gv = 0, sv = 0, cv = 0;
        if (c.proved("g", geodetic_number(g, opt.limits), &gv)) c.eq("g", gv, 4);
        if (c.proved("sg", strong_geodetic_number(g, opt.limits), &sv)) c.eq("sg", sv, 4);
        if (c.proved("sgc", strong_geodetic_core_number(g, opt.limits), &cv)) c.eq("sgc", cv, 3);
        c.is_true("sgc>sg/2", 2 * cv > sv);
        c.is_true("K2-convex-2-partition", has_convex_2_partition(complete_graph(2)).has_value());
        Graph prism = cartesian_product(g, complete_graph(2)).graph;
        auto lb = sg_at_least(prism, 5, opt.limits);
        if (lb.status != SolveStatus::proved) {
          c.inconclusive("prism lower bound");
        } else {
          c.is_true("sg(prism)>=5", lb.holds);
        }
        return c.outcome();
      }});

  reg.push_back(Claim{
      "prism-counterexample",
      "the thickened K4 with an apex (cex(4,2), 17 vertices) has sg = 10, yet an explicit "
      "9-vertex set is strong geodetic in its prism, so the prism strictly lowers sg",
      ClaimClass::long_running, Provenance::closed_form, [](const ClaimOptions& opt) {
        ClaimCheck c;
        auto forms = counterexample_closed_forms(4, 2);
        c.eq<std::int64_t>("closed-form-sg", forms.sg, 10);
        c.eq<std::int64_t>("closed-form-product-upper", forms.product_upper, 9);
        Graph g = counterexample_graph(4, 2);
        c.eq("n", g.vertex_count(), 17);
        int sg = 0;
        if (c.proved("sg", strong_geodetic_number(g, opt.limits), &sg)) c.eq("sg", sg, 10);
        auto prod = cartesian_product(g, complete_graph(2));
        VertexSet s(prod.graph.vertex_count());
        s.set(prod.map.encode(16, 0));  // apex in the first layer
        for (int i = 0; i < 4; ++i) {
          s.set(prod.map.encode(i, 0));
          s.set(prod.map.encode(i, 1));
        }
        auto feas = is_strong_geodetic_set(prod.graph, s, opt.limits);
        if (feas.status != SolveStatus::proved) {
          c.inconclusive("prism 9-set");
        } else {
          c.is_true("prism-9-set-strong-geodetic", feas.feasible);
          if (feas.feasible) {
            std::string why;
            c.is_true("certificate-verified",
                      verify_sg_certificate(prod.graph, *feas.certificate, &why));
          }
        }
        if (sg == 10) c.is_true("prism-drops-sg", true);
        return c.outcome();
      }});

  reg.push_back(Claim{
      "hat-bipartite-strict",
      "for the hat-subdivision of K_{4,6} the edge-count lower bound gives 3 while the true "
      "core number is 4, so the bound can be strict",
      ClaimClass::long_running, Provenance::derived, [](const ClaimOptions& opt) {
        ClaimCheck c;
        c.eq("hat-lower(10,24)", hat_lower(10, 24), 3);
        Graph g = hat_subdivision(complete_multipartite({4, 6}));
        c.eq("n", g.vertex_count(), 34);
        int sgc = 0;
        if (c.proved("sgc", strong_geodetic_core_number(g, opt.limits), &sgc)) c.eq("sgc", sgc, 4);
        return c.outcome();
      }});

  reg.push_back(Claim{
      "prism-small-monotone",
      "for every connected graph on at most 5 vertices the prism does not lower the strong "
      "geodetic number",
      ClaimClass::standard, Provenance::derived, [](const ClaimOptions& opt) {
        ClaimCheck c;
        int checked = 0;
        for (int n = 2; n <= 5; ++n) {
          for (const Graph& g : connected_graphs_up_to_iso(n)) {
            auto base = strong_geodetic_number(g, opt.limits);
            Graph prism = cartesian_product(g, complete_graph(2)).graph;
            auto lifted = strong_geodetic_number(prism, opt.limits);
            if (base.status != SolveStatus::proved || lifted.status != SolveStatus::proved) {
              c.inconclusive("n=" + std::to_string(n));
              return c.outcome();
            }
            if (lifted.value < base.value) {
              c.is_true("monotone@n" + std::to_string(n), false);
              return c.outcome();
            }
            ++checked;
          }
        }
        c.eq("graphs-checked", checked, 30);
        c.is_true("prism-monotone-up-to-5", true);
        return c.outcome();
      }});

  reg.push_back(Claim{
      "split-generalized-geodetic",
      "the split graph with clique 3 and independent set 3 has g = sg = 3 without being "
      "geodetic",
      ClaimClass::fast, Provenance::closed_form, [](const ClaimOptions& opt) {
        ClaimCheck c;
        Graph g = split_graph(3, 3);
        int gv = 0, sv = 0;
        if (c.proved("g", geodetic_number(g, opt.limits), &gv)) c.eq("g", gv, 3);
        if (c.proved("sg", strong_geodetic_number(g, opt.limits), &sv)) c.eq("sg", sv, 3);
        c.is_true("not-geodetic", !is_geodetic_graph(g));
        auto gen = is_generalized_geodetic(g, opt.limits);
        c.is_true("generalized-geodetic", gen.status == SolveStatus::proved && gen.value);
        return c.outcome();
      }});

  reg.push_back(Claim{
      "product-bound-comparison",
      "on K_n x K_n the plain product bound gives n^2-n+1 while the core-based bound gives "
      "2n-1, and the core-based bound never exceeds the plain one when sgc <= sg-1",
      ClaimClass::fast, Provenance::closed_form, [](const ClaimOptions&) {
        ClaimCheck c;
        for (int n = 3; n <= 6; ++n) {
          std::string tag = "K" + std::to_string(n);
          c.eq(tag + ".plain", product_upper_old(n, n, n, n),
               static_cast<std::int64_t>(n) * n - n + 1);
          c.eq(tag + ".core", product_upper_sgc(n, 1, n, n, 1, n),
               static_cast<std::int64_t>(2) * n - 1);
        }
        bool dominated = true;
        for (int ng = 2; ng <= 7; ++ng) {
          for (int sg_g = 2; sg_g <= ng; ++sg_g) {
            for (int sgc_g = 1; sgc_g < sg_g; ++sgc_g) {
              for (int nh = 2; nh <= 7; ++nh) {
                for (int sg_h = 2; sg_h <= nh; ++sg_h) {
                  for (int sgc_h = 1; sgc_h < sg_h; ++sgc_h) {
                    dominated = dominated &&
                                product_upper_sgc(sg_g, sgc_g, ng, sg_h, sgc_h, nh) <=
                                    product_upper_old(sg_g, ng, sg_h, nh);
                  }
                }
              }
            }
          }
        }
        c.is_true("core-bound-dominates", dominated);
        return c.outcome();
      }});

  reg.push_back(Claim{
      "high-diameter-construction",
      "the diameter-4 variant cexhd(4,2,2) has 45 vertices and diameter exactly 2p = 4",
      ClaimClass::fast, Provenance::derived, [](const ClaimOptions&) {
        ClaimCheck c;
        Graph g = counterexample_high_diameter(4, 2, 2);
        c.eq("n", g.vertex_count(), 45);
        c.eq("diam", DistanceOracle(g).diameter(), 4);
        return c.outcome();
      }});

  reg.push_back(Claim{
      "tree-product-floor",
      "a star with 4 leaves satisfies sg(T x K2) = 4 = its leaf count",
      ClaimClass::standard, Provenance::closed_form, [](const ClaimOptions& opt) {
        ClaimCheck c;
        Graph t = star_graph(4);
        Graph p = cartesian_product(t, complete_graph(2)).graph;
        int sg = 0;
        if (c.proved("sg", strong_geodetic_number(p, opt.limits), &sg)) c.eq("sg", sg, 4);
        return c.outcome();
      }});

  return reg;
}

}  // namespace detail

inline const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> registry = detail::build_registry();
  return registry;
}

}  // namespace geodekit
