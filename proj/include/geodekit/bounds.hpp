#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "geodekit/distance_oracle.hpp"
#include "geodekit/graph.hpp"
#include "geodekit/solvers.hpp"

namespace geodekit {

inline std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

// (k(s-k) + C(k,2)) * (d-1) >= n - s, in exact integer arithmetic. This is
// the path-capacity inequality a core of size k must satisfy.
inline bool eq1_holds(std::int64_t k, std::int64_t s, std::int64_t d, std::int64_t n) {
  if (d < 2 || k < 0 || k > s || s > n) {
    throw std::invalid_argument("eq1_holds: need d >= 2 and 0 <= k <= s <= n");
  }
  return (k * (s - k) + choose2(k)) * (d - 1) >= n - s;
}

inline bool eq1_tight(std::int64_t k, std::int64_t s, std::int64_t d, std::int64_t n) {
  return (k * (s - k) + choose2(k)) * (d - 1) == n - s;
}

struct SgcBoundsRange {
  int lower = 0;
  int upper = 0;
};

// Core-number bracket for a non-complete graph with the given order, strong
// geodetic number and diameter. The lower bound is found by integer search
// over the capacity inequality rather than by evaluating its closed-form
// radical, so boundary cases stay exact.
inline SgcBoundsRange sgc_bounds(int n, int s, int d) {
  if (d < 2 || s < 2 || s >= n) {
    throw std::invalid_argument("sgc_bounds: need d >= 2 and 2 <= s < n");
  }
  SgcBoundsRange out;
  out.upper = std::min(s - 1, n - s);
  out.lower = 0;
  for (int k = 1; k <= s; ++k) {
    if (eq1_holds(k, s, d, n)) {
      out.lower = k;
      break;
    }
  }
  if (out.lower == 0) {
    throw std::invalid_argument("sgc_bounds: no feasible core size; parameters not realizable");
  }
  return out;
}

// Smallest k with sum_{i=1..k} (n-i) >= m: the core lower bound for the
// hat-subdivision of a graph with n vertices and m edges.
inline int hat_lower(int n, int m) {
  if (n < 2 || m < 1) throw std::invalid_argument("hat_lower: need n >= 2, m >= 1");
  if (m > choose2(n)) throw std::invalid_argument("hat_lower: m exceeds C(n,2)");
  std::int64_t total = 0;
  for (int k = 1; k <= n - 1; ++k) {
    total += n - k;
    if (total >= m) return k;
  }
  throw std::logic_error("hat_lower: unreachable");
}

// Product upper bound using only strong geodetic numbers.
inline std::int64_t product_upper_old(std::int64_t sg_g, std::int64_t n_g, std::int64_t sg_h,
                                      std::int64_t n_h) {
  if (sg_g < 1 || n_g < 1 || sg_h < 1 || n_h < 1) {
    throw std::invalid_argument("product_upper_old: all inputs must be positive");
  }
  return std::min(sg_h * n_g - sg_g + 1, sg_g * n_h - sg_h + 1);
}

// Sharper product upper bound using core numbers.
inline std::int64_t product_upper_sgc(std::int64_t sg_g, std::int64_t sgc_g, std::int64_t n_g,
                                      std::int64_t sg_h, std::int64_t sgc_h, std::int64_t n_h) {
  if (sgc_g < 1 || sgc_g > sg_g || sgc_h < 1 || sgc_h > sg_h || n_g < 1 || n_h < 1) {
    throw std::invalid_argument("product_upper_sgc: need 1 <= sgc <= sg on each side");
  }
  return std::min(sgc_h * (n_g - 1) + sg_h, sgc_g * (n_h - 1) + sg_g);
}

struct CounterexampleForms {
  std::int64_t sg = 0;             // exact strong geodetic number of the factor
  std::int64_t product_upper = 0;  // upper bound for the product with K_n
  std::int64_t gap_lower = 0;      // guaranteed drop between the two
};

inline CounterexampleForms counterexample_closed_forms(int k, int n) {
  if (k < 4 || n < 2) throw std::invalid_argument("counterexample_closed_forms: need k>=4, n>=2");
  CounterexampleForms out;
  out.sg = choose2(k) * (n - 1) + k;
  out.product_upper = static_cast<std::int64_t>(k) * n + 1;
  out.gap_lower = (static_cast<std::int64_t>(k) * (n - 1) * (k - 3) - 2) / 2;
  return out;
}

// Everything check_bounds can say about one graph. Verdicts are computed
// from exact integers only; bracketed invariants are left unevaluated.
struct BoundsReport {
  std::string id;
  int n = 0;
  int m = 0;
  int diam = 0;
  bool complete = false;  // diameter <= 1: bound-exempt

  struct Bracket {
    int lower = -1;
    int upper = -1;
    bool proved() const { return lower == upper && lower >= 0; }
    int value() const { return lower; }
  };
  Bracket g, sg, sgc;

  std::optional<bool> g_le_sg;
  std::optional<bool> sg_lt_n;
  std::optional<SgcBoundsRange> sgc_range;
  std::optional<bool> sgc_lower_ok, sgc_upper_ok;
  std::optional<bool> sgc_lower_tight, sgc_upper_tight;
  std::optional<bool> eq1_ok, eq1_is_tight;
  std::vector<std::string> violations;
  std::optional<LimitKind> limit_hit;

  bool violated() const { return !violations.empty(); }
};

namespace detail {

inline BoundsReport::Bracket bracket_of(const GeodeticResult& r) {
  return r.status == SolveStatus::proved ? BoundsReport::Bracket{r.value, r.value}
                                         : BoundsReport::Bracket{r.lower, r.upper};
}

inline BoundsReport::Bracket bracket_of(const SgResult& r) {
  return r.status == SolveStatus::proved ? BoundsReport::Bracket{r.value, r.value}
                                         : BoundsReport::Bracket{r.lower, r.upper};
}

inline BoundsReport::Bracket bracket_of(const CoreResult& r) {
  return r.status == SolveStatus::proved ? BoundsReport::Bracket{r.value, r.value}
                                         : BoundsReport::Bracket{r.lower, r.upper};
}

}  // namespace detail

// Solves g, sg and sgc within the budgets and evaluates every applicable
// closed-form bound against the proved values. A violated bound signals a
// solver or construction bug and is recorded verbatim.
inline BoundsReport check_bounds(const Graph& graph, const SearchLimits& limits = {},
                                 std::string id = "graph") {
  graph.require_connected("check_bounds");
  BoundsReport rep;
  rep.id = std::move(id);
  rep.n = graph.vertex_count();
  rep.m = graph.edge_count();
  DistanceOracle o(graph);
  rep.diam = o.diameter();
  rep.complete = rep.diam <= 1;

  auto gres = geodetic_number(graph, limits);
  auto sres = strong_geodetic_number(graph, limits);
  auto cres = strong_geodetic_core_number(graph, limits);
  rep.g = detail::bracket_of(gres);
  rep.sg = detail::bracket_of(sres);
  rep.sgc = detail::bracket_of(cres);
  if (gres.limit_hit) rep.limit_hit = gres.limit_hit;
  if (sres.limit_hit) rep.limit_hit = sres.limit_hit;
  if (cres.limit_hit) rep.limit_hit = cres.limit_hit;

  auto flag = [&rep](const std::string& what) { rep.violations.push_back(what); };

  if (rep.g.proved() && rep.sg.proved()) {
    rep.g_le_sg = rep.g.value() <= rep.sg.value();
    if (!*rep.g_le_sg) flag("g > sg");
  }
  if (rep.sg.proved() && !rep.complete) {
    rep.sg_lt_n = rep.sg.value() < rep.n;
    if (!*rep.sg_lt_n) flag("sg = n on a non-complete graph");
  }
  if (!rep.complete && rep.sg.proved() && rep.sg.value() >= 2) {
    rep.sgc_range = sgc_bounds(rep.n, rep.sg.value(), rep.diam);
    if (rep.sgc.proved()) {
      rep.sgc_lower_ok = rep.sgc.value() >= rep.sgc_range->lower;
      rep.sgc_upper_ok = rep.sgc.value() <= rep.sgc_range->upper;
      rep.sgc_lower_tight = rep.sgc.value() == rep.sgc_range->lower;
      rep.sgc_upper_tight = rep.sgc.value() == rep.sgc_range->upper;
      if (!*rep.sgc_lower_ok) flag("sgc below its lower bound");
      if (!*rep.sgc_upper_ok) flag("sgc above min{sg-1, n-sg}");
      rep.eq1_ok = eq1_holds(rep.sgc.value(), rep.sg.value(), rep.diam, rep.n);
      rep.eq1_is_tight = eq1_tight(rep.sgc.value(), rep.sg.value(), rep.diam, rep.n);
      if (!*rep.eq1_ok) flag("capacity inequality violated");
    }
  }
  return rep;
}

inline nlohmann::ordered_json to_json(const BoundsReport& rep) {
  nlohmann::ordered_json j;
  j["id"] = rep.id;
  j["n"] = rep.n;
  j["m"] = rep.m;
  j["diam"] = rep.diam;
  j["complete"] = rep.complete;
  auto bracket = [](const BoundsReport::Bracket& b) -> nlohmann::ordered_json {
    if (b.proved()) return b.value();
    return {{"lower", b.lower}, {"upper", b.upper}};
  };
  j["g"] = bracket(rep.g);
  j["sg"] = bracket(rep.sg);
  j["sgc"] = bracket(rep.sgc);
  if (rep.sgc_range) {
    j["sgc_bounds"] = {{"lower", rep.sgc_range->lower}, {"upper", rep.sgc_range->upper}};
  }
  auto put = [&j](const char* key, const std::optional<bool>& v) {
    if (v) j[key] = *v;
  };
  put("g_le_sg", rep.g_le_sg);
  put("sg_lt_n", rep.sg_lt_n);
  put("sgc_lower_ok", rep.sgc_lower_ok);
  put("sgc_upper_ok", rep.sgc_upper_ok);
  put("sgc_lower_tight", rep.sgc_lower_tight);
  put("sgc_upper_tight", rep.sgc_upper_tight);
  put("eq1_ok", rep.eq1_ok);
  put("eq1_tight", rep.eq1_is_tight);
  j["violations"] = rep.violations;
  if (rep.limit_hit) j["limit"] = to_string(*rep.limit_hit);
  return j;
}

inline std::string format_table(const BoundsReport& rep) {
  std::ostringstream out;
  auto row = [&out](const std::string& key, const std::string& val) {
    out << key;
    for (std::size_t i = key.size(); i < 14; ++i) out << ' ';
    out << val << '\n';
  };
  auto bracket = [](const BoundsReport::Bracket& b) {
    if (b.proved()) return std::to_string(b.value());
    return "[" + std::to_string(b.lower) + ", " + std::to_string(b.upper) + "]";
  };
  auto yesno = [](const std::optional<bool>& v) {
    return !v ? std::string("-") : (*v ? std::string("yes") : std::string("NO"));
  };
  row("graph", rep.id);
  row("n m diam", std::to_string(rep.n) + " " + std::to_string(rep.m) + " " +
                      std::to_string(rep.diam));
  row("g", bracket(rep.g));
  row("sg", bracket(rep.sg));
  row("sgc", bracket(rep.sgc));
  if (rep.complete) {
    row("bounds", "exempt (complete graph)");
  } else if (rep.sgc_range) {
    row("sgc bounds", "[" + std::to_string(rep.sgc_range->lower) + ", " +
                          std::to_string(rep.sgc_range->upper) + "]");
    std::string lower_note = yesno(rep.sgc_lower_ok);
    if (rep.sgc_lower_tight && *rep.sgc_lower_tight) lower_note += " (tight)";
    std::string upper_note = yesno(rep.sgc_upper_ok);
    if (rep.sgc_upper_tight && *rep.sgc_upper_tight) upper_note += " (tight)";
    row("lower ok", lower_note);
    row("upper ok", upper_note);
    std::string eq1_note = yesno(rep.eq1_ok);
    if (rep.eq1_is_tight && *rep.eq1_is_tight) eq1_note += " (tight)";
    row("capacity ok", eq1_note);
  }
  row("g<=sg", yesno(rep.g_le_sg));
  row("sg<n", yesno(rep.sg_lt_n));
  row("violations", rep.violations.empty() ? "none" : std::to_string(rep.violations.size()));
  for (const std::string& v : rep.violations) row("", v);
  return out.str();
}

}  // namespace geodekit
