// geodekit command line: construct graph families, run the exact solvers,
// evaluate bounds, build Cartesian products, and run the claim registry.
//
// Exit codes: 0 proved/pass, 2 inconclusive, 1 usage or input error.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "geodekit/claims.hpp"
#include "geodekit/geodekit.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitProved = 0;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;

geodekit::Graph load_graph(const std::string& spec) {
  constexpr std::string_view kFilePrefix = "file:";
  if (spec.rfind(kFilePrefix, 0) == 0) {
    const std::string path = spec.substr(kFilePrefix.size());
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (path.size() >= 3 && path.substr(path.size() - 3) == ".g6") {
      return geodekit::read_graph6(buf.str());
    }
    return geodekit::read_edge_list(buf.str());
  }
  return geodekit::parse_family_spec(spec);
}

geodekit::VertexSet parse_vertex_list(const std::string& text, int n) {
  geodekit::VertexSet out(n);
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto dash = item.find('-');
    int lo, hi;
    if (dash == std::string::npos) {
      lo = hi = std::stoi(item);
    } else {
      lo = std::stoi(item.substr(0, dash));
      hi = std::stoi(item.substr(dash + 1));
    }
    if (lo > hi || lo < 0 || hi >= n) throw std::runtime_error("vertex range out of bounds");
    for (int v = lo; v <= hi; ++v) out.set(v);
  }
  if (out.empty()) throw std::runtime_error("empty vertex set");
  return out;
}

std::string format_set(const geodekit::VertexSet& s) {
  std::string out = "[";
  bool first = true;
  for (int v = s.find_first(); v != -1; v = s.find_next(v)) {
    if (!first) out += ", ";
    out += std::to_string(v);
    first = false;
  }
  return out + "]";
}

void print_paths(std::ostream& os, const std::vector<geodekit::PairPath>& paths) {
  for (const auto& pp : paths) {
    os << "  (" << pp.u << "," << pp.v << "):";
    for (int x : pp.path) os << ' ' << x;
    os << '\n';
  }
}

struct GlobalFlags {
  bool json = false;
  int workers = 1;
  geodekit::SearchLimits limits;
  std::uint64_t seed = 20240701;
};

int emit_solve_result(const std::string& invariant, const std::string& graph_spec,
                      const GlobalFlags& flags, geodekit::SolveStatus status, int value,
                      int lower, int upper, std::optional<geodekit::LimitKind> limit,
                      const ordered_json& certificate, const std::string& human_witness) {
  if (flags.json) {
    ordered_json j;
    j["command"] = "solve";
    j["invariant"] = invariant;
    j["graph"] = graph_spec;
    j["status"] = to_string(status);
    if (status == geodekit::SolveStatus::proved) {
      j["value"] = value;
      if (!certificate.is_null()) j["certificate"] = certificate;
    } else {
      j["lower"] = lower;
      j["upper"] = upper;
      if (limit) j["limit"] = to_string(*limit);
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "invariant: " << invariant << '\n';
    std::cout << "graph: " << graph_spec << '\n';
    std::cout << "status: " << to_string(status) << '\n';
    if (status == geodekit::SolveStatus::proved) {
      std::cout << "value: " << value << '\n';
      if (!human_witness.empty()) std::cout << human_witness;
    } else {
      std::cout << "bounds: [" << lower << ", " << upper << "]\n";
      if (limit) std::cout << "limit: " << to_string(*limit) << '\n';
    }
  }
  return status == geodekit::SolveStatus::proved ? kExitProved : kExitInconclusive;
}

int run_solve(const std::string& invariant, const std::string& graph_spec,
              const std::string& set_arg, bool use_g_lower, const GlobalFlags& flags) {
  geodekit::Graph g = load_graph(graph_spec);
  if (invariant == "g") {
    auto res = geodekit::geodetic_number(g, flags.limits);
    ordered_json cert;
    std::string witness;
    if (res.status == geodekit::SolveStatus::proved) {
      cert = ordered_json{{"set", res.witness.to_vector()},
                          {"value", res.value},
                          {"status", "proved"}};
      witness = "set: " + format_set(res.witness) + "\n";
    }
    return emit_solve_result(invariant, graph_spec, flags, res.status, res.value, res.lower,
                             res.upper, res.limit_hit, cert, witness);
  }
  if (invariant == "sg") {
    auto res = geodekit::strong_geodetic_number(g, flags.limits, use_g_lower);
    ordered_json cert;
    std::string witness;
    if (res.certificate) {
      cert = to_json(*res.certificate, res.value);
      std::ostringstream os;
      os << "set: " << format_set(res.certificate->set) << '\n';
      print_paths(os, res.certificate->paths);
      witness = os.str();
    }
    return emit_solve_result(invariant, graph_spec, flags, res.status, res.value, res.lower,
                             res.upper, res.limit_hit, cert, witness);
  }
  if (invariant == "sgc" || invariant == "sgc-of-set") {
    geodekit::CoreResult res;
    if (invariant == "sgc") {
      res = geodekit::strong_geodetic_core_number(g, flags.limits);
    } else {
      if (set_arg.empty()) throw std::runtime_error("sgc-of-set requires --set");
      res = geodekit::sgc_of_set(g, parse_vertex_list(set_arg, g.vertex_count()), flags.limits);
    }
    ordered_json cert;
    std::string witness;
    if (res.certificate) {
      cert = to_json(*res.certificate, res.value);
      std::ostringstream os;
      os << "set: " << format_set(res.certificate->set) << '\n';
      os << "core: " << format_set(res.certificate->core) << '\n';
      print_paths(os, res.certificate->paths);
      witness = os.str();
    }
    return emit_solve_result(invariant, graph_spec, flags, res.status, res.value, res.lower,
                             res.upper, res.limit_hit, cert, witness);
  }
  if (invariant == "enumerate-sg-sets") {
    auto res = geodekit::enumerate_min_sg_sets(g, flags.limits);
    if (flags.json) {
      ordered_json j;
      j["command"] = "solve";
      j["invariant"] = invariant;
      j["graph"] = graph_spec;
      j["status"] = to_string(res.status);
      j["size"] = res.size;
      j["complete"] = res.complete;
      ordered_json sets = ordered_json::array();
      for (const auto& s : res.sets) sets.push_back(s.to_vector());
      j["sets"] = sets;
      if (res.limit_hit) j["limit"] = to_string(*res.limit_hit);
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "invariant: enumerate-sg-sets\n";
      std::cout << "graph: " << graph_spec << '\n';
      std::cout << "status: " << to_string(res.status) << '\n';
      std::cout << "size: " << res.size << '\n';
      std::cout << "complete: " << (res.complete ? "yes" : "no") << '\n';
      for (const auto& s : res.sets) std::cout << "  " << format_set(s) << '\n';
    }
    return res.status == geodekit::SolveStatus::proved ? kExitProved : kExitInconclusive;
  }
  throw std::runtime_error("unknown invariant '" + invariant +
                           "' (expected g, sg, sgc, sgc-of-set, enumerate-sg-sets)");
}

int run_construct(const std::string& spec, const std::string& format, const std::string& out_path) {
  geodekit::Graph g = load_graph(spec);
  std::string text;
  if (format == "edges") {
    text = geodekit::write_edge_list(g);
  } else if (format == "g6") {
    text = geodekit::write_graph6(g) + "\n";
  } else if (format == "dot") {
    text = geodekit::write_dot(g);
  } else {
    throw std::runtime_error("unknown format '" + format + "' (expected edges, g6, dot)");
  }
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << text;
  }
  return kExitProved;
}

int run_bounds(const std::string& spec, const GlobalFlags& flags) {
  geodekit::Graph g = load_graph(spec);
  auto rep = geodekit::check_bounds(g, flags.limits, spec);
  if (flags.json) {
    std::cout << to_json(rep).dump(2) << '\n';
  } else {
    std::cout << format_table(rep);
  }
  if (rep.violated()) return kExitError;
  return rep.limit_hit ? kExitInconclusive : kExitProved;
}

int run_product(const std::string& spec_a, const std::string& spec_b, const std::string& solve,
                const std::string& format, const GlobalFlags& flags) {
  geodekit::Graph a = load_graph(spec_a);
  geodekit::Graph b = load_graph(spec_b);
  auto prod = geodekit::cartesian_product(a, b);
  if (solve.empty()) {
    return run_construct("product(" + spec_a + "," + spec_b + ")", format, "");
  }
  if (solve != "sg") throw std::runtime_error("product --solve supports only 'sg'");
  auto sg_a = geodekit::strong_geodetic_number(a, flags.limits);
  auto sg_b = geodekit::strong_geodetic_number(b, flags.limits);
  auto sgc_a = geodekit::strong_geodetic_core_number(a, flags.limits);
  auto sgc_b = geodekit::strong_geodetic_core_number(b, flags.limits);
  auto res = geodekit::strong_geodetic_number(prod.graph, flags.limits);
  std::optional<std::int64_t> bound_old, bound_core;
  if (sg_a.status == geodekit::SolveStatus::proved && sg_b.status == geodekit::SolveStatus::proved) {
    bound_old = geodekit::product_upper_old(sg_a.value, a.vertex_count(), sg_b.value,
                                            b.vertex_count());
    if (sgc_a.status == geodekit::SolveStatus::proved &&
        sgc_b.status == geodekit::SolveStatus::proved) {
      bound_core = geodekit::product_upper_sgc(sg_a.value, sgc_a.value, a.vertex_count(),
                                               sg_b.value, sgc_b.value, b.vertex_count());
    }
  }
  if (flags.json) {
    ordered_json j;
    j["command"] = "product";
    j["factors"] = {spec_a, spec_b};
    j["n"] = prod.graph.vertex_count();
    j["m"] = prod.graph.edge_count();
    j["status"] = to_string(res.status);
    if (res.status == geodekit::SolveStatus::proved) {
      j["value"] = res.value;
      j["certificate"] = to_json(*res.certificate, res.value);
    } else {
      j["lower"] = res.lower;
      j["upper"] = res.upper;
      if (res.limit_hit) j["limit"] = to_string(*res.limit_hit);
    }
    if (bound_old) j["upper_bound_plain"] = *bound_old;
    if (bound_core) j["upper_bound_core"] = *bound_core;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "product: " << spec_a << " x " << spec_b << "  n=" << prod.graph.vertex_count()
              << " m=" << prod.graph.edge_count() << '\n';
    std::cout << "status: " << to_string(res.status) << '\n';
    if (res.status == geodekit::SolveStatus::proved) {
      std::cout << "value: " << res.value << '\n';
      std::cout << "set: " << format_set(res.certificate->set) << '\n';
    } else {
      std::cout << "bounds: [" << res.lower << ", " << res.upper << "]\n";
    }
    if (bound_old) std::cout << "upper bound (plain): " << *bound_old << '\n';
    if (bound_core) std::cout << "upper bound (core): " << *bound_core << '\n';
  }
  return res.status == geodekit::SolveStatus::proved ? kExitProved : kExitInconclusive;
}

bool class_selected(geodekit::ClaimClass k, const std::string& selector) {
  using geodekit::ClaimClass;
  if (selector == "all" || selector == "long") return true;
  if (selector == "standard") return k != ClaimClass::long_running;
  if (selector == "fast") return k == ClaimClass::fast;
  return false;
}

int run_verify(const std::vector<std::string>& selectors, const GlobalFlags& flags) {
  const auto& registry = geodekit::claim_registry();
  std::string class_selector;
  std::vector<std::string> id_selectors;
  for (const std::string& s : selectors) {
    if (s == "all" || s == "fast" || s == "standard" || s == "long") {
      class_selector = s;
    } else {
      id_selectors.push_back(s);
    }
  }
  if (class_selector.empty() && id_selectors.empty()) {
    const char* env = std::getenv("GEODEKIT_BUDGET_CLASS");
    class_selector = env ? env : "standard";
  }
  std::vector<int> chosen;
  for (std::size_t i = 0; i < registry.size(); ++i) {
    const auto& claim = registry[i];
    bool take = !class_selector.empty() && class_selected(claim.klass, class_selector);
    for (const std::string& id : id_selectors) {
      if (claim.id == id) take = true;
    }
    if (take) chosen.push_back(static_cast<int>(i));
  }
  for (const std::string& id : id_selectors) {
    bool known = false;
    for (const auto& claim : registry) known = known || claim.id == id;
    if (!known) throw std::runtime_error("unknown claim id '" + id + "'");
  }
  geodekit::ClaimOptions options;
  options.limits = flags.limits;
  options.seed = flags.seed;
  std::vector<geodekit::ClaimOutcome> outcomes(chosen.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= chosen.size()) return;
      try {
        outcomes[i] = registry[static_cast<std::size_t>(chosen[i])].run(options);
      } catch (const std::exception& e) {
        outcomes[i] = geodekit::ClaimOutcome{geodekit::ClaimStatus::fail,
                                             std::string("exception: ") + e.what()};
      }
    }
  };
  const int nworkers = std::max(1, flags.workers);
  if (nworkers == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < nworkers; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  int fails = 0, inconclusive = 0;
  if (flags.json) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      const auto& claim = registry[static_cast<std::size_t>(chosen[i])];
      arr.push_back({{"id", claim.id},
                     {"class", to_string(claim.klass)},
                     {"provenance", to_string(claim.provenance)},
                     {"statement", claim.statement},
                     {"status", to_string(outcomes[i].status)},
                     {"detail", outcomes[i].detail}});
    }
    std::cout << arr.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      const auto& claim = registry[static_cast<std::size_t>(chosen[i])];
      std::string id = claim.id;
      id.resize(28, ' ');
      std::string klass = to_string(claim.klass);
      klass.resize(10, ' ');
      std::string status = to_string(outcomes[i].status);
      status.resize(14, ' ');
      std::cout << id << klass << status << outcomes[i].detail << '\n';
    }
  }
  for (const auto& o : outcomes) {
    if (o.status == geodekit::ClaimStatus::fail) ++fails;
    if (o.status == geodekit::ClaimStatus::inconclusive) ++inconclusive;
  }
  if (fails > 0) return kExitError;
  return inconclusive > 0 ? kExitInconclusive : kExitProved;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solvers and certificates for the strong geodetic problem"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow subcommand arguments

  GlobalFlags flags;
  double time_budget = 0.0;
  app.add_flag("--json", flags.json, "machine-readable output");
  app.add_option("--workers", flags.workers, "parallel workers for verify-paper");
  app.add_option("--geodesic-cap", flags.limits.geodesic_cap, "max geodesics per pair");
  app.add_option("--node-budget", flags.limits.node_budget, "max search nodes");
  auto* tb = app.add_option("--time-budget", time_budget, "wall-clock limit in seconds");
  app.add_option("--seed", flags.seed, "seed for random-tree claims");

  auto* construct = app.add_subcommand("construct", "build a graph from a family spec");
  std::string spec, format = "edges", out_path;
  construct->add_option("spec", spec, "family spec or file:PATH")->required();
  construct->add_option("--format", format, "edges | g6 | dot");
  construct->add_option("-o,--out", out_path, "write to file instead of stdout");

  auto* solve = app.add_subcommand("solve", "compute an invariant with certificate");
  std::string invariant, solve_spec, set_arg;
  solve->add_option("invariant", invariant, "g | sg | sgc | sgc-of-set | enumerate-sg-sets")
      ->required();
  solve->add_option("graph", solve_spec, "family spec or file:PATH")->required();
  solve->add_option("--set", set_arg, "vertex list for sgc-of-set, e.g. 0-4,7-9");
  bool use_g_lower = false;
  solve->add_flag("--g-lower", use_g_lower, "seed the sg search with the geodetic number");

  auto* bounds = app.add_subcommand("bounds", "evaluate every applicable bound");
  std::string bounds_spec;
  bounds->add_option("graph", bounds_spec, "family spec or file:PATH")->required();

  auto* product = app.add_subcommand("product", "build (and optionally solve) a product");
  std::string spec_a, spec_b, solve_inv, product_format = "edges";
  product->add_option("graphA", spec_a)->required();
  product->add_option("graphB", spec_b)->required();
  product->add_option("--solve", solve_inv, "solve an invariant on the product (sg)");
  product->add_option("--format", product_format, "edges | g6 | dot (when not solving)");

  auto* verify = app.add_subcommand("verify-paper", "run the claim registry");
  std::vector<std::string> selectors;
  verify->add_option("selector", selectors, "all | fast | standard | long | claim ids");

  CLI11_PARSE(app, argc, argv);
  if (tb->count() > 0) flags.limits.time_budget_seconds = time_budget;

  try {
    if (*construct) return run_construct(spec, format, out_path);
    if (*solve) return run_solve(invariant, solve_spec, set_arg, use_g_lower, flags);
    if (*bounds) return run_bounds(bounds_spec, flags);
    if (*product) return run_product(spec_a, spec_b, solve_inv, product_format, flags);
    if (*verify) return run_verify(selectors, flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
