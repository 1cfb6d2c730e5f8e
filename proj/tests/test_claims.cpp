#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "geodekit/claims.hpp"

using namespace geodekit;

TEST_CASE("registry ids are unique and classed") {
  const auto& reg = claim_registry();
  CHECK(reg.size() >= 13);
  std::set<std::string> ids;
  for (const Claim& c : reg) {
    CHECK(ids.insert(c.id).second);
    CHECK(!c.statement.empty());
    CHECK(c.run != nullptr);
  }
}

TEST_CASE("fast claims pass with default budgets") {
  ClaimOptions opt;
  for (const Claim& c : claim_registry()) {
    if (c.klass != ClaimClass::fast) continue;
    auto out = c.run(opt);
    INFO(c.id << ": " << out.detail);
    CHECK(out.status == ClaimStatus::pass);
  }
}

TEST_CASE("starved budgets yield inconclusive, not wrong") {
  ClaimOptions opt;
  opt.limits.node_budget = 2;
  for (const Claim& c : claim_registry()) {
    if (c.id != "hat-k4") continue;
    auto out = c.run(opt);
    CHECK(out.status == ClaimStatus::inconclusive);
  }
}
