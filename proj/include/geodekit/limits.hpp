#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

namespace geodekit {

enum class LimitKind { geodesic_cap, node_budget, time_budget };

inline std::string to_string(LimitKind k) {
  switch (k) {
    case LimitKind::geodesic_cap: return "geodesic-cap";
    case LimitKind::node_budget: return "node-budget";
    case LimitKind::time_budget: return "time-budget";
  }
  return "?";
}

// Resource caps for the exact searches. Defaults: 1e5 geodesics per pair,
// 1e8 search nodes, no wall-clock limit.
struct SearchLimits {
  std::int64_t geodesic_cap = 100'000;
  std::int64_t node_budget = 100'000'000;
  std::optional<double> time_budget_seconds;
};

// Thrown when a search exceeds its node or time budget; caught at solver
// entry points and turned into an inconclusive outcome.
struct BudgetExhausted {
  LimitKind kind;
};

// Mutable budget state shared across one solver invocation.
class Budget {
public:
  explicit Budget(const SearchLimits& limits) : limits_(limits) {
    if (limits_.time_budget_seconds) {
      deadline_ = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(*limits_.time_budget_seconds));
    }
  }

  const SearchLimits& limits() const { return limits_; }

  // Accounts one search-tree node; throws on exhaustion.
  void node() {
    if (++nodes_ > limits_.node_budget) throw BudgetExhausted{LimitKind::node_budget};
    if (deadline_ && (nodes_ & 1023) == 0 &&
        std::chrono::steady_clock::now() > *deadline_) {
      throw BudgetExhausted{LimitKind::time_budget};
    }
  }

  std::int64_t nodes_used() const { return nodes_; }

private:
  SearchLimits limits_;
  std::int64_t nodes_ = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

enum class SolveStatus { proved, inconclusive };

inline std::string to_string(SolveStatus s) {
  return s == SolveStatus::proved ? "proved" : "inconclusive";
}

}  // namespace geodekit
