#pragma once

#include <optional>

#include "graph.hpp"

namespace vint {

// Exhaustive minimum of separator cost + heaviest component cost over all
// 2^n separators. Ties broken by lexicographically smallest separator.
// Reference oracle; n <= n_limit enforced.
Solution vi_exact(const Graph& g, ProblemMode mode, int n_limit = 20);

struct CocResult {
  Weight p = 0;                    // separator cost under mode.separator_cost
  std::vector<Vertex> separator;   // sorted
};

// Cheapest separator whose components all cost <= ell; absent if none within
// p_cap. Counting modes enumerate by increasing size (lexicographic within a
// size), weighted modes enumerate all subsets (n <= n_limit). check_budget
// caps the number of feasibility checks.
std::optional<CocResult> coc_exact(const Graph& g, Weight ell, ProblemMode mode, Weight p_cap,
                                   int n_limit = 20, int64_t check_budget = 50'000'000);

struct NaturalStats {
  int64_t nodes = 0;
  int64_t leaves = 0;
};

// FPT branching in the solution size k: for every split ell + p = k, grow a
// too-costly connected chunk and branch on which of its vertices joins the
// separator. Returns a verified solution with total <= k, or absent.
std::optional<Solution> vi_natural(const Graph& g, Weight k, ProblemMode mode,
                                   int64_t node_budget = 50'000'000,
                                   NaturalStats* stats = nullptr);

}  // namespace vint
