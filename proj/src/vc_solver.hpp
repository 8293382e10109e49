#pragma once

#include <optional>

#include "graph.hpp"

namespace vint {

struct VcStats {
  int64_t guesses = 0;       // (k, S cap C) pairs actually branched on
  int64_t branch_nodes = 0;  // interior branching states
  int64_t leaves = 0;        // terminal branching states, summed over everything
};

// Unweighted vertex integrity parameterized by a vertex cover: guess S cap C,
// then branch over cover-neighborhood classes of the independent side; a class
// spanning one residual component never enters S (it could not pay for
// itself), a class spanning two or more is branched all-in / all-out. The
// decision version is swept k = 1 .. |cover|+1. Along every branch the
// potential (remaining budget + residual cover components) strictly drops.
Solution uvi_vc(const Graph& g, const std::vector<Vertex>& cover, VcStats* stats = nullptr,
                int64_t node_budget = 400'000'000);

// Weighted instance where the separator must avoid an annotated cover.
struct AnnotatedInstance {
  Graph graph;
  std::vector<Vertex> cover;  // vertex cover; S is drawn from the rest
  Weight w_max = 0;           // component weight bound
};

struct AnnotatedResult {
  Weight weight = 0;              // w(S)
  std::vector<Vertex> separator;  // sorted, disjoint from the cover
};

// Minimum-weight irredundant separator avoiding the cover with all component
// weights <= w_max, or absent. Shrinks the cover by either carving off one
// heavy component (cover share >= 1/10) or splitting the cover across two
// subinstances (share in [1/2, 3/5]); both families are always explored and
// minimized over. Covers of size <= base_cover are finished by enumerating
// partitions into component traces. Memoized on (alive vertex set, w_max).
std::optional<AnnotatedResult> annotated_wvi_vc(const AnnotatedInstance& inst,
                                                int base_cover = 8,
                                                int64_t node_budget = 20'000'000);

// Weighted vertex integrity parameterized by a vertex cover: guess S cap C
// and the heaviest surviving component, then delegate the rest to the
// annotated solver with w_max = weight of that component.
Solution wvi_vc(const Graph& g, const std::vector<Vertex>& cover,
                int64_t node_budget = 20'000'000);

// throws std::invalid_argument unless `cover` hits every edge
void validate_cover(const Graph& g, const std::vector<Vertex>& cover);

}  // namespace vint
