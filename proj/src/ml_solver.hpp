#pragma once

#include <optional>
#include <vector>

#include "graph.hpp"
#include "oracle.hpp"

namespace vint {

struct MlStats {
  int64_t guesses = 0;    // subsets of the high-degree set tried
  int64_t pipelines = 0;  // guesses that survived the lower-bound screen
};

// Minimum number of deletions so every remaining component has at most `ell`
// vertices, computed by guessing the deleted high-degree vertices and then
// solving the leftover paths, cycles and trees directly.  Exponential only in
// |{v : deg(v) >= 3}|.  With `p_cap >= 0` only solutions with p < p_cap are
// reported (nullopt otherwise); p_cap < 0 means no cap.
std::optional<CocResult> coc_ml(const Graph& g, int64_t ell, int64_t p_cap = -1,
                                MlStats* stats = nullptr);

// Unweighted vertex integrity through the component-order sweep over coc_ml,
// with incumbent pruning.  Exponential only in the high-degree set.
Solution uvi_ml(const Graph& g, MlStats* stats = nullptr);

// A separator vertex s outside the high-degree set X "violates" if it lies on
// a cycle through some undeleted X-vertex once the deleted X-vertices are
// removed.  Returns that cycle as an ordered vertex list, or nullopt.
std::optional<std::vector<Vertex>> find_violating_cycle(const Graph& g,
                                                        const std::vector<Vertex>& sep);

// One simultaneous rotation step: every separator vertex on the cycle moves
// to its successor.  Requires a genuine cycle of g that the separator meets
// but only at vertices outside the high-degree set.
std::vector<Vertex> rotate_on_cycle(const Graph& g, const std::vector<Vertex>& s,
                                    const std::vector<Vertex>& cycle);

// Shifts separator vertices along violating cycles until none remain.  The
// separator size is preserved and the largest component never grows; both are
// checked at every step.
std::vector<Vertex> rotate_to_stable(const Graph& g, std::vector<Vertex> sep);

}  // namespace vint
