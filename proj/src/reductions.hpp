#pragma once

// Hardness-reduction gadget generators and the tiny exact solvers used to
// cross-check them.  Every constructor validates its input and throws
// std::invalid_argument when the instance cannot be encoded.

#include <optional>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace vint {

// Bounded-degree deletion: find S, |S| <= k, so that G - S has max degree <= d.
struct BddInstance {
  Graph graph;
  int64_t k = 0;
  int64_t d = 1;
};

// Restricted unary bin packing: item t has size items[t] and may only be
// placed in one of the two (distinct, 0-based) bins allowed[t]; every bin
// must receive total size exactly sum(items) / k.
struct RubpInstance {
  std::vector<int64_t> items;
  int k = 2;
  std::vector<std::pair<int, int>> allowed;
};

// Component order connectivity on an unweighted graph: delete at most p
// vertices so every remaining component has at most ell vertices.
struct CocInstance {
  Graph graph;
  Weight ell = 1;
  Weight p = 0;
};

// Semi-weighted COC: separator counted, components weighed.
struct SwcocInstance {
  Graph graph;
  Weight ell = 1;
  Weight p = 0;
};

// Semi-weighted vertex integrity: |S| + w(heaviest component) <= k?
struct SwviInstance {
  Graph graph;
  Weight k = 1;
};

// Unweighted vertex integrity decision instance.
struct UviInstance {
  Graph graph;
  Weight k = 0;
};

// Subdivide every edge into a 3-vertex path gadget and pad its middle with
// d-1 leaves; (k, d)-BDD becomes COC with ell = d+1 and p = k + m.
CocInstance bdd_to_coc(const BddInstance& inst);

// Pair gadgets (one per bin pair) wired between per-bin cliques; feasible
// packings correspond exactly to separators of cost p = 3 * C(k,2).
SwcocInstance rubp_to_swcoc(const RubpInstance& inst);

// Pendant leaves make deletions pay for themselves; budget k = ell*p + ell + p.
SwviInstance swcoc_to_swvi(const SwcocInstance& inst);

// Expand vertex weights into pendant paths of unit vertices.
UviInstance swvi_to_uvi(const SwviInstance& inst);

// All subset sums of the multiset, sorted ascending, starting at 0.
std::vector<int64_t> subset_sums(const std::vector<int64_t>& items);

// Exact packing search; returns the 0-based bin of each item, or nullopt.
std::optional<std::vector<int>> rubp_solve(const RubpInstance& inst);

// Exact search over vertex subsets (graphs up to 16 vertices).
std::optional<std::vector<Vertex>> bdd_solve(const BddInstance& inst);

}  // namespace vint
