#pragma once

#include "graph.hpp"

namespace vint {

// Exact minimum vertex cover via branch and bound (degree-1 reduction,
// maximal-matching lower bound, max-degree branching). Throws
// resource_limit_error when the node budget is exhausted.
std::vector<Vertex> vertex_cover_exact(const Graph& g, int64_t node_budget = 20'000'000);

// m - n + #components.
int64_t feedback_edge_number(const Graph& g);

// X = vertices of degree >= 3. For connected g, |X| <= 12*ml(g) + 32.
std::vector<Vertex> high_degree_set(const Graph& g);

// Max number of leaves over all spanning trees; test oracle only.
// Uses the leaf-set characterization: L can be the leaf set of a spanning
// tree iff G - L is connected and every vertex of L has a neighbor outside L
// (for n == 2 a single edge has two leaves). Requires g connected, n <= bound.
int max_leaf_brute(const Graph& g, int bound = 10);

enum class MDKind { Leaf, Series, Parallel, Prime };

struct MDNode {
  MDKind kind = MDKind::Leaf;
  std::vector<Vertex> module_verts;  // sorted
  std::vector<int> children;         // indices into MDTree::nodes
};

struct MDTree {
  std::vector<MDNode> nodes;
  int root = -1;  // -1 iff empty graph
};

// Modular decomposition via pairwise module closures: the strong modules are
// the unions of the overlap components of {closure(u,v)}. O(n^2) closures;
// fine at desk scale, not meant for huge graphs.
MDTree modular_decomposition(const Graph& g);

// max Prime fan-out; any Series/Parallel node forces at least 2; single
// vertex gives 1; empty graph 0.
int modular_width(const MDTree& t);

// true iff no vertex outside `mod` distinguishes two members.
bool is_module(const Graph& g, const std::vector<Vertex>& mod);

}  // namespace vint
