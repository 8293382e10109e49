#pragma once

// Shared fixtures for the test binaries: tiny named graphs and a seeded
// random-graph source. Everything here is deterministic.

#include <random>

#include "graph.hpp"

namespace vt {

using vint::Graph;
using vint::Vertex;
using vint::Weight;

inline Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle(int n) {
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

// vertex 0 is the center
inline Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

// vertices 0..a-1 on one side, a..a+b-1 on the other
inline Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

inline uint64_t rng_below(std::mt19937_64& rng, uint64_t bound) {
  uint64_t limit =
      std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % bound;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

inline Graph random_graph(int n, double p, uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      double r = double(rng() >> 11) * (1.0 / 9007199254740992.0);
      if (r < p) g.add_edge(u, v);
    }
  return g;
}

inline void random_weights(Graph& g, uint64_t seed, Weight max_weight) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  for (Vertex v = 0; v < g.n(); ++v) g.set_weight(v, 1 + Weight(rng_below(rng, uint64_t(max_weight))));
}

// a weighted random instance used by several suites: edges from `seed`,
// weights up to max_weight from `seed+1`
inline Graph random_weighted(int n, double p, uint64_t seed, Weight max_weight) {
  Graph g = random_graph(n, p, seed);
  random_weights(g, seed + 1, max_weight);
  return g;
}

}  // namespace vt
