#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vint {

using Vertex = int;
using Weight = int64_t;

// Cost arithmetic never wraps silently: all separator/component totals go
// through these helpers. Weights near 2^60 are legal inputs.
Weight checked_add(Weight a, Weight b);
Weight checked_mul(Weight a, Weight b);

struct parse_error : std::invalid_argument {
  parse_error(int line, const std::string& what)
      : std::invalid_argument("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

struct resource_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class CostKind { Count, Weight };

// Which costs are counted and which are weighed. The four named problems map
// onto the two axes; SWVI and SWCOC share a mode and differ only in what is
// being minimized.
struct ProblemMode {
  CostKind separator_cost = CostKind::Count;
  CostKind component_cost = CostKind::Count;

  static constexpr ProblemMode uvi() { return {CostKind::Count, CostKind::Count}; }
  static constexpr ProblemMode wvi() { return {CostKind::Weight, CostKind::Weight}; }
  static constexpr ProblemMode swvi() { return {CostKind::Count, CostKind::Weight}; }
  static constexpr ProblemMode swcoc() { return {CostKind::Count, CostKind::Weight}; }

  bool operator==(const ProblemMode& o) const {
    return separator_cost == o.separator_cost && component_cost == o.component_cost;
  }
};

// Undirected graph, no loops or parallel edges, positive integer vertex
// weights (default 1). Adjacency lists are kept sorted; treat instances as
// immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(n), weight_(n, 1), label_(n) {}

  int n() const { return int(adj_.size()); }
  int64_t m() const { return m_; }

  // Rejects loops, parallel edges and out-of-range endpoints.
  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return int(adj_.at(v).size()); }
  int max_degree() const;

  Weight weight(Vertex v) const { return weight_.at(v); }
  void set_weight(Vertex v, Weight w);
  Weight total_weight() const;  // checked sum over all vertices
  bool unit_weights() const;

  const std::string& label(Vertex v) const { return label_.at(v); }
  void set_label(Vertex v, std::string s) { label_.at(v) = std::move(s); }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Weight> weight_;
  std::vector<std::string> label_;
  int64_t m_ = 0;
};

// A separator together with the costs it realizes under some mode.
struct Solution {
  std::vector<Vertex> separator;  // sorted ascending
  Weight separator_cost = 0;
  Weight max_component_cost = 0;
  Weight total = 0;
  std::vector<std::vector<Vertex>> components;  // each sorted; ordered by min vertex
};

// Components of g - removed, ordered by smallest contained vertex id, each
// sorted ascending. `removed` may be unsorted / contain duplicates.
std::vector<std::vector<Vertex>> connected_components(const Graph& g,
                                                      const std::vector<Vertex>& removed = {});

bool is_connected(const Graph& g);

// Cost of a separator under a mode. Throws std::invalid_argument on
// out-of-range vertices, std::overflow_error if cost arithmetic overflows.
Solution evaluate(const Graph& g, const std::vector<Vertex>& separator, ProblemMode mode);

// Repeatedly drops separator vertices whose neighbors meet at most one
// component of g - s (such a vertex never pays for itself). The result is a
// subset of s; totals never increase under either cost kind.
std::vector<Vertex> irredundant_reduce(const Graph& g, const std::vector<Vertex>& s);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> old_to_new;     // -1 for deleted vertices
  std::vector<Vertex> new_to_old;  // size = graph.n()
};

// Subgraph induced by deleting `removed`; keeps relative vertex order.
InducedSubgraph induced_delete(const Graph& g, const std::vector<Vertex>& removed);

// Text format:
//   c <comment>
//   p graph <n> <m>
//   v <id> <weight>          (optional; ids 1-based; default weight 1)
//   e <u> <v>                (1-based, u != v, duplicates rejected)
// Parse errors carry the offending line number.
Graph parse_graph(std::istream& in);
Graph parse_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

// Lexicographic order on sorted vertex sets ({0,1} < {1}; {} < {0}).
bool lex_less(const std::vector<Vertex>& a, const std::vector<Vertex>& b);

// Canonical tie-break used everywhere: smaller total wins, then
// lexicographically smaller separator.
bool better_solution(const Solution& a, const Solution& b);

}  // namespace vint
