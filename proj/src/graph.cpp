#include "graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace vint {

Weight checked_add(Weight a, Weight b) {
  Weight r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cost addition overflow");
  return r;
}

Weight checked_mul(Weight a, Weight b) {
  Weight r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cost multiplication overflow");
  return r;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || u >= n() || v < 0 || v >= n())
    throw std::invalid_argument("add_edge: vertex out of range");
  if (u == v) throw std::invalid_argument("add_edge: self-loop");
  if (has_edge(u, v)) throw std::invalid_argument("add_edge: parallel edge");
  auto& au = adj_[u];
  au.insert(std::upper_bound(au.begin(), au.end(), v), v);
  auto& av = adj_[v];
  av.insert(std::upper_bound(av.begin(), av.end(), u), u);
  ++m_;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& a = adj_.at(u);
  return std::binary_search(a.begin(), a.end(), v);
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, int(a.size()));
  return d;
}

void Graph::set_weight(Vertex v, Weight w) {
  if (w < 1) throw std::invalid_argument("set_weight: weights must be >= 1");
  weight_.at(v) = w;
}

Weight Graph::total_weight() const {
  Weight s = 0;
  for (Weight w : weight_) s = checked_add(s, w);
  return s;
}

bool Graph::unit_weights() const {
  for (Weight w : weight_)
    if (w != 1) return false;
  return true;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g,
                                                      const std::vector<Vertex>& removed) {
  std::vector<char> dead(g.n(), 0);
  for (Vertex v : removed) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("connected_components: vertex out of range");
    dead[v] = 1;
  }
  std::vector<std::vector<Vertex>> comps;
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (dead[s] || seen[s]) continue;
    std::vector<Vertex> comp;
    stack.push_back(s);
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex u : g.neighbors(v)) {
        if (!dead[u] && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  // discovery order is already by smallest contained vertex
  return comps;
}

bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  return connected_components(g).size() == 1;
}

Solution evaluate(const Graph& g, const std::vector<Vertex>& separator, ProblemMode mode) {
  std::vector<Vertex> s = separator;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (Vertex v : s)
    if (v < 0 || v >= g.n()) throw std::invalid_argument("evaluate: separator vertex out of range");

  Solution sol;
  sol.separator = s;
  if (mode.separator_cost == CostKind::Count) {
    sol.separator_cost = Weight(s.size());
  } else {
    for (Vertex v : s) sol.separator_cost = checked_add(sol.separator_cost, g.weight(v));
  }
  sol.components = connected_components(g, s);
  for (const auto& comp : sol.components) {
    Weight c = 0;
    if (mode.component_cost == CostKind::Count) {
      c = Weight(comp.size());
    } else {
      for (Vertex v : comp) c = checked_add(c, g.weight(v));
    }
    sol.max_component_cost = std::max(sol.max_component_cost, c);
  }
  sol.total = checked_add(sol.separator_cost, sol.max_component_cost);
  return sol;
}

std::vector<Vertex> irredundant_reduce(const Graph& g, const std::vector<Vertex>& s_in) {
  std::vector<Vertex> s = s_in;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  bool changed = true;
  while (changed) {
    changed = false;
    auto comps = connected_components(g, s);
    std::vector<int> comp_of(g.n(), -1);
    for (size_t i = 0; i < comps.size(); ++i)
      for (Vertex v : comps[i]) comp_of[v] = int(i);
    for (size_t i = 0; i < s.size(); ++i) {
      int touched = -1;
      bool multi = false;
      for (Vertex u : g.neighbors(s[i])) {
        int c = comp_of[u];
        if (c < 0) continue;  // neighbor still in s
        if (touched == -1) touched = c;
        else if (touched != c) { multi = true; break; }
      }
      if (!multi) {  // neighbors meet <= 1 component: drop s[i]
        s.erase(s.begin() + i);
        changed = true;
        break;
      }
    }
  }
  return s;
}

InducedSubgraph induced_delete(const Graph& g, const std::vector<Vertex>& removed) {
  std::vector<char> dead(g.n(), 0);
  for (Vertex v : removed) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("induced_delete: vertex out of range");
    dead[v] = 1;
  }
  InducedSubgraph out;
  out.old_to_new.assign(g.n(), -1);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!dead[v]) {
      out.old_to_new[v] = int(out.new_to_old.size());
      out.new_to_old.push_back(v);
    }
  }
  out.graph = Graph(int(out.new_to_old.size()));
  for (Vertex nv = 0; nv < out.graph.n(); ++nv) {
    Vertex ov = out.new_to_old[nv];
    out.graph.set_weight(nv, g.weight(ov));
    out.graph.set_label(nv, g.label(ov));
    for (Vertex ou : g.neighbors(ov)) {
      int nu = out.old_to_new[ou];
      if (nu >= 0 && nu > nv) out.graph.add_edge(nv, nu);
    }
  }
  return out;
}

Graph parse_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool have_p = false;
  int n = 0;
  int64_t m_declared = 0, m_seen = 0;
  Graph g;
  std::vector<char> weight_set;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag == "c") continue;
    if (tag == "p") {
      if (have_p) throw parse_error(lineno, "duplicate p line");
      std::string kind;
      if (!(ls >> kind >> n >> m_declared) || kind != "graph")
        throw parse_error(lineno, "expected 'p graph <n> <m>'");
      if (n < 0 || m_declared < 0) throw parse_error(lineno, "negative n or m");
      g = Graph(n);
      weight_set.assign(n, 0);
      have_p = true;
      continue;
    }
    if (!have_p) throw parse_error(lineno, "'" + tag + "' line before p line");
    if (tag == "v") {
      int64_t id;
      Weight w;
      if (!(ls >> id >> w)) throw parse_error(lineno, "expected 'v <id> <weight>'");
      if (id < 1 || id > n) throw parse_error(lineno, "vertex id out of range");
      if (w < 1) throw parse_error(lineno, "weights must be >= 1");
      if (weight_set[id - 1]) throw parse_error(lineno, "duplicate v line for vertex");
      weight_set[id - 1] = 1;
      g.set_weight(Vertex(id - 1), w);
    } else if (tag == "e") {
      int64_t u, v;
      if (!(ls >> u >> v)) throw parse_error(lineno, "expected 'e <u> <v>'");
      if (u < 1 || u > n || v < 1 || v > n) throw parse_error(lineno, "edge endpoint out of range");
      if (u == v) throw parse_error(lineno, "self-loop");
      if (g.has_edge(Vertex(u - 1), Vertex(v - 1))) throw parse_error(lineno, "duplicate edge");
      g.add_edge(Vertex(u - 1), Vertex(v - 1));
      ++m_seen;
    } else {
      throw parse_error(lineno, "unknown line type '" + tag + "'");
    }
  }
  if (!have_p) throw parse_error(lineno, "missing p line");
  if (m_seen != m_declared)
    throw parse_error(lineno, "p line declares " + std::to_string(m_declared) + " edges, found " +
                                  std::to_string(m_seen));
  return g;
}

Graph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p graph " << g.n() << " " << g.m() << "\n";
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.weight(v) != 1) out << "v " << v + 1 << " " << g.weight(v) << "\n";
  for (Vertex v = 0; v < g.n(); ++v)
    for (Vertex u : g.neighbors(v))
      if (v < u) out << "e " << v + 1 << " " << u + 1 << "\n";
}

bool lex_less(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool better_solution(const Solution& a, const Solution& b) {
  if (a.total != b.total) return a.total < b.total;
  return lex_less(a.separator, b.separator);
}

}  // namespace vint
