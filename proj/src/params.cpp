#include "params.hpp"

#include <algorithm>
#include <unordered_set>

#include "dyn_bitset.hpp"

namespace vint {

namespace {

struct VcState {
  std::vector<char> alive;
  std::vector<int> deg;
};

void vc_remove(const Graph& g, VcState& st, Vertex v) {
  st.alive[v] = 0;
  st.deg[v] = 0;
  for (Vertex u : g.neighbors(v))
    if (st.alive[u]) --st.deg[u];
}

int vc_matching_lb(const Graph& g, const VcState& st) {
  std::vector<char> used(g.n(), 0);
  int lb = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!st.alive[v] || used[v] || st.deg[v] == 0) continue;
    for (Vertex u : g.neighbors(v)) {
      if (st.alive[u] && !used[u] && u != v) {
        used[v] = used[u] = 1;
        ++lb;
        break;
      }
    }
  }
  return lb;
}

struct VcSearch {
  const Graph& g;
  int64_t budget;
  int64_t nodes = 0;
  int best;
  std::vector<Vertex> best_cover;

  VcSearch(const Graph& g, int64_t budget) : g(g), budget(budget), best(g.n() + 1) {}

  void run(VcState st, std::vector<Vertex> cover) {
    if (++nodes > budget) throw resource_limit_error("vertex_cover_exact: node budget exhausted");
    // reductions: isolated vertices go away, degree-1 vertices take their neighbor
    bool changed = true;
    while (changed) {
      changed = false;
      for (Vertex v = 0; v < g.n(); ++v) {
        if (!st.alive[v]) continue;
        if (st.deg[v] == 0) {
          st.alive[v] = 0;
        } else if (st.deg[v] == 1) {
          Vertex u = -1;
          for (Vertex w : g.neighbors(v))
            if (st.alive[w]) { u = w; break; }
          cover.push_back(u);
          vc_remove(g, st, u);
          vc_remove(g, st, v);
          changed = true;
        }
      }
    }
    int maxdeg = 0;
    Vertex pick = -1;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (st.alive[v] && st.deg[v] > maxdeg) {
        maxdeg = st.deg[v];
        pick = v;
      }
    }
    if (pick == -1) {  // edgeless
      if (int(cover.size()) < best) {
        best = int(cover.size());
        best_cover = cover;
        std::sort(best_cover.begin(), best_cover.end());
      }
      return;
    }
    if (int(cover.size()) + vc_matching_lb(g, st) >= best) return;

    {  // branch 1: pick in the cover
      VcState st1 = st;
      auto c1 = cover;
      c1.push_back(pick);
      vc_remove(g, st1, pick);
      run(std::move(st1), std::move(c1));
    }
    {  // branch 2: all neighbors of pick in the cover
      VcState st2 = st;
      auto c2 = cover;
      for (Vertex u : g.neighbors(pick)) {
        if (st2.alive[u]) {
          c2.push_back(u);
          vc_remove(g, st2, u);
        }
      }
      vc_remove(g, st2, pick);
      run(std::move(st2), std::move(c2));
    }
  }
};

}  // namespace

std::vector<Vertex> vertex_cover_exact(const Graph& g, int64_t node_budget) {
  VcState st;
  st.alive.assign(g.n(), 1);
  st.deg.resize(g.n());
  for (Vertex v = 0; v < g.n(); ++v) st.deg[v] = g.degree(v);
  VcSearch search(g, node_budget);
  search.run(st, {});
  return search.best_cover;
}

int64_t feedback_edge_number(const Graph& g) {
  return g.m() - g.n() + int64_t(connected_components(g).size());
}

std::vector<Vertex> high_degree_set(const Graph& g) {
  std::vector<Vertex> x;
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) >= 3) x.push_back(v);
  return x;
}

int max_leaf_brute(const Graph& g, int bound) {
  if (!is_connected(g)) throw std::invalid_argument("max_leaf_brute: graph must be connected");
  if (g.n() > bound) throw resource_limit_error("max_leaf_brute: too many vertices");
  int n = g.n();
  if (n <= 1) return 0;
  if (n == 2) return 2;  // the single edge: both ends are leaves
  int best = 0;
  for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
    int l = __builtin_popcount(mask);
    if (l <= best || l == n) continue;
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      if (!((mask >> v) & 1)) continue;
      bool out_nbr = false;
      for (Vertex u : g.neighbors(v))
        if (!((mask >> u) & 1)) { out_nbr = true; break; }
      ok = out_nbr;
    }
    if (!ok) continue;
    // G - L connected?
    std::vector<Vertex> removed;
    for (Vertex v = 0; v < n; ++v)
      if ((mask >> v) & 1) removed.push_back(v);
    if (connected_components(g, removed).size() == 1) best = l;
  }
  return best;
}

bool is_module(const Graph& g, const std::vector<Vertex>& mod) {
  std::vector<char> in(g.n(), 0);
  for (Vertex v : mod) in[v] = 1;
  for (Vertex z = 0; z < g.n(); ++z) {
    if (in[z]) continue;
    int adj_count = 0;
    for (Vertex u : g.neighbors(z))
      if (in[u]) ++adj_count;
    if (adj_count != 0 && adj_count != int(mod.size())) return false;
  }
  return true;
}

namespace {

// Minimal module containing {u,v}: keep absorbing splitters. P tracks vertices
// with some neighbor inside, U those adjacent to all of the current set.
DynBitset module_closure(const std::vector<DynBitset>& adj, int n, Vertex u, Vertex v) {
  DynBitset m(n), p(n), uni(n);
  m.set(u);
  m.set(v);
  p = adj[u];
  p |= adj[v];
  uni = adj[u];
  uni &= adj[v];
  while (true) {
    DynBitset split = p;
    split -= uni;
    split -= m;
    int x = split.first();
    if (x < 0) break;
    m.set(x);
    p |= adj[x];
    uni &= adj[x];
  }
  return m;
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) {
    for (int i = 0; i < n; ++i) p[i] = i;
  }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

bool overlaps(const DynBitset& a, const DynBitset& b) {
  return a.intersects(b) && !a.is_subset_of(b) && !b.is_subset_of(a);
}

}  // namespace

MDTree modular_decomposition(const Graph& g) {
  MDTree t;
  int n = g.n();
  if (n == 0) return t;
  if (n == 1) {
    t.nodes.push_back({MDKind::Leaf, {0}, {}});
    t.root = 0;
    return t;
  }
  std::vector<DynBitset> adj(n, DynBitset(n));
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v)) adj[v].set(u);

  // family of pairwise module closures, deduplicated
  std::unordered_set<DynBitset, DynBitsetHash> fam_set;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) fam_set.insert(module_closure(adj, n, u, v));
  std::vector<DynBitset> fam(fam_set.begin(), fam_set.end());

  // strong modules with >= 2 vertices = unions of overlap components of fam
  UnionFind uf(int(fam.size()));
  for (size_t i = 0; i < fam.size(); ++i)
    for (size_t j = i + 1; j < fam.size(); ++j)
      if (overlaps(fam[i], fam[j])) uf.unite(int(i), int(j));
  std::unordered_set<DynBitset, DynBitsetHash> strong;
  {
    std::vector<DynBitset> comp_union(fam.size());
    std::vector<char> have(fam.size(), 0);
    for (size_t i = 0; i < fam.size(); ++i) {
      int r = uf.find(int(i));
      if (!have[r]) {
        comp_union[r] = fam[i];
        have[r] = 1;
      } else {
        comp_union[r] |= fam[i];
      }
    }
    for (size_t i = 0; i < fam.size(); ++i)
      if (have[i]) strong.insert(comp_union[i]);
  }
  {
    DynBitset all(n);
    all.set_all();
    strong.insert(all);
  }
  for (Vertex v = 0; v < n; ++v) {
    DynBitset s(n);
    s.set(v);
    strong.insert(s);
  }

  // laminar family -> inclusion tree
  std::vector<DynBitset> mods(strong.begin(), strong.end());
  std::sort(mods.begin(), mods.end(), [](const DynBitset& a, const DynBitset& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca > cb;
    return a < b;
  });
  int k = int(mods.size());
  t.nodes.resize(k);
  std::vector<int> parent(k, -1);
  for (int i = 0; i < k; ++i) {
    for (Vertex v = mods[i].first(); v >= 0; v = mods[i].next(v))
      t.nodes[i].module_verts.push_back(v);
    // parent = smallest strict superset = nearest earlier containing set
    for (int j = i - 1; j >= 0; --j) {
      if (mods[i].count() < mods[j].count() && mods[i].is_subset_of(mods[j])) {
        if (parent[i] == -1 || mods[j].count() < mods[parent[i]].count()) parent[i] = j;
      }
    }
    if (parent[i] >= 0) t.nodes[parent[i]].children.push_back(i);
  }
  t.root = 0;

  for (int i = 0; i < k; ++i) {
    auto& node = t.nodes[i];
    if (node.children.empty()) {
      node.kind = MDKind::Leaf;
      continue;
    }
    // quotient on child representatives decides the kind
    int tcount = int(node.children.size());
    bool all_adj = true, none_adj = true;
    for (int a = 0; a < tcount && (all_adj || none_adj); ++a) {
      for (int b = a + 1; b < tcount && (all_adj || none_adj); ++b) {
        Vertex ra = t.nodes[node.children[a]].module_verts.front();
        Vertex rb = t.nodes[node.children[b]].module_verts.front();
        if (g.has_edge(ra, rb)) none_adj = false;
        else all_adj = false;
      }
    }
    node.kind = all_adj ? MDKind::Series : (none_adj ? MDKind::Parallel : MDKind::Prime);
  }
  return t;
}

int modular_width(const MDTree& t) {
  if (t.root < 0) return 0;
  int w = 1;
  for (const auto& node : t.nodes) {
    if (node.children.empty()) continue;
    if (node.kind == MDKind::Prime) w = std::max(w, int(node.children.size()));
    else w = std::max(w, 2);
  }
  return w;
}

}  // namespace vint
