#include "ml_solver.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <unordered_map>

#include "params.hpp"

namespace vint {
namespace {

constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;

int64_t safe_add(int64_t a, int64_t b) { return (a >= kInf || b >= kInf) ? kInf : a + b; }

// --------------------------------------------------------------- work graph

// Mutable view of g minus the guessed high-degree deletions. Undeletable
// vertices must survive; cycle contraction rewires in place.
struct Work {
  std::vector<std::set<int>> adj;
  std::vector<char> alive, undel;

  Work(const Graph& g, const std::vector<char>& deleted, const std::vector<char>& undeletable)
      : adj(g.n()), alive(g.n(), 1), undel(undeletable) {
    for (Vertex v = 0; v < g.n(); ++v) {
      if (deleted[v]) {
        alive[v] = 0;
        continue;
      }
      for (Vertex u : g.neighbors(v))
        if (!deleted[u]) adj[v].insert(u);
    }
  }

  int degree(int v) const {
    int d = 0;
    for (int u : adj[v])
      if (alive[u]) ++d;
    return d;
  }
};

struct WorkComp {
  std::vector<int> verts;  // ascending
  int maxdeg = 0;
};

std::vector<WorkComp> work_components(const Work& w) {
  int n = int(w.adj.size());
  std::vector<char> seen(n, 0);
  std::vector<WorkComp> out;
  for (int s = 0; s < n; ++s) {
    if (!w.alive[s] || seen[s]) continue;
    WorkComp comp;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.verts.push_back(v);
      for (int u : w.adj[v])
        if (w.alive[u] && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    std::sort(comp.verts.begin(), comp.verts.end());
    for (int v : comp.verts) comp.maxdeg = std::max(comp.maxdeg, w.degree(v));
    out.push_back(std::move(comp));
  }
  return out;
}

// ------------------------------------------------------- paths and cycles --

// Fewest deletions on a path so every kept run has <= ell vertices. Greedy:
// on overflow cut the rightmost deletable spot of the current run, which any
// feasible solution can be exchanged into; the run restarting after the cut
// has length i - last_del <= ell, so the invariant is restored.
std::optional<std::vector<int>> solve_path_seq(const Work& w, const std::vector<int>& seq,
                                               int64_t ell) {
  std::vector<int> cuts;
  int64_t run = 0;
  int prev_cut = -1, last_del = -1;
  for (int i = 0; i < int(seq.size()); ++i) {
    ++run;
    if (!w.undel[seq[i]]) last_del = i;
    if (run > ell) {
      if (last_del <= prev_cut) return std::nullopt;        // run is all undeletable
      if (int64_t(i - last_del) > ell) return std::nullopt;  // undeletable tail too long
      cuts.push_back(seq[last_del]);
      prev_cut = last_del;
      run = i - last_del;
    }
  }
  return cuts;
}

// A too-long cycle must lose a vertex among its first ell+1 positions; try
// each deletable one and fall back to the path greedy for the rest.
std::optional<std::vector<int>> solve_cycle_seq(const Work& w, const std::vector<int>& seq,
                                                int64_t ell) {
  int L = int(seq.size());
  if (int64_t(L) <= ell) return std::vector<int>{};
  std::optional<std::vector<int>> best;
  for (int p = 0; p < L && int64_t(p) <= ell; ++p) {
    if (w.undel[seq[p]]) continue;
    std::vector<int> rest;
    rest.reserve(L - 1);
    for (int i = 1; i < L; ++i) rest.push_back(seq[(p + i) % L]);
    auto r = solve_path_seq(w, rest, ell);
    if (!r) continue;
    r->insert(r->begin(), seq[p]);
    if (!best || r->size() < best->size()) best = std::move(r);
  }
  return best;
}

// Orders a max-degree-2 component along its path or cycle.
std::vector<int> walk_order(const Work& w, const WorkComp& comp, bool* is_cycle) {
  int start = -1;
  for (int v : comp.verts)
    if (w.degree(v) <= 1) {
      start = v;
      break;
    }
  *is_cycle = (start == -1);
  if (start == -1) start = comp.verts.front();
  std::vector<int> seq{start};
  int prev = -1, cur = start;
  while (true) {
    int nxt = -1;
    for (int u : w.adj[cur])
      if (w.alive[u] && u != prev) {
        nxt = u;
        break;
      }
    if (nxt == -1 || nxt == start) break;
    seq.push_back(nxt);
    prev = cur;
    cur = nxt;
  }
  return seq;
}

// ------------------------------------------------------- cycle contraction --

std::optional<std::vector<int>> find_cycle(const Work& w, const WorkComp& comp) {
  int n = int(w.adj.size());
  std::vector<int> par(n, -2);
  std::vector<char> vis(n, 0);
  struct Frame {
    int v;
    std::set<int>::const_iterator it;
  };
  std::vector<Frame> st;
  int root = comp.verts.front();
  par[root] = -1;
  vis[root] = 1;
  st.push_back({root, w.adj[root].begin()});
  while (!st.empty()) {
    Frame& f = st.back();
    if (f.it == w.adj[f.v].end()) {
      st.pop_back();
      continue;
    }
    int u = *f.it;
    ++f.it;
    if (!w.alive[u] || u == par[f.v]) continue;
    if (!vis[u]) {
      vis[u] = 1;
      par[u] = f.v;
      st.push_back({u, w.adj[u].begin()});
    } else {
      // back edge: u is an ancestor of f.v
      std::vector<int> path;
      int x = f.v;
      while (x != u && x >= 0) {
        path.push_back(x);
        x = par[x];
      }
      if (x == u) {
        path.push_back(u);
        return path;
      }
    }
  }
  return std::nullopt;
}

// Replaces the cycle by an undeletable star of the same vertex count. Sound
// because the rotation lemma lets an optimal solution avoid every vertex on a
// cycle through an undeleted high-degree vertex, and such a vertex lies on
// every cycle surviving the degree-2 stage.
void contract_cycle(Work& w, const std::vector<int>& cyc) {
  int hub = *std::min_element(cyc.begin(), cyc.end());
  std::vector<char> in_cyc(w.adj.size(), 0);
  for (int c : cyc) {
    in_cyc[c] = 1;
    w.undel[c] = 1;
  }
  for (int c : cyc) {
    if (c == hub) continue;
    std::vector<int> nbrs(w.adj[c].begin(), w.adj[c].end());
    for (int u : nbrs) {
      w.adj[u].erase(c);
      w.adj[c].erase(u);
      if (w.alive[u] && !in_cyc[u]) {
        w.adj[u].insert(hub);
        w.adj[hub].insert(u);
      }
    }
    w.adj[c].insert(hub);
    w.adj[hub].insert(c);
  }
}

// ------------------------------------------------------------- forest dp --

// dp[v][0]: v deleted; dp[v][s>=1]: v kept, its piece inside the subtree has
// exactly s vertices. Undeletable leaf children only shift the piece size, so
// they merge as one offset instead of one knapsack round each.
struct TreeDp {
  const Work& w;
  int64_t ell;
  std::vector<int> verts;  // local -> global, ascending
  std::vector<std::vector<int>> kids;
  std::vector<int> bundle;  // undeletable leaf children folded into an offset
  std::vector<char> is_bundled;
  std::vector<int> par;
  std::vector<std::vector<int64_t>> dp;
  std::vector<int> order;  // children before parents

  TreeDp(const Work& wk, int64_t l, const WorkComp& comp) : w(wk), ell(l), verts(comp.verts) {
    int k = int(verts.size());
    std::unordered_map<int, int> loc;
    loc.reserve(k * 2);
    for (int i = 0; i < k; ++i) loc[verts[i]] = i;
    kids.assign(k, {});
    bundle.assign(k, 0);
    is_bundled.assign(k, 0);
    par.assign(k, -1);
    dp.assign(k, {});

    std::vector<int> bfs{0};
    std::vector<char> seen(k, 0);
    seen[0] = 1;
    int64_t edges = 0;
    for (size_t qi = 0; qi < bfs.size(); ++qi) {
      int v = bfs[qi];
      for (int gu : w.adj[verts[v]]) {
        if (!w.alive[gu]) continue;
        ++edges;
        int u = loc.at(gu);
        if (seen[u]) continue;
        seen[u] = 1;
        par[u] = v;
        bfs.push_back(u);
      }
    }
    if (int(bfs.size()) != k) throw std::logic_error("forest dp: component not connected");
    if (edges != int64_t(k - 1) * 2) throw std::logic_error("forest dp: component has a cycle");

    std::vector<std::vector<int>> allkids(k);
    for (int v = 0; v < k; ++v)
      if (par[v] >= 0) allkids[par[v]].push_back(v);
    for (int v = 0; v < k; ++v) {
      std::sort(allkids[v].begin(), allkids[v].end());
      for (int u : allkids[v]) {
        if (allkids[u].empty() && w.undel[verts[u]]) {
          ++bundle[v];
          is_bundled[u] = 1;
        } else {
          kids[v].push_back(u);
        }
      }
    }
    order.assign(bfs.rbegin(), bfs.rend());
  }

  std::vector<int64_t> merge_alive(int v, std::vector<std::vector<int64_t>>* steps) const {
    std::vector<int64_t> acc{kInf, 0};
    if (steps) steps->push_back(acc);
    for (int u : kids[v]) {
      const auto& du = dp[u];
      int64_t cap = std::min<int64_t>(ell, int64_t(acc.size()) - 1 + int64_t(du.size()) - 1);
      std::vector<int64_t> na(size_t(cap) + 1, kInf);
      for (int s = 1; s < int(acc.size()); ++s) {
        if (acc[s] >= kInf) continue;
        if (du[0] < kInf && s < int(na.size())) na[s] = std::min(na[s], acc[s] + du[0]);
        for (int t = 1; t < int(du.size()); ++t) {
          if (int64_t(s) + t > cap) break;
          if (du[t] >= kInf) continue;
          na[s + t] = std::min(na[s + t], acc[s] + du[t]);
        }
      }
      acc = std::move(na);
      if (steps) steps->push_back(acc);
    }
    int q = bundle[v];
    if (q > 0) {
      int64_t cap = std::min<int64_t>(ell, int64_t(acc.size()) - 1 + q);
      std::vector<int64_t> na(size_t(std::max<int64_t>(cap, 1)) + 1, kInf);
      for (int s = 1; s < int(acc.size()); ++s)
        if (acc[s] < kInf && int64_t(s) + q <= ell) na[s + q] = acc[s];
      acc = std::move(na);
    }
    return acc;
  }

  int64_t compute() {
    for (int v : order) {
      if (is_bundled[v]) continue;
      auto acc = merge_alive(v, nullptr);
      int64_t del = w.undel[verts[v]] ? kInf : 1;
      for (int u : kids[v]) {
        int64_t b = kInf;
        for (int64_t x : dp[u]) b = std::min(b, x);
        del = safe_add(del, b);
      }
      acc[0] = del;  // bundled leaves survive a deletion at v as size-1 pieces
      dp[v] = std::move(acc);
    }
    int root = order.back();
    int64_t best = kInf;
    for (int64_t x : dp[root]) best = std::min(best, x);
    return best;
  }

  void trace(int v, int s, std::vector<int>& cuts) const {
    if (s == 0) {
      cuts.push_back(verts[v]);
      for (int u : kids[v]) {
        int bs = 0;
        int64_t b = kInf;
        for (int t = 0; t < int(dp[u].size()); ++t)
          if (dp[u][t] < b) {
            b = dp[u][t];
            bs = t;
          }
        trace(u, bs, cuts);
      }
      return;
    }
    std::vector<std::vector<int64_t>> steps;
    merge_alive(v, &steps);
    int cur = s - bundle[v];
    if (cur < 1) throw std::logic_error("forest dp trace: bad state");
    for (int i = int(kids[v].size()); i >= 1; --i) {
      int u = kids[v][i - 1];
      const auto& prev = steps[i - 1];
      const auto& now = steps[i];
      if (cur < int(prev.size()) && prev[cur] < kInf && dp[u][0] < kInf &&
          now[cur] == prev[cur] + dp[u][0]) {
        trace(u, 0, cuts);
        continue;
      }
      bool found = false;
      for (int t = 1; t < int(dp[u].size()) && t < cur; ++t) {
        if (dp[u][t] >= kInf) continue;
        if (cur - t < int(prev.size()) && prev[cur - t] < kInf &&
            now[cur] == prev[cur - t] + dp[u][t]) {
          trace(u, t, cuts);
          cur -= t;
          found = true;
          break;
        }
      }
      if (!found) throw std::logic_error("forest dp trace: no consistent split");
    }
    if (cur != 1) throw std::logic_error("forest dp trace: leftover size");
  }
};

// --------------------------------------------------------------- pipeline --

// Optimal deletions outside the guessed high-degree set, or nullopt if this
// guess is infeasible / cannot beat cut_cap.
std::optional<std::vector<int>> run_pipeline(const Graph& g, const std::vector<char>& deleted,
                                             const std::vector<char>& undeletable, int64_t ell,
                                             int64_t cut_cap) {
  if (cut_cap <= 0) return std::nullopt;
  Work w(g, deleted, undeletable);
  std::vector<int> cuts;

  while (true) {
    auto comps = work_components(w);
    std::vector<WorkComp> keep;
    for (auto& comp : comps) {
      if (int64_t(comp.verts.size()) <= ell) {
        for (int v : comp.verts) w.alive[v] = 0;
        continue;
      }
      if (comp.maxdeg <= 2) {
        bool is_cycle = false;
        auto seq = walk_order(w, comp, &is_cycle);
        if (seq.size() != comp.verts.size())
          throw std::logic_error("degree-2 component walk mismatch");
        auto r = is_cycle ? solve_cycle_seq(w, seq, ell) : solve_path_seq(w, seq, ell);
        if (!r) return std::nullopt;
        cuts.insert(cuts.end(), r->begin(), r->end());
        if (int64_t(cuts.size()) >= cut_cap) return std::nullopt;
        for (int v : comp.verts) w.alive[v] = 0;
        continue;
      }
      keep.push_back(std::move(comp));
    }
    if (keep.empty()) break;
    bool contracted = false;
    for (auto& comp : keep) {
      if (auto cyc = find_cycle(w, comp)) {
        contract_cycle(w, *cyc);
        contracted = true;
        break;
      }
    }
    if (contracted) continue;

    // all remaining components are trees
    for (auto& comp : keep) {
      TreeDp td(w, ell, comp);
      if (td.compute() >= kInf) return std::nullopt;
      int root = td.order.back();
      int bs = 0;
      int64_t bv = kInf;
      for (int t = 0; t < int(td.dp[root].size()); ++t)
        if (td.dp[root][t] < bv) {
          bv = td.dp[root][t];
          bs = t;
        }
      td.trace(root, bs, cuts);
      if (int64_t(cuts.size()) >= cut_cap) return std::nullopt;
    }
    break;
  }
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

// ------------------------------------------------------------ lower bound --

struct CompSummary {
  int64_t size = 0;
  int64_t edges = 0;
  int maxdeg = 0;
  int hi = 0;  // vertices of residual degree >= 3
};

std::vector<CompSummary> component_summaries(const Graph& g, const std::vector<char>& deleted) {
  std::vector<char> seen(g.n(), 0);
  std::vector<CompSummary> out;
  std::vector<int> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (deleted[s] || seen[s]) continue;
    CompSummary cs;
    stack.assign(1, s);
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++cs.size;
      int d = 0;
      for (Vertex u : g.neighbors(v)) {
        if (deleted[u]) continue;
        ++d;
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
      cs.edges += d;
      cs.maxdeg = std::max(cs.maxdeg, d);
      if (d >= 3) ++cs.hi;
    }
    cs.edges /= 2;
    out.push_back(cs);
  }
  return out;
}

// maxdeg <= 2 means a bare path or cycle, whose minimum deletion count is
// closed-form (a cycle needs one extra cut to open it)
int64_t exact_linear_cost(const CompSummary& c, int64_t ell) {
  if (c.size <= ell) return 0;
  if (c.edges == c.size) return (c.size + ell) / (ell + 1);
  return c.size / (ell + 1);
}

// Deleting a vertex adds at most its degree minus one new pieces, only `hi`
// vertices per component have degree above 2, every piece keeps <= ell
// vertices, and the d deleted vertices cover themselves; the smallest d whose
// coverage reaches the component size is a valid lower bound. Exact for
// paths and cycles.
int64_t deletions_lower_bound(const std::vector<CompSummary>& comps, int64_t ell) {
  int64_t lb = 0;
  for (const auto& c : comps) {
    if (c.size <= ell) continue;
    if (c.maxdeg <= 2) {
      lb += exact_linear_cost(c, ell);
      continue;
    }
    int64_t spread = int64_t(c.maxdeg - 1);
    int64_t hi_cap = ell * (1 + int64_t(c.hi) * spread) + c.hi;
    if (c.size <= hi_cap) {
      int64_t denom = 1 + spread * ell;
      lb += (c.size - ell + denom - 1) / denom;
    } else {
      // all hi high-degree vertices deleted, the rest split off one piece each
      int64_t covered_by_hi = ell * int64_t(c.hi) * (spread - 1);
      lb += c.hi + (c.size - ell - covered_by_hi - int64_t(c.hi) * (ell + 1) + ell) / (ell + 1);
    }
  }
  return lb;
}

std::optional<CocResult> coc_ml_impl(
    const Graph& g, const std::vector<Vertex>& xset, int64_t ell, int64_t p_cap, MlStats* stats,
    std::unordered_map<uint32_t, std::vector<CompSummary>>* cache) {
  int nx = int(xset.size());
  int64_t ecap = p_cap < 0 ? kInf : p_cap;
  std::optional<CocResult> best;
  std::vector<char> deleted(g.n(), 0), undel(g.n(), 0);
  const uint32_t full = nx == 0 ? 0 : ((uint32_t(1) << nx) - 1);
  for (uint32_t mask = 0;; ++mask) {
    if (stats) ++stats->guesses;
    int64_t base = __builtin_popcount(mask);
    if (base < ecap) {
      bool marked = false;
      auto mark = [&] {
        std::fill(deleted.begin(), deleted.end(), 0);
        std::fill(undel.begin(), undel.end(), 0);
        for (int i = 0; i < nx; ++i) {
          if ((mask >> i) & 1) deleted[xset[i]] = 1;
          else undel[xset[i]] = 1;
        }
        marked = true;
      };
      const std::vector<CompSummary>* summ = nullptr;
      std::vector<CompSummary> local;
      if (cache) {
        auto it = cache->find(mask);
        if (it == cache->end()) {
          mark();
          it = cache->emplace(mask, component_summaries(g, deleted)).first;
        }
        summ = &it->second;
      } else {
        mark();
        local = component_summaries(g, deleted);
        summ = &local;
      }
      if (base + deletions_lower_bound(*summ, ell) < ecap) {
        if (!marked) mark();
        if (stats) ++stats->pipelines;
        auto cuts = run_pipeline(g, deleted, undel, ell, ecap - base);
        if (cuts) {
          std::vector<Vertex> sep;
          for (int i = 0; i < nx; ++i)
            if ((mask >> i) & 1) sep.push_back(xset[i]);
          sep.insert(sep.end(), cuts->begin(), cuts->end());
          std::sort(sep.begin(), sep.end());
          for (const auto& comp : connected_components(g, sep))
            if (int64_t(comp.size()) > ell)
              throw std::logic_error("coc_ml: produced an oversized component");
          int64_t p = int64_t(sep.size());
          if (!best || p < best->p || (p == best->p && lex_less(sep, best->separator))) {
            best = CocResult{p, sep};
            ecap = std::min(ecap, p);  // only strictly better from here on
          }
        }
      }
    }
    if (mask == full) break;
  }
  return best;
}

}  // namespace

std::optional<CocResult> coc_ml(const Graph& g, int64_t ell, int64_t p_cap, MlStats* stats) {
  if (ell < 1) throw std::invalid_argument("coc_ml: ell must be at least 1");
  if (g.n() == 0) {
    if (p_cap == 0) return std::nullopt;
    return CocResult{0, {}};
  }
  auto xset = high_degree_set(g);
  if (int(xset.size()) > 25) throw resource_limit_error("coc_ml: high-degree set too large");
  return coc_ml_impl(g, xset, ell, p_cap, stats, nullptr);
}

Solution uvi_ml(const Graph& g, MlStats* stats) {
  if (g.n() == 0) return evaluate(g, {}, ProblemMode::uvi());
  auto xset = high_degree_set(g);
  if (int(xset.size()) > 20) throw resource_limit_error("uvi_ml: high-degree set too large");

  Solution best = evaluate(g, {}, ProblemMode::uvi());

  // Seed the incumbent from the delete-all-of-X guess: its leftovers have
  // degree <= 2, so the cost of every component bound is closed-form. The
  // sweep below then starts with a tight cap instead of the trivial one.
  if (!xset.empty() && int64_t(xset.size()) + 1 < best.total) {
    std::vector<char> deleted(g.n(), 0), undel(g.n(), 0);
    for (Vertex v : xset) deleted[v] = 1;
    auto summ = component_summaries(g, deleted);
    for (const auto& c : summ)
      if (c.maxdeg > 2) throw std::logic_error("uvi_ml: seed leftovers not linear");
    int64_t seed_ell = 0, seed_total = best.total;
    for (int64_t ell = 1; ell < best.total; ++ell) {
      int64_t total = int64_t(xset.size()) + ell;
      for (const auto& c : summ) total += exact_linear_cost(c, ell);
      if (total < seed_total) {
        seed_total = total;
        seed_ell = ell;
      }
    }
    if (seed_ell > 0) {
      if (stats) {
        ++stats->guesses;
        ++stats->pipelines;
      }
      int64_t seed_p = seed_total - seed_ell - int64_t(xset.size());
      auto cuts = run_pipeline(g, deleted, undel, seed_ell, seed_p + 1);
      if (!cuts || int64_t(cuts->size()) != seed_p)
        throw std::logic_error("uvi_ml: seed cost mismatch");
      std::vector<Vertex> sep(xset);
      sep.insert(sep.end(), cuts->begin(), cuts->end());
      std::sort(sep.begin(), sep.end());
      Solution cand = evaluate(g, sep, ProblemMode::uvi());
      if (cand.max_component_cost > seed_ell)
        throw std::logic_error("uvi_ml: seed bookkeeping mismatch");
      if (better_solution(cand, best)) best = cand;
    }
  }

  std::unordered_map<uint32_t, std::vector<CompSummary>> cache;
  auto* cache_ptr = int(xset.size()) <= 16 ? &cache : nullptr;
  for (int64_t ell = 1; ell < best.total; ++ell) {
    auto r = coc_ml_impl(g, xset, ell, best.total - ell, stats, cache_ptr);
    if (!r) continue;
    Solution cand = evaluate(g, r->separator, ProblemMode::uvi());
    if (cand.max_component_cost > ell)
      throw std::logic_error("uvi_ml: sweep bookkeeping mismatch");
    if (better_solution(cand, best)) best = cand;
  }
  return best;
}

// ---------------------------------------------------------------- rotation --

namespace {

struct FlowNet {
  struct Arc {
    int to, rev, cap;
  };
  std::vector<std::vector<Arc>> a;
  explicit FlowNet(int n) : a(n) {}
  void add(int u, int v, int c) {
    a[u].push_back({v, int(a[v].size()), c});
    a[v].push_back({u, int(a[u].size()) - 1, 0});
  }
  bool augment(int s, int t) {
    std::vector<std::pair<int, int>> pre(a.size(), {-1, -1});
    std::vector<int> q{s};
    pre[s] = {s, 0};
    for (size_t qi = 0; qi < q.size() && pre[t].first < 0; ++qi) {
      int v = q[qi];
      for (int i = 0; i < int(a[v].size()); ++i) {
        const Arc& arc = a[v][i];
        if (arc.cap <= 0 || pre[arc.to].first >= 0) continue;
        pre[arc.to] = {v, i};
        q.push_back(arc.to);
      }
    }
    if (pre[t].first < 0) return false;
    int v = t;
    while (v != s) {
      auto [pv, pi] = pre[v];
      a[pv][pi].cap -= 1;
      a[v][a[pv][pi].rev].cap += 1;
      v = pv;
    }
    return true;
  }
};

// Two internally vertex-disjoint s-x paths within the allowed vertices.
std::optional<std::pair<std::vector<int>, std::vector<int>>> two_vertex_disjoint_paths(
    const Graph& g, const std::vector<char>& allowed, int s, int x) {
  int n = g.n();
  auto vin = [](int v) { return 2 * v; };
  auto vout = [](int v) { return 2 * v + 1; };
  FlowNet net(2 * n);
  for (Vertex v = 0; v < n; ++v) {
    if (!allowed[v]) continue;
    net.add(vin(v), vout(v), (v == s || v == x) ? 2 : 1);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!allowed[v]) continue;
    for (Vertex u : g.neighbors(v))
      if (allowed[u]) net.add(vout(v), vin(u), 1);
  }
  if (!net.augment(vin(s), vout(x))) return std::nullopt;
  if (!net.augment(vin(s), vout(x))) return std::nullopt;

  auto walk = [&]() {
    std::vector<int> path{s};
    int v = s;
    int steps = 0;
    while (v != x) {
      if (++steps > 2 * n + 2) throw std::logic_error("path decomposition looped");
      int nxt = -1;
      for (auto& arc : net.a[vout(v)]) {
        // a used edge arc has leftover reverse capacity
        if (arc.cap == 0 && net.a[arc.to][arc.rev].cap > 0 && arc.to != vin(v)) {
          int u = arc.to / 2;
          net.a[arc.to][arc.rev].cap -= 1;  // consume so the second walk differs
          arc.cap = 1;
          nxt = u;
          break;
        }
      }
      if (nxt < 0) throw std::logic_error("path decomposition stuck");
      path.push_back(nxt);
      v = nxt;
    }
    return path;
  };
  auto p1 = walk();
  auto p2 = walk();
  return std::make_pair(p1, p2);
}

}  // namespace

std::optional<std::vector<Vertex>> find_violating_cycle(const Graph& g,
                                                        const std::vector<Vertex>& sep) {
  std::vector<char> in_s(g.n(), 0), in_x(g.n(), 0);
  for (Vertex v : sep) in_s[v] = 1;
  for (Vertex v : high_degree_set(g)) in_x[v] = 1;
  std::vector<char> allowed(g.n(), 1);
  for (Vertex v = 0; v < g.n(); ++v)
    if (in_s[v] && in_x[v]) allowed[v] = 0;

  std::vector<Vertex> ss = sep;
  std::sort(ss.begin(), ss.end());
  for (Vertex s : ss) {
    if (in_x[s]) continue;
    for (Vertex x = 0; x < g.n(); ++x) {
      if (!in_x[x] || in_s[x]) continue;
      auto r = two_vertex_disjoint_paths(g, allowed, s, x);
      if (!r) continue;
      std::vector<Vertex> cycle = r->first;  // s ... x
      for (int i = int(r->second.size()) - 2; i >= 1; --i) cycle.push_back(r->second[i]);
      return cycle;
    }
  }
  return std::nullopt;
}

std::vector<Vertex> rotate_on_cycle(const Graph& g, const std::vector<Vertex>& s,
                                    const std::vector<Vertex>& cycle) {
  const int len = int(cycle.size());
  if (len < 3) throw std::invalid_argument("rotate_on_cycle: a cycle needs >= 3 vertices");
  std::vector<char> on_cycle(g.n(), 0);
  for (int i = 0; i < len; ++i) {
    Vertex v = cycle[i];
    if (v < 0 || v >= g.n()) throw std::invalid_argument("rotate_on_cycle: vertex out of range");
    if (on_cycle[v]) throw std::invalid_argument("rotate_on_cycle: repeated cycle vertex");
    on_cycle[v] = 1;
    if (!g.has_edge(v, cycle[(i + 1) % len]))
      throw std::invalid_argument("rotate_on_cycle: consecutive cycle vertices not adjacent");
  }
  std::vector<char> in_s(g.n(), 0);
  for (Vertex v : s) {
    if (v < 0 || v >= g.n())
      throw std::invalid_argument("rotate_on_cycle: separator vertex out of range");
    in_s[v] = 1;
  }
  std::vector<char> in_x(g.n(), 0);
  for (Vertex v : high_degree_set(g)) in_x[v] = 1;
  bool meets = false;
  for (Vertex v : cycle)
    if (in_s[v]) {
      meets = true;
      if (in_x[v])
        throw std::invalid_argument(
            "rotate_on_cycle: separator already meets a high-degree cycle vertex");
    }
  if (!meets) throw std::invalid_argument("rotate_on_cycle: separator misses the cycle");

  std::set<Vertex> moved(s.begin(), s.end());
  for (int i = 0; i < len; ++i)
    if (in_s[cycle[i]]) moved.erase(cycle[i]);
  for (int i = 0; i < len; ++i)
    if (in_s[cycle[i]]) moved.insert(cycle[(i + 1) % len]);
  return std::vector<Vertex>(moved.begin(), moved.end());
}

std::vector<Vertex> rotate_to_stable(const Graph& g, std::vector<Vertex> sep) {
  std::sort(sep.begin(), sep.end());
  sep.erase(std::unique(sep.begin(), sep.end()), sep.end());
  std::vector<char> in_x(g.n(), 0);
  for (Vertex v : high_degree_set(g)) in_x[v] = 1;

  std::set<Vertex> s(sep.begin(), sep.end());
  size_t size0 = s.size();
  Weight maxc = evaluate(g, sep, ProblemMode::uvi()).max_component_cost;

  int outer_guard = int(std::count(in_x.begin(), in_x.end(), 1)) + 2;
  while (true) {
    std::vector<Vertex> cur(s.begin(), s.end());
    auto cyc = find_violating_cycle(g, cur);
    if (!cyc) return cur;
    if (--outer_guard < 0) throw std::logic_error("rotation failed to converge");

    int L = int(cyc->size());
    for (int step = 0;; ++step) {
      if (step > L) throw std::logic_error("rotation never reached a high-degree vertex");
      bool landed = false, any = false;
      for (Vertex v : *cyc)
        if (s.count(v)) {
          any = true;
          if (in_x[v]) landed = true;
        }
      if (!any) throw std::logic_error("rotation lost the cycle");
      if (landed) break;
      std::vector<Vertex> shifted = rotate_on_cycle(g, std::vector<Vertex>(s.begin(), s.end()), *cyc);
      if (shifted.size() != size0) throw std::logic_error("rotation changed the separator size");
      Weight mc = evaluate(g, shifted, ProblemMode::uvi()).max_component_cost;
      if (mc > maxc) throw std::logic_error("rotation grew the largest component");
      maxc = mc;
      s = std::set<Vertex>(shifted.begin(), shifted.end());
    }
  }
}

}  // namespace vint
