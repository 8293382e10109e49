#include "vc_solver.hpp"

#include <algorithm>
#include <unordered_map>

#include "dyn_bitset.hpp"

namespace vint {

void validate_cover(const Graph& g, const std::vector<Vertex>& cover) {
  std::vector<char> in(g.n(), 0);
  for (Vertex v : cover) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("cover vertex out of range");
    in[v] = 1;
  }
  for (Vertex v = 0; v < g.n(); ++v)
    for (Vertex u : g.neighbors(v))
      if (v < u && !in[v] && !in[u])
        throw std::invalid_argument("vertex set does not cover all edges");
}

namespace {

// ---------------------------------------------------------------- uvi_vc --

// independent-side vertices bucketed by their cover neighborhood
struct IGroup {
  uint32_t sig = 0;
  std::vector<Vertex> members;
};

struct UviBranchState {
  std::vector<int8_t> decided;  // per projected group: 0 open, 1 in S, 2 out
  std::vector<int> parent;      // union-find over cover indices in C'
  std::vector<int> bsize;       // vertices per block root (cover + assigned)
  int nblocks = 0;
  int max_block = 0;
  int s_count = 0;  // |S| so far including the cover guess
};

struct UviSearch {
  const Graph& g;
  std::vector<Vertex> cover;  // sorted
  int K = 0;
  std::vector<uint32_t> cadj;       // cover-internal adjacency by cover index
  std::vector<IGroup> base_groups;  // by full signature, ascending
  VcStats* stats;
  int64_t budget;

  // per-guess data
  int k = 0;
  uint32_t cpmask = 0;
  std::vector<IGroup> groups;  // projected signatures, ascending, sig != 0
  bool has_singleton = false;  // some independent vertex lost all C' neighbors
  std::vector<Vertex> sc_verts;

  int find(std::vector<int>& parent, int x) const {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void bump() {
    if (stats && ++stats->branch_nodes > budget)
      throw resource_limit_error("uvi_vc: node budget exhausted");
  }

  std::optional<Solution> branch(UviBranchState st) {
    bump();
    // a group whose cover neighbors sit inside one block never joins S
    for (size_t gi = 0; gi < groups.size(); ++gi) {
      if (st.decided[gi]) continue;
      int root = -1;
      bool multi = false;
      for (uint32_t m = groups[gi].sig; m; m &= m - 1) {
        int r = find(st.parent, __builtin_ctz(m));
        if (root == -1) root = r;
        else if (root != r) { multi = true; break; }
      }
      if (!multi) {
        st.decided[gi] = 2;
        st.bsize[root] += int(groups[gi].members.size());
        st.max_block = std::max(st.max_block, st.bsize[root]);
      }
    }
    if (st.max_block > k - st.s_count) {  // block already too big for any completion
      if (stats) ++stats->leaves;
      return std::nullopt;
    }
    int pick = -1;
    for (size_t gi = 0; gi < groups.size(); ++gi)
      if (!st.decided[gi]) { pick = int(gi); break; }

    if (pick == -1) {  // everything decided
      if (stats) ++stats->leaves;
      int maxcomp = std::max(st.max_block, has_singleton ? 1 : 0);
      if (st.s_count + maxcomp > k) return std::nullopt;
      std::vector<Vertex> sep = sc_verts;
      for (size_t gi = 0; gi < groups.size(); ++gi)
        if (st.decided[gi] == 1)
          sep.insert(sep.end(), groups[gi].members.begin(), groups[gi].members.end());
      Solution sol = evaluate(g, sep, ProblemMode::uvi());
      if (sol.total > k) throw std::logic_error("uvi_vc: leaf bookkeeping mismatch");
      return sol;
    }

    const int cnt = int(groups[pick].members.size());
    const int pot = (k - st.s_count) + st.nblocks;

    // all-in
    if (st.s_count + cnt <= k) {
      UviBranchState in = st;
      in.decided[pick] = 1;
      in.s_count += cnt;
      if (!((k - in.s_count) + in.nblocks < pot))
        throw std::logic_error("uvi_vc: potential did not decrease (in-branch)");
      if (auto r = branch(std::move(in))) return r;
    } else if (stats) {
      ++stats->leaves;  // in-side infeasible outright
    }
    // all-out: the spanned blocks merge
    {
      UviBranchState out = st;
      out.decided[pick] = 2;
      int root = -1;
      int merged = 0;
      for (uint32_t m = groups[pick].sig; m; m &= m - 1) {
        int r = find(out.parent, __builtin_ctz(m));
        if (root == -1) {
          root = r;
          merged = out.bsize[r];
        } else if (r != root) {
          out.parent[r] = root;
          merged += out.bsize[r];
          --out.nblocks;
        }
      }
      merged += cnt;
      out.bsize[root] = merged;
      out.max_block = std::max(out.max_block, merged);
      if (!((k - out.s_count) + out.nblocks < pot))
        throw std::logic_error("uvi_vc: potential did not decrease (out-branch)");
      if (auto r = branch(std::move(out))) return r;
    }
    return std::nullopt;
  }

  std::optional<Solution> decide(int kval) {
    k = kval;
    const uint32_t full = (K == 0) ? 0 : ((K >= 31) ? 0 : ((uint32_t(1) << K) - 1));
    for (uint32_t scmask = 0;; ++scmask) {
      if (scmask > full) break;
      int sc = __builtin_popcount(scmask);
      if (sc > k) {
        if (scmask == full) break;
        continue;
      }
      if (stats) ++stats->guesses;
      cpmask = full & ~scmask;
      sc_verts.clear();
      for (uint32_t m = scmask; m; m &= m - 1) sc_verts.push_back(cover[__builtin_ctz(m)]);

      UviBranchState st;
      st.parent.resize(K);
      st.bsize.assign(K, 0);
      st.s_count = sc;
      for (int i = 0; i < K; ++i) st.parent[i] = i;
      st.nblocks = __builtin_popcount(cpmask);
      for (uint32_t m = cpmask; m; m &= m - 1) {
        int i = __builtin_ctz(m);
        st.bsize[find(st.parent, i)] += 1;
      }
      for (uint32_t m = cpmask; m; m &= m - 1) {
        int i = __builtin_ctz(m);
        for (uint32_t e = cadj[i] & cpmask; e; e &= e - 1) {
          int j = __builtin_ctz(e);
          int ri = find(st.parent, i), rj = find(st.parent, j);
          if (ri != rj) {
            st.parent[rj] = ri;
            st.bsize[ri] += st.bsize[rj];
            --st.nblocks;
          }
        }
      }
      st.max_block = 0;
      for (int i = 0; i < K; ++i)
        if ((cpmask >> i) & 1 && find(st.parent, i) == i)
          st.max_block = std::max(st.max_block, st.bsize[i]);

      // project the independent side onto the surviving cover
      groups.clear();
      has_singleton = false;
      std::unordered_map<uint32_t, int> by_sig;
      for (const auto& bg : base_groups) {
        uint32_t ps = bg.sig & cpmask;
        if (ps == 0) {
          has_singleton = true;
          continue;
        }
        auto it = by_sig.find(ps);
        if (it == by_sig.end()) {
          by_sig.emplace(ps, int(groups.size()));
          groups.push_back({ps, bg.members});
        } else {
          auto& mem = groups[it->second].members;
          mem.insert(mem.end(), bg.members.begin(), bg.members.end());
        }
      }
      std::sort(groups.begin(), groups.end(),
                [](const IGroup& a, const IGroup& b) { return a.sig < b.sig; });
      st.decided.assign(groups.size(), 0);

      if (auto r = branch(std::move(st))) return r;
      if (scmask == full) break;
    }
    return std::nullopt;
  }
};

}  // namespace

Solution uvi_vc(const Graph& g, const std::vector<Vertex>& cover_in, VcStats* stats,
                int64_t node_budget) {
  validate_cover(g, cover_in);
  if (g.n() == 0) return evaluate(g, {}, ProblemMode::uvi());

  std::vector<Vertex> cover = cover_in;
  std::sort(cover.begin(), cover.end());
  cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
  int K = int(cover.size());
  if (K > 25) throw resource_limit_error("uvi_vc: cover too large to enumerate");

  UviSearch search{g, cover, K, {}, {}, stats, node_budget};
  std::vector<int> cidx(g.n(), -1);
  for (int i = 0; i < K; ++i) cidx[cover[i]] = i;
  search.cadj.assign(K, 0);
  for (int i = 0; i < K; ++i)
    for (Vertex u : g.neighbors(cover[i]))
      if (cidx[u] >= 0) search.cadj[i] |= uint32_t(1) << cidx[u];

  std::unordered_map<uint32_t, int> by_sig;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (cidx[v] >= 0) continue;
    uint32_t sig = 0;
    for (Vertex u : g.neighbors(v)) sig |= uint32_t(1) << cidx[u];
    auto it = by_sig.find(sig);
    if (it == by_sig.end()) {
      by_sig.emplace(sig, int(search.base_groups.size()));
      search.base_groups.push_back({sig, {v}});
    } else {
      search.base_groups[it->second].members.push_back(v);
    }
  }
  std::sort(search.base_groups.begin(), search.base_groups.end(),
            [](const IGroup& a, const IGroup& b) { return a.sig < b.sig; });

  for (int k = 1; k <= K; ++k)
    if (auto r = search.decide(k)) return *r;
  // k = |cover| + 1 always works: take the whole cover
  return evaluate(g, cover, ProblemMode::uvi());
}

// ------------------------------------------------------------- annotated --

namespace {

struct AnnKey {
  DynBitset alive;
  Weight wmax;
  bool operator==(const AnnKey& o) const { return wmax == o.wmax && alive == o.alive; }
};
struct AnnKeyHash {
  size_t operator()(const AnnKey& k) const {
    return DynBitsetHash{}(k.alive) * 1000003u ^ std::hash<Weight>{}(size_t(k.wmax));
  }
};

class AnnotatedSolver {
 public:
  AnnotatedSolver(const Graph& g, const std::vector<Vertex>& cover, int base_cover,
                  int64_t budget)
      : g_(g), base_cover_(std::max(3, base_cover)), budget_(budget), in_cover_(g.n(), 0) {
    for (Vertex v : cover) in_cover_[v] = 1;
  }

  std::optional<AnnotatedResult> solve(const DynBitset& alive, Weight wmax) {
    if (++nodes_ > budget_) throw resource_limit_error("annotated_wvi_vc: node budget exhausted");
    AnnKey key{alive, wmax};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    auto r = compute(alive, wmax);
    memo_.emplace(std::move(key), r);
    return r;
  }

 private:
  const Graph& g_;
  int base_cover_;
  int64_t budget_;
  int64_t nodes_ = 0;
  std::vector<char> in_cover_;
  std::unordered_map<AnnKey, std::optional<AnnotatedResult>, AnnKeyHash> memo_;

  Weight w(Vertex v) const { return g_.weight(v); }

  static void merge_in(std::vector<Vertex>& dst, const std::vector<Vertex>& src) {
    dst.insert(dst.end(), src.begin(), src.end());
  }

  bool connected_within(const DynBitset& set) const {
    int start = set.first();
    if (start < 0) return true;
    DynBitset seen(g_.n());
    std::vector<Vertex> stack{start};
    seen.set(start);
    int cnt = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g_.neighbors(v))
        if (set.test(u) && !seen.test(u)) {
          seen.set(u);
          stack.push_back(u);
          ++cnt;
        }
    }
    return cnt == set.count();
  }

  std::optional<AnnotatedResult> compute(DynBitset alive, Weight wmax) {
    // isolated free vertices either fit under wmax (and leave) or kill the instance
    for (int v = alive.first(); v >= 0; v = alive.next(v)) {
      if (in_cover_[v]) continue;
      bool iso = true;
      for (Vertex u : g_.neighbors(v))
        if (alive.test(u)) { iso = false; break; }
      if (iso) {
        if (w(v) > wmax) return std::nullopt;
        alive.reset(v);
      }
    }

    std::vector<Vertex> cv;
    for (int v = alive.first(); v >= 0; v = alive.next(v))
      if (in_cover_[v]) cv.push_back(v);
    int kk = int(cv.size());
    if (kk <= base_cover_) return base_case(alive, cv, wmax);
    if (kk > 25) throw resource_limit_error("annotated_wvi_vc: cover too large");

    std::vector<int> ci(g_.n(), -1);
    for (int i = 0; i < kk; ++i) ci[cv[i]] = i;
    std::vector<uint32_t> cadj(kk, 0);
    for (int i = 0; i < kk; ++i)
      for (Vertex u : g_.neighbors(cv[i]))
        if (alive.test(u) && ci[u] >= 0) cadj[i] |= uint32_t(1) << ci[u];
    std::vector<Vertex> iverts;
    std::vector<uint32_t> isig;
    for (int v = alive.first(); v >= 0; v = alive.next(v)) {
      if (in_cover_[v]) continue;
      uint32_t s = 0;
      for (Vertex u : g_.neighbors(v))
        if (alive.test(u)) s |= uint32_t(1) << ci[u];
      iverts.push_back(v);
      isig.push_back(s);
    }
    const uint32_t full = (uint32_t(1) << kk) - 1;

    std::optional<AnnotatedResult> best;
    auto offer = [&](Weight weight, std::vector<Vertex> sep) {
      std::sort(sep.begin(), sep.end());
      if (!best || weight < best->weight ||
          (weight == best->weight && lex_less(sep, best->separator)))
        best = AnnotatedResult{weight, std::move(sep)};
    };

    // carve off one component holding at least a tenth of the cover
    for (uint32_t dc = 1; dc <= full; ++dc) {
      if (10 * __builtin_popcount(dc) < kk) continue;
      bool crossing = false;
      for (uint32_t m = dc; m && !crossing; m &= m - 1)
        if (cadj[__builtin_ctz(m)] & (full ^ dc)) crossing = true;
      if (crossing) continue;

      DynBitset D(g_.n());
      for (uint32_t m = dc; m; m &= m - 1) D.set(cv[__builtin_ctz(m)]);
      Weight wd = 0;
      bool over = false;
      for (uint32_t m = dc; m; m &= m - 1) wd = checked_add(wd, w(cv[__builtin_ctz(m)]));
      std::vector<Vertex> forced;
      for (size_t t = 0; t < iverts.size(); ++t) {
        if ((isig[t] & dc) && !(isig[t] & ~dc)) {  // trapped inside the component
          D.set(iverts[t]);
          wd = checked_add(wd, w(iverts[t]));
          if (wd > wmax) { over = true; break; }
        } else if ((isig[t] & dc) && (isig[t] & (full ^ dc))) {
          forced.push_back(iverts[t]);
        }
      }
      if (over || wd > wmax) continue;
      if (!connected_within(D)) continue;

      DynBitset child = alive;
      child -= D;
      Weight forced_w = 0;
      for (Vertex v : forced) {
        child.reset(v);
        forced_w = checked_add(forced_w, w(v));
      }
      auto r = solve(child, wmax);
      if (!r) continue;
      auto sep = forced;
      merge_in(sep, r->separator);
      offer(checked_add(forced_w, r->weight), std::move(sep));
    }

    // split the cover across two halves of balanced size
    for (uint32_t am = 1; am < full; ++am) {
      int sz = __builtin_popcount(am);
      if (2 * sz < kk || 5 * sz > 3 * kk) continue;
      uint32_t bm = full ^ am;
      bool crossing = false;
      for (uint32_t m = am; m && !crossing; m &= m - 1)
        if (cadj[__builtin_ctz(m)] & bm) crossing = true;
      if (crossing) continue;

      DynBitset alive1(g_.n()), alive2(g_.n());
      for (uint32_t m = am; m; m &= m - 1) alive1.set(cv[__builtin_ctz(m)]);
      for (uint32_t m = bm; m; m &= m - 1) alive2.set(cv[__builtin_ctz(m)]);
      std::vector<Vertex> forced;
      Weight forced_w = 0;
      for (size_t t = 0; t < iverts.size(); ++t) {
        bool ina = isig[t] & am, inb = isig[t] & bm;
        if (ina && inb) {
          forced.push_back(iverts[t]);
          forced_w = checked_add(forced_w, w(iverts[t]));
        } else if (ina) {
          alive1.set(iverts[t]);
        } else if (inb) {
          alive2.set(iverts[t]);
        }
        // isig == 0 cannot happen after the isolation rule
      }
      auto r1 = solve(alive1, wmax);
      if (!r1) continue;
      auto r2 = solve(alive2, wmax);
      if (!r2) continue;
      auto sep = forced;
      merge_in(sep, r1->separator);
      merge_in(sep, r2->separator);
      offer(checked_add(forced_w, checked_add(r1->weight, r2->weight)), std::move(sep));
    }
    return best;
  }

  // enumerate partitions of the surviving cover into component traces
  std::optional<AnnotatedResult> base_case(const DynBitset& alive, const std::vector<Vertex>& cv,
                                           Weight wmax) {
    int kk = int(cv.size());
    if (kk == 0) return AnnotatedResult{0, {}};  // isolation rule emptied the instance

    std::vector<int> ci(g_.n(), -1);
    for (int i = 0; i < kk; ++i) ci[cv[i]] = i;
    std::vector<Vertex> iverts;
    for (int v = alive.first(); v >= 0; v = alive.next(v))
      if (!in_cover_[v]) iverts.push_back(v);

    std::optional<AnnotatedResult> best;
    std::vector<int> bid(kk, 0);
    // restricted growth strings enumerate the partitions
    auto try_partition = [&](int nblocks) {
      for (int i = 0; i < kk; ++i)
        for (Vertex u : g_.neighbors(cv[i]))
          if (alive.test(u) && ci[u] > i && bid[ci[u]] != bid[i]) return;  // cover edge crosses

      std::vector<Vertex> sep;
      std::vector<int> comp_of(iverts.size(), -1);
      for (size_t t = 0; t < iverts.size(); ++t) {
        int seen_block = -1;
        bool multi = false;
        for (Vertex u : g_.neighbors(iverts[t])) {
          if (!alive.test(u)) continue;
          int b = bid[ci[u]];
          if (seen_block == -1) seen_block = b;
          else if (seen_block != b) { multi = true; break; }
        }
        if (multi) sep.push_back(iverts[t]);
        else comp_of[t] = seen_block;  // >= 0: the isolation rule ran first
      }
      for (int b = 0; b < nblocks; ++b) {
        DynBitset comp(g_.n());
        Weight cw = 0;
        for (int i = 0; i < kk; ++i)
          if (bid[i] == b) {
            comp.set(cv[i]);
            cw = checked_add(cw, w(cv[i]));
          }
        for (size_t t = 0; t < iverts.size(); ++t)
          if (comp_of[t] == b) {
            comp.set(iverts[t]);
            cw = checked_add(cw, w(iverts[t]));
          }
        if (cw > wmax || !connected_within(comp)) return;
      }
      Weight sw = 0;
      for (Vertex v : sep) sw = checked_add(sw, w(v));
      if (!best || sw < best->weight || (sw == best->weight && lex_less(sep, best->separator)))
        best = AnnotatedResult{sw, sep};
    };

    // odometer over restricted growth strings
    std::vector<int> maxi(kk, 0);
    while (true) {
      int nblocks = 0;
      for (int i = 0; i < kk; ++i) nblocks = std::max(nblocks, bid[i] + 1);
      try_partition(nblocks);
      int i = kk - 1;
      while (i > 0) {
        if (bid[i] <= maxi[i - 1]) break;
        --i;
      }
      if (i == 0) break;
      ++bid[i];
      maxi[i] = std::max(maxi[i - 1], bid[i]);
      for (int j = i + 1; j < kk; ++j) {
        bid[j] = 0;
        maxi[j] = maxi[i];
      }
    }
    return best;
  }
};

DynBitset full_bitset(int n) {
  DynBitset b(n);
  b.set_all();
  return b;
}

}  // namespace

std::optional<AnnotatedResult> annotated_wvi_vc(const AnnotatedInstance& inst, int base_cover,
                                                int64_t node_budget) {
  validate_cover(inst.graph, inst.cover);
  AnnotatedSolver solver(inst.graph, inst.cover, base_cover, node_budget);
  return solver.solve(full_bitset(inst.graph.n()), inst.w_max);
}

// ---------------------------------------------------------------- wvi_vc --

Solution wvi_vc(const Graph& g, const std::vector<Vertex>& cover_in, int64_t node_budget) {
  validate_cover(g, cover_in);
  if (g.n() == 0) return evaluate(g, {}, ProblemMode::wvi());

  std::vector<Vertex> cover = cover_in;
  std::sort(cover.begin(), cover.end());
  cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
  int K = int(cover.size());
  if (K > 25) throw resource_limit_error("wvi_vc: cover too large to enumerate");

  std::vector<int> cidx(g.n(), -1);
  for (int i = 0; i < K; ++i) cidx[cover[i]] = i;
  std::vector<uint32_t> cadj(K, 0);
  for (int i = 0; i < K; ++i)
    for (Vertex u : g.neighbors(cover[i]))
      if (cidx[u] >= 0) cadj[i] |= uint32_t(1) << cidx[u];
  std::vector<Vertex> iverts;
  std::vector<uint32_t> sig;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (cidx[v] >= 0) continue;
    uint32_t s = 0;
    for (Vertex u : g.neighbors(v)) s |= uint32_t(1) << cidx[u];
    iverts.push_back(v);
    sig.push_back(s);
  }
  const uint32_t fullc = (K == 0) ? 0 : ((uint32_t(1) << K) - 1);

  AnnotatedSolver* solver_raw;
  AnnotatedSolver solver(g, cover, 8, node_budget);
  solver_raw = &solver;

  std::optional<Solution> best;
  auto consider = [&](std::vector<Vertex> sep, Weight claimed) {
    Solution sol = evaluate(g, sep, ProblemMode::wvi());
    if (sol.total != claimed) throw std::logic_error("wvi_vc: guess bookkeeping mismatch");
    if (!best || better_solution(sol, *best)) best = sol;
  };

  for (uint32_t scmask = 0;; ++scmask) {
    Weight wsc = 0;
    std::vector<Vertex> sc_verts;
    for (uint32_t m = scmask; m; m &= m - 1) {
      Vertex v = cover[__builtin_ctz(m)];
      sc_verts.push_back(v);
      wsc = checked_add(wsc, g.weight(v));
    }
    uint32_t cpmask = fullc & ~scmask;
    DynBitset alive_base = full_bitset(g.n());
    for (Vertex v : sc_verts) alive_base.reset(v);

    // heaviest component is a lone free vertex
    for (size_t t = 0; t < iverts.size(); ++t) {
      if (sig[t] & cpmask) continue;
      DynBitset alive = alive_base;
      alive.reset(iverts[t]);
      auto r = solver_raw->solve(alive, g.weight(iverts[t]));
      if (!r) continue;
      auto sep = sc_verts;
      sep.insert(sep.end(), r->separator.begin(), r->separator.end());
      consider(std::move(sep),
               checked_add(wsc, checked_add(r->weight, g.weight(iverts[t]))));
    }

    // heaviest component meets the surviving cover in A
    for (uint32_t am = cpmask; am; am = (am - 1) & cpmask) {
      bool crossing = false;
      for (uint32_t m = am; m && !crossing; m &= m - 1)
        if (cadj[__builtin_ctz(m)] & (cpmask ^ am)) crossing = true;
      if (crossing) continue;

      DynBitset D(g.n());
      Weight wd = 0;
      for (uint32_t m = am; m; m &= m - 1) {
        Vertex v = cover[__builtin_ctz(m)];
        D.set(v);
        wd = checked_add(wd, g.weight(v));
      }
      std::vector<Vertex> forced;
      Weight forced_w = 0;
      for (size_t t = 0; t < iverts.size(); ++t) {
        uint32_t ps = sig[t] & cpmask;
        if (ps && !(ps & ~am)) {
          D.set(iverts[t]);
          wd = checked_add(wd, g.weight(iverts[t]));
        } else if ((ps & am) && (ps & (cpmask ^ am))) {
          forced.push_back(iverts[t]);
          forced_w = checked_add(forced_w, g.weight(iverts[t]));
        }
      }
      {
        // connectivity of the guessed component
        DynBitset seen(g.n());
        int start = D.first();
        std::vector<Vertex> stack{start};
        seen.set(start);
        int cnt = 1;
        while (!stack.empty()) {
          Vertex v = stack.back();
          stack.pop_back();
          for (Vertex u : g.neighbors(v))
            if (D.test(u) && !seen.test(u)) {
              seen.set(u);
              stack.push_back(u);
              ++cnt;
            }
        }
        if (cnt != D.count()) continue;
      }

      DynBitset alive = alive_base;
      alive -= D;
      for (Vertex v : forced) alive.reset(v);
      auto r = solver_raw->solve(alive, wd);
      if (!r) continue;
      auto sep = sc_verts;
      sep.insert(sep.end(), forced.begin(), forced.end());
      sep.insert(sep.end(), r->separator.begin(), r->separator.end());
      consider(std::move(sep),
               checked_add(checked_add(wsc, forced_w), checked_add(r->weight, wd)));
    }
    if (scmask == fullc) break;
  }
  if (!best) throw std::logic_error("wvi_vc: no feasible guess (unreachable)");
  return *best;
}

}  // namespace vint
