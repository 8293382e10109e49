#include "oracle.hpp"

#include <algorithm>
#include <queue>

namespace vint {

namespace {

// lexicographic order on the sorted vertex lists encoded by two bitmasks
bool mask_lex_less(uint32_t a, uint32_t b) {
  if (a == b) return false;
  uint32_t d = a ^ b;
  int pos = __builtin_ctz(d);
  if ((a >> pos) & 1) {
    // a owns the first differing vertex: a is smaller unless a is b plus a tail
    return (uint64_t(b) >> (pos + 1)) != 0;
  }
  return (uint64_t(a) >> (pos + 1)) == 0;
}

std::vector<Vertex> mask_to_vec(uint32_t mask) {
  std::vector<Vertex> out;
  while (mask) {
    out.push_back(__builtin_ctz(mask));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

Solution vi_exact(const Graph& g, ProblemMode mode, int n_limit) {
  int n = g.n();
  if (n > n_limit) throw resource_limit_error("vi_exact: graph too large for the oracle");
  if (n == 0) return evaluate(g, {}, mode);

  std::vector<uint32_t> adj(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v)) adj[v] |= uint32_t(1) << u;
  const uint32_t full = (n == 32) ? ~uint32_t(0) : ((uint32_t(1) << n) - 1);

  bool have_best = false;
  Weight best_total = 0;
  uint32_t best_mask = 0;
  for (uint32_t smask = 0;; ++smask) {
    Weight sep_cost = 0;
    if (mode.separator_cost == CostKind::Count) {
      sep_cost = __builtin_popcount(smask);
    } else {
      for (uint32_t m = smask; m; m &= m - 1) sep_cost = checked_add(sep_cost, g.weight(__builtin_ctz(m)));
    }
    Weight max_comp = 0;
    uint32_t alive = full & ~smask;
    while (alive) {
      uint32_t comp = uint32_t(1) << __builtin_ctz(alive);
      while (true) {
        uint32_t grow = comp;
        for (uint32_t m = comp; m; m &= m - 1) grow |= adj[__builtin_ctz(m)];
        grow &= alive;
        if (grow == comp) break;
        comp = grow;
      }
      Weight c = 0;
      if (mode.component_cost == CostKind::Count) {
        c = __builtin_popcount(comp);
      } else {
        for (uint32_t m = comp; m; m &= m - 1) c = checked_add(c, g.weight(__builtin_ctz(m)));
      }
      max_comp = std::max(max_comp, c);
      alive &= ~comp;
    }
    Weight total = checked_add(sep_cost, max_comp);
    if (!have_best || total < best_total ||
        (total == best_total && mask_lex_less(smask, best_mask))) {
      have_best = true;
      best_total = total;
      best_mask = smask;
    }
    if (smask == full) break;
  }
  Solution sol = evaluate(g, mask_to_vec(best_mask), mode);
  if (sol.total != best_total) throw std::logic_error("vi_exact: verification mismatch");
  return sol;
}

namespace {

// all components of g - removed cost <= ell?
bool coc_feasible(const Graph& g, const std::vector<char>& removed, Weight ell, ProblemMode mode) {
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (removed[s] || seen[s]) continue;
    Weight cost = 0;
    stack.push_back(s);
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      cost = checked_add(cost, mode.component_cost == CostKind::Count ? 1 : g.weight(v));
      if (cost > ell) {
        stack.clear();
        return false;
      }
      for (Vertex u : g.neighbors(v))
        if (!removed[u] && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
  }
  return true;
}

}  // namespace

std::optional<CocResult> coc_exact(const Graph& g, Weight ell, ProblemMode mode, Weight p_cap,
                                   int n_limit, int64_t check_budget) {
  if (ell < 0 || p_cap < 0) throw std::invalid_argument("coc_exact: negative ell or p_cap");
  int n = g.n();
  int64_t checks = 0;
  auto spend = [&]() {
    if (++checks > check_budget) throw resource_limit_error("coc_exact: check budget exhausted");
  };

  if (mode.separator_cost == CostKind::Count) {
    // increasing size, lexicographic within a size -> first hit is canonical
    int smax = int(std::min<Weight>(n, p_cap));
    std::vector<char> removed(n, 0);
    for (int size = 0; size <= smax; ++size) {
      std::vector<int> idx(size);
      for (int i = 0; i < size; ++i) idx[i] = i;
      while (true) {
        std::fill(removed.begin(), removed.end(), 0);
        for (int i : idx) removed[i] = 1;
        spend();
        if (coc_feasible(g, removed, ell, mode)) {
          CocResult r;
          r.p = size;
          r.separator.assign(idx.begin(), idx.end());
          return r;
        }
        // next combination
        int i = size - 1;
        while (i >= 0 && idx[i] == n - size + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        if (size == 0) break;
      }
    }
    return std::nullopt;
  }

  // weighted separators: full subset sweep
  if (n > n_limit) throw resource_limit_error("coc_exact: graph too large for weighted sweep");
  bool have = false;
  Weight best_w = 0;
  uint32_t best_mask = 0;
  const uint32_t full = (n >= 32) ? ~uint32_t(0) : ((uint32_t(1) << n) - 1);
  std::vector<char> removed(n, 0);
  for (uint32_t smask = 0;; ++smask) {
    Weight w = 0;
    for (uint32_t m = smask; m; m &= m - 1) w = checked_add(w, g.weight(__builtin_ctz(m)));
    if (w <= p_cap && (!have || w < best_w || (w == best_w && mask_lex_less(smask, best_mask)))) {
      std::fill(removed.begin(), removed.end(), 0);
      for (uint32_t m = smask; m; m &= m - 1) removed[__builtin_ctz(m)] = 1;
      spend();
      if (coc_feasible(g, removed, ell, mode)) {
        have = true;
        best_w = w;
        best_mask = smask;
      }
    }
    if (smask == full) break;
  }
  if (!have) return std::nullopt;
  CocResult r;
  r.p = best_w;
  r.separator = mask_to_vec(best_mask);
  return r;
}

namespace {

struct NaturalSearch {
  const Graph& g;
  ProblemMode mode;
  Weight ell, p_budget;
  int64_t budget;
  NaturalStats* stats;
  std::optional<Solution> best;

  Weight vcost(Vertex v) const { return mode.separator_cost == CostKind::Count ? 1 : g.weight(v); }

  void rec(std::vector<char>& removed, std::vector<Vertex>& sep, Weight spent) {
    if (stats && ++stats->nodes > budget)
      throw resource_limit_error("vi_natural: node budget exhausted");

    // locate the first too-costly component and grow a chunk just past ell
    std::vector<char> seen(g.n(), 0);
    std::vector<Vertex> over;  // the chunk T, in BFS discovery order
    for (Vertex s = 0; s < g.n() && over.empty(); ++s) {
      if (removed[s] || seen[s]) continue;
      Weight cost = 0;
      std::queue<Vertex> q;
      std::vector<Vertex> order;
      q.push(s);
      seen[s] = 1;
      while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        order.push_back(v);
        cost = checked_add(cost, mode.component_cost == CostKind::Count ? 1 : g.weight(v));
        if (cost > ell) break;
        for (Vertex u : g.neighbors(v))
          if (!removed[u] && !seen[u]) {
            seen[u] = 1;
            q.push(u);
          }
      }
      if (cost > ell) over = std::move(order);
    }

    if (over.empty()) {  // every component fits: feasible leaf
      if (stats) ++stats->leaves;
      Solution sol = evaluate(g, sep, mode);
      if (!best || better_solution(sol, *best)) best = sol;
      return;
    }
    std::sort(over.begin(), over.end());
    bool branched = false;
    for (Vertex t : over) {
      if (checked_add(spent, vcost(t)) > p_budget) continue;
      branched = true;
      removed[t] = 1;
      sep.push_back(t);
      rec(removed, sep, spent + vcost(t));
      sep.pop_back();
      removed[t] = 0;
    }
    if (!branched && stats) ++stats->leaves;
  }
};

}  // namespace

std::optional<Solution> vi_natural(const Graph& g, Weight k, ProblemMode mode,
                                   int64_t node_budget, NaturalStats* stats) {
  if (k < 0) throw std::invalid_argument("vi_natural: negative k");
  NaturalStats local;
  if (!stats) stats = &local;
  std::optional<Solution> best;
  Solution empty = evaluate(g, {}, mode);
  if (empty.total <= k) return empty;  // nothing to delete; also covers n == 0
  for (Weight ell = 1; ell <= k; ++ell) {
    NaturalSearch search{g, mode, ell, k - ell, node_budget, stats, std::nullopt};
    std::vector<char> removed(g.n(), 0);
    std::vector<Vertex> sep;
    search.rec(removed, sep, 0);
    if (search.best && search.best->total <= k &&
        (!best || better_solution(*search.best, *best)))
      best = search.best;
  }
  return best;
}

}  // namespace vint
