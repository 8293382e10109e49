#include "reductions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace vint {

namespace {

constexpr int64_t kMaxOutputVertices = 3'000'000;
constexpr int64_t kMaxUnarySum = 1'000'000;

std::string pair_name(int i, int j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

CocInstance bdd_to_coc(const BddInstance& inst) {
  const Graph& g = inst.graph;
  if (inst.d < 1) throw std::invalid_argument("bdd_to_coc: degree bound must be >= 1");
  if (inst.k < 0) throw std::invalid_argument("bdd_to_coc: deletion budget must be >= 0");

  const int64_t n = g.n(), m = g.m();
  const int64_t per_edge = 3 + (inst.d - 1);  // two ports, a centre, d-1 leaves
  const int64_t total = n + m * per_edge;
  if (total > kMaxOutputVertices)
    throw resource_limit_error("bdd_to_coc: output graph would have " + std::to_string(total) +
                               " vertices");

  Graph out(static_cast<int>(total));
  for (Vertex v = 0; v < g.n(); ++v) {
    std::string lbl = g.label(v);
    out.set_label(v, lbl.empty() ? "v" + std::to_string(v + 1) : lbl);
  }
  int64_t next = n;
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v < u) continue;
      std::string e = std::to_string(u + 1) + "_" + std::to_string(v + 1);
      Vertex pu = Vertex(next++), ye = Vertex(next++), pv = Vertex(next++);
      out.set_label(pu, "p" + e + "a");
      out.set_label(ye, "y" + e);
      out.set_label(pv, "p" + e + "b");
      out.add_edge(u, pu);
      out.add_edge(pu, ye);
      out.add_edge(ye, pv);
      out.add_edge(pv, v);
      for (int64_t t = 1; t < inst.d; ++t) {
        Vertex leaf = Vertex(next++);
        out.set_label(leaf, "leaf" + e + "_" + std::to_string(t));
        out.add_edge(ye, leaf);
      }
    }
  }

  CocInstance res;
  res.graph = std::move(out);
  res.ell = checked_add(inst.d, 1);
  res.p = checked_add(inst.k, m);
  return res;
}

SwcocInstance rubp_to_swcoc(const RubpInstance& inst) {
  const int k = inst.k;
  if (k < 2) throw std::invalid_argument("rubp_to_swcoc: need at least two bins");
  if (inst.allowed.size() != inst.items.size())
    throw std::invalid_argument("rubp_to_swcoc: one bin pair required per item");

  int64_t total_size = 0;
  for (int64_t a : inst.items) {
    if (a < 1) throw std::invalid_argument("rubp_to_swcoc: item sizes must be positive");
    total_size = checked_add(total_size, a);
  }
  if (total_size > kMaxUnarySum)
    throw std::invalid_argument("rubp_to_swcoc: total item size exceeds the unary guard of " +
                                std::to_string(kMaxUnarySum));
  if (total_size % k != 0)
    throw std::invalid_argument("rubp_to_swcoc: total item size not divisible by the bin count");
  const int64_t big_b = total_size / k;
  if (big_b < 1) throw std::invalid_argument("rubp_to_swcoc: bin capacity must be positive");

  // group items by their (normalized) bin pair
  std::vector<std::vector<std::vector<int64_t>>> group(k, std::vector<std::vector<int64_t>>(k));
  for (size_t t = 0; t < inst.items.size(); ++t) {
    auto [i, j] = inst.allowed[t];
    if (i < 0 || i >= k || j < 0 || j >= k)
      throw std::invalid_argument("rubp_to_swcoc: item " + std::to_string(t + 1) +
                                  " names a bin outside the instance");
    if (i == j)
      throw std::invalid_argument("rubp_to_swcoc: item " + std::to_string(t + 1) +
                                  " must name two distinct bins");
    if (i > j) std::swap(i, j);
    group[i][j].push_back(inst.items[t]);
  }

  const int64_t big_m = checked_add(checked_mul(k, big_b), 1);            // M = kB + 1
  const int64_t big_l = checked_mul(checked_mul(8 * int64_t(k), k),
                                    checked_mul(big_b, big_m));           // L = 8k^2 B M
  if (big_l % (4 * int64_t(k)) != 0)
    throw std::logic_error("rubp_to_swcoc: clique weight is not integral");
  const int64_t clique_w = big_l / (4 * k);                               // = 2kBM
  const int64_t spread = checked_mul(2 * int64_t(k - 1), checked_mul(big_b, big_m));

  // per-pair data and validation, before any graph is allocated
  struct PairPlan {
    int i, j;
    std::vector<int64_t> sums;  // subset sums of the pair's item group
    int64_t sigma_h = 0;        // total size of the group
    int64_t path_len = 0;       // number of heavy path vertices
    int64_t b2_w = 0;
  };
  std::vector<PairPlan> plans;
  int64_t gadget_vertices = 0;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      PairPlan pl;
      pl.i = i;
      pl.j = j;
      pl.sums = subset_sums(group[i][j]);
      for (int64_t a : group[i][j]) pl.sigma_h += a;
      const int64_t ns = int64_t(pl.sums.size());
      pl.path_len = 4 * big_b - ns + 2;  // positions 0 .. 4B - |S| + 1
      if (pl.path_len < 2)
        throw std::invalid_argument("rubp_to_swcoc: pair " + pair_name(i, j) +
                                    " has too many subset sums for its connector path");
      pl.b2_w = checked_add(spread, big_b) - pl.sigma_h - checked_mul(ns - 1, big_m);
      if (pl.b2_w < 1)
        throw std::invalid_argument("rubp_to_swcoc: pair " + pair_name(i, j) +
                                    " leaves balancer weight " + std::to_string(pl.b2_w) +
                                    "; instance not encodable");
      gadget_vertices += pl.path_len + 2 * pl.sigma_h + 2 * ns + 3;
      plans.push_back(std::move(pl));
    }
  }

  const int64_t total_n = 4 * int64_t(k) * k + gadget_vertices;
  if (total_n > kMaxOutputVertices)
    throw resource_limit_error("rubp_to_swcoc: output graph would have " +
                               std::to_string(total_n) + " vertices");

  Graph out(static_cast<int>(total_n));
  auto clique_vertex = [&](int bin, int t) { return Vertex(bin * 4 * k + t); };
  for (int i = 0; i < k; ++i) {
    for (int t = 0; t < 4 * k; ++t) {
      Vertex c = clique_vertex(i, t);
      out.set_weight(c, clique_w);
      out.set_label(c, "C" + std::to_string(i + 1) + "_" + std::to_string(t + 1));
      for (int t2 = 0; t2 < t; ++t2) out.add_edge(clique_vertex(i, t2), c);
    }
  }

  int64_t next = 4 * int64_t(k) * k;
  for (const PairPlan& pl : plans) {
    const std::string tag = std::to_string(pl.i + 1) + "_" + std::to_string(pl.j + 1) + "_";
    const int64_t ns = int64_t(pl.sums.size());

    // heavy connector path between the two cliques
    const Vertex path0 = Vertex(next);
    for (int64_t q = 0; q < pl.path_len; ++q) {
      Vertex v = Vertex(next++);
      out.set_weight(v, big_m);
      out.set_label(v, "U" + tag + std::to_string(q));
      if (q > 0) out.add_edge(v - 1, v);
    }
    const Vertex path_last = Vertex(next - 1);
    for (int t = 0; t < 4 * k; ++t) {
      out.add_edge(path0, clique_vertex(pl.i, t));
      out.add_edge(path_last, clique_vertex(pl.j, t));
    }

    // unit chain vertices s_1..s_sigma and t_1..t_sigma, heavy sentinels at subset sums
    const Vertex s_base = Vertex(next);
    for (int64_t q = 1; q <= pl.sigma_h; ++q) {
      Vertex v = Vertex(next++);
      out.set_label(v, "s" + tag + std::to_string(q));
    }
    const Vertex sig_base = Vertex(next);
    std::unordered_map<int64_t, Vertex> sigma_at;
    for (int64_t idx = 0; idx < ns; ++idx) {
      Vertex v = Vertex(next++);
      out.set_weight(v, big_m);
      out.set_label(v, "sig" + tag + std::to_string(pl.sums[idx]));
      sigma_at[pl.sums[idx]] = v;
    }
    const Vertex t_base = Vertex(next);
    for (int64_t q = 1; q <= pl.sigma_h; ++q) {
      Vertex v = Vertex(next++);
      out.set_label(v, "t" + tag + std::to_string(q));
    }
    std::unordered_map<int64_t, Vertex> tau_at;
    for (int64_t idx = 0; idx < ns; ++idx) {
      Vertex v = Vertex(next++);
      out.set_weight(v, big_m);
      out.set_label(v, "tau" + tag + std::to_string(pl.sums[idx]));
      tau_at[pl.sums[idx]] = v;
    }
    (void)sig_base;
    (void)t_base;

    Vertex b1 = Vertex(next++), b2 = Vertex(next++), b3 = Vertex(next++);
    out.set_weight(b1, big_l / 2);
    out.set_weight(b2, pl.b2_w);
    out.set_weight(b3, big_l / 2);
    out.set_label(b1, "b" + tag + "1");
    out.set_label(b2, "b" + tag + "2");
    out.set_label(b3, "b" + tag + "3");

    auto s_at = [&](int64_t q) { return Vertex(s_base + (q - 1)); };
    auto t_at = [&](int64_t q) { return Vertex(t_base + (q - 1)); };

    // sentinel chains: walk positions 1..sigma_h, splicing sentinels at subset sums
    for (int64_t q : pl.sums) {
      if (q != 0) {
        out.add_edge(s_at(q), sigma_at.at(q));
        out.add_edge(t_at(q), tau_at.at(q));
      }
      if (q != pl.sigma_h) {
        out.add_edge(sigma_at.at(q), s_at(q + 1));
        out.add_edge(tau_at.at(q), t_at(q + 1));
      }
    }
    for (int64_t q = 1; q < pl.sigma_h; ++q) {
      if (!sigma_at.count(q)) {
        out.add_edge(s_at(q), s_at(q + 1));
        out.add_edge(t_at(q), t_at(q + 1));
      }
    }

    // chain ends hook into the cliques; the balancer trio joins the two chains
    for (int t = 0; t < 4 * k; ++t) {
      out.add_edge(sigma_at.at(0), clique_vertex(pl.i, t));
      out.add_edge(tau_at.at(pl.sigma_h), clique_vertex(pl.j, t));
    }
    out.add_edge(sigma_at.at(pl.sigma_h), b1);
    out.add_edge(b1, b2);
    out.add_edge(b2, b3);
    out.add_edge(b3, tau_at.at(0));
  }
  if (next != total_n) throw std::logic_error("rubp_to_swcoc: vertex bookkeeping mismatch");

  SwcocInstance res;
  res.graph = std::move(out);
  res.ell = checked_add(big_l, checked_add(spread, big_b));
  res.p = 3 * (int64_t(k) * (k - 1) / 2);
  return res;
}

SwviInstance swcoc_to_swvi(const SwcocInstance& inst) {
  if (inst.ell < 1) throw std::invalid_argument("swcoc_to_swvi: component bound must be >= 1");
  if (inst.p < 0) throw std::invalid_argument("swcoc_to_swvi: deletion budget must be >= 0");

  // overweight vertices are forced deletions; fold them into the budget
  std::vector<Vertex> forced;
  for (Vertex v = 0; v < inst.graph.n(); ++v)
    if (inst.graph.weight(v) > inst.ell) forced.push_back(v);
  Weight p = inst.p - Weight(forced.size());
  if (p < 0)
    throw std::invalid_argument("swcoc_to_swvi: " + std::to_string(forced.size()) +
                                " vertices exceed the component bound but the budget is only " +
                                std::to_string(inst.p));
  Graph core = induced_delete(inst.graph, forced).graph;

  const Weight k = checked_add(checked_mul(inst.ell, p), checked_add(inst.ell, p));
  const Weight pad_w = checked_mul(inst.ell, p + 1);  // = k - p
  const int64_t pads = int64_t(k) + 1;
  const int64_t leaves = p > 0 ? core.n() : 0;
  const int64_t total = core.n() + leaves + pads;
  if (total > kMaxOutputVertices)
    throw resource_limit_error("swcoc_to_swvi: output graph would have " + std::to_string(total) +
                               " vertices");

  Graph out(static_cast<int>(total));
  for (Vertex v = 0; v < core.n(); ++v) {
    out.set_weight(v, core.weight(v));
    out.set_label(v, core.label(v));
    for (Vertex u : core.neighbors(v))
      if (u > v) out.add_edge(v, u);
  }
  int64_t next = core.n();
  if (p > 0) {
    // a pendant leaf of weight p*w(v) makes deleting v cost exactly its share
    for (Vertex v = 0; v < core.n(); ++v) {
      Vertex leaf = Vertex(next++);
      out.set_weight(leaf, checked_mul(p, core.weight(v)));
      out.set_label(leaf, "l" + std::to_string(v + 1));
      out.add_edge(v, leaf);
    }
  }
  // heavy padding vertices pin the heaviest-component term to at least k - p
  for (int64_t t = 0; t < pads; ++t) {
    Vertex v = Vertex(next++);
    out.set_weight(v, pad_w);
    out.set_label(v, "pad" + std::to_string(t + 1));
  }

  SwviInstance res;
  res.graph = std::move(out);
  res.k = k;
  return res;
}

UviInstance swvi_to_uvi(const SwviInstance& inst) {
  if (inst.k < 1) throw std::invalid_argument("swvi_to_uvi: budget must be >= 1");

  // a vertex heavier than the budget is a forced deletion; this may cascade
  std::vector<char> dead(inst.graph.n(), 0);
  Weight k = inst.k;
  for (;;) {
    Vertex pick = -1;
    for (Vertex v = 0; v < inst.graph.n() && pick < 0; ++v)
      if (!dead[v] && inst.graph.weight(v) > k) pick = v;
    if (pick < 0) break;
    if (k == 0)
      throw std::invalid_argument("swvi_to_uvi: forced deletions exhaust the budget");
    dead[pick] = 1;
    --k;
  }
  std::vector<Vertex> forced;
  for (Vertex v = 0; v < inst.graph.n(); ++v)
    if (dead[v]) forced.push_back(v);
  Graph core = induced_delete(inst.graph, forced).graph;

  int64_t total = core.n();
  for (Vertex v = 0; v < core.n(); ++v) total += core.weight(v) - 1;
  if (total > kMaxOutputVertices)
    throw resource_limit_error("swvi_to_uvi: output graph would have " + std::to_string(total) +
                               " vertices");

  Graph out(static_cast<int>(total));
  for (Vertex v = 0; v < core.n(); ++v) {
    out.set_label(v, core.label(v));
    for (Vertex u : core.neighbors(v))
      if (u > v) out.add_edge(v, u);
  }
  int64_t next = core.n();
  for (Vertex v = 0; v < core.n(); ++v) {
    // expand weight w into the vertex itself plus a pendant path of w-1
    Vertex prev = v;
    for (Weight t = 1; t < core.weight(v); ++t) {
      Vertex q = Vertex(next++);
      out.set_label(q, "x" + std::to_string(v + 1) + "_" + std::to_string(t));
      out.add_edge(prev, q);
      prev = q;
    }
  }

  UviInstance res;
  res.graph = std::move(out);
  res.k = k;
  return res;
}

std::vector<int64_t> subset_sums(const std::vector<int64_t>& items) {
  int64_t total = 0;
  for (int64_t a : items) {
    if (a < 0) throw std::invalid_argument("subset_sums: negative item size");
    total = checked_add(total, a);
  }
  if (total > 10'000'000) throw resource_limit_error("subset_sums: total too large");
  std::vector<char> hit(size_t(total) + 1, 0);
  hit[0] = 1;
  for (int64_t a : items)
    for (int64_t s = total; s >= a; --s)
      if (hit[size_t(s - a)]) hit[size_t(s)] = 1;
  std::vector<int64_t> out;
  for (int64_t s = 0; s <= total; ++s)
    if (hit[size_t(s)]) out.push_back(s);
  return out;
}

std::optional<std::vector<int>> rubp_solve(const RubpInstance& inst) {
  const int k = inst.k;
  if (k < 2) throw std::invalid_argument("rubp_solve: need at least two bins");
  if (inst.allowed.size() != inst.items.size())
    throw std::invalid_argument("rubp_solve: one bin pair required per item");

  int64_t total_size = 0;
  for (int64_t a : inst.items) {
    if (a < 1) throw std::invalid_argument("rubp_solve: item sizes must be positive");
    total_size = checked_add(total_size, a);
  }
  if (total_size > kMaxUnarySum)
    throw std::invalid_argument("rubp_solve: total item size exceeds the unary guard of " +
                                std::to_string(kMaxUnarySum));
  if (total_size % k != 0) return std::nullopt;
  const int64_t big_b = total_size / k;

  struct Group {
    int i, j;
    std::vector<size_t> members;  // item indices
    std::vector<int64_t> sums;
  };
  std::vector<Group> groups;
  std::unordered_map<int64_t, size_t> group_of;
  for (size_t t = 0; t < inst.items.size(); ++t) {
    auto [i, j] = inst.allowed[t];
    if (i < 0 || i >= k || j < 0 || j >= k)
      throw std::invalid_argument("rubp_solve: item " + std::to_string(t + 1) +
                                  " names a bin outside the instance");
    if (i == j)
      throw std::invalid_argument("rubp_solve: item " + std::to_string(t + 1) +
                                  " must name two distinct bins");
    if (i > j) std::swap(i, j);
    int64_t key = int64_t(i) * k + j;
    auto it = group_of.find(key);
    if (it == group_of.end()) {
      group_of[key] = groups.size();
      groups.push_back({i, j, {}, {}});
      it = group_of.find(key);
    }
    groups[it->second].members.push_back(t);
  }
  for (Group& gr : groups) {
    std::vector<int64_t> sizes;
    for (size_t t : gr.members) sizes.push_back(inst.items[t]);
    gr.sums = subset_sums(sizes);
  }

  // pick, per group, how much goes to its lower bin; loads must hit B exactly
  std::vector<int64_t> load(k, 0);
  std::vector<int64_t> choice(groups.size(), 0);
  auto dfs = [&](auto&& self, size_t gi) -> bool {
    if (gi == groups.size()) {
      for (int i = 0; i < k; ++i)
        if (load[i] != big_b) return false;
      return true;
    }
    const Group& gr = groups[gi];
    int64_t sigma = 0;
    for (size_t t : gr.members) sigma += inst.items[t];
    for (int64_t x : gr.sums) {
      if (load[gr.i] + x > big_b) break;  // sums ascend
      if (load[gr.j] + (sigma - x) > big_b) continue;
      load[gr.i] += x;
      load[gr.j] += sigma - x;
      choice[gi] = x;
      if (self(self, gi + 1)) return true;
      load[gr.i] -= x;
      load[gr.j] -= sigma - x;
    }
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;

  // reconstruct a subset of each group matching its chosen amount
  std::vector<int> assignment(inst.items.size(), -1);
  for (size_t gi = 0; gi < groups.size(); ++gi) {
    const Group& gr = groups[gi];
    const size_t cnt = gr.members.size();
    std::vector<std::vector<char>> dp(cnt + 1);
    dp[0] = {1};
    for (size_t t = 0; t < cnt; ++t) {
      int64_t a = inst.items[gr.members[t]];
      const auto& prev = dp[t];
      std::vector<char> cur(prev.size() + size_t(a), 0);
      for (size_t s = 0; s < prev.size(); ++s)
        if (prev[s]) {
          cur[s] = 1;
          cur[s + size_t(a)] = 1;
        }
      dp[t + 1] = std::move(cur);
    }
    int64_t want = choice[gi];
    for (size_t t = cnt; t-- > 0;) {
      int64_t a = inst.items[gr.members[t]];
      if (size_t(want) < dp[t].size() && dp[t][size_t(want)]) {
        assignment[gr.members[t]] = gr.j;  // the rest of the amount fits in earlier items
      } else {
        assignment[gr.members[t]] = gr.i;
        want -= a;
        if (want < 0) throw std::logic_error("rubp_solve: witness reconstruction failed");
      }
    }
    if (want != 0) throw std::logic_error("rubp_solve: witness reconstruction failed");
  }
  return assignment;
}

std::optional<std::vector<Vertex>> bdd_solve(const BddInstance& inst) {
  const Graph& g = inst.graph;
  if (inst.d < 1) throw std::invalid_argument("bdd_solve: degree bound must be >= 1");
  if (inst.k < 0) throw std::invalid_argument("bdd_solve: deletion budget must be >= 0");
  if (g.n() > 16) throw resource_limit_error("bdd_solve: graph too large for exact search");

  const int n = g.n();
  std::optional<std::vector<Vertex>> best;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    int sz = __builtin_popcount(mask);
    if (int64_t(sz) > inst.k) continue;
    if (best && int(best->size()) < sz) continue;
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      if (mask >> v & 1) continue;
      int deg = 0;
      for (Vertex u : g.neighbors(v))
        if (!(mask >> u & 1)) ++deg;
      if (int64_t(deg) > inst.d) ok = false;
    }
    if (!ok) continue;
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(v);
    if (!best || s.size() < best->size() || (s.size() == best->size() && lex_less(s, *best)))
      best = std::move(s);
  }
  return best;
}

}  // namespace vint
