#include "mw_solver.hpp"

#include <algorithm>

namespace vint {

std::vector<WmaxCandidate> candidate_wmax(const Graph& g, const MDTree& tree) {
  std::vector<WmaxCandidate> out;
  for (Vertex v = 0; v < g.n(); ++v) out.push_back({g.weight(v), WmaxSource::SingleVertex});

  std::vector<Weight> node_weight(tree.nodes.size(), 0);
  for (size_t i = 0; i < tree.nodes.size(); ++i) {
    Weight w = 0;
    for (Vertex v : tree.nodes[i].module_verts) w = checked_add(w, g.weight(v));
    node_weight[i] = w;
    // A parallel root spans several components, so the full vertex set can
    // never be the heaviest component of anything; all other modules stay.
    if (int(i) == tree.root && tree.nodes[i].kind == MDKind::Parallel) continue;
    out.push_back({w, WmaxSource::Module});
  }

  for (const auto& node : tree.nodes) {
    if (node.kind != MDKind::Prime) continue;
    int c = int(node.children.size());
    if (c > 20) throw resource_limit_error("candidate_wmax: prime fan-out too large");
    const uint32_t full = (uint32_t(1) << c) - 1;
    for (uint32_t mask = 1; mask <= full; ++mask) {
      Weight w = 0;
      for (uint32_t m = mask; m; m &= m - 1)
        w = checked_add(w, node_weight[node.children[__builtin_ctz(m)]]);
      out.push_back({w, WmaxSource::PrimeUnion});
    }
  }

  std::sort(out.begin(), out.end(), [](const WmaxCandidate& a, const WmaxCandidate& b) {
    if (a.value != b.value) return a.value < b.value;
    return int(a.source) < int(b.source);
  });
  return out;
}

Solution wvi_mw(const Graph& g, const CocBackend& backend) {
  if (g.n() == 0) return evaluate(g, {}, ProblemMode::wvi());

  CocBackend run = backend;
  if (!run) {
    run = [](const Graph& gg, Weight ell) {
      return coc_exact(gg, ell, ProblemMode::wvi(), gg.total_weight());
    };
  }

  auto cands = candidate_wmax(g, modular_decomposition(g));
  std::vector<Weight> values;
  for (const auto& c : cands)
    if (values.empty() || values.back() != c.value) values.push_back(c.value);

  std::optional<Solution> best;
  for (Weight ell : values) {
    if (best && ell >= best->total) break;  // ell + p >= ell can no longer win
    auto r = run(g, ell);
    if (!r) continue;
    Solution raw = evaluate(g, r->separator, ProblemMode::wvi());
    if (raw.max_component_cost > ell)
      throw std::logic_error("wvi_mw: backend returned an oversized component");
    // Backend witnesses are minimum-cost for their ell but may still carry
    // vertices whose removal cannot split anything; strip them so the final
    // separator is always irredundant.
    Solution sol =
        evaluate(g, irredundant_reduce(g, r->separator), ProblemMode::wvi());
    if (!best || better_solution(sol, *best)) best = sol;
  }
  if (!best) throw std::logic_error("wvi_mw: no candidate succeeded (unreachable)");
  return *best;
}

}  // namespace vint
