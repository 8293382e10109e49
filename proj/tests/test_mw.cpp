#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "helpers.hpp"
#include "mw_solver.hpp"
#include "oracle.hpp"
#include "params.hpp"

using namespace vint;

namespace {

std::vector<Weight> candidate_values(const Graph& g) {
  std::vector<Weight> vals;
  for (const auto& c : candidate_wmax(g, modular_decomposition(g)))
    if (vals.empty() || vals.back() != c.value) vals.push_back(c.value);
  return vals;
}

// Minimum of ell + p over an explicit list of ell values, using the oracle as
// the component-order backend.  Mirrors the solver's sweep so tests can rerun
// it over enlarged candidate lists.
Weight sweep_total(const Graph& g, const std::vector<Weight>& ells) {
  Weight best = -1;
  for (Weight ell : ells) {
    if (ell < 1 || ell > g.total_weight()) continue;
    auto r = coc_exact(g, ell, ProblemMode::wvi(), g.total_weight());
    if (!r) continue;
    Weight total = checked_add(ell, r->p);
    if (best < 0 || total < best) best = total;
  }
  return best;
}

}  // namespace

TEST_CASE("candidate values on named graphs") {
  CHECK(candidate_values(vt::complete_bipartite(2, 3)) == std::vector<Weight>{1, 2, 3, 5});
  CHECK(candidate_values(vt::path(4)) == std::vector<Weight>{1, 2, 3, 4});

  Graph edgeless(2);
  edgeless.set_weight(0, 3);
  edgeless.set_weight(1, 7);
  CHECK(candidate_values(edgeless) == std::vector<Weight>{3, 7});

  // Weighted K_{2,3}: the 2-side weighs 4+4, the 3-side 1+1+1.
  Graph kb = vt::complete_bipartite(2, 3);
  kb.set_weight(0, 4);
  kb.set_weight(1, 4);
  auto vals = candidate_values(kb);
  CHECK(std::set<Weight>(vals.begin(), vals.end()) ==
        std::set<Weight>{1, 3, 4, 8, 11});
}

TEST_CASE("candidate provenance tags and duplicates are kept") {
  auto cands = candidate_wmax(vt::path(4), modular_decomposition(vt::path(4)));
  // 4 vertices + 1 root module + 4 leaf modules + 15 nonempty child unions.
  CHECK(cands.size() == 24);
  CHECK(std::is_sorted(cands.begin(), cands.end(),
                       [](const WmaxCandidate& a, const WmaxCandidate& b) {
                         return a.value < b.value;
                       }));
  bool has_single = false, has_module = false, has_union = false;
  for (const auto& c : cands) {
    has_single |= c.source == WmaxSource::SingleVertex;
    has_module |= c.source == WmaxSource::Module;
    has_union |= c.source == WmaxSource::PrimeUnion;
  }
  CHECK(has_single);
  CHECK(has_module);
  CHECK(has_union);

  // Degenerate-only trees emit no prime unions.
  for (const auto& c : candidate_wmax(vt::complete_bipartite(2, 3),
                                      modular_decomposition(vt::complete_bipartite(2, 3))))
    CHECK(c.source != WmaxSource::PrimeUnion);
}

TEST_CASE("candidate count stays within the modular-width budget") {
  for (int seed = 0; seed < 15; ++seed) {
    Graph g = vt::random_graph(9, 0.2 + 0.05 * (seed % 4), 3100 + seed);
    MDTree t = modular_decomposition(g);
    int mw = modular_width(t);
    double bound = std::pow(2.0, mw) * double(t.nodes.size()) + g.n();
    CHECK(double(candidate_values(g).size()) <= bound);
  }
}

TEST_CASE("oracle backend behaviour matches the component-order contract") {
  auto r = coc_exact(vt::complete_bipartite(2, 3), 1, ProblemMode::wvi(), 5);
  REQUIRE(r.has_value());
  CHECK(r->p == 2);
  CHECK(r->separator == std::vector<Vertex>{0, 1});

  Graph any = vt::random_graph(7, 0.4, 77);
  auto r0 = coc_exact(any, any.total_weight(), ProblemMode::wvi(), any.total_weight());
  REQUIRE(r0.has_value());
  CHECK(r0->p == 0);

  Graph star = vt::star(5);
  for (Vertex v = 1; v <= 5; ++v) star.set_weight(v, 10);
  auto rs = coc_exact(star, 10, ProblemMode::wvi(), star.total_weight());
  REQUIRE(rs.has_value());
  CHECK(rs->p == 1);
  CHECK(rs->separator == std::vector<Vertex>{0});
}

TEST_CASE("wvi_mw on named graphs") {
  Solution kb = wvi_mw(vt::complete_bipartite(2, 3));
  CHECK(kb.total == 3);
  CHECK(kb.separator == std::vector<Vertex>{0, 1});
  CHECK(kb.max_component_cost == 1);

  CHECK(wvi_mw(vt::path(8)).total == 4);

  Graph edgeless(2);
  edgeless.set_weight(0, Weight(1) << 50);
  edgeless.set_weight(1, 5);
  Solution heavy = wvi_mw(edgeless);
  CHECK(heavy.total == Weight(1) << 50);
  CHECK(heavy.separator.empty());

  CHECK(wvi_mw(Graph(0)).total == 0);
}

TEST_CASE("returned separators are already irredundant") {
  // On P_6 the cheapest ell=2 witness carries a vertex that splits nothing
  // off; the solver must not surface it.
  Solution p6 = wvi_mw(vt::path(6));
  CHECK(p6.total == 4);
  CHECK(p6.separator == std::vector<Vertex>{2});

  for (int seed = 0; seed < 15; ++seed) {
    Graph g = vt::random_weighted(8, 0.3, 4200 + seed, 5);
    Solution sol = wvi_mw(g);
    CHECK(irredundant_reduce(g, sol.separator) == sol.separator);
  }
}

TEST_CASE("wvi_mw matches the exhaustive oracle") {
  for (int seed = 0; seed < 20; ++seed) {
    int n = 8 + seed % 4;
    Graph g = vt::random_weighted(n, seed % 2 == 0 ? 0.25 : 0.45, 5300 + seed,
                                  seed % 3 == 0 ? 6 : 3);
    if (seed % 5 == 0) g.set_weight(seed % n, Weight(1) << 50);
    Solution fast = wvi_mw(g);
    Solution slow = vi_exact(g, ProblemMode::wvi());
    CHECK(fast.total == slow.total);
    CHECK(evaluate(g, fast.separator, ProblemMode::wvi()).total == fast.total);
  }
}

TEST_CASE("enlarging the candidate list never changes the sweep result") {
  for (int seed = 0; seed < 10; ++seed) {
    Graph g = vt::random_weighted(7, 0.35, 6400 + seed, 4);
    auto vals = candidate_values(g);
    Weight base = sweep_total(g, vals);
    CHECK(base == wvi_mw(g).total);

    std::mt19937_64 rng(6500 + seed);
    std::vector<Weight> enlarged = vals;
    for (int extra = 0; extra < 6; ++extra)
      enlarged.push_back(1 + Weight(vt::rng_below(rng, uint64_t(g.total_weight()))));
    CHECK(sweep_total(g, enlarged) == base);

    // The full sweep over every conceivable ell agrees as well.
    std::vector<Weight> all;
    for (Weight ell = 1; ell <= g.total_weight(); ++ell) all.push_back(ell);
    CHECK(sweep_total(g, all) == base);
  }
}

TEST_CASE("a custom backend is consulted and drives the answer") {
  Graph g = vt::complete_bipartite(2, 3);
  int calls = 0;
  CocBackend counting = [&calls](const Graph& gg, Weight ell) {
    ++calls;
    return coc_exact(gg, ell, ProblemMode::wvi(), gg.total_weight());
  };
  Solution sol = wvi_mw(g, counting);
  CHECK(sol.total == 3);
  CHECK(calls >= 1);
  CHECK(calls <= int(candidate_values(g).size()));

  // A backend may decline small ell values; the sweep skips them.
  CocBackend picky = [](const Graph& gg, Weight ell) -> std::optional<CocResult> {
    if (ell < 2) return std::nullopt;
    return coc_exact(gg, ell, ProblemMode::wvi(), gg.total_weight());
  };
  CHECK(wvi_mw(vt::path(8), picky).total == 4);
}

TEST_CASE("oversized prime fan-out is reported as a resource limit") {
  // A prime module with 21 children: subdividing a star yields a prime root.
  Graph g(43);
  for (Vertex i = 0; i < 21; ++i) {
    g.add_edge(0, 1 + 2 * i);
    g.add_edge(1 + 2 * i, 2 + 2 * i);
  }
  CHECK_THROWS_AS((void)wvi_mw(g), resource_limit_error);
}
