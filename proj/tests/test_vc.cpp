#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "oracle.hpp"
#include "params.hpp"
#include "vc_solver.hpp"

using namespace vint;

TEST_CASE("cover-parameterized integrity on named graphs") {
  Graph p8 = vt::path(8);
  CHECK(uvi_vc(p8, vertex_cover_exact(p8)).total == 4);
  CHECK(uvi_vc(p8, {1, 3, 5, 7}).total == 4);  // any valid cover works

  Graph k5 = vt::complete(5);
  CHECK(uvi_vc(k5, {0, 1, 2, 3}).total == 5);

  Graph s5 = vt::star(5);
  Solution s = uvi_vc(s5, {0});
  CHECK(s.total == 2);
  CHECK(s.separator == std::vector<Vertex>{0});
}

TEST_CASE("a non-cover is rejected up front") {
  Graph g = vt::path(4);
  CHECK_THROWS_AS(uvi_vc(g, {0}), std::invalid_argument);
  CHECK_THROWS_AS(wvi_vc(g, {0}), std::invalid_argument);
  CHECK_THROWS_AS(validate_cover(g, {3}), std::invalid_argument);
  validate_cover(g, {1, 2});
}

TEST_CASE("cover-parameterized integrity matches the oracle on random graphs") {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = vt::random_graph(10, seed % 2 ? 0.2 : 0.5, seed + 2000);
    auto cover = vertex_cover_exact(g);
    VcStats st;
    Solution got = uvi_vc(g, cover, &st);
    Solution want = vi_exact(g, ProblemMode::uvi());
    CHECK(got.total == want.total);
    CHECK(evaluate(g, got.separator, ProblemMode::uvi()).total == got.total);
    CHECK(st.leaves >= 1);
  }
}

TEST_CASE("branching stays within the five-to-the-cover budget") {
  for (uint64_t seed = 0; seed < 12; ++seed) {
    Graph g = vt::random_graph(11, 0.3, seed + 2100);
    auto cover = vertex_cover_exact(g);
    VcStats st;
    uvi_vc(g, cover, &st);
    double bound = std::pow(5.0, double(cover.size())) * 10.0 * double(g.n() + 1);
    CHECK(double(st.leaves) <= bound);
  }
}

TEST_CASE("annotated solver on a single covered edge") {
  AnnotatedInstance inst;
  inst.graph = Graph(2);
  inst.graph.add_edge(0, 1);
  inst.graph.set_weight(0, 5);
  inst.graph.set_weight(1, 3);
  inst.cover = {0};

  inst.w_max = 8;
  auto fits = annotated_wvi_vc(inst);
  REQUIRE(fits);
  CHECK(fits->weight == 0);
  CHECK(fits->separator.empty());

  inst.w_max = 7;  // {1} alone would be redundant, so there is no answer
  CHECK(!annotated_wvi_vc(inst));
}

TEST_CASE("annotated solver clears isolated free vertices by rule") {
  AnnotatedInstance inst;
  inst.graph = Graph(3);
  inst.graph.set_weight(0, 4);
  inst.graph.set_weight(1, 6);
  inst.graph.set_weight(2, 2);
  inst.cover = {};
  inst.w_max = 6;
  auto r = annotated_wvi_vc(inst);
  REQUIRE(r);
  CHECK(r->weight == 0);

  inst.w_max = 5;  // the weight-6 vertex cannot be deleted or kept
  CHECK(!annotated_wvi_vc(inst));
}

TEST_CASE("annotated separators are irredundant and avoid the cover") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = vt::random_weighted(9, 0.4, seed + 2200, 6);
    auto cover = vertex_cover_exact(g);
    AnnotatedInstance inst{g, cover, 8 + Weight(seed % 5)};
    auto r = annotated_wvi_vc(inst);
    if (!r) continue;
    for (Vertex v : r->separator)
      for (Vertex c : cover) CHECK(v != c);
    CHECK(irredundant_reduce(g, r->separator) == r->separator);
    Solution ev = evaluate(g, r->separator, ProblemMode::wvi());
    CHECK(ev.max_component_cost <= inst.w_max);
    CHECK(ev.separator_cost == r->weight);
  }
}

TEST_CASE("weighted cover solver handles the named instances") {
  Graph p8 = vt::path(8);
  CHECK(wvi_vc(p8, vertex_cover_exact(p8)).total == 4);

  Graph s3 = vt::star(3);
  for (Vertex v = 1; v <= 3; ++v) s3.set_weight(v, 10);
  Solution star_sol = wvi_vc(s3, {0});
  CHECK(star_sol.total == 11);
  CHECK(star_sol.separator == std::vector<Vertex>{0});

  Graph lone(1);
  lone.set_weight(0, Weight(1) << 40);
  Solution lone_sol = wvi_vc(lone, {});
  CHECK(lone_sol.total == Weight(1) << 40);
  CHECK(lone_sol.separator.empty());
}

TEST_CASE("weighted cover solver matches the oracle under big binary weights") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = vt::random_weighted(9, seed % 2 ? 0.25 : 0.5, seed + 2300,
                                  seed % 3 ? (Weight(1) << 50) : 7);
    auto cover = vertex_cover_exact(g);
    Solution got = wvi_vc(g, cover);
    Solution want = vi_exact(g, ProblemMode::wvi());
    CHECK(got.total == want.total);
    CHECK(evaluate(g, got.separator, ProblemMode::wvi()).total == got.total);
  }
}

TEST_CASE("weighted and unweighted cover solvers agree on unit weights") {
  for (uint64_t seed = 0; seed < 15; ++seed) {
    Graph g = vt::random_graph(9, 0.4, seed + 2400);
    auto cover = vertex_cover_exact(g);
    CHECK(wvi_vc(g, cover).total == uvi_vc(g, cover).total);
  }
}
