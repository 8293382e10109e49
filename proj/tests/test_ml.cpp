#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "ml_solver.hpp"
#include "oracle.hpp"
#include "params.hpp"

using namespace vint;

namespace {

// C_4 on 0..3 with a pendant vertex 4 attached to 0; vertex 0 is the only
// degree-3 vertex.
Graph pendant_square() {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 0);
  g.add_edge(0, 4);
  return g;
}

int64_t max_component_size(const Graph& g, const std::vector<Vertex>& sep) {
  return evaluate(g, sep, ProblemMode::uvi()).max_component_cost;
}

bool not_a_violating_cycle_left(const Graph& g, const std::vector<Vertex>& sep) {
  return !find_violating_cycle(g, sep).has_value();
}

}  // namespace

TEST_CASE("coc_ml on named graphs") {
  auto p8 = coc_ml(vt::path(8), 2);
  REQUIRE(p8.has_value());
  CHECK(p8->p == 2);
  CHECK(max_component_size(vt::path(8), p8->separator) <= 2);

  auto c9 = coc_ml(vt::cycle(9), 2);
  REQUIRE(c9.has_value());
  CHECK(c9->p == 3);
  CHECK(max_component_size(vt::cycle(9), c9->separator) <= 2);

  // Optimal route here guesses the degree-3 vertex and then cuts the leftover
  // path; exercises both the guess loop and the bounded-degree solver.
  auto sq = coc_ml(pendant_square(), 1);
  REQUIRE(sq.has_value());
  CHECK(sq->p == 2);
  CHECK(max_component_size(pendant_square(), sq->separator) <= 1);

  auto star = coc_ml(vt::star(5), 1);
  REQUIRE(star.has_value());
  CHECK(star->p == 1);
  CHECK(star->separator == std::vector<Vertex>{0});
}

TEST_CASE("coc_ml handles paths and cycles without degree-3 vertices") {
  // Pure bounded-degree components: X is empty, a single pipeline runs.
  MlStats st;
  auto p7 = coc_ml(vt::path(7), 2, -1, &st);
  REQUIRE(p7.has_value());
  CHECK(p7->p == 2);
  CHECK(st.guesses == 1);
  CHECK(st.pipelines == 1);

  auto c5 = coc_ml(vt::cycle(5), 4);
  REQUIRE(c5.has_value());
  CHECK(c5->p == 1);

  auto tiny = coc_ml(vt::path(3), 3);
  REQUIRE(tiny.has_value());
  CHECK(tiny->p == 0);
  CHECK(tiny->separator.empty());
}

TEST_CASE("coc_ml argument checks and p_cap") {
  CHECK_THROWS_AS((void)coc_ml(vt::path(3), 0), std::invalid_argument);
  CHECK_THROWS_AS((void)coc_ml(vt::path(3), -2), std::invalid_argument);

  // Optimum is 3; a cap only reports strictly cheaper solutions.
  CHECK_FALSE(coc_ml(vt::cycle(9), 2, 3).has_value());
  CHECK_FALSE(coc_ml(vt::cycle(9), 2, 0).has_value());
  auto capped = coc_ml(vt::cycle(9), 2, 4);
  REQUIRE(capped.has_value());
  CHECK(capped->p == 3);

  CHECK_THROWS_AS((void)coc_ml(vt::complete(27), 2), resource_limit_error);
}

TEST_CASE("coc_ml agrees with the exhaustive oracle") {
  for (int seed = 0; seed < 20; ++seed) {
    Graph g = vt::random_graph(10, seed % 2 == 0 ? 0.25 : 0.4, 500 + seed);
    for (int64_t ell = 1; ell <= 4; ++ell) {
      auto fast = coc_ml(g, ell);
      auto slow = coc_exact(g, ell, ProblemMode::uvi(), g.n(), 10);
      REQUIRE(fast.has_value());
      REQUIRE(slow.has_value());
      CHECK(fast->p == slow->p);
      CHECK(int64_t(fast->separator.size()) == fast->p);
      CHECK(max_component_size(g, fast->separator) <= ell);
    }
  }
}

TEST_CASE("coc_ml agrees with the oracle on sparser graphs with surviving cycles") {
  // Sparse instances keep cycles alive past the small-component drop, so the
  // cycle-contraction step actually fires before the forest solve.
  for (int seed = 0; seed < 8; ++seed) {
    Graph g = vt::random_graph(14, 0.22, 9000 + seed);
    for (int64_t ell = 1; ell <= 3; ++ell) {
      auto fast = coc_ml(g, ell);
      auto slow = coc_exact(g, ell, ProblemMode::uvi(), g.n(), 14);
      REQUIRE(fast.has_value());
      REQUIRE(slow.has_value());
      CHECK(fast->p == slow->p);
      CHECK(max_component_size(g, fast->separator) <= ell);
    }
  }
}

TEST_CASE("uvi_ml on named graphs") {
  Solution p8 = uvi_ml(vt::path(8));
  CHECK(p8.total == 4);

  Solution sq = uvi_ml(pendant_square());
  CHECK(sq.total == 3);
  CHECK(sq.max_component_cost == 1);
  CHECK(sq.separator.size() == 2);

  Solution star = uvi_ml(vt::star(5));
  CHECK(star.total == 2);
  CHECK(star.separator == std::vector<Vertex>{0});

  Solution lone = uvi_ml(Graph(1));
  CHECK(lone.total == 1);
  CHECK(lone.separator.empty());

  CHECK_THROWS_AS((void)uvi_ml(vt::complete(22)), resource_limit_error);
}

TEST_CASE("uvi_ml matches vi_exact on random graphs") {
  MlStats st;
  for (int seed = 0; seed < 20; ++seed) {
    Graph g = vt::random_graph(9 + seed % 4, seed % 2 == 0 ? 0.2 : 0.35, 1300 + seed);
    Solution fast = uvi_ml(g, &st);
    Solution slow = vi_exact(g, ProblemMode::uvi());
    CHECK(fast.total == slow.total);
    Solution replay = evaluate(g, fast.separator, ProblemMode::uvi());
    CHECK(replay.total == fast.total);
    CHECK(replay.max_component_cost == fast.max_component_cost);
  }
  CHECK(st.pipelines >= 20);
  CHECK(st.guesses >= st.pipelines);
}

TEST_CASE("rotate_on_cycle shifts separator vertices to their successors") {
  std::vector<Vertex> c4_cycle{0, 1, 2, 3};
  Graph c4 = vt::cycle(4);
  CHECK(rotate_on_cycle(c4, {0}, c4_cycle) == std::vector<Vertex>{1});
  CHECK(max_component_size(c4, {1}) == max_component_size(c4, {0}));

  Graph c6 = vt::cycle(6);
  std::vector<Vertex> c6_cycle{0, 1, 2, 3, 4, 5};
  CHECK(rotate_on_cycle(c6, {0, 3}, c6_cycle) == std::vector<Vertex>{1, 4});
  CHECK(max_component_size(c6, {1, 4}) == 2);

  // Off-cycle separator vertices ride along untouched.
  Graph sq = pendant_square();
  auto shifted = rotate_on_cycle(sq, {1, 4}, {0, 1, 2, 3});
  CHECK(shifted == std::vector<Vertex>{2, 4});
}

TEST_CASE("rotate_on_cycle rejects malformed input") {
  Graph c4 = vt::cycle(4);
  // Too short, not closed, repeated, or simply not a cycle of g.
  CHECK_THROWS_AS((void)rotate_on_cycle(c4, {0}, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS((void)rotate_on_cycle(c4, {0}, {0, 2, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS((void)rotate_on_cycle(c4, {0}, {0, 1, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS((void)rotate_on_cycle(c4, {0}, {0, 1, 2, 7}), std::invalid_argument);
  // Separator disjoint from the cycle.
  Graph sq = pendant_square();
  CHECK_THROWS_AS((void)rotate_on_cycle(sq, {4}, {0, 1, 2, 3}), std::invalid_argument);
  // Separator already sits on the cycle's degree-3 vertex.
  CHECK_THROWS_AS((void)rotate_on_cycle(sq, {0}, {0, 1, 2, 3}), std::invalid_argument);
}

TEST_CASE("iterated rotation walks a separator vertex onto the degree-3 vertex") {
  Graph g = pendant_square();
  std::vector<Vertex> cycle{0, 1, 2, 3};
  std::vector<Vertex> s{1};
  int64_t worst = max_component_size(g, s);
  std::set<Vertex> x_set{0};
  int steps = 0;
  while (true) {
    bool meets_x = false;
    for (Vertex v : s)
      if (x_set.count(v) && std::count(cycle.begin(), cycle.end(), v)) meets_x = true;
    if (meets_x) break;
    s = rotate_on_cycle(g, s, cycle);
    REQUIRE(s.size() == 1);
    int64_t now = max_component_size(g, s);
    CHECK(now <= worst);
    worst = now;
    REQUIRE(++steps <= 4);
  }
  CHECK(s == std::vector<Vertex>{0});
}

TEST_CASE("find_violating_cycle basics") {
  CHECK_FALSE(find_violating_cycle(vt::path(8), {2, 5}).has_value());
  // A bare cycle has no degree-3 vertices, hence nothing to rotate toward.
  CHECK_FALSE(find_violating_cycle(vt::cycle(9), {0, 3, 6}).has_value());

  Graph g = pendant_square();
  auto cyc = find_violating_cycle(g, {2});
  REQUIRE(cyc.has_value());
  CHECK(cyc->size() >= 3);
  CHECK(std::count(cyc->begin(), cyc->end(), 2) == 1);
  CHECK(std::count(cyc->begin(), cyc->end(), 0) == 1);
  for (size_t i = 0; i < cyc->size(); ++i)
    CHECK(g.has_edge((*cyc)[i], (*cyc)[(i + 1) % cyc->size()]));
  // The reported cycle is immediately usable for a rotation step.
  auto next = rotate_on_cycle(g, {2}, *cyc);
  CHECK(next.size() == 1);
}

TEST_CASE("rotate_to_stable preserves size, never grows components, and settles") {
  int cyclic = 0;
  for (int seed = 0; seed < 25 && cyclic < 12; ++seed) {
    Graph g = vt::random_graph(10, 0.3, 2200 + seed);
    if (feedback_edge_number(g) == 0) continue;
    ++cyclic;
    Solution opt = vi_exact(g, ProblemMode::uvi());
    std::vector<Vertex> stable = rotate_to_stable(g, opt.separator);
    CHECK(stable.size() == opt.separator.size());
    CHECK(max_component_size(g, stable) <= opt.max_component_cost);
    CHECK(evaluate(g, stable, ProblemMode::uvi()).total == opt.total);
    CHECK(not_a_violating_cycle_left(g, stable));
  }
  CHECK(cyclic >= 12);
}
