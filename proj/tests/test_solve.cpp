#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fdelete/solve.hpp"
#include "helpers.hpp"

using namespace fdelete;

TEST_CASE("engine dispatch picks the bespoke dp for named families") {
  Graph g = cycle_graph(4);
  CHECK(solve(g, family_p3(), Mode::tm, Engine::auto_pick).engine == "dp-p3");
  CHECK(solve(g, family_p4(), Mode::tm, Engine::auto_pick).engine == "dp-p4");
  CHECK(solve(g, family_c4(), Mode::tm, Engine::auto_pick).engine == "dp-c4");
  CHECK(solve(g, family_c4(), Mode::minor, Engine::auto_pick).engine == "folio");
  Family custom{"custom", {complete_graph(3)}};
  CHECK(solve(g, custom, Mode::tm, Engine::auto_pick).engine == "folio");
  CHECK_THROWS_AS(solve(g, custom, Mode::tm, Engine::dp), std::invalid_argument);
}

TEST_CASE("all engines agree") {
  for (uint64_t seed = 0; seed < 8; ++seed) {
    Graph g = testing::random_graph(7, 0.35, 3200 + seed);
    for (const auto& f : {family_p3(), family_p4(), family_c4()}) {
      int want = solve(g, f, Mode::tm, Engine::oracle).solution.optimum;
      for (Engine e : {Engine::auto_pick, Engine::dp, Engine::folio}) {
        auto rep = solve(g, f, Mode::tm, e);
        CAPTURE(seed);
        CAPTURE(f.name);
        REQUIRE(rep.solution.optimum == want);
        REQUIRE(verify_solution(g, f, Mode::tm, rep.solution.witness));
      }
    }
    // minor mode via folio vs oracle
    Family k4{"custom", {complete_graph(4)}};
    CHECK(solve(g, k4, Mode::minor, Engine::folio).solution.optimum ==
          solve(g, k4, Mode::minor, Engine::oracle).solution.optimum);
  }
}

TEST_CASE("explicit decomposition is honored") {
  Graph g = testing::random_graph(8, 0.3, 99);
  auto td = heuristic_td(g);
  auto rep = solve(g, family_c4(), Mode::tm, Engine::auto_pick, td);
  CHECK(rep.solution.optimum == solve(g, family_c4(), Mode::tm, Engine::oracle).solution.optimum);
}

TEST_CASE("edgeless and empty graphs") {
  CHECK(solve(Graph(0), family_p3(), Mode::tm, Engine::auto_pick).solution.optimum == 0);
  CHECK(solve(Graph(5), family_p3(), Mode::tm, Engine::folio).solution.optimum == 0);
  Family k4{"custom", {complete_graph(4)}};
  CHECK(solve(Graph(5), k4, Mode::minor, Engine::folio).solution.optimum == 0);
}
