#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fdelete/pattern.hpp"

using namespace fdelete;

namespace {

// Validate a returned topological-minor model against the definitions.
bool model_valid(const Graph& h, const Graph& g, const TmModel& m) {
  if ((int)m.branch.size() != h.n) return false;
  std::vector<char> is_branch(g.n, 0);
  for (int v : m.branch) {
    if (!g.valid_vertex(v) || is_branch[v]) return false;
    is_branch[v] = 1;
  }
  auto hedges = h.edges();
  if (m.paths.size() != hedges.size()) return false;
  std::vector<char> internal_used(g.n, 0);
  for (size_t i = 0; i < hedges.size(); ++i) {
    const auto& p = m.paths[i];
    auto [x, y] = hedges[i];
    if (p.size() < 2) return false;
    if (!((p.front() == m.branch[x] && p.back() == m.branch[y]) ||
          (p.front() == m.branch[y] && p.back() == m.branch[x])))
      return false;
    for (size_t j = 0; j + 1 < p.size(); ++j)
      if (!g.has_edge(p[j], p[j + 1])) return false;
    for (size_t j = 1; j + 1 < p.size(); ++j) {
      int v = p[j];
      if (is_branch[v] || internal_used[v]) return false;
      internal_used[v] = 1;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("shape predicates") {
  CHECK(is_path_shape(path_graph(1)));
  CHECK(is_path_shape(path_graph(5)));
  CHECK(!is_path_shape(cycle_graph(4)));
  CHECK(!is_path_shape(star_graph(3)));
  CHECK(is_cycle_shape(cycle_graph(3)));
  CHECK(is_cycle_shape(cycle_graph(7)));
  CHECK(!is_cycle_shape(path_graph(3)));
  CHECK(is_two_connected(complete_graph(4)));
  CHECK(is_two_connected(cycle_graph(5)));
  CHECK(!is_two_connected(path_graph(4)));
}

TEST_CASE("generic topological minor: basics") {
  CHECK(is_topological_minor_generic(path_graph(3), path_graph(5)));
  CHECK(is_topological_minor_generic(cycle_graph(4), cycle_graph(6)));   // subdivision
  CHECK(!is_topological_minor_generic(cycle_graph(4), cycle_graph(3)));  // no shrink
  CHECK(!is_topological_minor_generic(complete_graph(4), cycle_graph(9)));
  CHECK(is_topological_minor_generic(complete_graph(4), complete_graph(5)));
  // K4 subdivision: replace one K4 edge by a 2-edge path
  Graph sub(5);
  sub.add_edge(0, 1);
  sub.add_edge(0, 2);
  sub.add_edge(0, 3);
  sub.add_edge(1, 2);
  sub.add_edge(1, 3);
  sub.add_edge(2, 4);
  sub.add_edge(4, 3);
  CHECK(is_topological_minor_generic(complete_graph(4), sub));
  // K5 is a minor of the Petersen graph but not relevant here; instead check
  // that K_{1,4} is not a tm of any subcubic graph
  CHECK(!is_topological_minor_generic(star_graph(4), complete_graph(4)));
}

TEST_CASE("dispatcher agrees with generic on all small hosts") {
  std::vector<Graph> patterns = {path_graph(3),     path_graph(4),  path_graph(6),
                                 cycle_graph(3),    cycle_graph(4), cycle_graph(5),
                                 complete_graph(4), diamond_graph(), star_graph(3)};
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : all_graphs(n)) {
      for (const auto& h : patterns) {
        bool fast = is_topological_minor(h, g);
        bool slow = is_topological_minor_generic(h, g);
        CAPTURE(n);
        REQUIRE(fast == slow);
        if (fast) {
          TmModel m;
          REQUIRE(is_topological_minor(h, g, &m));
          REQUIRE(model_valid(h, g, m));
        }
      }
    }
  }
}

TEST_CASE("path and cycle helpers") {
  CHECK(has_path_subgraph(path_graph(6), 6));
  CHECK(!has_path_subgraph(path_graph(6), 7));
  CHECK(has_path_subgraph(star_graph(3), 3));
  CHECK(!has_path_subgraph(star_graph(3), 4));
  CHECK(has_cycle_at_least(cycle_graph(7), 5));
  CHECK(!has_cycle_at_least(cycle_graph(4), 5));
  std::vector<int> cyc;
  CHECK(has_cycle_at_least(complete_graph(5), 4, &cyc));
  CHECK((int)cyc.size() >= 4);
}

TEST_CASE("k4 minor via series-parallel reduction") {
  CHECK(has_k4_minor(complete_graph(4)));
  CHECK(has_k4_minor(complete_graph(5)));
  CHECK(!has_k4_minor(cycle_graph(8)));
  CHECK(!has_k4_minor(complete_bipartite(2, 5)));
  CHECK(has_k4_minor(complete_bipartite(3, 3)));
  // wheel on 5+1 vertices has K4 minor
  Graph wheel = cycle_graph(5);
  int hub = wheel.add_vertex();
  for (int i = 0; i < 5; ++i) wheel.add_edge(hub, i);
  CHECK(has_k4_minor(wheel));
  // agree with generic tm test (K4 subcubic: tm = minor) on all 6-vertex graphs
  for (const auto& g : all_graphs(6))
    REQUIRE(has_k4_minor(g) == is_topological_minor_generic(complete_graph(4), g));
}

TEST_CASE("minor containment") {
  CHECK(is_minor(complete_graph(4), complete_graph(4)));
  CHECK(!is_minor(complete_graph(4), cycle_graph(6)));
  CHECK(is_minor(cycle_graph(3), cycle_graph(6)));   // contract cycle
  CHECK(!is_minor(cycle_graph(6), cycle_graph(3)));  // can't grow
  CHECK(is_minor(star_graph(4), complete_graph(5)));
  // K4 is a minor of C5 plus a chord structure? no: C5+one chord is series-parallel
  Graph g = cycle_graph(5);
  g.add_edge(0, 2);
  CHECK(!is_minor(complete_graph(4), g));
  // minor model validity
  MinorModel mm;
  REQUIRE(is_minor(cycle_graph(3), cycle_graph(6), &mm));
  REQUIRE(mm.branch_sets.size() == 3);
  std::vector<char> seen(6, 0);
  for (auto& bs : mm.branch_sets) {
    REQUIRE(!bs.empty());
    Graph sub = induced_subgraph(cycle_graph(6), bs);
    REQUIRE(component_count(sub) == 1);
    for (int v : bs) {
      REQUIRE(!seen[v]);
      seen[v] = 1;
    }
  }
  // minor vs tm: K_{1,4} is a minor but not a tm of the 6-vertex double-star
  Graph ds(6);
  ds.add_edge(0, 1);
  ds.add_edge(0, 2);
  ds.add_edge(0, 3);
  ds.add_edge(3, 4);
  ds.add_edge(3, 5);
  CHECK(is_minor(star_graph(4), ds));
  CHECK(!is_topological_minor(star_graph(4), ds));
}

TEST_CASE("tpm of K_{1,4} is the star plus the spider tree") {
  auto t = tpm(star_graph(4));
  REQUIRE(t.size() == 2);
  bool has_star = false, has_tree = false;
  for (const auto& g : t) {
    if (is_isomorphic(g, star_graph(4))) has_star = true;
    // two adjacent centers, each with two leaves
    Graph sp(6);
    sp.add_edge(0, 1);
    sp.add_edge(0, 2);
    sp.add_edge(0, 3);
    sp.add_edge(3, 4);
    sp.add_edge(3, 5);
    if (is_isomorphic(g, sp)) has_tree = true;
  }
  CHECK(has_star);
  CHECK(has_tree);
}

TEST_CASE("tpm of subcubic graphs is the graph itself") {
  for (const Graph& h : {complete_graph(4), cycle_graph(5), path_graph(4)}) {
    auto t = tpm(h);
    REQUIRE(t.size() == 1);
    CHECK(is_isomorphic(t[0], h));
  }
}

TEST_CASE("tpm correctness: minor containment equals tm of tpm closure (n<=6)") {
  for (const Graph& h : {star_graph(4), complete_graph(4), cycle_graph(4)}) {
    auto t = tpm(h);
    for (const auto& g : all_graphs(6)) {
      bool viaminor = is_minor(h, g);
      bool viatm = false;
      for (const auto& m : t)
        if (is_topological_minor(m, g)) viatm = true;
      REQUIRE(viaminor == viatm);
    }
  }
}

TEST_CASE("structural characterizations on tiny graphs") {
  CHECK(is_p3_free(Graph(3)));
  CHECK(is_p3_free(path_graph(2)));
  CHECK(!is_p3_free(path_graph(3)));
  CHECK(is_p4_free(star_graph(5)));
  CHECK(is_p4_free(cycle_graph(3)));
  CHECK(!is_p4_free(path_graph(4)));
  CHECK(!is_p4_free(cycle_graph(4)));
  CHECK(c4_condition(cycle_graph(3)));
  CHECK(!c4_condition(cycle_graph(4)));
  CHECK(!c4_condition(complete_graph(4)));
  CHECK(c4_condition(path_graph(5)));
}

TEST_CASE("antichain pruning") {
  auto pruned = tm_antichain({path_graph(3), path_graph(5), cycle_graph(4)});
  // P5 contains P3 as tm -> dropped; C4 contains P3 -> dropped
  REQUIRE(pruned.size() == 1);
  CHECK(is_isomorphic(pruned[0], path_graph(3)));
}
