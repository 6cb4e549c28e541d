#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fdelete/io.hpp"
#include "helpers.hpp"

using namespace fdelete;

TEST_CASE("gr round trip") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& g : all_graphs(n)) {
      Graph back = parse_gr(emit_gr(g));
      REQUIRE(back.n == g.n);
      REQUIRE(back.edges() == g.edges());
    }
  Graph r = testing::random_graph(40, 0.2, 7);
  CHECK(parse_gr(emit_gr(r)).edges() == r.edges());
}

TEST_CASE("gr parsing details") {
  Graph g = parse_gr("c a comment\np tw 3 2\n1 2\nc mid comment\n2 3\n");
  CHECK(g.n == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));

  CHECK_THROWS_AS(parse_gr("1 2\n"), std::invalid_argument);            // edge before header
  CHECK_THROWS_AS(parse_gr("p tw 2 1\n1 3\n"), std::invalid_argument);  // out of range
  CHECK_THROWS_AS(parse_gr("p tw 2 2\n1 2\n"), std::invalid_argument);  // count mismatch
  CHECK_THROWS_AS(parse_gr("p tw 2 0\np tw 2 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_gr(""), std::invalid_argument);
}

TEST_CASE("td round trip") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = testing::random_graph(9, 0.3, 600 + seed);
    TreeDecomposition td = heuristic_td(g);
    TreeDecomposition back = parse_td(emit_td(td, g.n));
    REQUIRE(back.bags == td.bags);
    REQUIRE(back.tree_edges == td.tree_edges);
    REQUIRE(validate_td(g, back).ok);
  }
}

TEST_CASE("td parsing details") {
  auto td = parse_td("c hi\ns td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n");
  CHECK(td.bags.size() == 2);
  CHECK(td.bags[0] == std::vector<int>{0, 1});
  CHECK(td.tree_edges.size() == 1);

  CHECK_THROWS_AS(parse_td("b 1 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_td("s td 1 1 2\nb 2 1\n"), std::invalid_argument);  // bad id
  CHECK_THROWS_AS(parse_td("s td 1 1 2\nb 1 5\n"), std::invalid_argument);  // vertex range
  CHECK_THROWS_AS(parse_td("s td 2 1 2\nb 1 1\n"), std::invalid_argument);  // missing bag
}

TEST_CASE("family json") {
  nlohmann::json j = {{"name", "two"},
                      {"members", {graph_to_json(path_graph(3)), graph_to_json(cycle_graph(4))}}};
  Family f = family_from_json(j);
  CHECK(f.name == "two");
  CHECK(f.members.size() == 2);
  CHECK(is_isomorphic(f.members[1], cycle_graph(4)));
  // round trip
  Family f2 = family_from_json(family_to_json(f));
  CHECK(f2.members[0].edges() == f.members[0].edges());

  CHECK_THROWS_AS(family_from_json(nlohmann::json{{"name", "x"}}), std::invalid_argument);
  nlohmann::json disconnected = {{"name", "bad"}, {"members", {graph_to_json(Graph(2))}}};
  CHECK_THROWS(family_from_json(disconnected));
}

TEST_CASE("registry json") {
  auto inst = choice_gadget({"custom", {path_graph(6)}}, 2);
  auto j = registry_to_json(inst, "none");
  CHECK(j["schema"] == 1);
  CHECK(j["budget"] == 4);
  CHECK(j["gadgets"].contains("choice"));
  CHECK(j["gadgets"].contains("xs"));
}
