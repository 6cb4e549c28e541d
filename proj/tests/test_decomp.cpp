#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fdelete/decomp.hpp"
#include "helpers.hpp"

using namespace fdelete;

TEST_CASE("validate_td basics") {
  Graph k3 = complete_graph(3);
  TreeDecomposition td;
  td.bags = {{0, 1, 2}};
  CHECK(validate_td(k3, td).ok);
  CHECK(td.width() == 2);

  TreeDecomposition bad;
  bad.bags = {{0, 1}, {1, 2}};
  bad.tree_edges = {{0, 1}};
  auto d = validate_td(k3, bad);
  CHECK(!d.ok);
  CHECK(d.message.find("edge") != std::string::npos);

  Graph p4 = path_graph(4);
  TreeDecomposition tp;
  tp.bags = {{0, 1}, {1, 2}, {2, 3}};
  tp.tree_edges = {{0, 1}, {1, 2}};
  CHECK(validate_td(p4, tp).ok);
  CHECK(tp.width() == 1);

  // broken connectivity: vertex 1 in bags 0 and 2 but not 1
  TreeDecomposition tc;
  tc.bags = {{0, 1}, {0, 2}, {1, 2}};
  tc.tree_edges = {{0, 1}, {1, 2}};
  CHECK(!validate_td(k3, tc).ok);
}

TEST_CASE("heuristic_td expected widths") {
  // tree input -> width 1
  Graph tree(7);
  tree.add_edge(0, 1);
  tree.add_edge(0, 2);
  tree.add_edge(1, 3);
  tree.add_edge(1, 4);
  tree.add_edge(2, 5);
  tree.add_edge(2, 6);
  auto td = heuristic_td(tree);
  CHECK(validate_td(tree, td).ok);
  CHECK(td.width() == 1);

  CHECK(heuristic_td(complete_graph(5)).width() == 4);
  CHECK(heuristic_td(cycle_graph(4)).width() == 2);
  CHECK(validate_td(complete_graph(5), heuristic_td(complete_graph(5))).ok);
}

TEST_CASE("heuristic_td valid and >= exact treewidth on random graphs") {
  for (int n = 4; n <= 12; n += 2) {
    for (uint64_t seed = 0; seed < 6; ++seed) {
      Graph g = testing::random_graph(n, 0.35, 1000 * n + seed);
      auto td = heuristic_td(g);
      REQUIRE(validate_td(g, td).ok);
      REQUIRE(td.width() >= testing::exact_treewidth(g));
    }
  }
}

TEST_CASE("make_nice structure") {
  Graph k3 = complete_graph(3);
  TreeDecomposition td;
  td.bags = {{0, 1, 2}};
  auto ntd = make_nice(td, k3);
  // chain: leaf, 3 introduces, 3 forgets (root)
  CHECK(ntd.nodes.size() == 7);
  CHECK(ntd.width() == td.width());
  CHECK(ntd.nodes[ntd.root].bag.empty());
  int leaves = 0, joins = 0, intro = 0, forget = 0;
  size_t attributed = 0;
  for (const auto& nd : ntd.nodes) {
    if (nd.kind == NiceNode::Leaf) {
      ++leaves;
      CHECK(nd.bag.empty());
    }
    if (nd.kind == NiceNode::Join) ++joins;
    if (nd.kind == NiceNode::Introduce) ++intro;
    if (nd.kind == NiceNode::Forget) ++forget;
    attributed += nd.attributed.size();
  }
  CHECK(leaves == 1);
  CHECK(joins == 0);
  CHECK(intro == 3);
  CHECK(forget == 3);
  CHECK(attributed == k3.edge_count());
  CHECK(validate_td(k3, nice_to_td(ntd)).ok);

  // empty graph
  auto ntd0 = make_nice(heuristic_td(Graph(0)), Graph(0));
  CHECK(ntd0.nodes.size() == 1);
  CHECK(ntd0.root == 0);

  // path-shaped td of P4: width 1, no joins
  Graph p4 = path_graph(4);
  TreeDecomposition tp;
  tp.bags = {{0, 1}, {1, 2}, {2, 3}};
  tp.tree_edges = {{0, 1}, {1, 2}};
  auto np = make_nice(tp, p4);
  CHECK(np.width() == 1);
  for (const auto& nd : np.nodes) CHECK(nd.kind != NiceNode::Join);
  CHECK(validate_td(p4, nice_to_td(np)).ok);
}

TEST_CASE("make_nice attribution invariants on random graphs") {
  for (uint64_t seed = 0; seed < 8; ++seed) {
    Graph g = testing::random_graph(9, 0.3, 77 + seed);
    auto td = heuristic_td(g);
    auto ntd = make_nice(td, g);
    CHECK(ntd.width() == td.width());
    CHECK(validate_td(g, nice_to_td(ntd)).ok);
    size_t attributed = 0;
    for (const auto& nd : ntd.nodes) {
      attributed += nd.attributed.size();
      if (nd.kind == NiceNode::Introduce) {
        // introduced vertex in bag, child bag = bag minus v
        REQUIRE(nd.child >= 0);
        auto cb = ntd.nodes[nd.child].bag;
        REQUIRE(std::binary_search(nd.bag.begin(), nd.bag.end(), nd.v));
        REQUIRE(cb.size() + 1 == nd.bag.size());
        for (auto [u, w] : nd.attributed) {
          REQUIRE((u == nd.v || w == nd.v));
          REQUIRE(std::binary_search(nd.bag.begin(), nd.bag.end(), u));
          REQUIRE(std::binary_search(nd.bag.begin(), nd.bag.end(), w));
        }
      } else {
        REQUIRE(nd.attributed.empty());
      }
      if (nd.kind == NiceNode::Join) {
        REQUIRE(nd.child2 >= 0);
        REQUIRE(ntd.nodes[nd.child].bag == nd.bag);
        REQUIRE(ntd.nodes[nd.child2].bag == nd.bag);
      }
    }
    CHECK(attributed == (size_t)g.edge_count());
    // node count O(width * n)
    CHECK((int)ntd.nodes.size() <= 4 * (td.width() + 2) * (g.n + 1));
  }
}

TEST_CASE("pinned vertex nice decomposition") {
  Graph g = testing::random_graph(7, 0.4, 5);
  Graph g0 = g;
  int v0 = g0.add_vertex();
  for (int v = 0; v < g.n; ++v) g0.add_edge(v0, v);
  auto td = heuristic_td(g);
  auto ntd = make_nice(td, g0, v0);
  CHECK(validate_td(g0, nice_to_td(ntd)).ok);
  for (int i = 0; i < (int)ntd.nodes.size(); ++i) {
    const auto& nd = ntd.nodes[i];
    // every non-empty bag contains v0
    if (!nd.bag.empty()) CHECK(std::binary_search(nd.bag.begin(), nd.bag.end(), v0));
    // v0 introduced directly above a leaf
    if (nd.kind == NiceNode::Introduce && nd.v == v0)
      CHECK(ntd.nodes[nd.child].kind == NiceNode::Leaf);
    if (nd.kind == NiceNode::Forget && nd.v == v0) CHECK(i == ntd.root);
  }
}

namespace {
void check_bd(const Graph& g, const TreeDecomposition& td) {
  auto bd = td_to_branch(td, g);
  // leaves: one per graph edge + boundary marker; internal degree 3
  int edge_leaves = 0, marker = 0;
  for (size_t x = 0; x < bd.nodes.size(); ++x) {
    const auto& nd = bd.nodes[x];
    if (nd.nbrs.empty()) continue;  // spliced out
    if (nd.leaf_edge >= 0) {
      ++edge_leaves;
      REQUIRE(nd.nbrs.size() == 1);
    } else if (nd.leaf_edge == -1) {
      ++marker;
      REQUIRE(nd.nbrs.size() == 1);
    } else {
      REQUIRE(nd.nbrs.size() == 3);
    }
  }
  REQUIRE(edge_leaves == (int)g.edge_count());
  REQUIRE(marker == 1);
  // stored mids match recomputation, bound holds, root edge mid empty
  auto re = mid_sets(bd, g);
  for (size_t x = 0; x < bd.nodes.size(); ++x) {
    if ((int)x == bd.root_leaf || bd.nodes[x].nbrs.empty()) continue;
    REQUIRE(bd.mids[x] == re[x]);
    REQUIRE((int)bd.mids[x].size() <= td.width() + 2);
    if (bd.parent[x] == bd.root_leaf) REQUIRE(bd.mids[x].empty());
  }
}
}  // namespace

TEST_CASE("td_to_branch on named graphs") {
  {
    Graph g(2);
    g.add_edge(0, 1);
    check_bd(g, heuristic_td(g));
  }
  check_bd(complete_graph(3), heuristic_td(complete_graph(3)));
  check_bd(star_graph(3), heuristic_td(star_graph(3)));
  {  // star: every internal mid set contains the center (or is the root edge)
    Graph s = star_graph(3);
    auto bd = td_to_branch(heuristic_td(s), s);
    for (size_t x = 0; x < bd.nodes.size(); ++x) {
      if ((int)x == bd.root_leaf || bd.nodes[x].nbrs.empty()) continue;
      if (!bd.mids[x].empty())
        CHECK(std::binary_search(bd.mids[x].begin(), bd.mids[x].end(), 0));
    }
  }
  CHECK_THROWS_AS(td_to_branch(heuristic_td(Graph(3)), Graph(3)), std::invalid_argument);
}

TEST_CASE("td_to_branch on random graphs") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = testing::random_graph(8, 0.35, 31 * seed + 1);
    if (g.edge_count() == 0) continue;
    check_bd(g, heuristic_td(g));
  }
}
