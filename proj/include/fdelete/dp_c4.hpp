// Treewidth DP for {C4}-deletion (topological-minor mode) using the
// rank-based connectivity machinery from wpart.hpp.
//
// The graph is augmented with a universal vertex v0 whose edges are
// selectable; a partial solution is a pair (Z, Z0) of kept vertices and
// chosen v0-edges. A kept graph is C4-tm-free iff it is diamond-free and
// n - m + c3 = cc, so the DP tracks, per bag: which bag vertices are kept
// (s), which v0-edges are chosen (s0), which kept bag-level edges lie on a
// triangle (r), and the counters i = |Z|, j = edges, l = triangles.
// Entries store families of weighted partitions (weights 0) of the live
// bag recording connectivity, shrunk by reduce() after every node. Every
// node sees the full induced subgraph on the vertices at or below it, so
// a join's two children overlap exactly in the bag-level graph H.
#pragma once

#include <cstdlib>
#include <unordered_map>

#include "fdelete/decomp.hpp"
#include "fdelete/dp_paths.hpp"
#include "fdelete/errors.hpp"
#include "fdelete/graph.hpp"
#include "fdelete/pattern.hpp"
#include "fdelete/wpart.hpp"

namespace fdelete {

namespace detail {

struct C4Key {
  uint32_t s = 0;   // live bag positions
  uint32_t s0 = 0;  // positions whose v0-edge is chosen (subset of s)
  uint64_t r = 0;   // triangle flag per bag-level edge, in edge-list order
  int16_t i = 0, j = 0, l = 0;
  bool operator==(const C4Key& o) const {
    return s == o.s && s0 == o.s0 && r == o.r && i == o.i && j == o.j && l == o.l;
  }
};

struct C4KeyHash {
  size_t operator()(const C4Key& k) const {
    uint64_t h = k.r * 0x9e3779b97f4a7c15ULL;
    h ^= ((uint64_t)k.s << 32 | k.s0) + 0x517cc1b727220a95ULL + (h << 6) + (h >> 2);
    h ^= ((uint64_t)(uint16_t)k.i << 32 | (uint64_t)(uint16_t)k.j << 16 |
          (uint16_t)k.l) +
         0x2545f4914f6cdd1dULL + (h << 6) + (h >> 2);
    return (size_t)h;
  }
};

// Bag-level kept graph H for a (s, s0) choice: live positions, adjacency
// over live ranks, ordered edge list, triangle data, and the C4 condition.
struct C4BagGraph {
  bool ok = false;  // H is diamond-free and satisfies n - m + c3 = cc
  std::vector<int> live;              // bag positions, ascending
  std::vector<int> rank;              // bag position -> live rank (-1 if dead)
  std::vector<uint32_t> adj;          // per live rank
  std::vector<std::pair<int, int>> edges;  // rank pairs a < b, lexicographic
  uint64_t tri_edges = 0;             // edges lying on a triangle of H
  int c3 = 0;
};

struct C4Solver {
  const Graph& g0;  // G plus universal v0 (= vertex g0.n - 1)
  const NiceTreeDecomposition& ntd;
  int v0;
  std::vector<std::unordered_map<uint64_t, C4BagGraph>> hcache;

  using Table = std::unordered_map<C4Key, WeightedPartitions, C4KeyHash>;

  C4Solver(const Graph& g0_, const NiceTreeDecomposition& ntd_)
      : g0(g0_), ntd(ntd_), v0(g0_.n - 1) {
    validate_for_dp(g0, ntd);
    int cap = 12;
    if (const char* env = std::getenv("FDELETE_MAX_WIDTH")) cap = std::atoi(env) + 2;
    for (const auto& nd : ntd.nodes)
      if ((int)nd.bag.size() > cap)
        throw CapabilityError("dp: decomposition too wide for the c4 solver");
    hcache.resize(ntd.nodes.size());
  }

  const C4BagGraph& bag_graph(size_t node, uint32_t s, uint32_t s0) {
    uint64_t ck = (uint64_t)s << 32 | s0;
    auto it = hcache[node].find(ck);
    if (it != hcache[node].end()) return it->second;
    const auto& bag = ntd.nodes[node].bag;
    C4BagGraph h;
    h.rank.assign(bag.size(), -1);
    for (size_t p = 0; p < bag.size(); ++p)
      if (s >> p & 1) {
        h.rank[p] = (int)h.live.size();
        h.live.push_back((int)p);
      }
    int nl = (int)h.live.size();
    h.adj.assign(nl, 0);
    Graph hg(nl);
    for (int a = 0; a < nl; ++a)
      for (int b = a + 1; b < nl; ++b) {
        int u = bag[h.live[a]], w = bag[h.live[b]];
        bool edge = (u == v0 || w == v0)
                        ? (s0 >> (u == v0 ? h.live[b] : h.live[a]) & 1) != 0
                        : g0.has_edge(u, w);
        if (!edge) continue;
        h.adj[a] |= 1u << b;
        h.adj[b] |= 1u << a;
        h.edges.emplace_back(a, b);
        hg.add_edge(a, b);
      }
    h.c3 = count_triangles(hg);
    for (size_t e = 0; e < h.edges.size(); ++e) {
      auto [a, b] = h.edges[e];
      if (h.adj[a] & h.adj[b]) h.tri_edges |= (uint64_t)1 << e;
    }
    h.ok = c4_condition(hg);
    return hcache[node].emplace(ck, std::move(h)).first->second;
  }

  // Counter sanity: along any globally valid history the partial kept graph
  // is C4-tm-free, so m <= (3/2)(n - 1) holds throughout.
  bool counters_ok(int i, int j, int l) const {
    if (i > g0.n || j < 0 || l < 0) return false;
    if (i == 0) return j == 0;
    return j <= 3 * (i - 1) / 2;
  }

  static uint32_t expand_mask(uint32_t m, int pos) {
    uint32_t lo = m & (((uint32_t)1 << pos) - 1);
    return lo | ((m & ~(((uint32_t)1 << pos) - 1)) << 1);
  }
  static uint32_t contract_mask(uint32_t m, int pos) {
    uint32_t lo = m & (((uint32_t)1 << pos) - 1);
    return lo | ((m >> 1) & ~(((uint32_t)1 << pos) - 1));
  }

  void add(Table& t, const C4Key& k, const WeightedPartitions& a) {
    if (a.empty()) return;
    auto [it, fresh] = t.emplace(k, a);
    if (!fresh) it->second = punion(it->second, a);
  }

  Table introduce(size_t node, const Table& child) {
    const auto& nd = ntd.nodes[node];
    int pv = bag_pos(nd.bag, nd.v);
    Table out;
    if (nd.v == v0) {
      // v0 sits directly above a leaf: the only child entry is the empty one
      for (const auto& [ck, a] : child) {
        if (ck.s != 0) throw std::logic_error("c4: non-empty entry below v0");
        C4Key k;
        k.s = (uint32_t)1 << pv;
        k.i = 1;
        add(out, k, ins({0}, a));
      }
      return out;
    }
    for (const auto& [ck, a] : child) {
      // keep v out of the solution: positions shift, graph unchanged
      C4Key dead;
      dead.s = expand_mask(ck.s, pv);
      dead.s0 = expand_mask(ck.s0, pv);
      dead.r = ck.r;
      dead.i = ck.i;
      dead.j = ck.j;
      dead.l = ck.l;
      add(out, dead, a);
      // keep v, with or without its v0-edge
      for (int s0v = 0; s0v <= 1; ++s0v) {
        C4Key k;
        k.s = dead.s | (uint32_t)1 << pv;
        k.s0 = dead.s0 | (uint32_t)(s0v << pv);
        const C4BagGraph& h = bag_graph(node, k.s, k.s0);
        if (!h.ok) continue;
        int rv = h.rank[pv];
        uint32_t nb = h.adj[rv];
        int deg = __builtin_popcount(nb);
        int d3 = 0;
        for (int x = 0; x < (int)h.live.size(); ++x)
          if (nb >> x & 1) d3 += __builtin_popcount(nb & h.adj[x]);
        d3 /= 2;
        k.i = (int16_t)(ck.i + 1);
        k.j = (int16_t)(ck.j + deg);
        k.l = (int16_t)(ck.l + d3);
        if (!counters_ok(k.i, k.j, k.l)) continue;
        // map child triangle flags onto the new edge list; edges between two
        // neighbors of v gain a triangle, and a flag already set there means
        // a second triangle through the same edge: a diamond
        uint64_t r = 0;
        bool dead_entry = false;
        size_t kk = 0;  // index over child edges (= edges avoiding rv)
        for (size_t e = 0; e < h.edges.size() && !dead_entry; ++e) {
          auto [x, y] = h.edges[e];
          if (x == rv || y == rv) {
            if (h.tri_edges >> e & 1) r |= (uint64_t)1 << e;
            continue;
          }
          int bit = (int)(ck.r >> kk & 1);
          ++kk;
          if ((nb >> x & 1) && (nb >> y & 1)) {
            if (bit) dead_entry = true;  // hidden diamond
            bit = 1;
          }
          if (bit) r |= (uint64_t)1 << e;
        }
        if (dead_entry) continue;
        k.r = r;
        std::vector<int> closed{rv};
        for (int x = 0; x < (int)h.live.size(); ++x)
          if (nb >> x & 1) closed.push_back(x);
        std::sort(closed.begin(), closed.end());
        add(out, k, glue(closed, ins({rv}, a)));
      }
    }
    return out;
  }

  Table forget(size_t node, const Table& child) {
    const auto& nd = ntd.nodes[node];
    const auto& cbag = ntd.nodes[nd.child].bag;
    int cv = bag_pos(cbag, nd.v);
    Table out;
    for (const auto& [ck, a] : child) {
      C4Key k;
      k.i = ck.i;
      k.j = ck.j;
      k.l = ck.l;
      if (!(ck.s >> cv & 1)) {
        k.s = contract_mask(ck.s, cv);
        k.s0 = contract_mask(ck.s0, cv);
        k.r = ck.r;
        add(out, k, a);
        continue;
      }
      const C4BagGraph& h = bag_graph(nd.child, ck.s, ck.s0);
      int rv = h.rank[cv];
      k.s = contract_mask(ck.s, cv);
      k.s0 = contract_mask(ck.s0, cv);
      uint64_t r = 0;
      size_t kk = 0;
      for (size_t e = 0; e < h.edges.size(); ++e) {
        auto [x, y] = h.edges[e];
        if (x == rv || y == rv) continue;
        if (ck.r >> e & 1) r |= (uint64_t)1 << kk;
        ++kk;
      }
      k.r = r;
      WeightedPartitions a2;
      if (nd.v == v0) {
        // final forget: no live boundary remains, connectivity was settled
        for (const auto& [p, w] : a) a2.emplace_back(Partition{}, w);
        a2 = rmc(std::move(a2));
      } else {
        a2 = proj({rv}, a);
      }
      add(out, k, a2);
    }
    return out;
  }

  Table join(size_t node, const Table& left, const Table& right) {
    const auto& nd = ntd.nodes[node];
    int nbag = (int)nd.bag.size();
    // group right entries by the shared (s, s0) choice
    std::unordered_map<uint64_t, std::vector<const std::pair<const C4Key, WeightedPartitions>*>>
        by_shape;
    for (const auto& item : right)
      by_shape[(uint64_t)item.first.s << 32 | item.first.s0].push_back(&item);
    Table out;
    for (const auto& [k1, a1] : left) {
      auto it = by_shape.find((uint64_t)k1.s << 32 | k1.s0);
      if (it == by_shape.end()) continue;
      const C4BagGraph& h = bag_graph(node, k1.s, k1.s0);
      int nv = __builtin_popcount(k1.s);
      int ne = (int)h.edges.size();
      for (const auto* item : it->second) {
        const C4Key& k2 = item->first;
        // a triangle flag shared by both sides must come from a bag triangle,
        // otherwise two distinct triangles share an edge: a diamond
        if ((k1.r & k2.r) != h.tri_edges) continue;
        C4Key k;
        k.s = k1.s;
        k.s0 = k1.s0;
        k.r = k1.r | k2.r;
        k.i = (int16_t)(k1.i + k2.i - nv);
        k.j = (int16_t)(k1.j + k2.j - ne);
        k.l = (int16_t)(k1.l + k2.l - h.c3);
        if (!counters_ok(k.i, k.j, k.l)) continue;
        add(out, k, fdelete::join(a1, item->second));
      }
    }
    (void)nbag;
    return out;
  }

  void shrink(Table& t) {
    for (auto& [k, a] : t) {
      a = reduce(a);
      int u = __builtin_popcount(k.s);
      if ((int64_t)a.size() > (int64_t)1 << u)
        throw std::logic_error("c4: reduced family exceeds 2^|U|");
    }
  }

  int optimum() {
    std::vector<Table> tabs(ntd.nodes.size());
    for (size_t node = 0; node < ntd.nodes.size(); ++node) {
      const auto& nd = ntd.nodes[node];
      switch (nd.kind) {
        case NiceNode::Leaf: {
          C4Key k;
          tabs[node].emplace(k, WeightedPartitions{{Partition{}, 0}});
          break;
        }
        case NiceNode::Introduce:
          tabs[node] = introduce(node, tabs[nd.child]);
          tabs[nd.child] = Table();
          break;
        case NiceNode::Forget:
          tabs[node] = forget(node, tabs[nd.child]);
          tabs[nd.child] = Table();
          break;
        case NiceNode::Join:
          tabs[node] = join(node, tabs[nd.child], tabs[nd.child2]);
          tabs[nd.child] = Table();
          tabs[nd.child2] = Table();
          break;
      }
      shrink(tabs[node]);
      hcache[node].clear();
    }
    int best = -1;
    for (const auto& [k, a] : tabs[ntd.root]) {
      if (k.s != 0 || a.empty()) continue;
      if (k.l != 1 + k.j - k.i) continue;
      best = std::max(best, (int)k.i);
    }
    if (best < 0) throw std::logic_error("c4: no accepting root entry");
    return g0.n - best;
  }
};

inline int c4_optimum(const Graph& g, const TreeDecomposition& td) {
  Graph g0 = g;
  int v0 = g0.add_vertex();
  for (int v = 0; v < g.n; ++v) g0.add_edge(v0, v);
  auto ntd = make_nice(td, g0, v0);
  return C4Solver(g0, ntd).optimum();
}

}  // namespace detail

// {C4}-deletion over a tree decomposition of g. The witness is recovered by
// self-reduction: repeatedly find a vertex whose removal drops the optimum.
inline DpResult solve_c4(const Graph& g, const TreeDecomposition& td,
                         bool want_witness = true) {
  DpResult res;
  res.optimum = detail::c4_optimum(g, td);
  if (!want_witness) return res;
  Graph cur = g;
  std::vector<int> ids(g.n);
  for (int v = 0; v < g.n; ++v) ids[v] = v;
  int remaining = res.optimum;
  while (remaining > 0) {
    bool found = false;
    for (int v = 0; v < cur.n && !found; ++v) {
      std::vector<int> keep;
      for (int u = 0; u < cur.n; ++u)
        if (u != v) keep.push_back(u);
      std::vector<int> new_to_old;
      Graph nxt = induced_subgraph(cur, keep, &new_to_old);
      if (detail::c4_optimum(nxt, heuristic_td(nxt)) == remaining - 1) {
        res.witness.push_back(ids[v]);
        std::vector<int> nids(nxt.n);
        for (int u = 0; u < nxt.n; ++u) nids[u] = ids[new_to_old[u]];
        ids = std::move(nids);
        cur = std::move(nxt);
        --remaining;
        found = true;
      }
    }
    if (!found) throw std::logic_error("c4: witness self-reduction failed");
  }
  std::sort(res.witness.begin(), res.witness.end());
  return res;
}

}  // namespace fdelete
