// Simple undirected graph with dense integer vertex ids.
#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fdelete {

using Edge = std::pair<int, int>;  // normalized u < v

inline Edge mk_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;  // sorted neighbor lists
  std::vector<std::string> names;    // optional external labels (empty or size n)

  Graph() = default;
  explicit Graph(int n_) : n(n_), adj(n_) {}

  static Graph with_vertices(int n_) { return Graph(n_); }

  bool valid_vertex(int v) const { return v >= 0 && v < n; }

  bool has_edge(int u, int v) const {
    if (!valid_vertex(u) || !valid_vertex(v) || u == v) return false;
    const auto& a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
  }

  void add_edge(int u, int v) {
    if (!valid_vertex(u) || !valid_vertex(v))
      throw std::invalid_argument("add_edge: vertex id out of range");
    if (u == v) throw std::invalid_argument("add_edge: loops not allowed");
    if (has_edge(u, v)) return;
    adj[u].insert(std::upper_bound(adj[u].begin(), adj[u].end(), v), v);
    adj[v].insert(std::upper_bound(adj[v].begin(), adj[v].end(), u), u);
  }

  int add_vertex() {
    adj.emplace_back();
    if (!names.empty()) names.emplace_back();
    return n++;
  }

  int degree(int v) const { return (int)adj[v].size(); }

  long long edge_count() const {
    long long s = 0;
    for (const auto& a : adj) s += (long long)a.size();
    return s / 2;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
      for (int v : adj[u])
        if (u < v) es.push_back({u, v});
    return es;
  }
};

// ---- named small graphs -------------------------------------------------

inline Graph path_graph(int k) {
  Graph g(k);
  for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle_graph(int k) {
  Graph g(k);
  for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
  return g;
}

inline Graph complete_graph(int k) {
  Graph g(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
  return g;
}

inline Graph star_graph(int leaves) {  // K_{1,leaves}, center = 0
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

inline Graph complete_bipartite(int a, int b) {  // parts [0,a) and [a,a+b)
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

inline Graph diamond_graph() {  // K4 minus one edge
  Graph g = complete_graph(4);
  // remove edge {2,3}
  Graph h(4);
  for (auto [u, v] : g.edges())
    if (!(u == 2 && v == 3)) h.add_edge(u, v);
  return h;
}

// ---- structural primitives ----------------------------------------------

// Induced subgraph on s (any order); returns graph plus new-id -> old-id map.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& s,
                              std::vector<int>* new_to_old = nullptr) {
  std::vector<int> sel = s;
  std::sort(sel.begin(), sel.end());
  sel.erase(std::unique(sel.begin(), sel.end()), sel.end());
  for (int v : sel)
    if (!g.valid_vertex(v)) throw std::invalid_argument("induced_subgraph: bad vertex id");
  std::vector<int> old_to_new(g.n, -1);
  for (int i = 0; i < (int)sel.size(); ++i) old_to_new[sel[i]] = i;
  Graph h((int)sel.size());
  if (!g.names.empty()) h.names.resize(h.n);
  for (int i = 0; i < (int)sel.size(); ++i) {
    int u = sel[i];
    if (!g.names.empty()) h.names[i] = g.names[u];
    for (int v : g.adj[u]) {
      int j = old_to_new[v];
      if (j > i) h.add_edge(i, j);
    }
  }
  if (new_to_old) *new_to_old = sel;
  return h;
}

inline Graph delete_vertices(const Graph& g, const std::vector<int>& s,
                             std::vector<int>* new_to_old = nullptr) {
  std::vector<char> del(g.n, 0);
  for (int v : s) {
    if (!g.valid_vertex(v)) throw std::invalid_argument("delete_vertices: bad vertex id");
    del[v] = 1;
  }
  std::vector<int> keep;
  for (int v = 0; v < g.n; ++v)
    if (!del[v]) keep.push_back(v);
  return induced_subgraph(g, keep, new_to_old);
}

inline Graph delete_vertices_mask(const Graph& g, uint64_t mask,
                                  std::vector<int>* new_to_old = nullptr) {
  std::vector<int> s;
  for (int v = 0; v < g.n && v < 64; ++v)
    if (mask >> v & 1) s.push_back(v);
  return delete_vertices(g, s, new_to_old);
}

// Components ordered by smallest member id; each component sorted.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.n, 0);
  for (int s = 0; s < g.n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int v : g.adj[u])
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline int component_count(const Graph& g) { return (int)connected_components(g).size(); }

struct BlockCutTree {
  std::vector<std::vector<int>> blocks;          // each a sorted vertex set
  std::vector<int> cut_vertices;                 // sorted
  std::vector<std::pair<int, int>> tree_edges;   // (block index, cut vertex)
};

// Hopcroft-Tarjan biconnected components via DFS; works per component.
inline BlockCutTree block_cut_tree(const Graph& g) {
  BlockCutTree bct;
  std::vector<int> num(g.n, -1), low(g.n, 0), parent(g.n, -1);
  std::vector<char> is_cut(g.n, 0);
  std::vector<Edge> estack;
  int timer = 0;

  // iterative DFS to avoid recursion limits
  struct Frame { int v; size_t idx; };
  for (int root = 0; root < g.n; ++root) {
    if (num[root] != -1) continue;
    int root_children = 0;
    std::vector<Frame> st{{root, 0}};
    num[root] = low[root] = timer++;
    while (!st.empty()) {
      auto& [v, idx] = st.back();
      if (idx < g.adj[v].size()) {
        int w = g.adj[v][idx++];
        if (num[w] == -1) {
          estack.push_back(mk_edge(v, w));
          parent[w] = v;
          num[w] = low[w] = timer++;
          if (v == root) ++root_children;
          st.push_back({w, 0});
        } else if (w != parent[v] && num[w] < num[v]) {
          estack.push_back(mk_edge(v, w));
          low[v] = std::min(low[v], num[w]);
        }
      } else {
        st.pop_back();
        if (!st.empty()) {
          int u = st.back().v;
          low[u] = std::min(low[u], low[v]);
          if (low[v] >= num[u]) {
            if (u != root || root_children >= 1) {
              // pop block containing edge {u,v}
              std::vector<int> verts;
              Edge top = mk_edge(u, v);
              while (true) {
                Edge e = estack.back();
                estack.pop_back();
                verts.push_back(e.first);
                verts.push_back(e.second);
                if (e == top) break;
              }
              std::sort(verts.begin(), verts.end());
              verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
              bct.blocks.push_back(std::move(verts));
              if (!(u == root && root_children < 2)) is_cut[u] = 1;
            }
          }
          if (low[v] >= num[u] && u == root && root_children >= 2) is_cut[u] = 1;
        }
      }
    }
    if (g.adj[root].empty()) bct.blocks.push_back({root});  // isolated vertex block
  }
  for (int v = 0; v < g.n; ++v)
    if (is_cut[v]) bct.cut_vertices.push_back(v);
  for (int b = 0; b < (int)bct.blocks.size(); ++b)
    for (int v : bct.blocks[b])
      if (is_cut[v]) bct.tree_edges.push_back({b, v});
  return bct;
}

// Leaf blocks of bct(g): blocks containing at most one cut vertex.
inline std::vector<int> leaf_blocks(const BlockCutTree& bct) {
  std::vector<int> res;
  for (int b = 0; b < (int)bct.blocks.size(); ++b) {
    int cuts = 0;
    for (int v : bct.blocks[b])
      if (std::binary_search(bct.cut_vertices.begin(), bct.cut_vertices.end(), v)) ++cuts;
    if (cuts <= 1) res.push_back(b);
  }
  return res;
}

inline long long count_triangles(const Graph& g) {
  long long c = 0;
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u]) {
      if (v <= u) continue;
      for (int w : g.adj[v]) {
        if (w <= v) continue;
        if (g.has_edge(u, w)) ++c;
      }
    }
  return c;
}

// Diamond (K4 minus an edge) as a subgraph: an edge whose endpoints have
// two common neighbors.
inline bool contains_diamond(const Graph& g) {
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u]) {
      if (v <= u) continue;
      int common = 0;
      for (int w : g.adj[u])
        if (w != v && g.has_edge(v, w)) ++common;
      if (common >= 2) return true;
    }
  return false;
}

// ---- small helpers shared by solvers ------------------------------------

inline std::vector<int> mask_to_set(uint64_t mask) {
  std::vector<int> s;
  for (int v = 0; v < 64; ++v)
    if (mask >> v & 1) s.push_back(v);
  return s;
}

inline uint64_t set_to_mask(const std::vector<int>& s) {
  uint64_t m = 0;
  for (int v : s) m |= 1ull << v;
  return m;
}

// Lexicographic order on the sorted vertex sequences of two same-size sets.
inline bool lex_less(uint64_t a, uint64_t b) {
  if (a == b) return false;
  uint64_t diff = a ^ b;
  int low = __builtin_ctzll(diff);
  return (a >> low) & 1;  // a contains the smaller differing vertex
}

}  // namespace fdelete
