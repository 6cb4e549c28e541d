// Topological-minor / minor containment tests, minimal pre-models (tpm),
// and structural characterizations for small forbidden patterns.
#pragma once

#include <optional>
#include <set>
#include <unordered_set>

#include "fdelete/graph.hpp"
#include "fdelete/iso.hpp"

namespace fdelete {

struct TmModel {
  std::vector<int> branch;              // pattern vertex -> host vertex
  std::vector<std::vector<int>> paths;  // per pattern edge (edges() order), incl endpoints
};

struct MinorModel {
  std::vector<std::vector<int>> branch_sets;  // per pattern vertex, sorted host sets
};

// ---- shape predicates -----------------------------------------------------

inline bool is_path_shape(const Graph& h) {
  if (h.n == 0) return false;
  if (h.edge_count() != h.n - 1) return false;
  int deg1 = 0;
  for (int v = 0; v < h.n; ++v) {
    if (h.degree(v) > 2) return false;
    if (h.degree(v) <= 1) ++deg1;
  }
  return component_count(h) == 1 && (h.n == 1 || deg1 == 2);
}

inline bool is_cycle_shape(const Graph& h) {
  if (h.n < 3 || h.edge_count() != h.n) return false;
  for (int v = 0; v < h.n; ++v)
    if (h.degree(v) != 2) return false;
  return component_count(h) == 1;
}

inline bool is_two_connected(const Graph& h) {
  if (h.n < 3) return false;
  auto bct = block_cut_tree(h);
  return bct.blocks.size() == 1 && (int)bct.blocks[0].size() == h.n;
}

// ---- generic backtracking topological-minor test --------------------------

namespace detail {

struct TmSearch {
  const Graph& h;
  const Graph& g;
  std::vector<Edge> hedges;
  std::vector<int> order;  // pattern vertices, high degree first
  std::vector<int> phi;
  std::vector<char> used;  // host vertex taken by a branch image or path internal
  std::vector<std::vector<int>> paths;

  TmSearch(const Graph& h_, const Graph& g_) : h(h_), g(g_) {
    hedges = h.edges();
    order.resize(h.n);
    for (int v = 0; v < h.n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return h.degree(a) > h.degree(b); });
    phi.assign(h.n, -1);
    used.assign(g.n, 0);
    paths.assign(hedges.size(), {});
  }

  bool extend_path(size_t ei, int cur, int target, std::vector<int>& path) {
    for (int nb : g.adj[cur]) {
      if (nb == target) {
        // internals are already flagged used by the extension loop below
        path.push_back(target);
        paths[ei] = path;
        if (route(ei + 1)) return true;
        path.pop_back();
        break;  // at most one way to close from cur
      }
    }
    for (int nb : g.adj[cur]) {
      if (nb == target || used[nb]) continue;
      used[nb] = 1;
      path.push_back(nb);
      bool ok = extend_path(ei, nb, target, path);
      path.pop_back();
      used[nb] = 0;
      if (ok) return true;
    }
    return false;
  }

  bool route(size_t ei) {
    if (ei == hedges.size()) return true;
    auto [x, y] = hedges[ei];
    std::vector<int> path{phi[x]};
    return extend_path(ei, phi[x], phi[y], path);
  }

  bool assign(size_t oi) {
    if (oi == order.size()) return route(0);
    int x = order[oi];
    for (int v = 0; v < g.n; ++v) {
      if (used[v] || g.degree(v) < h.degree(x)) continue;
      used[v] = 1;
      phi[x] = v;
      if (assign(oi + 1)) return true;
      phi[x] = -1;
      used[v] = 0;
    }
    return false;
  }
};

}  // namespace detail

inline bool is_topological_minor_generic(const Graph& h, const Graph& g,
                                         TmModel* model = nullptr) {
  if (h.n > g.n || h.edge_count() > g.edge_count()) return false;
  detail::TmSearch s(h, g);
  if (!s.assign(0)) return false;
  if (model) {
    model->branch = s.phi;
    model->paths = s.paths;
  }
  return true;
}

// ---- fast special cases ----------------------------------------------------

// Simple path on k vertices as a subgraph; optionally returns one.
namespace detail {
inline bool path_dfs(const Graph& g, int k, std::vector<int>& path, std::vector<char>& on) {
  if ((int)path.size() == k) return true;
  int cur = path.back();
  for (int nb : g.adj[cur]) {
    if (on[nb]) continue;
    on[nb] = 1;
    path.push_back(nb);
    if (path_dfs(g, k, path, on)) return true;
    path.pop_back();
    on[nb] = 0;
  }
  return false;
}
}  // namespace detail

inline bool has_path_subgraph(const Graph& g, int k, std::vector<int>* out = nullptr) {
  if (k <= 0) return true;
  if (k > g.n) return false;
  std::vector<char> on(g.n, 0);
  for (int s = 0; s < g.n; ++s) {
    std::vector<int> path{s};
    on[s] = 1;
    if (detail::path_dfs(g, k, path, on)) {
      if (out) *out = path;
      return true;
    }
    on[s] = 0;
  }
  return false;
}

// A simple cycle on >= k vertices; optionally returns one (cyclic order).
namespace detail {
inline bool cycle_dfs(const Graph& g, int k, int start, std::vector<int>& path,
                      std::vector<char>& on) {
  int cur = path.back();
  if ((int)path.size() >= k && g.has_edge(cur, start)) return true;
  for (int nb : g.adj[cur]) {
    if (nb < start || on[nb]) continue;  // canonical: min vertex of cycle = start
    on[nb] = 1;
    path.push_back(nb);
    if (cycle_dfs(g, k, start, path, on)) return true;
    path.pop_back();
    on[nb] = 0;
  }
  return false;
}
}  // namespace detail

inline bool has_cycle_at_least(const Graph& g, int k, std::vector<int>* out = nullptr) {
  auto bct = block_cut_tree(g);
  for (const auto& blk : bct.blocks) {
    if ((int)blk.size() < k || blk.size() < 3) continue;
    std::vector<int> map;
    Graph b = induced_subgraph(g, blk, &map);
    std::vector<char> on(b.n, 0);
    for (int s = 0; s < b.n; ++s) {
      std::vector<int> path{s};
      on[s] = 1;
      if (detail::cycle_dfs(b, k, s, path, on)) {
        if (out) {
          out->clear();
          for (int v : path) out->push_back(map[v]);
        }
        return true;
      }
      on[s] = 0;
      std::fill(on.begin(), on.end(), 0);
    }
  }
  return false;
}

// K4 as a (topological) minor: some block is not series-parallel.
// Tested by exhaustive degree-2 suppression in the block's multigraph.
inline bool has_k4_minor(const Graph& g) {
  auto bct = block_cut_tree(g);
  for (const auto& blk : bct.blocks) {
    if (blk.size() < 4) continue;
    Graph b = induced_subgraph(g, blk);
    // multigraph reduction: adjacency multiset per vertex
    std::vector<std::vector<int>> adj(b.n);
    for (auto [u, v] : b.edges()) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    std::vector<char> alive(b.n, 1);
    int alive_n = b.n;
    auto remove_val = [](std::vector<int>& a, int v) {
      a.erase(std::find(a.begin(), a.end(), v));
    };
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < b.n && alive_n > 2; ++v) {
        if (!alive[v]) continue;
        // drop parallel edges (keep one copy per neighbor) -- series-parallel
        // equivalence preserves K4-minor existence
        std::sort(adj[v].begin(), adj[v].end());
        for (size_t a = 0; a + 1 < adj[v].size();) {
          if (adj[v][a] == adj[v][a + 1]) {
            int u = adj[v][a];
            adj[v].erase(adj[v].begin() + a);
            remove_val(adj[u], v);
            changed = true;
          } else {
            ++a;
          }
        }
        if (adj[v].size() == 2 && adj[v][0] != adj[v][1]) {
          int x = adj[v][0], y = adj[v][1];
          remove_val(adj[x], v);
          remove_val(adj[y], v);
          adj[x].push_back(y);
          adj[y].push_back(x);
          adj[v].clear();
          alive[v] = 0;
          --alive_n;
          changed = true;
        } else if (adj[v].size() <= 1) {
          if (adj[v].size() == 1) remove_val(adj[adj[v][0]], v);
          adj[v].clear();
          alive[v] = 0;
          --alive_n;
          changed = true;
        }
      }
    }
    // not series-parallel iff a vertex of (simple) degree >= 3 survives
    for (int v = 0; v < b.n; ++v) {
      if (!alive[v]) continue;
      std::vector<int> a = adj[v];
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
      if (a.size() >= 3) return true;
    }
  }
  return false;
}

// ---- dispatcher -------------------------------------------------------------

inline bool is_topological_minor(const Graph& h, const Graph& g, TmModel* model = nullptr) {
  if (h.n == 0) {
    if (model) *model = {};
    return true;
  }
  if (h.n > g.n || h.edge_count() > g.edge_count()) return false;
  if (is_path_shape(h) && h.n >= 2) {
    std::vector<int> p;
    if (!has_path_subgraph(g, h.n, model ? &p : nullptr)) return false;
    if (model) {
      // pattern path order: walk h from one endpoint
      std::vector<int> horder;
      int end = 0;
      for (int v = 0; v < h.n; ++v)
        if (h.degree(v) == 1) end = v;
      if (h.n == 1) end = 0;
      horder.push_back(end);
      std::vector<char> seen(h.n, 0);
      seen[end] = 1;
      while ((int)horder.size() < h.n)
        for (int nb : h.adj[horder.back()])
          if (!seen[nb]) {
            seen[nb] = 1;
            horder.push_back(nb);
            break;
          }
      model->branch.assign(h.n, -1);
      for (int i = 0; i < h.n; ++i) model->branch[horder[i]] = p[i];
      model->paths.clear();
      for (auto [x, y] : h.edges()) model->paths.push_back({model->branch[x], model->branch[y]});
    }
    return true;
  }
  if (is_cycle_shape(h)) {
    std::vector<int> cyc;
    if (!has_cycle_at_least(g, h.n, model ? &cyc : nullptr)) return false;
    if (model) {
      int k = h.n;
      // pattern cycle order from vertex 0
      std::vector<int> horder{0};
      std::vector<char> seen(h.n, 0);
      seen[0] = 1;
      while ((int)horder.size() < h.n)
        for (int nb : h.adj[horder.back()])
          if (!seen[nb]) {
            seen[nb] = 1;
            horder.push_back(nb);
            break;
          }
      model->branch.assign(h.n, -1);
      for (int i = 0; i < k; ++i) model->branch[horder[i]] = cyc[i];
      model->paths.clear();
      for (auto [x, y] : h.edges()) {
        int ix = 0, iy = 0;
        for (int i = 0; i < k; ++i) {
          if (horder[i] == x) ix = i;
          if (horder[i] == y) iy = i;
        }
        if (ix > iy) std::swap(ix, iy);
        std::vector<int> path;
        if (iy == ix + 1) {
          path = {cyc[ix], cyc[iy]};
        } else {  // the wrap-around edge {horder[0], horder[k-1]} takes the long arc
          path.push_back(cyc[0]);
          for (int i = (int)cyc.size() - 1; i >= k - 1; --i) path.push_back(cyc[i]);
        }
        model->paths.push_back(path);
      }
    }
    return true;
  }
  if (!model && h.n == 4 && h.edge_count() == 6) return has_k4_minor(g);
  if (is_two_connected(h)) {
    auto bct = block_cut_tree(g);
    for (const auto& blk : bct.blocks) {
      if ((int)blk.size() < h.n) continue;
      std::vector<int> map;
      Graph b = induced_subgraph(g, blk, &map);
      TmModel local;
      if (is_topological_minor_generic(h, b, model ? &local : nullptr)) {
        if (model) {
          model->branch.clear();
          for (int v : local.branch) model->branch.push_back(map[v]);
          model->paths.clear();
          for (auto& p : local.paths) {
            std::vector<int> q;
            for (int v : p) q.push_back(map[v]);
            model->paths.push_back(std::move(q));
          }
        }
        return true;
      }
    }
    return false;
  }
  return is_topological_minor_generic(h, g, model);
}

inline bool contains_family_tm(const std::vector<Graph>& family, const Graph& g) {
  for (const auto& h : family)
    if (is_topological_minor(h, g)) return true;
  return false;
}

// ---- minor containment -------------------------------------------------------

namespace detail {
inline bool subgraph_iso(const Graph& h, const Graph& g, std::vector<int>& phi,
                         std::vector<char>& used, const std::vector<int>& order, size_t oi) {
  if (oi == order.size()) return true;
  int x = order[oi];
  for (int v = 0; v < g.n; ++v) {
    if (used[v] || g.degree(v) < h.degree(x)) continue;
    bool ok = true;
    for (int y : h.adj[x])
      if (phi[y] != -1 && !g.has_edge(v, phi[y])) {
        ok = false;
        break;
      }
    if (!ok) continue;
    used[v] = 1;
    phi[x] = v;
    if (subgraph_iso(h, g, phi, used, order, oi + 1)) return true;
    phi[x] = -1;
    used[v] = 0;
  }
  return false;
}
}  // namespace detail

inline bool has_subgraph(const Graph& h, const Graph& g, std::vector<int>* map = nullptr) {
  if (h.n > g.n || h.edge_count() > g.edge_count()) return false;
  std::vector<int> order(h.n);
  for (int v = 0; v < h.n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return h.degree(a) > h.degree(b); });
  std::vector<int> phi(h.n, -1);
  std::vector<char> used(g.n, 0);
  if (!detail::subgraph_iso(h, g, phi, used, order, 0)) return false;
  if (map) *map = phi;
  return true;
}

namespace detail {
inline bool minor_rec(const Graph& h, const Graph& cur,
                      const std::vector<std::vector<int>>& origin,
                      std::set<CanonKey>& seen, MinorModel* model) {
  if (cur.n < h.n || cur.edge_count() < h.edge_count()) return false;
  std::vector<int> phi;
  if (has_subgraph(h, cur, &phi)) {
    if (model) {
      model->branch_sets.clear();
      for (int x = 0; x < h.n; ++x) model->branch_sets.push_back(origin[phi[x]]);
    }
    return true;
  }
  for (auto [u, v] : cur.edges()) {
    // contract v into u
    std::vector<int> keep;
    Graph nxt(cur.n - 1);
    std::vector<int> remap(cur.n);
    int idx = 0;
    for (int w = 0; w < cur.n; ++w) remap[w] = (w == v) ? -1 : idx++;
    remap[v] = remap[u];
    for (auto [a, b] : cur.edges()) {
      int na = remap[a], nb = remap[b];
      if (na != nb) nxt.add_edge(na, nb);
    }
    std::vector<std::vector<int>> norig(nxt.n);
    for (int w = 0; w < cur.n; ++w) {
      if (w == v) continue;
      norig[remap[w]] = origin[w];
    }
    auto& tgt = norig[remap[u]];
    tgt.insert(tgt.end(), origin[v].begin(), origin[v].end());
    std::sort(tgt.begin(), tgt.end());
    if (nxt.n <= kCanonMaxN) {
      CanonKey k = canonical_key(nxt);
      if (!model && !seen.insert(k).second) continue;
    }
    if (minor_rec(h, nxt, norig, seen, model)) return true;
  }
  return false;
}
}  // namespace detail

inline bool is_minor(const Graph& h, const Graph& g, MinorModel* model = nullptr) {
  if (h.n == 0) {
    if (model) model->branch_sets.clear();
    return true;
  }
  std::vector<std::vector<int>> origin(g.n);
  for (int v = 0; v < g.n; ++v) origin[v] = {v};
  std::set<CanonKey> seen;
  return detail::minor_rec(h, g, origin, seen, model);
}

inline bool contains_family_minor(const std::vector<Graph>& family, const Graph& g) {
  for (const auto& h : family)
    if (is_minor(h, g)) return true;
  return false;
}

// ---- tpm: topological-minor-minimal graphs containing h as a minor ----------

inline std::vector<Graph> tpm(const Graph& h) {
  int heavy = 0;
  for (int v = 0; v < h.n; ++v)
    if (h.degree(v) >= 4) ++heavy;
  if (heavy > 6) throw std::invalid_argument("tpm: too many vertices of degree >= 4");
  std::vector<Graph> pool{h};
  std::set<CanonKey> seen{canonical_key(h)};
  for (size_t qi = 0; qi < pool.size(); ++qi) {
    Graph cur = pool[qi];  // copy: pool may reallocate
    for (int v = 0; v < cur.n; ++v) {
      int d = cur.degree(v);
      if (d < 4) continue;
      std::vector<int> nbs = cur.adj[v];
      // partition nbs into (A, B), both sides >= 2; fix nbs[0] in A
      for (uint32_t m = 0; m < (1u << (d - 1)); ++m) {
        std::vector<int> A{nbs[0]}, B;
        for (int i = 1; i < d; ++i)
          ((m >> (i - 1)) & 1 ? A : B).push_back(nbs[i]);
        if ((int)A.size() < 2 || (int)B.size() < 2) continue;
        Graph nxt = cur;
        int v2 = nxt.add_vertex();
        for (int b : B) {
          // move edge v-b to v2-b
          auto& av = nxt.adj[v];
          av.erase(std::find(av.begin(), av.end(), b));
          auto& ab = nxt.adj[b];
          ab.erase(std::find(ab.begin(), ab.end(), v));
          nxt.add_edge(v2, b);
        }
        nxt.add_edge(v, v2);
        if (nxt.n <= kCanonMaxN) {
          if (!seen.insert(canonical_key(nxt)).second) continue;
        }
        pool.push_back(std::move(nxt));
      }
    }
  }
  // keep only topological-minor-minimal members
  std::vector<Graph> out;
  for (size_t i = 0; i < pool.size(); ++i) {
    bool minimal = true;
    for (size_t j = 0; j < pool.size() && minimal; ++j) {
      if (i == j) continue;
      if (is_topological_minor(pool[j], pool[i]) && !is_isomorphic(pool[i], pool[j]))
        minimal = false;
    }
    if (minimal) out.push_back(pool[i]);
  }
  return out;
}

// Union of tpm over a family, pruned to a tm-antichain.
inline std::vector<Graph> tpm_family(const std::vector<Graph>& family) {
  std::vector<Graph> pool;
  std::set<CanonKey> seen;
  for (const auto& h : family)
    for (auto& t : tpm(h))
      if (t.n > kCanonMaxN || seen.insert(canonical_key(t)).second) pool.push_back(std::move(t));
  std::vector<Graph> out;
  for (size_t i = 0; i < pool.size(); ++i) {
    bool keep = true;
    for (size_t j = 0; j < pool.size() && keep; ++j)
      if (i != j && is_topological_minor(pool[j], pool[i]) &&
          !is_isomorphic(pool[i], pool[j]))
        keep = false;
    if (keep) out.push_back(pool[i]);
  }
  return out;
}

// Drop family members that topologically contain another member.
inline std::vector<Graph> tm_antichain(const std::vector<Graph>& family) {
  std::vector<Graph> out;
  for (size_t i = 0; i < family.size(); ++i) {
    bool keep = true;
    for (size_t j = 0; j < family.size() && keep; ++j)
      if (i != j && is_topological_minor(family[j], family[i]) &&
          !is_isomorphic(family[i], family[j]))
        keep = false;
    if (keep) {
      bool dup = false;
      for (const auto& g : out)
        if (is_isomorphic(g, family[i])) dup = true;
      if (!dup) out.push_back(family[i]);
    }
  }
  return out;
}

// ---- structural characterizations -------------------------------------------

inline bool is_p3_free(const Graph& g) {
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) > 1) return false;
  return true;
}

inline bool is_p4_free(const Graph& g) {
  for (const auto& comp : connected_components(g)) {
    int sz = (int)comp.size();
    Graph c = induced_subgraph(g, comp);
    if (sz == 3 && c.edge_count() == 3) continue;  // triangle
    // star: at most one vertex of degree > 1 and no cycles
    if (c.edge_count() != sz - 1) return false;
    int big = 0;
    for (int v = 0; v < c.n; ++v)
      if (c.degree(v) > 1) ++big;
    if (big > 1) return false;
  }
  return true;
}

inline bool c4_condition(const Graph& g) {
  if (contains_diamond(g)) return false;
  long long n = g.n, m = g.edge_count(), c3 = count_triangles(g);
  long long cc = component_count(g);
  return n - m + c3 == cc;
}

}  // namespace fdelete
