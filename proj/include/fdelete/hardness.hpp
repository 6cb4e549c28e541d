// Generators for lower-bound instances: the vertex-cover reduction and the
// permutation-clique construction with its edge, choice, and completion
// gadgets. All gadgets are copies of a family member H and of a cheapest leaf
// block B of its block-cut tree, attached at two designated vertices.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <random>
#include <string>

#include "fdelete/family.hpp"
#include "fdelete/graph.hpp"
#include "fdelete/iso.hpp"

namespace fdelete {

// (H, B) with B a leaf block of minimum edge count over the whole family;
// a = the unique cut vertex of H inside B when it exists, else the least
// vertex of B; b = the least neighbor of a inside H[B].
struct EssentialPair {
  Graph h;                 // the chosen family member
  std::vector<int> block;  // vertex ids of B within h, sorted
  int a = -1, b = -1;      // first and second vertex, ids within h
  Graph core;              // h minus (block \ {a})
  int core_a = -1;         // id of a within core
  Graph bgraph;            // h[block]
  Graph bbar;              // h[block] minus the edge {a,b}
  int block_a = -1, block_b = -1;  // ids of a, b within bgraph/bbar
};

inline EssentialPair essential_pair(const Family& f) {
  validate_family(f);
  for (const auto& h : f.members)
    if (h.n < 2) throw std::invalid_argument("essential_pair: member with fewer than 2 vertices");
  EssentialPair best;
  long long best_edges = -1;
  for (const auto& h : f.members) {
    auto bct = block_cut_tree(h);
    for (int bi : leaf_blocks(bct)) {
      const auto& block = bct.blocks[bi];
      long long m = induced_subgraph(h, block).edge_count();
      if (best_edges >= 0 && m >= best_edges) continue;  // first minimum wins ties
      best_edges = m;
      best.h = h;
      best.block = block;
    }
  }
  const Graph& h = best.h;
  const auto& block = best.block;
  auto bct = block_cut_tree(h);
  best.a = block[0];
  for (int v : block)
    if (std::binary_search(bct.cut_vertices.begin(), bct.cut_vertices.end(), v)) {
      best.a = v;
      break;  // a leaf block has at most one cut vertex
    }
  best.bgraph = induced_subgraph(h, block);
  best.block_a = (int)(std::lower_bound(block.begin(), block.end(), best.a) - block.begin());
  best.b = -1;
  for (int pos : best.bgraph.adj[best.block_a]) {
    int v = block[pos];
    if (best.b < 0 || v < best.b) best.b = v;
  }
  if (best.b < 0) throw std::logic_error("essential_pair: first vertex has no block neighbor");
  best.block_b = (int)(std::lower_bound(block.begin(), block.end(), best.b) - block.begin());
  std::vector<int> drop;
  for (int v : block)
    if (v != best.a) drop.push_back(v);
  best.core = delete_vertices(h, drop);
  best.core_a = best.a;
  for (int v : drop)
    if (v < best.a) --best.core_a;
  best.bbar = Graph(best.bgraph.n);
  for (auto [u, v] : best.bgraph.edges())
    if (!(u == std::min(best.block_a, best.block_b) && v == std::max(best.block_a, best.block_b)))
      best.bbar.add_edge(u, v);
  return best;
}

struct HardnessInstance {
  Graph graph;
  int budget = -1;  // -1: no fixed budget (vertex-cover pass-through)
  std::map<std::string, std::vector<int>> registry;  // gadget name -> vertices
  std::string meta;
};

namespace detail {

// Adds a copy of `src` to `g`, reusing the given (src id -> instance id)
// pins; returns the full src -> instance id map.
inline std::vector<int> add_copy(Graph& g, const Graph& src, const std::map<int, int>& pins) {
  std::vector<int> map(src.n, -1);
  for (auto [s, t] : pins) map[s] = t;
  for (int v = 0; v < src.n; ++v)
    if (map[v] < 0) map[v] = g.add_vertex();
  for (auto [u, v] : src.edges()) g.add_edge(map[u], map[v]);
  return map;
}

// Gadget builder shared by the generators: tracks the instance graph and the
// registry while introducing H / B copies and choice gadgets.
struct GadgetBuilder {
  EssentialPair ep;
  HardnessInstance inst;

  explicit GadgetBuilder(const Family& f) : ep(essential_pair(f)) {}

  void reg(const std::string& name, std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    inst.registry[name] = std::move(verts);
  }

  // copy of H with first vertex -> y and second vertex -> x
  std::vector<int> h_edge(int x, int y) {
    return add_copy(inst.graph, ep.h, {{ep.a, y}, {ep.b, x}});
  }

  // copy of B with first vertex -> y and second vertex -> x
  std::vector<int> b_edge(int x, int y) {
    return add_copy(inst.graph, ep.bgraph, {{ep.block_a, y}, {ep.block_b, x}});
  }

  // H-edge gadget between z and y plus B-edge gadget between x and y
  void double_h_edge(int x, int z, int y) {
    h_edge(z, y);
    b_edge(x, y);
  }

  // choice gadget connecting xs; returns the z vertices z_0..z_{2s+1}
  std::vector<int> choice(const std::vector<int>& xs, const std::string& name) {
    int s = (int)xs.size();
    std::vector<int> z(2 * s + 2);
    std::vector<int> all = xs;
    for (auto& v : z) {
      v = inst.graph.add_vertex();
      all.push_back(v);
    }
    for (int i = 0; i <= 2 * s; ++i)
      for (int v : h_edge(z[i], z[i + 1])) all.push_back(v);
    for (int i = 1; i <= s; ++i) {
      for (int v : b_edge(xs[i - 1], z[2 * i - 1])) all.push_back(v);
      for (int v : b_edge(xs[i - 1], z[2 * i])) all.push_back(v);
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    inst.registry[name] = all;
    return z;
  }
};

}  // namespace detail

// Standalone choice gadget on s fresh vertices x_1..x_s (instance vertices
// 0..s-1); its minimum deletion set has size exactly 2s.
inline HardnessInstance choice_gadget(const Family& f, int s) {
  if (s < 1) throw std::invalid_argument("choice_gadget: s must be positive");
  detail::GadgetBuilder gb(f);
  gb.inst.graph = Graph(s);
  std::vector<int> xs(s);
  for (int i = 0; i < s; ++i) xs[i] = i;
  gb.choice(xs, "choice");
  gb.reg("xs", xs);
  gb.inst.budget = 2 * s;
  gb.inst.meta = "choice gadget, s=" + std::to_string(s);
  return gb.inst;
}

// Per-i optimum of the choice gadget avoiding x_i (1-based i): the set
// {x_j | j != i} + {z_{2j-1} | j in [1,i]} + {z_{2j} | j in [i,s]}.
inline std::vector<int> choice_gadget_solution(const std::vector<int>& xs,
                                               const std::vector<int>& z, int i) {
  int s = (int)xs.size();
  if (i < 1 || i > s) throw std::invalid_argument("choice_gadget_solution: bad index");
  std::vector<int> sol;
  for (int j = 1; j <= s; ++j)
    if (j != i) sol.push_back(xs[j - 1]);
  for (int j = 1; j <= i; ++j) sol.push_back(z[2 * j - 1]);
  for (int j = i; j <= s; ++j) sol.push_back(z[2 * j]);
  std::sort(sol.begin(), sol.end());
  return sol;
}

// Vertex-cover reduction: original vertices keep their ids; every original
// edge is replaced by a B copy and every vertex gains a core copy. The
// minimum deletion number of the result equals the vertex cover number.
inline HardnessInstance vc_reduction(const Graph& g_vc, const Family& f) {
  detail::GadgetBuilder gb(f);
  gb.inst.graph = Graph(g_vc.n);
  for (int v = 0; v < g_vc.n; ++v) {
    auto map = detail::add_copy(gb.inst.graph, gb.ep.core, {{gb.ep.core_a, v}});
    gb.reg("core:" + std::to_string(v), map);
  }
  for (auto [v, vp] : g_vc.edges()) {  // v < vp: v -> a, vp -> b
    auto map = gb.b_edge(vp, v);
    gb.reg("block:" + std::to_string(v) + "-" + std::to_string(vp), map);
  }
  gb.inst.meta = "vertex cover reduction, n=" + std::to_string(g_vc.n);
  return gb.inst;
}

// ---- permutation clique construction ----------------------------------------

struct Completion {
  enum Kind { none, paths, kclass } kind = none;
  int h = 0;  // path length for the paths completion
};

// Members of the class whose leaf blocks are never K_{2,r} or K_{2,r} plus
// the edge between the two degree-r vertices.
inline bool kclass_member(const Graph& g) {
  if (g.n < 2 || component_count(g) != 1) return false;
  auto bct = block_cut_tree(g);
  for (int bi : leaf_blocks(bct)) {
    Graph b = induced_subgraph(g, bct.blocks[bi]);
    if (b.n < 2) return false;
    int r = b.n - 2;
    Graph k2r = complete_bipartite(2, r);
    if (is_isomorphic(b, k2r)) return false;
    k2r.add_edge(0, 1);
    if (is_isomorphic(b, k2r)) return false;
  }
  return true;
}

struct PermcliqueInstance {
  HardnessInstance inst;
  int k = 0;
  Completion completion;
  // retained grid edges {(p,gamma),(q,delta)} with p < q, all in [1,k]
  std::vector<std::array<int, 4>> pc_edges;  // p, gamma, q, delta
  std::vector<int> c, r;                     // instance ids of c_i, r_j (1-based -1)
  std::vector<std::vector<int>> t;           // t[i-1][j-1]
  struct ChoiceIds {
    std::vector<int> xs, z;
  };
  std::vector<ChoiceIds> col_choice;                    // per column j
  std::map<std::pair<int, int>, ChoiceIds> pair_choice; // (p,q) -> gadget ids
  std::map<std::pair<int, int>, std::vector<int>> pair_members;  // (p,q) -> pc_edges idx
  std::vector<std::array<int, 3>> d;  // per retained edge: d_left, d_mid, d_right
};

// grid vertex (i, j), both 1-based, as a g_pc vertex id
inline int grid_id(int i, int j, int k) { return (i - 1) * k + (j - 1); }

inline PermcliqueInstance general_construction(const Graph& g_pc, int k, const Family& f,
                                               const Completion& completion) {
  if (k < 2) throw std::invalid_argument("general_construction: k must be at least 2");
  if (g_pc.n != k * k) throw std::invalid_argument("general_construction: grid size mismatch");
  if (completion.kind == Completion::paths) {
    if (f.members.size() != 1 || completion.h < 6 ||
        !is_isomorphic(f.members[0], path_graph(completion.h)))
      throw std::invalid_argument("general_construction: paths completion needs F = {P_h}, h >= 6");
  } else if (completion.kind == Completion::kclass) {
    for (const auto& h : f.members)
      if (!kclass_member(h))
        throw std::invalid_argument("general_construction: member outside the K class");
  }

  PermcliqueInstance pc;
  pc.k = k;
  pc.completion = completion;
  detail::GadgetBuilder gb(f);
  Graph& g = gb.inst.graph;
  g = Graph(0);

  pc.c.resize(k);
  pc.r.resize(k);
  pc.t.assign(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i) pc.c[i] = g.add_vertex();
  for (int j = 0; j < k; ++j) pc.r[j] = g.add_vertex();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int tid = g.add_vertex();
      pc.t[i][j] = tid;
      g.add_edge(pc.r[j], tid);
      g.add_edge(tid, pc.c[i]);
    }
  gb.reg("c", pc.c);
  gb.reg("r", pc.r);

  pc.col_choice.resize(k);
  for (int j = 0; j < k; ++j) {
    std::vector<int> xs(k);
    for (int i = 0; i < k; ++i) xs[i] = pc.t[i][j];
    pc.col_choice[j].xs = xs;
    pc.col_choice[j].z = gb.choice(xs, "choice:col:" + std::to_string(j + 1));
  }

  // retained edges: {(p,gamma),(q,delta)} with p < q (p = q edges dropped)
  for (auto [u, v] : g_pc.edges()) {
    int p = u / k + 1, gamma = u % k + 1, q = v / k + 1, delta = v % k + 1;
    if (p == q) continue;
    if (p > q) {
      std::swap(p, q);
      std::swap(gamma, delta);
    }
    pc.pc_edges.push_back({p, gamma, q, delta});
  }
  std::sort(pc.pc_edges.begin(), pc.pc_edges.end());

  for (size_t ei = 0; ei < pc.pc_edges.size(); ++ei) {
    auto [p, gamma, q, delta] = pc.pc_edges[ei];
    int dl = g.add_vertex(), dm = g.add_vertex(), dr = g.add_vertex();
    g.add_edge(dl, pc.c[p - 1]);
    g.add_edge(dl, pc.r[gamma - 1]);
    g.add_edge(dr, pc.c[q - 1]);
    g.add_edge(dr, pc.r[delta - 1]);
    gb.double_h_edge(dl, dr, dm);
    pc.d.push_back({dl, dm, dr});
    pc.pair_members[{p, q}].push_back((int)ei);
    gb.reg("edge:" + std::to_string(p) + "," + std::to_string(gamma) + "-" +
               std::to_string(q) + "," + std::to_string(delta),
           {dl, dm, dr});
  }
  for (const auto& [pq, members] : pc.pair_members) {
    std::vector<int> xs;
    for (int ei : members) xs.push_back(pc.d[ei][0]);
    PermcliqueInstance::ChoiceIds ids;
    ids.xs = xs;
    ids.z = gb.choice(xs, "choice:pair:" + std::to_string(pq.first) + "," +
                              std::to_string(pq.second));
    pc.pair_choice[pq] = std::move(ids);
  }

  if (completion.kind == Completion::paths) {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        int prev = pc.t[i][j];
        std::vector<int> path{prev};
        for (int s = 0; s < completion.h - 6; ++s) {
          int v = g.add_vertex();
          g.add_edge(prev, v);
          prev = v;
          path.push_back(v);
        }
        if (path.size() > 1)
          gb.reg("pendant:" + std::to_string(i + 1) + "," + std::to_string(j + 1), path);
      }
  } else if (completion.kind == Completion::kclass) {
    int r0 = g.add_vertex();
    gb.reg("r0", {r0});
    auto cmap = detail::add_copy(g, gb.ep.core, {{gb.ep.core_a, r0}});
    gb.reg("completion:core", cmap);
    for (int j = 0; j < k; ++j) {
      auto bmap = detail::add_copy(g, gb.ep.bbar,
                                   {{gb.ep.block_a, r0}, {gb.ep.block_b, pc.r[j]}});
      gb.reg("completion:bbar:" + std::to_string(j + 1), bmap);
    }
  }

  gb.inst.budget = 3 * (int)pc.pc_edges.size() + 2 * k * k;
  gb.inst.meta = "permutation clique construction, k=" + std::to_string(k);
  pc.inst = std::move(gb.inst);
  return pc;
}

// The solution associated with a permutation clique sigma (sigma[j-1] = i,
// both 1-based in meaning): exactly the construction's budget many vertices.
inline std::vector<int> sigma_solution(const PermcliqueInstance& pc,
                                       const std::vector<int>& sigma) {
  int k = pc.k;
  if ((int)sigma.size() != k) throw std::invalid_argument("sigma_solution: bad permutation size");
  {
    std::vector<char> seen(k + 1, 0);
    for (int v : sigma) {
      if (v < 1 || v > k || seen[v]) throw std::invalid_argument("sigma_solution: not a permutation");
      seen[v] = 1;
    }
  }
  // locate e^sigma_{p,q} for every pair and require it to exist
  std::map<std::pair<int, int>, int> chosen;  // (p,q) -> index into pc_edges
  for (int p = 1; p <= k; ++p)
    for (int q = p + 1; q <= k; ++q) {
      int gamma = -1, delta = -1;
      for (int j = 1; j <= k; ++j) {
        if (sigma[j - 1] == p) gamma = j;
        if (sigma[j - 1] == q) delta = j;
      }
      std::array<int, 4> want{p, gamma, q, delta};
      int found = -1;
      auto it = pc.pair_members.find({p, q});
      if (it != pc.pair_members.end())
        for (int ei : it->second)
          if (pc.pc_edges[ei] == want) found = ei;
      if (found < 0)
        throw std::invalid_argument("sigma_solution: sigma is not a permutation clique");
      chosen[{p, q}] = found;
    }

  std::vector<int> sol;
  for (int j = 1; j <= k; ++j) {
    int i = sigma[j - 1];
    auto part = choice_gadget_solution(pc.col_choice[j - 1].xs, pc.col_choice[j - 1].z, i);
    sol.insert(sol.end(), part.begin(), part.end());
  }
  for (const auto& [pq, ids] : pc.pair_choice) {
    const auto& members = pc.pair_members.at(pq);
    int spared = chosen.at(pq);
    int pos = (int)(std::find(members.begin(), members.end(), spared) - members.begin()) + 1;
    auto part = choice_gadget_solution(ids.xs, ids.z, pos);
    sol.insert(sol.end(), part.begin(), part.end());
  }
  std::vector<char> is_chosen(pc.pc_edges.size(), 0);
  for (const auto& [pq, ei] : chosen) is_chosen[ei] = 1;
  for (size_t ei = 0; ei < pc.pc_edges.size(); ++ei) {
    if (is_chosen[ei])
      sol.push_back(pc.d[ei][1]);  // d_mid of the clique edge
    else
      sol.push_back(pc.d[ei][2]);  // d_right of every other edge
  }
  std::sort(sol.begin(), sol.end());
  sol.erase(std::unique(sol.begin(), sol.end()), sol.end());
  return sol;
}

// Random k x k grid graph guaranteed to contain a permutation clique:
// plants a random permutation's clique and sprinkles extra edges.
inline std::pair<Graph, std::vector<int>> random_permclique_grid(int k, double extra_p,
                                                                 uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g(k * k);
  std::vector<int> sigma(k);
  for (int j = 0; j < k; ++j) sigma[j] = j + 1;
  std::shuffle(sigma.begin(), sigma.end(), rng);
  for (int p = 1; p <= k; ++p)
    for (int q = p + 1; q <= k; ++q) {
      int gamma = -1, delta = -1;
      for (int j = 1; j <= k; ++j) {
        if (sigma[j - 1] == p) gamma = j;
        if (sigma[j - 1] == q) delta = j;
      }
      g.add_edge(grid_id(p, gamma, k), grid_id(q, delta, k));
    }
  std::bernoulli_distribution coin(extra_p);
  for (int u = 0; u < k * k; ++u)
    for (int v = u + 1; v < k * k; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return {g, sigma};
}

// All permutations sigma (sigma[j-1] = i) whose clique edges are in g_pc.
inline std::vector<std::vector<int>> all_permutation_cliques(const Graph& g_pc, int k) {
  if (g_pc.n != k * k) throw std::invalid_argument("all_permutation_cliques: grid mismatch");
  std::vector<int> sigma(k);
  for (int j = 0; j < k; ++j) sigma[j] = j + 1;
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int ja = 1; ja <= k && ok; ++ja)
      for (int jb = ja + 1; jb <= k && ok; ++jb)
        if (!g_pc.has_edge(grid_id(sigma[ja - 1], ja, k), grid_id(sigma[jb - 1], jb, k)))
          ok = false;
    if (ok) out.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

// Evaluates the permutation property of S and, when every column misses
// exactly one t-vertex and the misses form a permutation, extracts it.
inline std::pair<bool, std::optional<std::vector<int>>> check_permutation_property(
    const PermcliqueInstance& pc, const std::vector<int>& s) {
  std::vector<char> in_s(pc.inst.graph.n, 0);
  for (int v : s) {
    if (v < 0 || v >= pc.inst.graph.n)
      throw std::invalid_argument("check_permutation_property: vertex out of range");
    in_s[v] = 1;
  }
  int k = pc.k;
  bool ok = true;
  for (size_t ei = 0; ei < pc.pc_edges.size() && ok; ++ei) {
    auto [p, gamma, q, delta] = pc.pc_edges[ei];
    if (!in_s[pc.d[ei][0]])
      for (int j = 1; j <= k; ++j)
        if (j != gamma && !in_s[pc.t[p - 1][j - 1]]) ok = false;
    if (!in_s[pc.d[ei][2]])
      for (int j = 1; j <= k; ++j)
        if (j != delta && !in_s[pc.t[q - 1][j - 1]]) ok = false;
  }
  std::optional<std::vector<int>> sigma;
  std::vector<int> perm(k, 0);
  std::vector<char> used(k + 1, 0);
  bool valid = true;
  for (int j = 1; j <= k && valid; ++j) {
    int miss = 0, who = -1;
    for (int i = 1; i <= k; ++i)
      if (!in_s[pc.t[i - 1][j - 1]]) {
        ++miss;
        who = i;
      }
    if (miss != 1 || used[who]) valid = false;
    else {
      used[who] = 1;
      perm[j - 1] = who;
    }
  }
  if (valid) sigma = perm;
  return {ok, sigma};
}

}  // namespace fdelete
