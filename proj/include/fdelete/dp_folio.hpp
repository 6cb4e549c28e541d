// Generic family deletion over a rooted branch decomposition. Each tree edge
// e cuts off a boundaried graph G_e; table cells are pairs (L, C) where L is
// the deleted part of the boundary R_e and C identifies folio(G_e \ S) — the
// set of small boundaried graphs contained in the remainder as label-rooted
// topological minors. Cells whose remainder already contains a family member
// can never recover and are dropped.
//
// Folio cell keys are compact: for hosts carrying every label 1..t' (all
// hosts this DP builds), the members that use every label determine the whole
// folio, and that set is downward closed under single edge / internal-vertex
// deletions, so the canonical keys of its one-step-maximal members identify
// it. Internal cells compute their folio on a representative deletion set;
// the recurrence guarantees any representative with the same child cells
// yields the same folio, and the member-pair union formula is kept alongside
// for cross-checking.
#pragma once

#include <cstdlib>
#include <set>

#include "fdelete/boundaried.hpp"
#include "fdelete/decomp.hpp"
#include "fdelete/errors.hpp"
#include "fdelete/oracle.hpp"

namespace fdelete {

struct FolioOptions {
  int max_boundary = 6;        // cap on |R_e|; FDELETE_MAX_WIDTH + 2 overrides
  size_t max_cells = 200000;   // per-edge table cap
  size_t max_members = 400000; // per-host folio enumeration cap
};

// size of a family: max member order, but at least the member count
inline int family_size(const Family& f) {
  int d = (int)f.members.size();
  for (const auto& h : f.members) d = std::max(d, h.n);
  return d;
}

namespace detail {

// Enumerates the folio members of `host` that carry every one of the host's
// labels: BFS from the all-boundary-isolated member, extending by one
// internal vertex (up to r) or one edge; every full-label member reduces to
// the base through contained, family-free full-label members, so the BFS is
// exhaustive. Returns all members found; `maximal_out`, when given, collects
// which members admit no contained one-step extension.
inline std::vector<BoundariedGraph> folio_full_members(const BoundariedGraph& host,
                                                       const Family& fam, int r,
                                                       std::vector<char>* maximal_out = nullptr,
                                                       size_t max_members = 400000) {
  int t = (int)host.boundary.size();
  BoundariedGraph base;
  base.g = Graph(t);
  for (int i = 0; i < t; ++i) {
    base.boundary.push_back(i);
    base.labels.push_back(host.labels[i]);
  }
  std::unordered_map<BKey, int> seen;
  std::vector<BoundariedGraph> members{base};
  std::vector<char> maximal{1};
  seen[canonical_bkey(base)] = 0;
  for (size_t qi = 0; qi < members.size(); ++qi) {
    if (members.size() > max_members)
      throw CapabilityError("folio: member enumeration exceeds budget");
    BoundariedGraph m = members[qi];
    bool extended = false;
    auto consider = [&](const BoundariedGraph& ext) {
      BKey k = canonical_bkey(ext);
      auto it = seen.find(k);
      if (it != seen.end()) {
        extended = true;  // a contained extension exists: m is not maximal
        return;
      }
      if (contains_family_tm(fam.members, ext.g)) return;
      if (!is_rooted_tm(ext, host)) return;
      seen.emplace(std::move(k), (int)members.size());
      members.push_back(ext);
      maximal.push_back(1);
      extended = true;
    };
    if (m.g.n - t < r) {
      BoundariedGraph ext = m;
      ext.g.add_vertex();
      consider(ext);
    }
    for (int u = 0; u < m.g.n; ++u)
      for (int v = u + 1; v < m.g.n; ++v)
        if (!m.g.has_edge(u, v)) {
          BoundariedGraph ext = m;
          ext.g.add_edge(u, v);
          consider(ext);
        }
    if (extended) maximal[qi] = 0;
  }
  if (maximal_out) *maximal_out = std::move(maximal);
  return members;
}

// Folio identity provider: canonical host -> interned id of the sorted
// one-step-maximal member keys; -1 flags hosts containing a family member.
struct FolioEngine {
  Family fam;
  int r;
  size_t max_members;
  std::unordered_map<BKey, int> host_cache;
  std::map<std::vector<BKey>, int> intern;

  FolioEngine(const Family& f, int r_, size_t mm) : fam(f), r(r_), max_members(mm) {}

  int host_folio(const BoundariedGraph& host) {
    BKey hk = canonical_bkey(host);
    auto it = host_cache.find(hk);
    if (it != host_cache.end()) return it->second;
    int id;
    if (contains_family_tm(fam.members, host.g)) {
      id = -1;
    } else {
      std::vector<char> maximal;
      auto members = folio_full_members(host, fam, r, &maximal, max_members);
      std::vector<BKey> key;
      for (size_t i = 0; i < members.size(); ++i)
        if (maximal[i]) key.push_back(canonical_bkey(members[i]));
      std::sort(key.begin(), key.end());
      auto [jt, fresh] = intern.emplace(std::move(key), (int)intern.size());
      id = jt->second;
      (void)fresh;
    }
    host_cache.emplace(std::move(hk), id);
    return id;
  }
};

// Rooted view of the branch decomposition: per non-root node x, the edge
// towards the parent, with the graph edges mapped below it.
struct FolioDpState {
  const Graph& g;
  const BranchDecomposition& bd;
  std::vector<std::vector<int>> below;  // node -> graph edge indices below
  std::vector<int> postorder;           // non-root nodes, children first

  FolioDpState(const Graph& g_, const BranchDecomposition& bd_) : g(g_), bd(bd_) {
    size_t N = bd.nodes.size();
    below.assign(N, {});
    std::vector<std::pair<int, int>> st{{bd.root_leaf, -1}}, seq;
    while (!st.empty()) {
      auto [x, p] = st.back();
      st.pop_back();
      seq.push_back({x, p});
      for (int y : bd.nodes[x].nbrs)
        if (y != p) st.push_back({y, x});
    }
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
      int x = it->first;
      if (bd.nodes[x].leaf_edge >= 0) below[x].push_back(bd.nodes[x].leaf_edge);
      for (int y : bd.nodes[x].nbrs)
        if (y != bd.parent[x])
          below[x].insert(below[x].end(), below[y].begin(), below[y].end());
      if (x != bd.root_leaf) postorder.push_back(x);
    }
  }

  // boundaried remainder G_e \ S for the edge above node x
  BoundariedGraph host(int x, uint64_t smask) const {
    std::vector<int> verts;
    uint64_t vmask = 0;
    for (int ei : below[x]) {
      vmask |= 1ull << bd.graph_edges[ei].first;
      vmask |= 1ull << bd.graph_edges[ei].second;
    }
    vmask &= ~smask;
    std::vector<int> old_to_new(g.n, -1);
    for (int v = 0; v < g.n; ++v)
      if (vmask >> v & 1) {
        old_to_new[v] = (int)verts.size();
        verts.push_back(v);
      }
    BoundariedGraph h;
    h.g = Graph((int)verts.size());
    for (int ei : below[x]) {
      auto [u, v] = bd.graph_edges[ei];
      if (old_to_new[u] >= 0 && old_to_new[v] >= 0) h.g.add_edge(old_to_new[u], old_to_new[v]);
    }
    int next_label = 1;
    for (int v : bd.mids[x])
      if (!(smask >> v & 1)) {
        h.boundary.push_back(old_to_new[v]);
        h.labels.push_back(next_label++);
      }
    return h;
  }
};

// Displayed-recurrence folio of an internal cell: the union over pairs of
// child full-label folio members of the folio of the relabeled, merged,
// boundary-restricted pair. Used by tests to validate the representative
// computation; returns the sorted canonical keys of the full-label members.
inline std::vector<BKey> cell_folio_union(const FolioDpState& st, const Family& fam, int r,
                                          int x, int c1, int c2, uint64_t m1, uint64_t m2) {
  auto labels_of = [&](int node, uint64_t smask) {
    std::vector<int> z;  // surviving boundary ids, ascending (= rho order)
    for (int v : st.bd.mids[node])
      if (!(smask >> v & 1)) z.push_back(v + 1);  // rho(v) = v + 1
    return z;
  };
  std::vector<int> z1 = labels_of(c1, m1), z2 = labels_of(c2, m2);
  std::vector<int> z = labels_of(x, m1 | m2);
  auto f1 = folio_full_members(st.host(c1, m1), fam, r);
  auto f2 = folio_full_members(st.host(c2, m2), fam, r);
  std::set<BKey> out;
  for (const auto& b1 : f1)
    for (const auto& b2 : f2) {
      BoundariedGraph merged = merge(relabel(b1, z1), relabel(b2, z2));
      BoundariedGraph host = restrict_boundary(merged, z);
      // normalize labels to ranks within z
      for (auto& l : host.labels)
        l = (int)(std::lower_bound(z.begin(), z.end(), l) - z.begin()) + 1;
      if (contains_family_tm(fam.members, host.g)) continue;
      for (const auto& m : folio_full_members(host, fam, r)) out.insert(canonical_bkey(m));
    }
  return {out.begin(), out.end()};
}

}  // namespace detail

inline Solution solve_tm_folio(const Graph& g, const Family& f, const BranchDecomposition& bd,
                               const FolioOptions& opts_in = {}) {
  validate_family(f);
  FolioOptions opts = opts_in;
  if (const char* env = std::getenv("FDELETE_MAX_WIDTH"))
    opts.max_boundary = std::max(opts.max_boundary, std::atoi(env) + 2);
  if (g.n > 64) throw CapabilityError("solve_tm_folio: more than 64 vertices");

  // a one-vertex member forces deleting everything
  for (const auto& h : f.members)
    if (h.n == 1) {
      Solution s;
      s.optimum = g.n;
      for (int v = 0; v < g.n; ++v) s.witness.push_back(v);
      return s;
    }
  if (g.edge_count() == 0) return {0, {}};  // connected members need an edge

  for (size_t x = 0; x < bd.nodes.size(); ++x)
    if ((int)x != bd.root_leaf && !bd.nodes[x].nbrs.empty() &&
        (int)bd.mids[x].size() > opts.max_boundary)
      throw CapabilityError("solve_tm_folio: boundary exceeds capability cap");

  int d = family_size(f);
  detail::FolioEngine eng(f, d, opts.max_members);
  detail::FolioDpState st(g, bd);

  // cell tables: (L mask, folio id) -> best deletion mask
  using Table = std::map<std::pair<uint64_t, int>, uint64_t>;
  std::vector<Table> tables(bd.nodes.size());

  auto upsert = [&](Table& t, uint64_t lmask, int fid, uint64_t smask) {
    auto [it, fresh] = t.emplace(std::make_pair(lmask, fid), smask);
    if (fresh) return;
    int pa = __builtin_popcountll(smask), pb = __builtin_popcountll(it->second);
    if (pa < pb || (pa == pb && lex_less(smask, it->second))) it->second = smask;
  };

  int answer_node = -1;
  for (int x : st.postorder) {
    auto rmask_of = [&](int node) {
      uint64_t m = 0;
      for (int v : bd.mids[node]) m |= 1ull << v;
      return m;
    };
    uint64_t rmask = rmask_of(x);
    Table& tab = tables[x];
    if (bd.nodes[x].leaf_edge >= 0) {
      auto [u, v] = bd.graph_edges[bd.nodes[x].leaf_edge];
      for (int su = 0; su < 2; ++su)
        for (int sv = 0; sv < 2; ++sv) {
          uint64_t smask = (su ? 1ull << u : 0) | (sv ? 1ull << v : 0);
          int fid = eng.host_folio(st.host(x, smask));
          if (fid < 0) continue;
          upsert(tab, smask & rmask, fid, smask);
        }
    } else {
      std::vector<int> kids;
      for (int y : bd.nodes[x].nbrs)
        if (y != bd.parent[x]) kids.push_back(y);
      if (kids.size() != 2) throw std::logic_error("solve_tm_folio: non-ternary tree node");
      uint64_t r1 = rmask_of(kids[0]), r2 = rmask_of(kids[1]);
      uint64_t fmask = (r1 | r2) & ~rmask;
      for (const auto& [k1, m1] : tables[kids[0]])
        for (const auto& [k2, m2] : tables[kids[1]]) {
          uint64_t l1 = k1.first, l2 = k2.first;
          if ((l1 & fmask) != (l2 & fmask)) continue;
          uint64_t l = (l1 | l2) & rmask;
          if ((l1 & ~fmask) != (l & r1) || (l2 & ~fmask) != (l & r2)) continue;
          uint64_t smask = m1 | m2;
          int fid = eng.host_folio(st.host(x, smask));
          if (fid < 0) continue;
          upsert(tab, l, fid, smask);
          if (tab.size() > opts.max_cells)
            throw CapabilityError("solve_tm_folio: table exceeds capability cap");
        }
      tables[kids[0]].clear();
      tables[kids[1]].clear();
    }
    if (bd.parent[x] == bd.root_leaf) answer_node = x;
  }
  if (answer_node < 0 || tables[answer_node].empty())
    throw std::logic_error("solve_tm_folio: no root cell");

  bool have = false;
  uint64_t best = 0;
  for (const auto& [key, smask] : tables[answer_node]) {
    if (key.first != 0) throw std::logic_error("solve_tm_folio: root boundary not empty");
    int pa = __builtin_popcountll(smask);
    if (!have || pa < __builtin_popcountll(best) ||
        (pa == __builtin_popcountll(best) && lex_less(smask, best))) {
      best = smask;
      have = true;
    }
  }
  Solution s;
  s.witness = mask_to_set(best);
  s.optimum = (int)s.witness.size();
  return s;
}

inline Solution solve_tm_folio(const Graph& g, const Family& f,
                               const FolioOptions& opts = {}) {
  if (g.edge_count() == 0) return solve_tm_folio(g, f, BranchDecomposition{}, opts);
  return solve_tm_folio(g, f, td_to_branch(heuristic_td(g), g), opts);
}

// Minor-mode wrapper: deleting all minors of the family equals deleting all
// topological minors of the minimal pre-models of its members.
inline Solution solve_minor(const Graph& g, const Family& f, const BranchDecomposition& bd,
                            const FolioOptions& opts = {}) {
  validate_family(f);
  Family ftm{f.name + "-tpm", tpm_family(f.members)};
  return solve_tm_folio(g, ftm, bd, opts);
}

inline Solution solve_minor(const Graph& g, const Family& f, const FolioOptions& opts = {}) {
  validate_family(f);
  Family ftm{f.name + "-tpm", tpm_family(f.members)};
  return solve_tm_folio(g, ftm, opts);
}

}  // namespace fdelete
