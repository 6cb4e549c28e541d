// Treewidth DPs for {P3}- and {P4}-deletion over nice tree decompositions.
//
// The {P3} DP interprets G_t through the decomposition's edge-attribution
// map: the subgraph at node t consists of the edges attributed at or below
// t, so the two children of a join are edge-disjoint.  The {P4} DP instead
// uses full induced subgraphs (G_t = G[V_t]): a triangle's three edges
// would otherwise be attributed across the two sides of a join, and a
// pending-pair edge on one side could dangle off a triangle completed on
// the other side without any local check noticing.  With induced
// semantics both join children see every bag-internal edge, so such
// inconsistencies make one child's table entry infeasible.
#pragma once

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>

#include "fdelete/decomp.hpp"
#include "fdelete/errors.hpp"
#include "fdelete/graph.hpp"

namespace fdelete {

struct DpResult {
  int optimum = 0;
  std::vector<int> witness;  // sorted vertex ids
};

namespace detail {

constexpr int32_t kInf = std::numeric_limits<int32_t>::max() / 4;

struct PathNodeCtx {
  std::vector<int> bag;
  std::vector<uint32_t> adjm;  // per bag position: adjacent positions
                               // via edges attributed at or below the node
};

inline int bag_pos(const std::vector<int>& bag, int v) {
  return (int)(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

// Accumulated bag-edge sets and position adjacency per node.
inline std::vector<PathNodeCtx> build_path_ctx(const Graph& g,
                                               const NiceTreeDecomposition& ntd) {
  size_t N = ntd.nodes.size();
  std::vector<std::vector<Edge>> acc(N);  // edges attributed below, both ends in bag
  std::vector<PathNodeCtx> ctx(N);
  for (size_t i = 0; i < N; ++i) {
    const auto& nd = ntd.nodes[i];
    if (nd.child >= (int)i || nd.child2 >= (int)i)
      throw std::invalid_argument("dp: nice decomposition nodes not in bottom-up order");
    switch (nd.kind) {
      case NiceNode::Leaf:
        break;
      case NiceNode::Introduce:
        acc[i] = acc[nd.child];
        for (auto e : nd.attributed) acc[i].push_back(e);
        break;
      case NiceNode::Forget:
        for (auto e : acc[nd.child])
          if (e.first != nd.v && e.second != nd.v) acc[i].push_back(e);
        break;
      case NiceNode::Join:
        acc[i] = acc[nd.child];
        for (auto e : acc[nd.child2]) acc[i].push_back(e);
        break;
    }
    ctx[i].bag = nd.bag;
    ctx[i].adjm.assign(nd.bag.size(), 0);
    for (auto [u, v] : acc[i]) {
      int pu = bag_pos(nd.bag, u), pv = bag_pos(nd.bag, v);
      ctx[i].adjm[pu] |= 1u << pv;
      ctx[i].adjm[pv] |= 1u << pu;
    }
  }
  return ctx;
}

// Per-node position adjacency of the full induced bag graph G[X_t].
inline std::vector<PathNodeCtx> build_induced_ctx(const Graph& g,
                                                  const NiceTreeDecomposition& ntd) {
  std::vector<PathNodeCtx> ctx(ntd.nodes.size());
  for (size_t i = 0; i < ntd.nodes.size(); ++i) {
    const auto& nd = ntd.nodes[i];
    if (nd.child >= (int)i || nd.child2 >= (int)i)
      throw std::invalid_argument("dp: nice decomposition nodes not in bottom-up order");
    int b = (int)nd.bag.size();
    ctx[i].bag = nd.bag;
    ctx[i].adjm.assign(b, 0);
    for (int p = 0; p < b; ++p)
      for (int q = p + 1; q < b; ++q)
        if (g.has_edge(nd.bag[p], nd.bag[q])) {
          ctx[i].adjm[p] |= 1u << q;
          ctx[i].adjm[q] |= 1u << p;
        }
  }
  return ctx;
}

inline int64_t ipow(int64_t b, int e) {
  int64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Base-B digit helpers.
template <int B>
inline int digit(int64_t st, int pos, const int64_t* pw) {
  return (int)(st / pw[pos] % B);
}
template <int B>
inline int64_t remove_digit(int64_t st, int pos, const int64_t* pw) {
  int64_t lo = st % pw[pos];
  int64_t hi = st / (pw[pos] * B);
  return lo + hi * pw[pos];
}
template <int B>
inline int64_t insert_digit(int64_t st, int pos, int d, const int64_t* pw) {
  int64_t lo = st % pw[pos];
  int64_t hi = st / pw[pos];
  return lo + (int64_t)d * pw[pos] + hi * pw[pos] * B;
}

inline void check_table_budget(const NiceTreeDecomposition& ntd, int base) {
  // FDELETE_MAX_WIDTH overrides the default memory-budget capability cap
  if (const char* env = std::getenv("FDELETE_MAX_WIDTH")) {
    int cap = std::atoi(env);
    for (const auto& nd : ntd.nodes)
      if ((int)nd.bag.size() - 1 > cap)
        throw CapabilityError("dp: decomposition width exceeds FDELETE_MAX_WIDTH");
    return;
  }
  long double total = 0;
  for (const auto& nd : ntd.nodes) total += powl((long double)base, (int)nd.bag.size());
  if (total > 4e8L)
    throw CapabilityError("dp: state tables would exceed the memory budget");
}

inline void validate_for_dp(const Graph& g, const NiceTreeDecomposition& ntd) {
  auto diag = validate_td(g, nice_to_td(ntd));
  if (!diag.ok) throw std::invalid_argument("dp: invalid decomposition: " + diag.message);
  if (ntd.root != (int)ntd.nodes.size() - 1)
    throw std::invalid_argument("dp: root must be the last node");
  if (!ntd.nodes[ntd.root].bag.empty())
    throw std::invalid_argument("dp: root bag must be empty");
  size_t attributed = 0;
  for (const auto& nd : ntd.nodes) attributed += nd.attributed.size();
  if (attributed != (size_t)g.edge_count())
    throw std::invalid_argument("dp: edge attribution incomplete");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// {P3}-deletion. State: per bag vertex one of {0: deleted, 1: isolated in
// G_t minus the solution, 2: has an edge}.
// ---------------------------------------------------------------------------

namespace detail {

struct P3Solver {
  const Graph& g;
  const NiceTreeDecomposition& ntd;
  std::vector<PathNodeCtx> ctx;
  std::vector<std::vector<int32_t>> tab;
  int64_t pw[32];

  explicit P3Solver(const Graph& g_, const NiceTreeDecomposition& ntd_)
      : g(g_), ntd(ntd_) {
    validate_for_dp(g, ntd);
    check_table_budget(ntd, 3);
    ctx = build_path_ctx(g, ntd);
    pw[0] = 1;
    for (int i = 1; i < 32; ++i) pw[i] = pw[i - 1] * 3;
    tab.resize(ntd.nodes.size());
  }

  int32_t introduce_value(size_t i, int64_t st) {
    const auto& nd = ntd.nodes[i];
    const auto& bag = ctx[i].bag;
    int b = (int)bag.size();
    int pv = bag_pos(bag, nd.v);
    const auto& cval = tab[nd.child];
    int tv = digit<3>(st, pv, pw);
    int64_t cst = remove_digit<3>(st, pv, pw);
    auto cpos = [&](int p) { return p < pv ? p : p - 1; };
    if (tv == 0) {
      int32_t r = cval[cst];
      return r >= kInf ? kInf : r + 1;
    }
    // neighbors of v in the bag not deleted under st
    int u = -1, cnt = 0;
    for (int p = 0; p < b; ++p)
      if ((ctx[i].adjm[pv] >> p & 1) && digit<3>(st, p, pw) != 0) {
        u = p;
        ++cnt;
      }
    if (tv == 1) return cnt == 0 ? cval[cst] : kInf;
    // tv == 2: exactly one live neighbor u, kept (not isolated) at the parent,
    // isolated at the child
    if (cnt != 1 || digit<3>(st, u, pw) != 2) return kInf;
    int64_t cst2 = cst - pw[cpos(u)];  // u: 2 -> 1
    return cval[cst2];
  }

  void join_table(size_t i) {
    const auto& nd = ntd.nodes[i];
    int b = (int)ctx[i].bag.size();
    const auto& A = tab[nd.child];
    const auto& B = tab[nd.child2];
    auto& out = tab[i];
    // per position combos (c1,c2) -> parent trit; shared deletion flagged
    struct Combo { int c1, c2, par, shared; };
    static const Combo combos[8] = {{0, 0, 0, 1}, {0, 1, 0, 0}, {0, 2, 0, 0},
                                    {1, 0, 0, 0}, {2, 0, 0, 0}, {1, 1, 1, 0},
                                    {1, 2, 2, 0}, {2, 1, 2, 0}};
    // iterative enumeration over 8^b combo words
    std::vector<int> word(b, 0);
    while (true) {
      int64_t c1 = 0, c2 = 0, par = 0;
      int shared = 0;
      for (int p = 0; p < b; ++p) {
        const Combo& c = combos[word[p]];
        c1 += c.c1 * pw[p];
        c2 += c.c2 * pw[p];
        par += c.par * pw[p];
        shared += c.shared;
      }
      int32_t a = A[c1], bb = B[c2];
      if (a < kInf && bb < kInf) {
        int32_t v = a + bb - shared;
        if (v < out[par]) out[par] = v;
      }
      int p = 0;
      while (p < b && word[p] == 7) word[p++] = 0;
      if (p == b) break;
      ++word[p];
    }
  }

  // find a child assignment realizing tab[i][st]; append deletions on the way
  void reconstruct(size_t i, int64_t st, std::vector<int>& out) {
    const auto& nd = ntd.nodes[i];
    switch (nd.kind) {
      case NiceNode::Leaf:
        return;
      case NiceNode::Introduce: {
        int pv = bag_pos(ctx[i].bag, nd.v);
        int tv = digit<3>(st, pv, pw);
        int64_t cst = remove_digit<3>(st, pv, pw);
        if (tv == 0) {
          out.push_back(nd.v);
          reconstruct(nd.child, cst, out);
        } else if (tv == 1) {
          reconstruct(nd.child, cst, out);
        } else {
          int b = (int)ctx[i].bag.size();
          int u = -1;
          for (int p = 0; p < b; ++p)
            if ((ctx[i].adjm[pv] >> p & 1) && digit<3>(st, p, pw) != 0) u = p;
          int cu = u < pv ? u : u - 1;
          reconstruct(nd.child, cst - pw[cu], out);
        }
        return;
      }
      case NiceNode::Forget: {
        int cv = bag_pos(ctx[nd.child].bag, nd.v);
        int32_t want = tab[i][st];
        for (int d = 0; d < 3; ++d) {
          int64_t cst = insert_digit<3>(st, cv, d, pw);
          if (tab[nd.child][cst] == want) {
            reconstruct(nd.child, cst, out);
            return;
          }
        }
        throw std::logic_error("p3: forget reconstruction failed");
      }
      case NiceNode::Join: {
        int b = (int)ctx[i].bag.size();
        int32_t want = tab[i][st];
        // enumerate child splits consistent with st
        std::vector<int> opts(b);  // option count per position
        struct Opt { int c1, c2, shared; };
        std::vector<std::vector<Opt>> per(b);
        for (int p = 0; p < b; ++p) {
          int t = digit<3>(st, p, pw);
          if (t == 0)
            per[p] = {{0, 0, 1}, {0, 1, 0}, {0, 2, 0}, {1, 0, 0}, {2, 0, 0}};
          else if (t == 1)
            per[p] = {{1, 1, 0}};
          else
            per[p] = {{1, 2, 0}, {2, 1, 0}};
        }
        std::vector<int> w(b, 0);
        while (true) {
          int64_t c1 = 0, c2 = 0;
          int shared = 0;
          for (int p = 0; p < b; ++p) {
            c1 += per[p][w[p]].c1 * pw[p];
            c2 += per[p][w[p]].c2 * pw[p];
            shared += per[p][w[p]].shared;
          }
          int32_t a = tab[nd.child][c1], bb = tab[nd.child2][c2];
          if (a < kInf && bb < kInf && a + bb - shared == want) {
            reconstruct(nd.child, c1, out);
            reconstruct(nd.child2, c2, out);
            return;
          }
          int p = 0;
          while (p < b && w[p] + 1 == (int)per[p].size()) w[p++] = 0;
          if (p == b) throw std::logic_error("p3: join reconstruction failed");
          ++w[p];
        }
      }
    }
  }

  DpResult run() {
    for (size_t i = 0; i < ntd.nodes.size(); ++i) {
      const auto& nd = ntd.nodes[i];
      int b = (int)nd.bag.size();
      int64_t sz = ipow(3, b);
      tab[i].assign(sz, kInf);
      switch (nd.kind) {
        case NiceNode::Leaf:
          tab[i][0] = 0;
          break;
        case NiceNode::Introduce:
          for (int64_t st = 0; st < sz; ++st) tab[i][st] = introduce_value(i, st);
          break;
        case NiceNode::Forget: {
          int cv = bag_pos(ctx[nd.child].bag, nd.v);
          for (int64_t st = 0; st < sz; ++st) {
            int32_t best = kInf;
            for (int d = 0; d < 3; ++d)
              best = std::min(best, tab[nd.child][insert_digit<3>(st, cv, d, pw)]);
            tab[i][st] = best;
          }
          break;
        }
        case NiceNode::Join:
          join_table(i);
          break;
      }
    }
    DpResult res;
    res.optimum = tab[ntd.root][0];
    reconstruct(ntd.root, 0, res.witness);
    // joins can report a shared deletion from both subtrees
    std::sort(res.witness.begin(), res.witness.end());
    res.witness.erase(std::unique(res.witness.begin(), res.witness.end()),
                      res.witness.end());
    return res;
  }
};

}  // namespace detail

inline DpResult solve_p3(const Graph& g, const NiceTreeDecomposition& ntd) {
  return detail::P3Solver(g, ntd).run();
}

// ---------------------------------------------------------------------------
// {P4}-deletion. Roles per bag vertex:
//   0: deleted (S)        1: future star leaf, isolated so far (S1+)
//   2: attached star leaf (S1-)   3: star center (S*)
//   4: triangle part, <=2 vertices so far (S3+)   5: completed triangle (S3-)
// ---------------------------------------------------------------------------

namespace detail {

struct P4Solver {
  const Graph& g;
  const NiceTreeDecomposition& ntd;
  std::vector<PathNodeCtx> ctx;
  std::vector<std::vector<int32_t>> tab;
  int64_t pw[26];

  explicit P4Solver(const Graph& g_, const NiceTreeDecomposition& ntd_)
      : g(g_), ntd(ntd_) {
    validate_for_dp(g, ntd);
    check_table_budget(ntd, 6);
    ctx = build_induced_ctx(g, ntd);
    pw[0] = 1;
    for (int i = 1; i < 26; ++i) pw[i] = pw[i - 1] * 6;
    tab.resize(ntd.nodes.size());
  }

  // live-neighborhood mask of position p under state st (neighbors not deleted)
  uint32_t live_nbrs(size_t i, int64_t st, int p, int b) {
    uint32_t m = 0;
    for (int q = 0; q < b; ++q)
      if ((ctx[i].adjm[p] >> q & 1) && digit<6>(st, q, pw) != 0) m |= 1u << q;
    return m;
  }

  int32_t introduce_value(size_t i, int64_t st) {
    const auto& nd = ntd.nodes[i];
    const auto& bag = ctx[i].bag;
    int b = (int)bag.size();
    int pv = bag_pos(bag, nd.v);
    const auto& cval = tab[nd.child];
    int role = digit<6>(st, pv, pw);
    int64_t cst = remove_digit<6>(st, pv, pw);
    auto cp = [&](int p) { return p < pv ? p : p - 1; };
    uint32_t nb = live_nbrs(i, st, pv, b);
    switch (role) {
      case 0: {
        int32_t r = cval[cst];
        return r >= kInf ? kInf : r + 1;
      }
      case 1:  // S1+: isolated
        return nb == 0 ? cval[cst] : kInf;
      case 2: {  // S1-: single neighbor z, a star center
        if (__builtin_popcount(nb) != 1) return kInf;
        int z = __builtin_ctz(nb);
        if (digit<6>(st, z, pw) != 3) return kInf;
        return cval[cst];
      }
      case 3: {  // S*: neighbors were S1+ at the child, now S1-
        int64_t c = cst;
        for (int q = 0; q < b; ++q)
          if (nb >> q & 1) {
            if (digit<6>(st, q, pw) != 2) return kInf;  // must be S1- at parent
            c -= pw[cp(q)];                             // child role 1 (2 -> 1)
          }
        return cval[c];
      }
      case 4: {  // S3+: isolated, or paired with exactly one S3+ partner
        if (nb == 0) return cval[cst];
        if (__builtin_popcount(nb) != 1) return kInf;
        int z = __builtin_ctz(nb);
        if (digit<6>(st, z, pw) != 4) return kInf;
        if (live_nbrs(i, st, z, b) != (1u << pv)) return kInf;  // N(z) = {v}
        return cval[cst];
      }
      case 5: {  // S3-: completes a triangle with z, z' (S3+ at the child)
        if (__builtin_popcount(nb) != 2) return kInf;
        int z = __builtin_ctz(nb);
        int z2 = 31 - __builtin_clz(nb);
        if (digit<6>(st, z, pw) != 5 || digit<6>(st, z2, pw) != 5) return kInf;
        if (live_nbrs(i, st, z, b) != ((1u << pv) | (1u << z2))) return kInf;
        if (live_nbrs(i, st, z2, b) != ((1u << pv) | (1u << z))) return kInf;
        int64_t c = cst - pw[cp(z)] - pw[cp(z2)];  // z, z': 5 -> 4
        return cval[c];
      }
    }
    return kInf;
  }

  void join_table(size_t i) {
    const auto& nd = ntd.nodes[i];
    int b = (int)ctx[i].bag.size();
    const auto& A = tab[nd.child];
    const auto& B = tab[nd.child2];
    auto& out = tab[i];
    struct Combo { int c1, c2, par; };
    static const Combo combos[10] = {{0, 0, 0}, {3, 3, 3}, {1, 1, 1}, {1, 2, 2},
                                     {2, 1, 2}, {2, 2, 2}, {4, 4, 4}, {4, 5, 5},
                                     {5, 4, 5}, {5, 5, 5}};
    std::vector<int> word(b, 0);
    while (true) {
      int64_t c1 = 0, c2 = 0, par = 0;
      uint32_t both2 = 0, both5 = 0, smask = 0;
      for (int p = 0; p < b; ++p) {
        const Combo& c = combos[word[p]];
        c1 += c.c1 * pw[p];
        c2 += c.c2 * pw[p];
        par += c.par * pw[p];
        if (c.c1 == 0) smask |= 1u << p;
        if (c.c1 == 2 && c.c2 == 2) both2 |= 1u << p;
        if (c.c1 == 5 && c.c2 == 5) both5 |= 1u << p;
      }
      int32_t a = A[c1], bb = B[c2];
      if (a < kInf && bb < kInf && join_checks(i, par, both2, both5, b)) {
        int32_t v = a + bb - __builtin_popcount(smask);
        if (v < out[par]) out[par] = v;
      }
      int p = 0;
      while (p < b && word[p] == 9) word[p++] = 0;
      if (p == b) break;
      ++word[p];
    }
  }

  // conditions evaluated on the joined state
  bool join_checks(size_t i, int64_t par, uint32_t both2, uint32_t both5, int b) {
    for (int p = 0; p < b; ++p) {
      if (both2 >> p & 1) {
        // exactly one live neighbor, a star center
        uint32_t nb = live_nbrs(i, par, p, b);
        if (__builtin_popcount(nb) != 1) return false;
        if (digit<6>(par, __builtin_ctz(nb), pw) != 3) return false;
      }
      if (both5 >> p & 1) {
        // some triangle with two other both-side S3- vertices
        bool found = false;
        for (int z = 0; z < b && !found; ++z) {
          if (z == p || !(both5 >> z & 1)) continue;
          if (!(ctx[i].adjm[p] >> z & 1)) continue;
          for (int z2 = z + 1; z2 < b && !found; ++z2) {
            if (z2 == p || !(both5 >> z2 & 1)) continue;
            if ((ctx[i].adjm[p] >> z2 & 1) && (ctx[i].adjm[z] >> z2 & 1)) found = true;
          }
        }
        if (!found) return false;
      }
    }
    return true;
  }

  void reconstruct(size_t i, int64_t st, std::vector<int>& out) {
    const auto& nd = ntd.nodes[i];
    switch (nd.kind) {
      case NiceNode::Leaf:
        return;
      case NiceNode::Introduce: {
        const auto& bag = ctx[i].bag;
        int b = (int)bag.size();
        int pv = bag_pos(bag, nd.v);
        int role = digit<6>(st, pv, pw);
        int64_t cst = remove_digit<6>(st, pv, pw);
        auto cp = [&](int p) { return p < pv ? p : p - 1; };
        uint32_t nb = live_nbrs(i, st, pv, b);
        if (role == 0) out.push_back(nd.v);
        if (role == 3)
          for (int q = 0; q < b; ++q)
            if (nb >> q & 1) cst -= pw[cp(q)];
        if (role == 5) {
          int z = __builtin_ctz(nb), z2 = 31 - __builtin_clz(nb);
          cst -= pw[cp(z)] + pw[cp(z2)];
        }
        reconstruct(nd.child, cst, out);
        return;
      }
      case NiceNode::Forget: {
        int cv = bag_pos(ctx[nd.child].bag, nd.v);
        int32_t want = tab[i][st];
        for (int d : {0, 2, 3, 5}) {
          int64_t cst = insert_digit<6>(st, cv, d, pw);
          if (tab[nd.child][cst] == want) {
            reconstruct(nd.child, cst, out);
            return;
          }
        }
        throw std::logic_error("p4: forget reconstruction failed");
      }
      case NiceNode::Join: {
        int b = (int)ctx[i].bag.size();
        int32_t want = tab[i][st];
        struct Opt { int c1, c2; };
        std::vector<std::vector<Opt>> per(b);
        for (int p = 0; p < b; ++p) {
          int t = digit<6>(st, p, pw);
          if (t == 0) per[p] = {{0, 0}};
          else if (t == 1) per[p] = {{1, 1}};
          else if (t == 2) per[p] = {{1, 2}, {2, 1}, {2, 2}};
          else if (t == 3) per[p] = {{3, 3}};
          else if (t == 4) per[p] = {{4, 4}};
          else per[p] = {{4, 5}, {5, 4}, {5, 5}};
        }
        std::vector<int> w(b, 0);
        while (true) {
          int64_t c1 = 0, c2 = 0;
          uint32_t both2 = 0, both5 = 0, smask = 0;
          for (int p = 0; p < b; ++p) {
            c1 += per[p][w[p]].c1 * pw[p];
            c2 += per[p][w[p]].c2 * pw[p];
            if (per[p][w[p]].c1 == 0) smask |= 1u << p;
            if (per[p][w[p]].c1 == 2 && per[p][w[p]].c2 == 2) both2 |= 1u << p;
            if (per[p][w[p]].c1 == 5 && per[p][w[p]].c2 == 5) both5 |= 1u << p;
          }
          int32_t a = tab[nd.child][c1], bb = tab[nd.child2][c2];
          if (a < kInf && bb < kInf && a + bb - __builtin_popcount(smask) == want &&
              join_checks(i, st, both2, both5, b)) {
            reconstruct(nd.child, c1, out);
            reconstruct(nd.child2, c2, out);
            return;
          }
          int p = 0;
          while (p < b && w[p] + 1 == (int)per[p].size()) w[p++] = 0;
          if (p == b) throw std::logic_error("p4: join reconstruction failed");
          ++w[p];
        }
      }
    }
  }

  DpResult run() {
    for (size_t i = 0; i < ntd.nodes.size(); ++i) {
      const auto& nd = ntd.nodes[i];
      int b = (int)nd.bag.size();
      int64_t sz = ipow(6, b);
      tab[i].assign(sz, kInf);
      switch (nd.kind) {
        case NiceNode::Leaf:
          tab[i][0] = 0;
          break;
        case NiceNode::Introduce:
          for (int64_t st = 0; st < sz; ++st) tab[i][st] = introduce_value(i, st);
          break;
        case NiceNode::Forget: {
          int cv = bag_pos(ctx[nd.child].bag, nd.v);
          for (int64_t st = 0; st < sz; ++st) {
            int32_t best = kInf;
            for (int d : {0, 2, 3, 5})
              best = std::min(best, tab[nd.child][insert_digit<6>(st, cv, d, pw)]);
            tab[i][st] = best;
          }
          break;
        }
        case NiceNode::Join:
          join_table(i);
          break;
      }
    }
    DpResult res;
    res.optimum = tab[ntd.root][0];
    reconstruct(ntd.root, 0, res.witness);
    // joins can report a shared deletion from both subtrees
    std::sort(res.witness.begin(), res.witness.end());
    res.witness.erase(std::unique(res.witness.begin(), res.witness.end()),
                      res.witness.end());
    return res;
  }
};

}  // namespace detail

inline DpResult solve_p4(const Graph& g, const NiceTreeDecomposition& ntd) {
  return detail::P4Solver(g, ntd).run();
}

}  // namespace fdelete
