// Boundaried graphs and their algebra: gluing, merging, boundary restriction,
// order-preserving relabeling, canonical forms, label-rooted topological-minor
// containment, universe enumeration, and folio computation.
//
// A boundaried graph is (G, R, lambda) where lambda injectively assigns
// positive labels to the boundary R. Containment of one boundaried graph in
// another maps a boundary vertex labeled l to the host vertex labeled l, and
// forbids host boundary vertices outside the image of the pattern boundary
// from serving as subdivision (path-internal) vertices. Matching by label
// rather than by boundary rank is what lets folio members with a proper
// subset of the host's labels record exactly which boundary vertices they
// touch; members with equal underlying graphs but different label sets stay
// distinct.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>

#include "fdelete/errors.hpp"
#include "fdelete/family.hpp"
#include "fdelete/graph.hpp"
#include "fdelete/iso.hpp"
#include "fdelete/pattern.hpp"

namespace fdelete {

struct BoundariedGraph {
  Graph g;
  std::vector<int> boundary;  // vertex ids, ordered by increasing label
  std::vector<int> labels;    // parallel, strictly increasing positive labels
};

inline void validate_boundaried(const BoundariedGraph& b) {
  if (b.boundary.size() != b.labels.size())
    throw std::invalid_argument("boundaried: boundary/labels size mismatch");
  std::vector<char> seen(b.g.n, 0);
  for (size_t i = 0; i < b.boundary.size(); ++i) {
    int v = b.boundary[i];
    if (!b.g.valid_vertex(v)) throw std::invalid_argument("boundaried: bad boundary vertex");
    if (seen[v]) throw std::invalid_argument("boundaried: repeated boundary vertex");
    seen[v] = 1;
    if (b.labels[i] <= 0) throw std::invalid_argument("boundaried: labels must be positive");
    if (i > 0 && b.labels[i] <= b.labels[i - 1])
      throw std::invalid_argument("boundaried: labels must be strictly increasing");
  }
}

inline BoundariedGraph boundaried_empty() { return {Graph(0), {}, {}}; }

// Wrap a plain graph with an empty boundary.
inline BoundariedGraph boundaried_of(const Graph& g) { return {g, {}, {}}; }

inline bool is_consecutive(const BoundariedGraph& b) {
  for (size_t i = 0; i < b.labels.size(); ++i)
    if (b.labels[i] != (int)i + 1) return false;
  return true;
}

// Position of the vertex carrying `label` in the boundary, or -1.
inline int label_position(const BoundariedGraph& b, int label) {
  auto it = std::lower_bound(b.labels.begin(), b.labels.end(), label);
  if (it == b.labels.end() || *it != label) return -1;
  return (int)(it - b.labels.begin());
}

// Relabel to the consecutive form 1..t, preserving label order.
inline BoundariedGraph normalize_labels(const BoundariedGraph& b) {
  BoundariedGraph r = b;
  for (size_t i = 0; i < r.labels.size(); ++i) r.labels[i] = (int)i + 1;
  return r;
}

// ---- algebra ---------------------------------------------------------------

// Merging: disjoint union with vertices of equal label identified.
inline BoundariedGraph merge(const BoundariedGraph& a, const BoundariedGraph& b) {
  validate_boundaried(a);
  validate_boundaried(b);
  std::vector<int> bmap(b.g.n, -1);  // b vertex -> merged vertex
  int next = a.g.n;
  for (size_t i = 0; i < b.boundary.size(); ++i) {
    int pos = label_position(a, b.labels[i]);
    if (pos >= 0) bmap[b.boundary[i]] = a.boundary[pos];
  }
  for (int v = 0; v < b.g.n; ++v)
    if (bmap[v] < 0) bmap[v] = next++;
  BoundariedGraph out;
  out.g = Graph(next);
  for (auto [u, v] : a.g.edges()) out.g.add_edge(u, v);
  for (auto [u, v] : b.g.edges()) out.g.add_edge(bmap[u], bmap[v]);
  // boundary = union of both, sorted by label
  std::map<int, int> by_label;  // label -> merged vertex
  for (size_t i = 0; i < a.boundary.size(); ++i) by_label[a.labels[i]] = a.boundary[i];
  for (size_t i = 0; i < b.boundary.size(); ++i) by_label[b.labels[i]] = bmap[b.boundary[i]];
  for (auto [lab, v] : by_label) {
    out.boundary.push_back(v);
    out.labels.push_back(lab);
  }
  return out;
}

// Gluing: identify equally ranked boundary vertices; result is a plain graph.
inline Graph glue(const BoundariedGraph& a, const BoundariedGraph& b) {
  if (a.boundary.size() != b.boundary.size())
    throw std::invalid_argument("glue: boundary sizes differ");
  return merge(normalize_labels(a), normalize_labels(b)).g;
}

// Boundary restriction |_I: keep only boundary vertices whose label is in I.
inline BoundariedGraph restrict_boundary(const BoundariedGraph& a, const std::vector<int>& I) {
  validate_boundaried(a);
  BoundariedGraph out;
  out.g = a.g;
  for (size_t i = 0; i < a.boundary.size(); ++i)
    if (std::find(I.begin(), I.end(), a.labels[i]) != I.end()) {
      out.boundary.push_back(a.boundary[i]);
      out.labels.push_back(a.labels[i]);
    }
  return out;
}

// Order-preserving relabeling: label l becomes I[l-1] (I sorted ascending).
// For a consecutive t-boundaried graph and |I| = t this is the paper-style
// diamond operation; label subsets ride along via the same monotone map.
inline BoundariedGraph relabel(const BoundariedGraph& a, const std::vector<int>& I_in) {
  validate_boundaried(a);
  std::vector<int> I = I_in;
  std::sort(I.begin(), I.end());
  if (std::adjacent_find(I.begin(), I.end()) != I.end())
    throw std::invalid_argument("relabel: repeated target labels");
  if (!I.empty() && I.front() <= 0) throw std::invalid_argument("relabel: labels must be positive");
  BoundariedGraph out = a;
  for (size_t i = 0; i < out.labels.size(); ++i) {
    int l = out.labels[i];
    if (l > (int)I.size()) throw std::invalid_argument("relabel: label exceeds target set size");
    out.labels[i] = I[l - 1];
  }
  return out;
}

// Boundary isomorphism: boundary-induced subgraphs agree under the
// rank-aligned map.
inline bool boundary_isomorphic(const BoundariedGraph& a, const BoundariedGraph& b) {
  if (a.boundary.size() != b.boundary.size()) return false;
  size_t t = a.boundary.size();
  for (size_t i = 0; i < t; ++i)
    for (size_t j = i + 1; j < t; ++j)
      if (a.g.has_edge(a.boundary[i], a.boundary[j]) !=
          b.g.has_edge(b.boundary[i], b.boundary[j]))
        return false;
  return true;
}

// ---- canonical forms ---------------------------------------------------------

using BKey = std::string;

namespace detail {

constexpr long long kBPermCap = 40320;  // exhaustive within-class permutations cap

// Key bytes: n, t, labels, then the lex-min upper-triangle adjacency bits over
// vertex orders that place the boundary first (rank order, fixed) and permute
// non-boundary vertices within isomorphism-invariant refinement classes.
inline BKey canonical_bkey_impl(const BoundariedGraph& b, bool* exact) {
  int n = b.g.n, t = (int)b.boundary.size();
  if (exact) *exact = true;
  BKey key;
  key.push_back((char)n);
  key.push_back((char)t);
  for (int l : b.labels) key.push_back((char)l);

  std::vector<int> psi(n, -1);  // vertex -> boundary rank, or -1
  for (int i = 0; i < t; ++i) psi[b.boundary[i]] = i;
  std::vector<int> internals;
  for (int v = 0; v < n; ++v)
    if (psi[v] < 0) internals.push_back(v);

  // refinement signature of an internal vertex
  auto signature = [&](int v) {
    std::vector<int> bnbrs, idegs;
    for (int u : b.g.adj[v])
      (psi[u] >= 0 ? bnbrs : idegs).push_back(psi[u] >= 0 ? psi[u] : b.g.degree(u));
    std::sort(bnbrs.begin(), bnbrs.end());
    std::sort(idegs.begin(), idegs.end());
    std::vector<int> sig{b.g.degree(v)};
    sig.insert(sig.end(), bnbrs.begin(), bnbrs.end());
    sig.push_back(-1);
    sig.insert(sig.end(), idegs.begin(), idegs.end());
    return sig;
  };
  std::sort(internals.begin(), internals.end(),
            [&](int x, int y) { return signature(x) < signature(y); });
  std::vector<std::vector<int>> classes;
  for (int v : internals) {
    if (!classes.empty() && signature(classes.back().back()) == signature(v))
      classes.back().push_back(v);
    else
      classes.push_back({v});
  }
  long long perms = 1;
  for (const auto& c : classes) {
    for (size_t i = 2; i <= c.size() && perms <= kBPermCap; ++i) perms *= (long long)i;
    if (perms > kBPermCap) break;
  }

  int pairs = n * (n - 1) / 2;
  auto encode = [&](const std::vector<int>& perm) {
    std::string bits((pairs + 7) / 8, '\0');
    int bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++bit)
        if (b.g.has_edge(perm[i], perm[j])) bits[bit >> 3] |= (char)(1 << (bit & 7));
    return bits;
  };

  std::vector<int> base = b.boundary;  // rank order first
  std::string best;
  if (perms > kBPermCap) {
    // deterministic but not canonical: acceptable for memoization keys only
    if (exact) *exact = false;
    std::vector<int> perm = base;
    for (const auto& c : classes) perm.insert(perm.end(), c.begin(), c.end());
    best = encode(perm);
  } else {
    bool first = true;
    std::vector<int> perm = base;
    auto rec = [&](auto&& self, size_t ci) -> void {
      if (ci == classes.size()) {
        std::string code = encode(perm);
        if (first || code < best) {
          best = std::move(code);
          first = false;
        }
        return;
      }
      auto cls = classes[ci];
      std::sort(cls.begin(), cls.end());
      do {
        size_t sz = perm.size();
        perm.insert(perm.end(), cls.begin(), cls.end());
        self(self, ci + 1);
        perm.resize(sz);
      } while (std::next_permutation(cls.begin(), cls.end()));
    };
    rec(rec, 0);
  }
  key += best;
  return key;
}

}  // namespace detail

inline BKey canonical_bkey(const BoundariedGraph& b, bool* exact = nullptr) {
  if (b.g.n > 127 || (!b.labels.empty() && b.labels.back() > 127))
    throw CapabilityError("canonical_bkey: graph too large to encode");
  return detail::canonical_bkey_impl(b, exact);
}

inline bool boundaried_isomorphic(const BoundariedGraph& a, const BoundariedGraph& b) {
  if (a.labels != b.labels || a.g.n != b.g.n || a.g.edge_count() != b.g.edge_count())
    return false;
  bool ea = false, eb = false;
  BKey ka = canonical_bkey(a, &ea), kb = canonical_bkey(b, &eb);
  if (!ea || !eb) throw CapabilityError("boundaried_isomorphic: too many symmetric vertices");
  return ka == kb;
}

// ---- label-rooted topological minors ----------------------------------------

namespace detail {

struct RootedTmSearch {
  const Graph& h;  // pattern (member underlying graph)
  const Graph& g;  // host underlying graph
  std::vector<Edge> hedges;
  std::vector<int> order;  // unpinned pattern vertices, high degree first
  std::vector<int> phi;
  std::vector<char> used;
  std::vector<char> no_internal;  // host vertices barred from path interiors

  RootedTmSearch(const Graph& h_, const Graph& g_) : h(h_), g(g_) {
    hedges = h.edges();
    phi.assign(h.n, -1);
    used.assign(g.n, 0);
    no_internal.assign(g.n, 0);
  }

  void finalize_order() {
    for (int v = 0; v < h.n; ++v)
      if (phi[v] < 0) order.push_back(v);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return h.degree(a) > h.degree(b); });
  }

  bool extend_path(size_t ei, int cur, int target, int budget) {
    if (g.has_edge(cur, target) && route(ei + 1)) return true;
    if (budget == 0) return false;
    for (int nb : g.adj[cur]) {
      if (nb == target || used[nb] || no_internal[nb]) continue;
      used[nb] = 1;
      bool ok = extend_path(ei, nb, target, budget - 1);
      used[nb] = 0;
      if (ok) return true;
    }
    return false;
  }

  bool route(size_t ei) {
    if (ei == hedges.size()) return true;
    auto [x, y] = hedges[ei];
    return extend_path(ei, phi[x], phi[y], g.n);
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

// Is `m` contained in `host` as a label-rooted topological minor? Boundary
// vertices of m map to the host vertices carrying the same label; host
// boundary vertices may serve as branch images of m's non-boundary vertices
// but never as subdivision vertices.
inline bool is_rooted_tm(const BoundariedGraph& m, const BoundariedGraph& host) {
  if (m.g.n > host.g.n || m.g.edge_count() > host.g.edge_count()) return false;
  detail::RootedTmSearch s(m.g, host.g);
  for (int v : host.boundary) s.no_internal[v] = 1;
  for (size_t i = 0; i < m.boundary.size(); ++i) {
    int pos = label_position(host, m.labels[i]);
    if (pos < 0) return false;
    int hv = host.boundary[pos];
    if (host.g.degree(hv) < m.g.degree(m.boundary[i])) return false;
    s.phi[m.boundary[i]] = hv;
    s.used[hv] = 1;
  }
  s.finalize_order();
  return s.assign(0);
}

// ---- universes and folios -----------------------------------------------------

namespace detail {

// All graphs with no family member as a topological minor, up to isomorphism,
// on 0..max_n vertices, grown one vertex at a time (the class is closed under
// vertex deletion, so level n-1 reaches every level-n graph).
inline std::vector<Graph> ex_tm_graphs(const Family& f, int max_n) {
  if (max_n > kCanonMaxN) throw CapabilityError("ex_tm_graphs: too many vertices");
  std::vector<Graph> out{Graph(0)};
  std::vector<Graph> level{Graph(0)};
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Graph> next;
    std::unordered_map<uint64_t, char> seen;
    for (const auto& base : level) {
      for (uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        Graph g = base;
        int v = g.add_vertex();
        for (int u = 0; u < n - 1; ++u)
          if (mask >> u & 1) g.add_edge(u, v);
        CanonKey k = canonical_key(g);
        if (!seen.emplace(k.code, 1).second) continue;
        if (contains_family_tm(f.members, g)) continue;
        next.push_back(std::move(g));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

}  // namespace detail

// The universe of possible folio members for boundary size t and at most r
// non-boundary vertices, with the one-step reduction DAG (delete one edge or
// one vertex) used to prune folio computations: containment is monotone, so a
// member can only be contained if all its reductions are.
struct Universe {
  Family family;
  int t = 0, r = 0;
  std::vector<BoundariedGraph> members;  // sorted by (n, m, key); labels in [1,t]
  std::vector<BKey> keys;
  std::unordered_map<BKey, int> index;
  std::vector<std::vector<int>> reductions;  // ids of one-step sub-members
};

inline Universe build_universe(const Family& f, int t, int r) {
  validate_family(f);
  if (t < 0 || r < 0) throw std::invalid_argument("build_universe: negative bound");
  if (t + r > kCanonMaxN) throw CapabilityError("build_universe: t + r too large");
  Universe u;
  u.family = f;
  u.t = t;
  u.r = r;

  // label subsets of [1,t] grouped by size
  std::vector<std::vector<std::vector<int>>> label_sets(t + 1);
  for (uint32_t m = 0; m < (1u << t); ++m) {
    std::vector<int> I;
    for (int l = 1; l <= t; ++l)
      if (m >> (l - 1) & 1) I.push_back(l);
    label_sets[I.size()].push_back(std::move(I));
  }

  std::vector<std::pair<std::pair<int, long long>, int>> order;  // ((n,m), id)
  for (const auto& g : detail::ex_tm_graphs(f, t + r)) {
    int n = g.n;
    for (uint32_t rmask = 0; rmask < (1u << n); ++rmask) {
      int bsz = __builtin_popcount(rmask);
      if (bsz > t || n - bsz > r) continue;
      std::vector<int> rverts;
      for (int v = 0; v < n; ++v)
        if (rmask >> v & 1) rverts.push_back(v);
      for (const auto& I : label_sets[bsz]) {
        std::vector<int> perm = rverts;
        std::sort(perm.begin(), perm.end());
        do {
          BoundariedGraph m{g, perm, I};
          BKey k = canonical_bkey(m);
          if (u.index.emplace(k, 0).second) {  // id fixed after sorting
            order.push_back({{n, g.edge_count()}, (int)u.members.size()});
            u.members.push_back(std::move(m));
            u.keys.push_back(std::move(k));
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    }
  }
  // sort members so every reduction precedes the member it reduces
  std::vector<int> ids(u.members.size());
  std::iota(ids.begin(), ids.end(), 0);
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    if (order[a].first != order[b].first) return order[a].first < order[b].first;
    return u.keys[a] < u.keys[b];
  });
  std::vector<BoundariedGraph> ms;
  std::vector<BKey> ks;
  for (int id : ids) {
    ms.push_back(std::move(u.members[id]));
    ks.push_back(std::move(u.keys[id]));
  }
  u.members = std::move(ms);
  u.keys = std::move(ks);
  for (size_t i = 0; i < u.keys.size(); ++i) u.index[u.keys[i]] = (int)i;

  // one-step reductions
  u.reductions.resize(u.members.size());
  for (size_t i = 0; i < u.members.size(); ++i) {
    const BoundariedGraph& m = u.members[i];
    std::vector<int> red;
    auto add_red = [&](const BoundariedGraph& s) {
      auto it = u.index.find(canonical_bkey(s));
      if (it == u.index.end()) throw std::logic_error("build_universe: missing reduction");
      if (it->second != (int)i) red.push_back(it->second);
    };
    for (auto [a, bb] : m.g.edges()) {
      BoundariedGraph s = m;
      s.g = Graph(m.g.n);
      for (auto [x, y] : m.g.edges())
        if (!(x == a && y == bb)) s.g.add_edge(x, y);
      add_red(s);
    }
    for (int v = 0; v < m.g.n; ++v) {
      BoundariedGraph s;
      std::vector<int> keep;
      for (int w = 0; w < m.g.n; ++w)
        if (w != v) keep.push_back(w);
      std::vector<int> old_to_new(m.g.n, -1);
      for (size_t j = 0; j < keep.size(); ++j) old_to_new[keep[j]] = (int)j;
      s.g = induced_subgraph(m.g, keep);
      for (size_t j = 0; j < m.boundary.size(); ++j)
        if (m.boundary[j] != v) {
          s.boundary.push_back(old_to_new[m.boundary[j]]);
          s.labels.push_back(m.labels[j]);
        }
      add_red(s);
    }
    std::sort(red.begin(), red.end());
    red.erase(std::unique(red.begin(), red.end()), red.end());
    u.reductions[i] = std::move(red);
  }
  return u;
}

// Spec-facing enumeration entry point with a configurable feasibility cap.
inline std::vector<BoundariedGraph> enumerate_universe(const Family& f, int t, int r,
                                                       int cap = 6) {
  if (t + r > cap) throw CapabilityError("enumerate_universe: t + r exceeds cap");
  return build_universe(f, t, r).members;
}

struct Folio {
  std::vector<int> members;  // sorted universe member ids
  bool family_hit = false;   // the family itself is a topological minor

  bool operator==(const Folio&) const = default;
};

// Folio of `b` against a prebuilt universe: the universe elements contained
// in b as label-rooted topological minors, plus the family-hit flag. The
// reduction DAG prunes containment tests: a member is tested only once all
// its one-step reductions are known to be contained.
inline Folio folio(const BoundariedGraph& b, const Universe& u) {
  validate_boundaried(b);
  Folio f;
  f.family_hit = contains_family_tm(u.family.members, b.g);
  std::vector<char> contained(u.members.size(), 0);
  for (size_t i = 0; i < u.members.size(); ++i) {
    bool feasible = true;
    for (int j : u.reductions[i])
      if (!contained[j]) {
        feasible = false;
        break;
      }
    if (!feasible) continue;
    if (is_rooted_tm(u.members[i], b)) {
      contained[i] = 1;
      f.members.push_back((int)i);
    }
  }
  return f;
}

// Convenience form building a throwaway universe (small inputs only).
inline Folio folio(const BoundariedGraph& b, const Family& f, int r, int cap = 6) {
  int t = b.labels.empty() ? 0 : b.labels.back();
  if (t + r > cap) throw CapabilityError("folio: t + r exceeds cap");
  return folio(b, build_universe(f, t, r));
}

}  // namespace fdelete
