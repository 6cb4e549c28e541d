// Canonical forms and isomorphism tests for small graphs (n <= 11).
#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "fdelete/graph.hpp"

namespace fdelete {

constexpr int kCanonMaxN = 11;  // 55 vertex pairs fit one uint64_t

// Upper-triangle bit encoding of the adjacency matrix under permutation perm,
// where perm[i] = original vertex placed at position i.
inline uint64_t encode_perm(const Graph& g, const std::vector<int>& perm) {
  uint64_t code = 0;
  int bit = 0;
  int n = (int)perm.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (g.has_edge(perm[i], perm[j])) code |= 1ull << bit;
  return code;
}

// Canonical key: (n, minimal upper-triangle code over all vertex orderings
// consistent with sorting by descending degree).
struct CanonKey {
  int n = 0;
  uint64_t code = 0;
  bool operator==(const CanonKey&) const = default;
  bool operator<(const CanonKey& o) const { return n != o.n ? n < o.n : code < o.code; }
};

struct CanonKeyHash {
  size_t operator()(const CanonKey& k) const {
    return std::hash<uint64_t>()(k.code * 1000003ull + (uint64_t)k.n);
  }
};

namespace detail {
inline void canon_rec(const Graph& g, std::vector<std::vector<int>>& classes, size_t ci,
                      std::vector<int>& perm, uint64_t& best, bool& first) {
  if (ci == classes.size()) {
    uint64_t code = encode_perm(g, perm);
    if (first || code < best) {
      best = code;
      first = false;
    }
    return;
  }
  auto& cls = classes[ci];
  std::sort(cls.begin(), cls.end());
  do {
    size_t base = perm.size();
    perm.insert(perm.end(), cls.begin(), cls.end());
    canon_rec(g, classes, ci + 1, perm, best, first);
    perm.resize(base);
  } while (std::next_permutation(cls.begin(), cls.end()));
  std::sort(cls.begin(), cls.end());
}
}  // namespace detail

inline CanonKey canonical_key(const Graph& g) {
  if (g.n > kCanonMaxN) throw std::invalid_argument("canonical_key: graph too large");
  // group vertices by descending degree; refine by sorted neighbor degrees
  std::vector<std::pair<std::vector<int>, int>> sig(g.n);
  for (int v = 0; v < g.n; ++v) {
    std::vector<int> nd;
    for (int u : g.adj[v]) nd.push_back(-g.degree(u));
    std::sort(nd.begin(), nd.end());
    sig[v] = {std::move(nd), v};
  }
  std::vector<int> order(g.n);
  for (int v = 0; v < g.n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::make_pair(-g.degree(a), sig[a].first) < std::make_pair(-g.degree(b), sig[b].first);
  });
  std::vector<std::vector<int>> classes;
  for (int v : order) {
    if (!classes.empty()) {
      int w = classes.back().back();
      if (g.degree(w) == g.degree(v) && sig[w].first == sig[v].first) {
        classes.back().push_back(v);
        continue;
      }
    }
    classes.push_back({v});
  }
  uint64_t best = 0;
  bool first = true;
  std::vector<int> perm;
  detail::canon_rec(g, classes, 0, perm, best, first);
  return {g.n, best};
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
  return canonical_key(a) == canonical_key(b);
}

// All graphs on exactly n vertices up to isomorphism (small n only).
inline std::vector<Graph> all_graphs(int n) {
  if (n > 7) throw std::invalid_argument("all_graphs: n too large");
  int pairs = n * (n - 1) / 2;
  std::vector<Edge> pe;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pe.push_back({i, j});
  std::vector<Graph> out;
  std::unordered_map<uint64_t, char> seen;  // dedup by canonical key
  for (uint64_t m = 0; m < (1ull << pairs); ++m) {
    Graph g(n);
    for (int b = 0; b < pairs; ++b)
      if (m >> b & 1) g.add_edge(pe[b].first, pe[b].second);
    CanonKey k = canonical_key(g);
    if (seen.emplace(k.code, 1).second) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace fdelete
