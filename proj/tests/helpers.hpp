// Test-only helpers: exact treewidth by subset DP, deterministic RNG graphs.
#pragma once

#include <random>

#include "fdelete/graph.hpp"

namespace fdelete::testing {

// Exact treewidth via elimination-order subset DP (n <= ~16).
// Q(S, v): neighbors of v outside S reachable from v through S.
inline int exact_treewidth(const Graph& g) {
  int n = g.n;
  if (n == 0) return -1;
  auto q_size = [&](uint32_t S, int v) {
    uint32_t vis = S | (1u << v);
    std::vector<int> stack{v};
    uint32_t out = 0;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.adj[u]) {
        if (S >> w & 1) {
          if (!(vis >> w & 1)) {
            vis |= 1u << w;
            stack.push_back(w);
          }
        } else {
          out |= 1u << w;
        }
      }
    }
    out &= ~(1u << v);
    return __builtin_popcount(out);
  };
  std::vector<int> f(1u << n, 0);
  for (uint32_t S = 1; S < (1u << n); ++S) {
    int best = n;
    for (int v = 0; v < n; ++v) {
      if (!(S >> v & 1)) continue;
      uint32_t R = S & ~(1u << v);
      best = std::min(best, std::max(q_size(R, v), f[R]));
    }
    f[S] = best;
  }
  return f[(1u << n) - 1];
}

// Deterministic Erdős–Rényi graph.
inline Graph random_graph(int n, double p, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (dist(rng) < p) g.add_edge(i, j);
  return g;
}

// Random connected graph: spanning tree plus extra random edges.
inline Graph random_connected_graph(int n, int extra_edges, uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, (int)(rng() % v));
  for (int i = 0; i < extra_edges; ++i) {
    int a = (int)(rng() % n), b = (int)(rng() % n);
    if (a != b) g.add_edge(a, b);
  }
  return g;
}

}  // namespace fdelete::testing
