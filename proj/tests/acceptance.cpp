// End-to-end acceptance suite. Each check prints exactly one PASS/FAIL line;
// the exit status is the number of failing checks. Runs the solvers against
// independent brute-force oracles and validates the generated hard instances.
#include <chrono>
#include <cstdio>
#include <functional>

#include "fdelete/dp_folio.hpp"
#include "fdelete/hardness.hpp"
#include "fdelete/solve.hpp"
#include "fdelete/wpart.hpp"
#include "helpers.hpp"

using namespace fdelete;

namespace {

int td_width(const TreeDecomposition& td) {
  size_t mx = 1;
  for (const auto& b : td.bags) mx = std::max(mx, b.size());
  return (int)mx - 1;
}

// exact vertex cover number by cardinality-ordered subset search
int vc_number(const Graph& g) {
  auto edges = g.edges();
  for (int k = 0;; ++k) {
    std::vector<int> sel(g.n, 0);
    std::fill(sel.begin(), sel.begin() + k, 1);
    do {
      bool covers = true;
      for (auto [u, v] : edges)
        if (!sel[u] && !sel[v]) {
          covers = false;
          break;
        }
      if (covers) return k;
    } while (std::prev_permutation(sel.begin(), sel.end()));
  }
}

// all set partitions of {0..n-1} as restricted-growth strings
std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  Partition cur(n, 0);
  std::function<void(int, int)> rec = [&](int i, int mx) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (int b = 0; b <= mx + 1; ++b) {
      cur[i] = b;
      rec(i + 1, std::max(mx, b));
    }
  };
  if (n == 0) return {Partition{}};
  rec(0, -1);
  return out;
}

// band graph: random edges between vertices at distance <= band (width <= band)
Graph band_graph(int n, int band, double p, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);  // keep it connected
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n && j <= i + band; ++j)
      if (dist(rng) < p) g.add_edge(i, j);
  return g;
}

// graphs whose C4-freeness was certified by the oracle's containment test;
// checked against the sparsity bound in criterion 5
std::vector<Graph> certified_c4_free;

bool crit1_characterizations() {
  Graph p3 = path_graph(3), p4 = path_graph(4), c4 = cycle_graph(4);
  for (int n = 0; n <= 6; ++n)
    for (const auto& g : all_graphs(n)) {
      bool c4free = !is_topological_minor_generic(c4, g);
      if (is_p3_free(g) != !is_topological_minor_generic(p3, g)) return false;
      if (is_p4_free(g) != !is_topological_minor_generic(p4, g)) return false;
      if (c4_condition(g) != c4free) return false;
      if (c4free) certified_c4_free.push_back(g);
    }
  return true;
}

bool check_bespoke(const Graph& g, const Family& f) {
  auto want = min_deletion_bruteforce(g, f, Mode::tm);
  auto td = heuristic_td(g);
  DpResult got;
  if (f.name == "c4") {
    got = solve_c4(g, td);
  } else {
    auto ntd = make_nice(td, g);
    got = f.name == "p3" ? solve_p3(g, ntd) : solve_p4(g, ntd);
  }
  if (got.optimum != want.optimum) return false;
  if (!verify_solution(g, f, Mode::tm, got.witness)) return false;
  if (f.name == "c4") {
    Graph rest = delete_vertices(g, got.witness);
    certified_c4_free.push_back(rest);
  }
  return true;
}

bool crit2_bespoke_vs_oracle() {
  for (int n = 0; n <= 6; ++n)
    for (const auto& g : all_graphs(n))
      for (const auto& f : {family_p3(), family_p4(), family_c4()})
        if (!check_bespoke(g, f)) return false;
  for (const auto& f : {family_p3(), family_p4(), family_c4()})
    for (int n : {8, 9, 10}) {
      if (f.name == "c4" && n > 9) continue;
      for (uint64_t i = 0; i < 200; ++i) {
        double p = 0.15 + 0.05 * (double)(i % 5);
        Graph g = testing::random_graph(n, p, 1000 * (uint64_t)n + i);
        if (!check_bespoke(g, f)) return false;
      }
    }
  return true;
}

bool crit3_folio_vs_oracle() {
  std::vector<Family> tm_fams = {{"p3s", {path_graph(3)}},
                                 {"c3s", {cycle_graph(3)}},
                                 {"c4s", {cycle_graph(4)}},
                                 {"k3s", {complete_graph(3)}}};
  int found = 0;
  for (uint64_t seed = 0; found < 100; ++seed) {
    if (seed > 5000) return false;  // generator starved
    int n = 4 + (int)(seed % 5);
    Graph g = testing::random_graph(n, 0.35, 7000 + seed);
    if (td_width(heuristic_td(g)) > 3) continue;
    ++found;
    for (const auto& f : tm_fams) {
      auto got = solve_tm_folio(g, f);
      if (got.optimum != min_deletion_bruteforce(g, f, Mode::tm).optimum) return false;
      if (!verify_solution(g, f, Mode::tm, got.witness)) return false;
    }
  }
  std::vector<Family> mfams = {{"k4s", {complete_graph(4)}}, {"c4s", {cycle_graph(4)}}};
  for (uint64_t i = 0; i < 50; ++i) {
    int n = 4 + (int)(i % 4);
    Graph g = testing::random_graph(n, 0.4, 8400 + i);
    for (const auto& f : mfams) {
      auto got = g.edge_count() == 0 ? solve_minor(g, f)
                                     : solve_minor(g, f, td_to_branch(heuristic_td(g), g));
      if (got.optimum != min_deletion_bruteforce(g, f, Mode::minor).optimum) return false;
      if (!verify_solution(g, f, Mode::minor, got.witness)) return false;
    }
  }
  return true;
}

bool crit4_reduce_preserves_opt() {
  std::mt19937_64 rng(424242);
  for (int iter = 0; iter < 500; ++iter) {
    int n = 1 + (int)(rng() % 5);
    int sz = 1 + (int)(rng() % 24);
    WeightedPartitions a;
    for (int i = 0; i < sz; ++i) {
      Partition p(n);
      for (int& b : p) b = (int)(rng() % n);
      canonicalize(p);
      a.emplace_back(std::move(p), (int64_t)(rng() % 101));
    }
    a = rmc(std::move(a));
    WeightedPartitions r = reduce(a);
    if (r.size() > (size_t)1 << n) return false;
    for (const auto& q : all_partitions(n))
      if (opt(q, a) != opt(q, r)) return false;
  }
  return true;
}

bool crit5_edge_bound() {
  if (certified_c4_free.empty()) return false;
  for (const auto& g : certified_c4_free)
    if (g.n > 0 && 2 * g.edge_count() > 3 * (g.n - 1)) return false;
  return true;
}

bool crit6_choice_gadget() {
  for (const auto& f : {Family{"p6", {path_graph(6)}}, Family{"k4", {complete_graph(4)}}})
    for (int s : {2, 3}) {
      auto inst = choice_gadget(f, s);
      if (min_deletion_bruteforce(inst.graph, f, Mode::tm, {40}).optimum != 2 * s) return false;
      const auto& xs = inst.registry.at("xs");
      std::vector<int> z(2 * s + 2);  // the z's follow the xs in creation order
      for (int i = 0; i < 2 * s + 2; ++i) z[i] = s + i;
      for (int i = 1; i <= s; ++i) {
        auto sol = choice_gadget_solution(xs, z, i);
        if ((int)sol.size() != 2 * s) return false;
        if (std::find(sol.begin(), sol.end(), xs[i - 1]) != sol.end()) return false;
        if (!verify_solution(inst.graph, f, Mode::tm, sol)) return false;
      }
    }
  return true;
}

bool crit7_forward_soundness() {
  struct Case {
    Family f;
    Completion comp;
  };
  std::vector<Case> cases = {{{"p6", {path_graph(6)}}, {Completion::paths, 6}},
                             {{"p7", {path_graph(7)}}, {Completion::paths, 7}},
                             {{"k4", {complete_graph(4)}}, {Completion::kclass, 0}},
                             {{"c5", {cycle_graph(5)}}, {Completion::kclass, 0}}};
  int k = 2;
  for (size_t ci = 0; ci < cases.size(); ++ci)
    for (uint64_t i = 0; i < 10; ++i) {
      auto [grid, planted] = random_permclique_grid(k, 0.5, 100 * (ci + 1) + i);
      auto pc = general_construction(grid, k, cases[ci].f, cases[ci].comp);
      auto sigmas = all_permutation_cliques(grid, k);
      if (sigmas.empty()) return false;  // the planted clique is always there
      for (const auto& sigma : sigmas) {
        auto sol = sigma_solution(pc, sigma);
        if ((int)sol.size() != 3 * (int)pc.pc_edges.size() + 2 * k * k) return false;
        if ((int)sol.size() != pc.inst.budget) return false;
        if (!verify_solution(pc.inst.graph, cases[ci].f, Mode::tm, sol)) return false;
      }
    }
  return true;
}

bool crit8_vc_equivalence() {
  std::vector<Family> fams = {{"k4", {complete_graph(4)}},
                              {"c5", {cycle_graph(5)}},
                              {"p6", {path_graph(6)}}};
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : all_graphs(n)) {
      if (component_count(g) != 1) continue;
      int vc = vc_number(g);
      for (const auto& f : fams) {
        auto inst = vc_reduction(g, f);
        if (min_deletion_bruteforce(inst.graph, f, Mode::tm, {40}).optimum != vc) return false;
      }
    }
  return true;
}

bool crit9_scaling() {
  using clock = std::chrono::steady_clock;
  {
    Graph g = band_graph(200, 8, 0.35, 99001);
    auto td = heuristic_td(g);
    if (td_width(td) > 8) return false;
    auto t0 = clock::now();
    auto r = solve_p3(g, make_nice(td, g));
    double s = std::chrono::duration<double>(clock::now() - t0).count();
    if (s >= 60.0) return false;
    if (!verify_solution(g, family_p3(), Mode::tm, r.witness)) return false;
  }
  {
    Graph g = band_graph(60, 5, 0.4, 99002);
    auto td = heuristic_td(g);
    if (td_width(td) > 5) return false;
    auto t0 = clock::now();
    // time the DP itself; witness recovery is by self-reduction (many re-solves)
    auto r = solve_c4(g, td, /*want_witness=*/false);
    double s = std::chrono::duration<double>(clock::now() - t0).count();
    if (s >= 600.0) return false;
    if (r.optimum < 0 || r.optimum > g.n) return false;
  }
  return true;
}

}  // namespace

int main() {
  struct Check {
    const char* name;
    bool (*fn)();
  };
  // note: the p3/p4/c4 table-size and post-reduce bounds are enforced by
  // assert() inside the solvers; this binary must be built with asserts on
  Check checks[] = {
      {"1 structural characterizations vs brute force (n <= 6)", crit1_characterizations},
      {"2 bespoke DPs vs oracle (exhaustive n <= 6 + random n in 8..10)", crit2_bespoke_vs_oracle},
      {"3 folio DP (tm and minor) vs oracle on random graphs", crit3_folio_vs_oracle},
      {"4 reduce preserves opt(q, .) with at most 2^|U| survivors", crit4_reduce_preserves_opt},
      {"5 certified c4-free graphs satisfy m <= 3(n-1)/2", crit5_edge_bound},
      {"6 choice gadgets: optimum 2s, each x_i spared by some optimum", crit6_choice_gadget},
      {"7 permutation-clique solutions verify at budget 3|E|+2k^2", crit7_forward_soundness},
      {"8 vertex-cover reduction preserves the optimum (n <= 5)", crit8_vc_equivalence},
      {"9 scaling: p3 n=200 width<=8 < 60s, c4 n=60 width<=5 < 600s", crit9_scaling},
  };
  int failures = 0;
  for (const auto& c : checks) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.fn();
    } catch (const std::exception& e) {
      std::fprintf(stderr, "criterion %s raised: %s\n", c.name, e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %s: %s (%.1fs)\n", c.name, ok ? "PASS" : "FAIL", secs);
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  return failures;
}
