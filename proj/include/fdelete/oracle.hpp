// Ground-truth solver: exhaustive search over deletion sets in cardinality
// order, plus a solution verifier.
#pragma once

#include "fdelete/errors.hpp"
#include "fdelete/family.hpp"
#include "fdelete/pattern.hpp"

namespace fdelete {

struct Solution {
  int optimum = 0;
  std::vector<int> witness;  // sorted vertex ids
};

inline bool family_free(const Graph& g, const Family& f, Mode mode) {
  return mode == Mode::tm ? !contains_family_tm(f.members, g)
                          : !contains_family_minor(f.members, g);
}

inline bool verify_solution(const Graph& g, const Family& f, Mode mode,
                            const std::vector<int>& s) {
  for (int v : s)
    if (!g.valid_vertex(v)) throw std::invalid_argument("verify_solution: bad vertex id");
  return family_free(delete_vertices(g, s), f, mode);
}

struct OracleOptions {
  int max_n = 14;  // refuse larger instances unless the caller raises the cap
};

// Minimum deletion set; among optima returns the lexicographically smallest
// (subsets enumerated by cardinality, then lexicographically).
inline Solution min_deletion_bruteforce(const Graph& g, const Family& f, Mode mode,
                                        OracleOptions opts = {}) {
  validate_family(f);
  if (g.n > opts.max_n)
    throw CapabilityError("oracle: instance has " + std::to_string(g.n) +
                          " vertices, cap is " + std::to_string(opts.max_n));
  for (int k = 0; k <= g.n; ++k) {
    // combinations of {0..n-1} of size k in lexicographic order
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    while (true) {
      if (family_free(delete_vertices(g, comb), f, mode)) return {k, comb};
      // next combination
      int i = k - 1;
      while (i >= 0 && comb[i] == g.n - k + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  // unreachable: deleting everything always works
  throw std::logic_error("oracle: no solution found");
}

}  // namespace fdelete
