// Weighted partitions of a finite universe {0..n-1} and the representative-set
// machinery used by connectivity-sensitive dynamic programming: lattice
// operations (meet/coarsening), the union/insert/shift/glue/project/join
// operators, and a rank-based reduce that shrinks any family to at most
// 2^(n-1) entries while preserving opt(q, .) for every partition q.
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fdelete {

// Block index per element; canonical form numbers blocks by first appearance.
using Partition = std::vector<int>;
using WeightedPartitions = std::vector<std::pair<Partition, int64_t>>;

constexpr int64_t kNoOpt = std::numeric_limits<int64_t>::max() / 4;

inline void canonicalize(Partition& p) {
  int mx = -1;
  for (int b : p) {
    if (b < 0) throw std::invalid_argument("partition: bad block id");
    mx = std::max(mx, b);
  }
  std::vector<int> relabel(mx + 1, -1);
  int next = 0;
  for (int& b : p) {
    if (relabel[b] == -1) relabel[b] = next++;
    b = relabel[b];
  }
}

inline int block_count(const Partition& p) {
  int mx = -1;
  for (int b : p) mx = std::max(mx, b);
  return mx + 1;
}

inline Partition singleton_partition(int n) {
  Partition p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// U[S]: the elements of S in one block, everything else a singleton.
inline Partition block_partition(int n, const std::vector<int>& s) {
  Partition p(n, -1);
  for (int x : s) {
    if (x < 0 || x >= n) throw std::invalid_argument("partition: element out of range");
    p[x] = n;  // provisional shared id
  }
  int next = 0;
  bool named = false;
  int sid = -1;
  for (int i = 0; i < n; ++i) {
    if (p[i] == n) {
      if (!named) {
        sid = next++;
        named = true;
      }
      p[i] = sid;
    } else {
      p[i] = next++;
    }
  }
  return p;
}

// p is coarser than (or equal to) q: every block of q lies inside a block of p.
inline bool coarsens(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) throw std::invalid_argument("partition: size mismatch");
  std::vector<int> rep(q.size(), -1);
  for (size_t i = 0; i < q.size(); ++i) {
    if (rep[q[i]] == -1) rep[q[i]] = p[i];
    else if (rep[q[i]] != p[i]) return false;
  }
  return true;
}

// Meet in the coarsening lattice: blocks are the connected components of the
// union of the two partitions.
inline Partition meet(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) throw std::invalid_argument("partition: size mismatch");
  int n = (int)p.size();
  std::vector<int> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  auto unite = [&](int a, int b) { uf[find(a)] = find(b); };
  std::vector<int> firstp(n, -1), firstq(n, -1);
  for (int i = 0; i < n; ++i) {
    if (firstp[p[i]] == -1) firstp[p[i]] = i;
    else unite(i, firstp[p[i]]);
    if (firstq[q[i]] == -1) firstq[q[i]] = i;
    else unite(i, firstq[q[i]]);
  }
  Partition r(n);
  for (int i = 0; i < n; ++i) r[i] = find(i);
  canonicalize(r);
  return r;
}

// p restricted to the kept positions (sorted ascending): the down-arrow.
inline Partition restrict_to(const Partition& p, const std::vector<int>& keep) {
  Partition r;
  r.reserve(keep.size());
  for (int i : keep) {
    if (i < 0 || i >= (int)p.size()) throw std::invalid_argument("partition: element out of range");
    r.push_back(p[i]);
  }
  canonicalize(r);
  return r;
}

// The up-arrow: grow the universe, placing new singletons at the given
// positions of the NEW universe (sorted ascending).
inline Partition insert_singletons(const Partition& p, const std::vector<int>& positions) {
  int n = (int)p.size() + (int)positions.size();
  Partition r(n);
  size_t pi = 0, oi = 0;
  int fresh = (int)p.size();  // provisional ids above existing ones
  for (int i = 0; i < n; ++i) {
    if (pi < positions.size() && positions[pi] == i) {
      r[i] = fresh++;
      ++pi;
    } else {
      r[i] = p[oi++];
    }
  }
  if (pi != positions.size() || oi != p.size())
    throw std::invalid_argument("partition: bad insert positions");
  canonicalize(r);
  return r;
}

// ---------------------------------------------------------------------------
// Weighted partition families. All operators return rmc'ed, sorted families.
// ---------------------------------------------------------------------------

inline WeightedPartitions rmc(WeightedPartitions a) {
  std::sort(a.begin(), a.end());
  WeightedPartitions out;
  for (auto& it : a)
    if (out.empty() || out.back().first != it.first) out.push_back(std::move(it));
  return out;
}

inline WeightedPartitions punion(const WeightedPartitions& a, const WeightedPartitions& b) {
  WeightedPartitions c = a;
  c.insert(c.end(), b.begin(), b.end());
  return rmc(std::move(c));
}

inline WeightedPartitions ins(const std::vector<int>& positions, const WeightedPartitions& a) {
  WeightedPartitions out;
  out.reserve(a.size());
  for (const auto& [p, w] : a) out.emplace_back(insert_singletons(p, positions), w);
  return rmc(std::move(out));
}

inline WeightedPartitions shft(int64_t dw, WeightedPartitions a) {
  for (auto& [p, w] : a) w += dw;
  return a;
}

// glue(S, A): merge the elements of S into one block of every partition.
// S must already consist of universe positions (insert new elements first).
inline WeightedPartitions glue(const std::vector<int>& s, const WeightedPartitions& a) {
  WeightedPartitions out;
  out.reserve(a.size());
  for (const auto& [p, w] : a)
    out.emplace_back(meet(block_partition((int)p.size(), s), p), w);
  return rmc(std::move(out));
}

// proj(X, A): drop the positions of X (sorted ascending). A partition
// survives only if every block meeting X also meets the complement, so no
// pending connectivity requirement is silently discarded.
inline WeightedPartitions proj(const std::vector<int>& x, const WeightedPartitions& a) {
  WeightedPartitions out;
  for (const auto& [p, w] : a) {
    int n = (int)p.size();
    std::vector<char> inx(n, 0);
    for (int i : x) {
      if (i < 0 || i >= n) throw std::invalid_argument("proj: element out of range");
      inx[i] = 1;
    }
    int nb = block_count(p);
    std::vector<char> hitx(nb, 0), hitc(nb, 0);
    for (int i = 0; i < n; ++i) (inx[i] ? hitx : hitc)[p[i]] = 1;
    bool ok = true;
    for (int b = 0; b < nb && ok; ++b)
      if (hitx[b] && !hitc[b]) ok = false;
    if (!ok) continue;
    std::vector<int> keep;
    keep.reserve(n - x.size());
    for (int i = 0; i < n; ++i)
      if (!inx[i]) keep.push_back(i);
    out.emplace_back(restrict_to(p, keep), w);
  }
  return rmc(std::move(out));
}

// join(A, B): pairwise meets with summed weights (universes already aligned).
inline WeightedPartitions join(const WeightedPartitions& a, const WeightedPartitions& b) {
  WeightedPartitions out;
  out.reserve(a.size() * b.size());
  for (const auto& [p, w1] : a)
    for (const auto& [q, w2] : b) out.emplace_back(meet(p, q), w1 + w2);
  return rmc(std::move(out));
}

// Least weight of a partition whose meet with q is a single block.
inline int64_t opt(const Partition& q, const WeightedPartitions& a) {
  int64_t best = kNoOpt;
  for (const auto& [p, w] : a)
    if (block_count(meet(p, q)) <= 1) best = std::min(best, w);
  return best;
}

namespace detail {

// Row of the GF(2) cut matrix: one bit per subset Q containing element 0,
// set when every block of p lies inside Q or inside its complement.
inline std::vector<uint64_t> cut_row(const Partition& p) {
  int n = (int)p.size();
  int nb = block_count(p);
  std::vector<uint32_t> bmask(nb, 0);
  for (int i = 0; i < n; ++i) bmask[p[i]] |= 1u << i;
  uint64_t cols = n >= 1 ? (uint64_t)1 << (n - 1) : 1;
  std::vector<uint64_t> row((cols + 63) / 64, 0);
  for (uint64_t c = 0; c < cols; ++c) {
    uint32_t q = (uint32_t)(c << 1) | 1u;  // subsets containing element 0
    bool ok = true;
    for (int b = 0; b < nb && ok; ++b) {
      uint32_t inter = bmask[b] & q;
      if (inter != 0 && inter != bmask[b]) ok = false;
    }
    if (ok) row[c >> 6] |= (uint64_t)1 << (c & 63);
  }
  return row;
}

}  // namespace detail

// Representative reduction: keep a subset of at most 2^(n-1) entries whose
// opt(q, .) agrees with the input for every q. Greedy by weight, keeping a
// row iff it is linearly independent of the kept rows over GF(2).
inline WeightedPartitions reduce(const WeightedPartitions& a) {
  if (a.empty()) return {};
  WeightedPartitions srt = rmc(a);
  std::stable_sort(srt.begin(), srt.end(),
                   [](const auto& x, const auto& y) { return x.second < y.second; });
  int n = (int)srt[0].first.size();
  if (n <= 1) return {srt[0]};
  std::vector<std::vector<uint64_t>> basis;  // rows in echelon form
  std::vector<int> pivots;
  WeightedPartitions out;
  for (const auto& item : srt) {
    if ((int)item.first.size() != n) throw std::invalid_argument("reduce: size mismatch");
    auto row = detail::cut_row(item.first);
    for (size_t k = 0; k < basis.size(); ++k)
      if (row[pivots[k] >> 6] >> (pivots[k] & 63) & 1)
        for (size_t w = 0; w < row.size(); ++w) row[w] ^= basis[k][w];
    int pivot = -1;
    for (size_t w = 0; w < row.size() && pivot < 0; ++w)
      if (row[w]) pivot = (int)(w * 64) + __builtin_ctzll(row[w]);
    if (pivot < 0) continue;
    basis.push_back(std::move(row));
    pivots.push_back(pivot);
    out.push_back(item);
  }
  return rmc(std::move(out));
}

}  // namespace fdelete
