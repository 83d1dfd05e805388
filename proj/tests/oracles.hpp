#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "setsys/exact_arith.hpp"
#include "setsys/family.hpp"
#include "setsys/subset.hpp"

namespace oracle {

using setsys::Natural;

inline Natural pascal(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  std::vector<std::vector<Natural>> t(n + 1);
  for (int i = 0; i <= n; ++i) {
    t[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return t[n][k];
}

/// [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q
inline Natural q_pascal(int n, int k, unsigned q) {
  if (k < 0 || k > n) return 0;
  std::vector<std::vector<Natural>> t(n + 1, std::vector<Natural>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    t[i][0] = 1;
    Natural qk = 1;
    for (int j = 1; j <= i; ++j) {
      qk *= q;
      t[i][j] = t[i - 1][j - 1] + qk * t[i - 1][j];
    }
  }
  return t[n][k];
}

inline bool hwise_ok(const std::vector<setsys::Subset>& members, const std::vector<int>& L, int h) {
  const int m = static_cast<int>(members.size());
  if (m < h) return true;
  std::vector<int> idx(h);
  for (int i = 0; i < h; ++i) idx[i] = i;
  while (true) {
    setsys::Subset x = members[idx[0]];
    for (int i = 1; i < h; ++i) x = x & members[idx[i]];
    if (std::find(L.begin(), L.end(), x.size()) == L.end()) return false;
    int i = h - 1;
    while (i >= 0 && idx[i] == m - h + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < h; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Largest h-wise L-intersecting family by checking every subfamily of the
/// universe of all subsets of [n]. Only for n <= 4.
inline int brute_max_family(int n, const std::vector<int>& L, int h, const std::vector<int>& K = {}) {
  std::vector<setsys::Subset> universe;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    setsys::Subset s(b);
    if (!K.empty() && std::find(K.begin(), K.end(), s.size()) == K.end()) continue;
    universe.push_back(s);
  }
  const std::size_t u = universe.size();
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << u); ++mask) {
    const int c = std::popcount(mask);
    if (c <= best) continue;
    std::vector<setsys::Subset> members;
    for (std::size_t i = 0; i < u; ++i)
      if (mask >> i & 1) members.push_back(universe[i]);
    if (hwise_ok(members, L, h)) best = c;
  }
  return best;
}

/// Maximum clique size by trying every vertex subset. n <= 18.
inline std::size_t brute_clique(const std::vector<std::vector<bool>>& adj) {
  const std::size_t n = adj.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const std::size_t c = std::popcount(mask);
    if (c <= best) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      for (std::size_t j = i + 1; j < n; ++j)
        if ((mask >> j & 1) && !adj[i][j]) {
          ok = false;
          break;
        }
    }
    if (ok) best = c;
  }
  return best;
}

/// Number of k-dimensional subspaces of F_2^n counted as subsets of
/// vectors closed under addition.
inline std::size_t count_binary_subspaces(int n, int k) {
  const unsigned size = 1u << n;
  std::set<std::vector<unsigned>> seen;
  // spans of every k-tuple of vectors, as sorted vector lists
  std::vector<unsigned> tuple(k, 0);
  while (true) {
    std::vector<unsigned> span;
    for (unsigned c = 0; c < (1u << k); ++c) {
      unsigned v = 0;
      for (int i = 0; i < k; ++i)
        if (c >> i & 1) v ^= tuple[i];
      span.push_back(v);
    }
    std::sort(span.begin(), span.end());
    span.erase(std::unique(span.begin(), span.end()), span.end());
    if (span.size() == (1u << k)) seen.insert(span);
    int i = k - 1;
    while (i >= 0 && tuple[i] == size - 1) tuple[i--] = 0;
    if (i < 0) break;
    ++tuple[i];
  }
  return seen.size();
}

inline setsys::Subset random_subset(std::mt19937_64& rng, int n, int max_size) {
  std::uniform_int_distribution<int> size_dist(1, std::min(n, max_size));
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(size_dist(rng));
  return setsys::Subset::from_elements(pool);
}

}  // namespace oracle
