#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "setsys/bitset.hpp"

namespace setsys {

/// Undirected graph on vertices 0..n-1 with bitset adjacency rows.
class CompatGraph {
 public:
  explicit CompatGraph(std::size_t n = 0);
  std::size_t size() const { return rows_.size(); }
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
  const Bitset& neighbors(std::size_t v) const { return rows_[v]; }

 private:
  std::vector<Bitset> rows_;
};

/// Wall-clock limit shared by the search routines. A nonpositive budget
/// means no limit.
class Deadline {
 public:
  explicit Deadline(double seconds);
  bool expired() const;

 private:
  std::optional<std::chrono::steady_clock::time_point> end_;
};

struct SearchLimits {
  double time_budget_s = 60.0;
  unsigned threads = 1;
};

struct CliqueOutcome {
  std::vector<std::size_t> clique;  ///< ascending vertex indices
  bool certified = false;
  std::uint64_t nodes = 0;
};

/// Branch-and-bound maximum clique with greedy-colouring bounds. Root
/// branches are shared among threads; the incumbent size only grows. The
/// returned clique is the lexicographically smallest maximum clique when the
/// search is certified and the canonicalising pass finishes in time.
CliqueOutcome max_clique(const CompatGraph& g, const SearchLimits& limits);

/// Lexicographically smallest clique of exactly `target` vertices, searched
/// in ascending vertex order. nullopt if none exists or the deadline passes.
std::optional<std::vector<std::size_t>> first_clique_of_size(const CompatGraph& g, std::size_t target,
                                                             const Deadline& deadline);

/// Visits every clique with exactly `target` vertices (ascending indices).
/// fn returns false to stop. Returns the number visited.
std::uint64_t for_each_clique_of_size(const CompatGraph& g, std::size_t target,
                                      const std::function<bool(const std::vector<std::size_t>&)>& fn);

/// Upper bound on the clique number of g[P] from a greedy colouring.
std::size_t colouring_bound(const CompatGraph& g, const Bitset& P);

}  // namespace setsys
