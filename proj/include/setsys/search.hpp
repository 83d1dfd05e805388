#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "setsys/exact_arith.hpp"
#include "setsys/family.hpp"
#include "setsys/theorems.hpp"

namespace setsys {

struct SearchSpec {
  int n = 1;
  LSet L;
  std::optional<KSet> K;  ///< absent: every size 0..n, including the empty set
  int h = 2;
  double time_budget_s = 60.0;
  unsigned threads = 1;
};

struct SearchResult {
  Natural max_size;
  std::optional<SetFamily> witness;
  bool certified = false;
  std::uint64_t nodes_explored = 0;
};

inline constexpr std::size_t kMaxUniverse = std::size_t{1} << 24;
/// Dense adjacency limits for the pairwise and the h-wise engines.
inline constexpr std::size_t kMaxPairwiseVertices = 32768;
inline constexpr std::size_t kMaxHwiseVertices = 4096;

/// Subsets of [n] with sizes in K (all subsets when K is absent), in
/// ascending bit-pattern order. Throws BudgetExceeded above kMaxUniverse.
std::vector<Subset> candidate_universe(int n, const std::optional<KSet>& K);

/// Largest family of candidates satisfying the (h-wise) L-intersecting
/// condition. On timeout returns the best family found with certified=false.
/// The witness is the lexicographically smallest maximum family (by sorted
/// universe indices) whenever the result is certified.
SearchResult max_family(const SearchSpec& spec);

/// Visits every family of exactly `size` candidates satisfying the spec's
/// predicate, in lexicographic order. fn returns false to stop. Returns the
/// number of families visited.
std::uint64_t for_each_family_of_size(const SearchSpec& spec, std::size_t size,
                                      const std::function<bool(const SetFamily&)>& fn);

/// All subsets of [n] of size s-r+1+l1 .. s+l1 containing {1..l1}. Verifies
/// the size against thm17_bound and the L-intersecting property for
/// L = {l1..s+l1-1} before returning.
SetFamily construct_extremal(int n, int l1, int s, int r);

struct GridCell {
  int n = 1;
  LSet L;
  std::optional<KSet> K;
  int h = 2;

  std::string to_string() const;
};

struct CellOutcome {
  GridCell cell;
  std::optional<SearchResult> search;
  std::vector<TheoremReport> reports;
  std::optional<std::string> error;
  /// Certified cells where a theorem with every hypothesis passing is
  /// exceeded. Must stay empty.
  std::vector<std::string> anomalies;
};

struct ScanOptions {
  double time_budget_s = 60.0;
  unsigned threads = 1;
  ApplyOptions apply;
  /// Restricts the theorems applied; empty means every theorem matching h.
  std::vector<TheoremId> theorems;
};

/// Theorems applied to a cell of arity h: the pairwise ones for h = 2,
/// the k-wise ones otherwise.
std::vector<TheoremId> theorems_for_arity(int h);

/// Runs max_family on each cell and applies the theorems to its witness.
/// Errors are recorded per cell. Reports are produced only for certified
/// cells.
std::vector<CellOutcome> tightness_scan(const std::vector<GridCell>& grid, const ScanOptions& options = {});

/// One cell per nonblank, noncomment line: "n=<int> L=<list> [K=<list>] [h=<int>]".
std::vector<GridCell> parse_grid(std::istream& in);

}  // namespace setsys
