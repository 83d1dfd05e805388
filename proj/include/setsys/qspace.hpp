#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "setsys/exact_arith.hpp"
#include "setsys/family.hpp"
#include "setsys/subspace.hpp"
#include "setsys/theorems.hpp"

namespace setsys {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// All k-dimensional subspaces of F_q^n in canonical form, ordered by pivot
/// columns (lexicographic) and then by the free entries. Throws
/// BudgetExceeded when qbinom(n, k, q) exceeds cap.
std::vector<Subspace> enumerate_subspaces(const FieldPtr& field, int n, int k,
                                          std::uint64_t cap = kDefaultEnumerationCap);

/// dim U + dim V - rank of the stacked bases. Throws DomainError on an
/// ambient mismatch.
int intersection_dim(const Subspace& U, const Subspace& V);
/// U ∩ V via row reduction of [U U; V 0].
Subspace intersect(const Subspace& U, const Subspace& V);
Subspace sum(const Subspace& U, const Subspace& V);
/// Throws DomainError for an empty family.
Subspace span_of(const SubspaceFamily& fam);
Subspace common_intersection(const SubspaceFamily& fam);

/// Image of V under the map F_q^n -> F_q^(n - dim T) that clears T's pivot
/// coordinates with T's basis and keeps the remaining coordinates. Its
/// kernel is T. Requires T ⊆ V.
Subspace quotient(const Subspace& V, const Subspace& T);
/// Throws PreconditionError unless T lies in every member.
SubspaceFamily quotient_family(const SubspaceFamily& fam, const Subspace& T);

struct QHellyWitness {
  std::vector<std::size_t> indices;
  Subspace achieved_intersection;
};

/// Greedy: repeatedly add the member that lowers the dimension of the
/// running intersection most (lowest index on ties) until it is zero.
/// Throws PreconditionError if the whole family meets in a nonzero space.
QHellyWitness helly_witness_q(const SubspaceFamily& fam);

struct Lemma42Result {
  Subspace P;  ///< span of G
  int overlap = 0;  ///< dim(P ∩ V)
  bool ok = false;
};

/// Throws PreconditionError listing each violation: G nonempty with zero
/// intersection, V not a member, dim(V ∩ G_i) >= l1 >= 1.
Lemma42Result check_lemma42(const SubspaceFamily& G, const Subspace& V, int l1);

struct SpanBoundResult {
  int span_dim = 0;
  Natural bound;  ///< k + (t-1)(k-1)
  bool ok = false;
};

/// H needs t >= 2 members of dimension <= k meeting pairwise nontrivially.
SpanBoundResult check_span_bound(const SubspaceFamily& H, int k);

struct QBoundParams {
  std::uint64_t q = 2;
  std::int64_t n = 0;
  std::optional<std::int64_t> k;   ///< T1_11 dimension; T1_15/T1_16 largest member dimension
  std::optional<std::int64_t> s;
  std::optional<std::int64_t> t;   ///< T1_14: number of allowed dimensions
  std::optional<std::int64_t> l1;
  std::optional<std::int64_t> r;   ///< T1_16: number of allowed dimensions
};

struct QBoundResult {
  Natural bound;
  /// T1_15 / T1_16: q^(n-l1) >= (q^s - 1) qbinom(k^2, l1+1, q) + 1.
  std::optional<bool> threshold_ok;
  Natural threshold_rhs;
};

/// Throws ParameterMismatch when a parameter the theorem needs is missing.
QBoundResult q_bound(QTheorem theorem, const QBoundParams& params);

/// Hypotheses and bound of a q-analogue theorem on a concrete family, with
/// s = |L|, l1 = min L, and K the allowed dimensions (T1_14, T1_16).
TheoremReport apply_q_theorem(QTheorem theorem, const SubspaceFamily& fam, const LSet& L,
                              const std::optional<KSet>& dims = std::nullopt);

struct QSearchResult {
  Natural max_size;
  std::optional<SubspaceFamily> witness;
  bool certified = false;
  std::uint64_t nodes_explored = 0;
};

/// Largest family of subspaces with dimensions in dims (every dimension
/// when absent) whose pairwise intersection dimensions lie in L.
QSearchResult max_subspace_family(const FieldPtr& field, int n, const std::optional<std::vector<int>>& dims,
                                  const LSet& L, double time_budget_s = 60.0, unsigned threads = 1);

/// "q=<int> n=<int>" header, then blocks "k=<int>" followed by k rows of n
/// hex digits, separated by blank lines. "#" starts a comment.
SubspaceFamily parse_subspace_family(std::istream& in);
SubspaceFamily parse_subspace_family_string(const std::string& text);
std::string serialize_subspace_family(const SubspaceFamily& fam);

}  // namespace setsys
