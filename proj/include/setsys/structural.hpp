#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "setsys/exact_arith.hpp"
#include "setsys/family.hpp"
#include "setsys/theorems.hpp"

namespace setsys {

/// A subfamily, given by member indices, whose intersection already equals
/// the intersection of the whole family.
struct HellyWitness {
  std::vector<std::size_t> indices;
  Subset achieved_intersection;
};

/// Greedy witness: starts from the full ground set and repeatedly adds the
/// member that shrinks the running intersection the most (lowest index on
/// ties) until it equals target. Returns at most max_member_size + 1
/// indices. Throws PreconditionError unless common_intersection(fam) == target.
HellyWitness helly_witness(const SetFamily& fam, Subset target);

struct Lemma22Result {
  Subset union_set;  ///< Q, the union of all members of H
  int overlap = 0;   ///< |Q ∩ F|
  bool ok = false;   ///< overlap >= l1 + 1; false means a bug
};

/// Throws PreconditionError listing each violated precondition: H nonempty
/// with empty intersection, F not a member, |F ∩ H_i| >= l1 >= 1.
Lemma22Result check_lemma22(const SetFamily& H, Subset F, int l1);

struct UnionBoundResult {
  int union_size = 0;
  Natural bound;  ///< k + (t-1)(k-1)
  bool ok = false;
};

/// H must have t >= 2 pairwise intersecting members of size <= k.
UnionBoundResult check_union_bound(const SetFamily& H, int k);

/// Two equally long member sequences over one ground set. Repeats are
/// allowed: companion families built by kwise_partition may repeat sets.
struct PairFamilyInstance {
  GroundSet ground;
  std::vector<Subset> A;
  std::vector<Subset> B;
  LSet L;
};

/// Conditions (i) |A_i ∩ B_j| ∈ L for i < j and (ii) |A_i ∩ B_i| ∉ L,
/// compared against lemma32_bound(n, s). Condition failures are verdicts.
TheoremReport check_lemma32_instance(const PairFamilyInstance& inst);

/// Conditions (i)-(iii) of the pair-family proposition plus its n-threshold.
/// k is the block parameter; it defaults to the largest member of B and
/// must bound every member of B. Throws DomainError when min(L) = 0.
/// Hypothesis keys: "k_bounds_B", "cond_i", "cond_ii", "cond_iii", "threshold".
TheoremReport check_prop33_instance(const PairFamilyInstance& inst, std::optional<int> k = std::nullopt);

struct PartitionResult {
  SetFamily B;
  std::vector<Subset> C;  ///< companions, C[i] ⊆ B[i]
  SetFamily F;
  /// reorder[i] is the input index of the i-th member of B followed by F.
  std::vector<std::size_t> reorder;
  int k = 0;  ///< largest input member; the leading block has min(k+1, m) members
  std::uint64_t tuples_scanned = 0;
};

inline constexpr std::uint64_t kDefaultTupleCap = 10'000'000;

/// Splits an h-wise L-intersecting family with |∩| < min(L) into (B, C, F):
/// a leading Helly block followed by members extracted from violating
/// (h-1)-tuples, and an (h-1)-wise L-intersecting remainder F. Tuples are
/// scanned in lexicographic order; the smallest index of the first violating
/// tuple is extracted. Throws PreconditionError or BudgetExceeded.
PartitionResult kwise_partition(const SetFamily& fam, const LSet& L, int h,
                                std::uint64_t tuple_cap = kDefaultTupleCap);

/// PairFamilyInstance (B, C) of a partition, ready for check_prop33_instance.
PairFamilyInstance as_pair_instance(const PartitionResult& part, const LSet& L);

struct CommonCoreResult {
  std::optional<Subset> core;
  std::vector<std::size_t> tuple;  ///< the (h-1) members realising |∩| = min(L)
  std::optional<std::string> anomaly;
};

/// Looks for h-1 members meeting in exactly min(L) elements; that
/// intersection must then lie in every member. Throws PreconditionError
/// unless fam is h-wise L-intersecting with min(L) >= 1.
CommonCoreResult find_common_core(const SetFamily& fam, const LSet& L, int h,
                                  std::uint64_t tuple_cap = kDefaultTupleCap);

}  // namespace setsys
