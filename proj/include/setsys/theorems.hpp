#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "setsys/exact_arith.hpp"
#include "setsys/family.hpp"

namespace setsys {

enum class TheoremId {
  EKR_1_1,
  TINT_1_2,
  FW_1_3,
  ABS_1_4,
  SNEVILY_1_5,
  CONJ_1_6,
  THM_1_7,
  COR_1_8,
  FS_1_9,
  FS_1_10,
  LEMMA_3_2,
  PROP_3_3,
  GS_3_4,
  THM_3_5,
  LEMMA_3_6,
};

/// Subspace-lattice analogues.
enum class QTheorem { T1_11, T1_12, T1_13, T1_14, T1_15, T1_16 };

std::string to_string(TheoremId id);
std::string to_string(QTheorem id);
/// Accepts the enumerator name (case-insensitive) or a short alias such as
/// "fw", "snevily", "thm17".
std::optional<TheoremId> parse_theorem_id(std::string_view text);
std::optional<QTheorem> parse_qtheorem(std::string_view text);
const std::vector<TheoremId>& all_theorems();

enum class Verdict { Pass, Fail, Unknown };
std::string to_string(Verdict v);

struct HypothesisCheck {
  std::string key;
  std::string description;
  Verdict verdict = Verdict::Unknown;
};

struct TheoremReport {
  std::variant<TheoremId, QTheorem> theorem;
  std::vector<HypothesisCheck> hypotheses;
  ExactRational bound;
  Natural effective_bound;
  Natural family_size;
  bool within_bound = false;
  bool tight = false;
  /// Every hypothesis passed; only then does within_bound carry weight.
  bool applicable = false;
  /// Whether all members share a common l1-subset. Filled for the
  /// equality clause of THM_1_7 / COR_1_8 when the family is tight.
  std::optional<bool> common_core;
  std::vector<std::string> notes;

  std::string name() const;
  /// Verdict of the hypothesis with the given key; Unknown if absent.
  Verdict verdict(std::string_view key) const;
  /// Sets the derived fields from bound and family_size.
  void finalize();
};

/// h is the arity of the intersection condition (the "k-wise" of the
/// k-wise theorems).
struct KwiseParams {
  int h = 2;
  /// When given, must agree with the family's largest member.
  std::optional<int> max_member_size;
};

struct ApplyOptions {
  /// User assertion n >= n0(h, s) for the FS_1_9 / FS_1_10 bounds.
  bool assert_n0 = false;
};

// Bound formulas. Arguments follow the theorem statements; a "threshold"
// is the least n for which the statement asserts its conclusion.

Natural ekr_bound(std::int64_t n, std::int64_t k);
bool ekr_hypothesis(std::int64_t n, std::int64_t k);
Natural t_intersecting_bound(std::int64_t n, std::int64_t k, std::int64_t t);
bool t_intersecting_hypothesis(std::int64_t n, std::int64_t k, std::int64_t t);
Natural frankl_wilson_bound(std::int64_t n, std::int64_t s);
Natural abs_bound(std::int64_t n, std::int64_t s, std::int64_t r);
Natural snevily_bound(std::int64_t n, std::int64_t s);
Natural thm17_bound(std::int64_t n, std::int64_t l1, std::int64_t s, std::int64_t r);
Natural thm17_threshold(std::int64_t k, std::int64_t l1, std::int64_t s);
/// (h+s-1)/(s+1) * C(n-l1, s) + sum_{i<=s-1} C(n-l1, i), exact.
ExactRational fs_kwise_bound(std::int64_t h, std::int64_t n, std::int64_t s, std::int64_t l1);
/// (h-1) * sum_{i<=s} C(n-l1, i).
Natural gs_kwise_bound(std::int64_t h, std::int64_t n, std::int64_t s, std::int64_t l1);
Natural lemma36_bound(std::int64_t h, std::int64_t n, std::int64_t s, std::int64_t l1);
Natural lemma32_bound(std::int64_t n, std::int64_t s);
/// [C(k^2+k, l1+1) + 1] s + l1, shared by the pair-family proposition and
/// the l1-shifted k-wise theorem.
Natural prop33_threshold(std::int64_t k, std::int64_t l1, std::int64_t s);
/// C(k^2+k, l1+1) s + l1.
Natural lemma36_threshold(std::int64_t k, std::int64_t l1, std::int64_t s);

/// Checks every hypothesis of theorem t on a concrete family, computes the
/// bound and compares. K is required for ABS_1_4, CONJ_1_6 and THM_1_7;
/// kwise for the k-wise theorems. LEMMA_3_2 and PROP_3_3 are applied to the
/// self-paired instance (A = B = fam). Throws ParameterMismatch.
TheoremReport apply_theorem(TheoremId t, const SetFamily& fam, const LSet& L,
                            const std::optional<KSet>& K = std::nullopt,
                            const std::optional<KwiseParams>& kwise = std::nullopt,
                            const ApplyOptions& options = {});

}  // namespace setsys
