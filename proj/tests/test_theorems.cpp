#include <gtest/gtest.h>

#include "oracles.hpp"
#include "setsys/errors.hpp"
#include "setsys/theorems.hpp"

using namespace setsys;

namespace {

SetFamily fam(int n, std::vector<Subset> members) { return SetFamily(GroundSet{n}, std::move(members)); }

SetFamily star2(int n) {
  std::vector<Subset> m;
  for (int e = 2; e <= n; ++e) m.push_back(Subset{1, e});
  return fam(n, m);
}

}  // namespace

TEST(Bounds, EkrAndTIntersecting) {
  EXPECT_EQ(ekr_bound(4, 2), 3);
  EXPECT_EQ(ekr_bound(6, 3), 10);
  EXPECT_EQ(ekr_bound(2, 1), 1);
  EXPECT_EQ(t_intersecting_bound(9, 4, 2), 21);
  EXPECT_TRUE(t_intersecting_hypothesis(9, 4, 2));
  EXPECT_EQ(t_intersecting_bound(8, 4, 2), 15);
  EXPECT_FALSE(t_intersecting_hypothesis(8, 4, 2));
  EXPECT_EQ(t_intersecting_bound(5, 2, 1), 4);
}

TEST(Bounds, SumFormulas) {
  EXPECT_EQ(frankl_wilson_bound(5, 2), 16);
  EXPECT_EQ(frankl_wilson_bound(4, 1), 5);
  EXPECT_EQ(frankl_wilson_bound(3, 0), 1);
  EXPECT_EQ(abs_bound(6, 2, 2), 21);
  EXPECT_EQ(abs_bound(6, 2, 1), 15);
  EXPECT_EQ(abs_bound(5, 1, 3), 6);
  EXPECT_EQ(snevily_bound(5, 2), 11);
  EXPECT_EQ(snevily_bound(4, 1), 4);
  EXPECT_EQ(snevily_bound(2, 1), 2);
  EXPECT_EQ(thm17_bound(7, 1, 1, 1), 6);
  EXPECT_EQ(thm17_bound(6, 1, 2, 1), 10);
  EXPECT_EQ(thm17_bound(10, 2, 3, 2), 84);
  EXPECT_THROW(thm17_bound(3, 4, 1, 1), DomainError);
  EXPECT_EQ(lemma32_bound(5, 2), 16);
  EXPECT_EQ(lemma32_bound(4, 0), 1);
  EXPECT_EQ(lemma32_bound(7, 3), 64);
}

TEST(Bounds, Thresholds) {
  EXPECT_EQ(thm17_threshold(2, 1, 1), 7);
  EXPECT_EQ(thm17_threshold(3, 1, 2), 73);
  EXPECT_EQ(thm17_threshold(2, 0, 1), 4);
  // C(k^2+k, l1+1)+1 times s plus l1
  EXPECT_EQ(prop33_threshold(2, 1, 1), (oracle::pascal(6, 2) + 1) * 1 + 1);
  EXPECT_EQ(lemma36_threshold(2, 1, 2), oracle::pascal(6, 2) * 2 + 1);
}

TEST(Bounds, KwiseFormulas) {
  EXPECT_EQ(fs_kwise_bound(3, 10, 2, 0), ExactRational(71));
  EXPECT_EQ(fs_kwise_bound(3, 11, 2, 1), ExactRational(71));
  EXPECT_EQ(fs_kwise_bound(4, 6, 1, 0), ExactRational(13));
  EXPECT_EQ(fs_kwise_bound(3, 5, 2, 0), ExactRational(58, 3));
  EXPECT_THROW(fs_kwise_bound(2, 6, 1, 0), DomainError);
  EXPECT_EQ(gs_kwise_bound(3, 5, 1, 0), 12);
  EXPECT_EQ(gs_kwise_bound(2, 5, 2, 0), 16);
  EXPECT_EQ(gs_kwise_bound(3, 6, 1, 1), 12);
  EXPECT_THROW(gs_kwise_bound(1, 6, 1, 0), DomainError);
  EXPECT_EQ(lemma36_bound(3, 8, 2, 1), 37);
  EXPECT_EQ(lemma36_bound(3, 6, 1, 1), 7);
  EXPECT_EQ(lemma36_bound(4, 8, 2, 1), 45);
  EXPECT_THROW(lemma36_bound(3, 8, 2, 0), DomainError);
}

TEST(Bounds, FsBoundIsExactRational) {
  // (h+s-1)/(s+1) C(n,s) + sum_{i<s} C(n,i) evaluated from the oracle
  for (int h = 3; h <= 6; ++h)
    for (int n = 1; n <= 12; ++n)
      for (int s = 1; s <= 4; ++s) {
        ExactRational want = ExactRational(h + s - 1, s + 1) * ExactRational(oracle::pascal(n, s));
        for (int i = 0; i < s; ++i) want += ExactRational(oracle::pascal(n, i));
        EXPECT_EQ(fs_kwise_bound(h, n, s, 0), want);
      }
}

TEST(BoundProperties, Thm17MonotoneInN) {
  for (int l1 = 0; l1 <= 2; ++l1)
    for (int s = 1; s <= 4; ++s)
      for (int r = 1; r <= s + 1; ++r)
        for (int n = l1; n < 30; ++n) EXPECT_LE(thm17_bound(n, l1, s, r), thm17_bound(n + 1, l1, s, r));
}

TEST(BoundProperties, Nesting) {
  for (int n = 1; n <= 25; ++n)
    for (int s = 1; s <= 6; ++s) {
      EXPECT_LE(snevily_bound(n, s), frankl_wilson_bound(n, s));
      for (int l1 = 1; l1 <= std::min(n, 3); ++l1) EXPECT_LE(thm17_bound(n, l1, s, s + 1), snevily_bound(n, s));
    }
}

TEST(BoundProperties, GsReducesToFranklWilson) {
  for (int n = 1; n <= 25; ++n)
    for (int s = 1; s <= 6; ++s) EXPECT_EQ(gs_kwise_bound(2, n, s, 0), frankl_wilson_bound(n, s));
}

TEST(TheoremIds, ParseNamesAndAliases) {
  EXPECT_EQ(parse_theorem_id("thm17"), TheoremId::THM_1_7);
  EXPECT_EQ(parse_theorem_id("SNEVILY_1_5"), TheoremId::SNEVILY_1_5);
  EXPECT_EQ(parse_theorem_id("snevily"), TheoremId::SNEVILY_1_5);
  EXPECT_FALSE(parse_theorem_id("nope"));
  for (auto id : all_theorems()) EXPECT_EQ(parse_theorem_id(to_string(id)), id);
  EXPECT_EQ(parse_qtheorem("t1_11"), QTheorem::T1_11);
}

TEST(ApplyTheorem, EkrStar) {
  const auto rep = apply_theorem(TheoremId::EKR_1_1, star2(4), LSet({1}), KSet({2}));
  EXPECT_EQ(rep.bound, ExactRational(3));
  EXPECT_EQ(rep.family_size, 3);
  EXPECT_TRUE(rep.applicable);
  EXPECT_TRUE(rep.tight);
}

TEST(ApplyTheorem, Thm17StarOnSeven) {
  const auto rep = apply_theorem(TheoremId::THM_1_7, star2(7), LSet({1}), KSet({2}));
  for (const auto& h : rep.hypotheses) EXPECT_EQ(h.verdict, Verdict::Pass) << h.key;
  EXPECT_TRUE(rep.applicable);
  EXPECT_EQ(rep.effective_bound, 6);
  EXPECT_TRUE(rep.tight);
  ASSERT_TRUE(rep.common_core);
  EXPECT_TRUE(*rep.common_core);
}

TEST(ApplyTheorem, Thm17BelowThresholdIsNotApplicable) {
  const auto rep = apply_theorem(TheoremId::THM_1_7, star2(4), LSet({1}), KSet({2}));
  EXPECT_EQ(rep.verdict("threshold"), Verdict::Fail);
  EXPECT_EQ(rep.verdict("sizes_in_K"), Verdict::Pass);
  EXPECT_FALSE(rep.applicable);
}

TEST(ApplyTheorem, SnevilyStar) {
  const auto rep = apply_theorem(TheoremId::SNEVILY_1_5, fam(4, {{1}, {1, 2}, {1, 3}, {1, 4}}), LSet({1}));
  EXPECT_EQ(rep.bound, ExactRational(4));
  EXPECT_EQ(rep.family_size, 4);
  EXPECT_TRUE(rep.tight);
}

TEST(ApplyTheorem, SnevilyRejectsZeroInL) {
  const auto rep = apply_theorem(TheoremId::SNEVILY_1_5, fam(3, {{1}, {2}}), LSet({0}));
  EXPECT_EQ(rep.verdict("l_positive"), Verdict::Fail);
  EXPECT_FALSE(rep.applicable);
}

TEST(ApplyTheorem, MissingParameters) {
  EXPECT_THROW(apply_theorem(TheoremId::ABS_1_4, star2(4), LSet({1})), ParameterMismatch);
  EXPECT_THROW(apply_theorem(TheoremId::GS_3_4, star2(4), LSet({1})), ParameterMismatch);
  EXPECT_THROW(apply_theorem(TheoremId::FS_1_9, star2(4), LSet({1}), std::nullopt, KwiseParams{2, std::nullopt}),
               ParameterMismatch);
  EXPECT_THROW(apply_theorem(TheoremId::FW_1_3, star2(4), LSet({1}), std::nullopt, KwiseParams{3, std::nullopt}),
               ParameterMismatch);
}

TEST(ApplyTheorem, FuerediSudakovN0IsUnknownUnlessAsserted) {
  const SetFamily f = fam(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
  const auto plain = apply_theorem(TheoremId::FS_1_9, f, LSet({1}), std::nullopt, KwiseParams{3, std::nullopt});
  EXPECT_EQ(plain.verdict("n_ge_n0"), Verdict::Unknown);
  EXPECT_FALSE(plain.applicable);
  const auto asserted = apply_theorem(TheoremId::FS_1_9, f, LSet({1}), std::nullopt, KwiseParams{3, std::nullopt},
                                      ApplyOptions{true});
  EXPECT_EQ(asserted.verdict("n_ge_n0"), Verdict::Pass);
  EXPECT_TRUE(asserted.applicable);
  EXPECT_EQ(asserted.bound, fs_kwise_bound(3, 5, 1, 0));
}

TEST(ApplyTheorem, TightImpliesWithin) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + trial % 4;
    std::vector<Subset> m;
    while (m.size() < 4) {
      Subset s = oracle::random_subset(rng, n, 3);
      if (std::find(m.begin(), m.end(), s) == m.end()) m.push_back(s);
    }
    const SetFamily f = fam(n, m);
    for (auto id : {TheoremId::FW_1_3, TheoremId::SNEVILY_1_5, TheoremId::EKR_1_1, TheoremId::COR_1_8}) {
      const auto rep = apply_theorem(id, f, LSet({1, 2}));
      if (rep.tight) EXPECT_TRUE(rep.within_bound);
      EXPECT_EQ(rep.within_bound, Natural(m.size()) <= rep.effective_bound);
      bool all = true;
      for (const auto& h : rep.hypotheses) all = all && h.verdict == Verdict::Pass;
      EXPECT_EQ(rep.applicable, all);
    }
  }
}

TEST(ApplyTheorem, BoundIsComputedEvenWhenHypothesesFail) {
  const auto rep = apply_theorem(TheoremId::FW_1_3, fam(3, {{1, 2}, {1, 2, 3}}), LSet({1}));
  EXPECT_EQ(rep.verdict("l_intersecting"), Verdict::Fail);
  EXPECT_EQ(rep.bound, ExactRational(frankl_wilson_bound(3, 1)));
}
