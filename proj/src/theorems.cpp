#include "setsys/theorems.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

#include "setsys/combinations.hpp"
#include "setsys/errors.hpp"
#include "setsys/structural.hpp"

namespace setsys {

namespace {

struct TheoremName {
  TheoremId id;
  const char* name;
  const char* alias;
};

constexpr std::array<TheoremName, 15> kTheoremNames{{
    {TheoremId::EKR_1_1, "EKR_1_1", "ekr"},
    {TheoremId::TINT_1_2, "TINT_1_2", "tint"},
    {TheoremId::FW_1_3, "FW_1_3", "fw"},
    {TheoremId::ABS_1_4, "ABS_1_4", "abs"},
    {TheoremId::SNEVILY_1_5, "SNEVILY_1_5", "snevily"},
    {TheoremId::CONJ_1_6, "CONJ_1_6", "conj"},
    {TheoremId::THM_1_7, "THM_1_7", "thm17"},
    {TheoremId::COR_1_8, "COR_1_8", "cor18"},
    {TheoremId::FS_1_9, "FS_1_9", "fs19"},
    {TheoremId::FS_1_10, "FS_1_10", "fs110"},
    {TheoremId::LEMMA_3_2, "LEMMA_3_2", "lemma32"},
    {TheoremId::PROP_3_3, "PROP_3_3", "prop33"},
    {TheoremId::GS_3_4, "GS_3_4", "gs34"},
    {TheoremId::THM_3_5, "THM_3_5", "thm35"},
    {TheoremId::LEMMA_3_6, "LEMMA_3_6", "lemma36"},
}};

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

Verdict from_bool(bool b) { return b ? Verdict::Pass : Verdict::Fail; }

std::string str(const Natural& v) { return v.str(); }

void require(bool cond, const std::string& msg) {
  if (!cond) throw DomainError(msg);
}

// Formula bodies without domain checks, for reports whose hypotheses failed.
Natural sum_shifted(std::int64_t n, std::int64_t l1, std::int64_t lo, std::int64_t hi) {
  if (n - l1 < 0 || lo > hi) return 0;
  return binom_sum(n - l1, lo, hi);
}

ExactRational fs_formula(std::int64_t h, std::int64_t n, std::int64_t s, std::int64_t l1) {
  if (n - l1 < 0) return 0;
  ExactRational coeff(h + s - 1, s + 1);
  ExactRational value = coeff * ExactRational(binom(n - l1, s));
  if (s >= 1) value += ExactRational(binom_sum(n - l1, 0, s - 1));
  return value;
}

Natural lemma36_formula(std::int64_t h, std::int64_t n, std::int64_t s, std::int64_t l1) {
  if (n - l1 < 0) return 0;
  Natural v = binom(n - l1, s);
  if (s >= 1) v += Natural(h - 1) * binom_sum(n - l1, 0, s - 1);
  return v;
}

class ReportBuilder {
 public:
  explicit ReportBuilder(TheoremId id) { report_.theorem = id; }

  void check(std::string key, std::string description, Verdict v) {
    report_.hypotheses.push_back({std::move(key), std::move(description), v});
  }
  void check(std::string key, std::string description, bool ok) {
    check(std::move(key), std::move(description), from_bool(ok));
  }
  void note(std::string text) { report_.notes.push_back(std::move(text)); }
  TheoremReport& report() { return report_; }

  void settle(const ExactRational& bound, std::size_t family_size) {
    report_.bound = bound;
    report_.family_size = family_size;
    report_.finalize();
  }
  TheoremReport done(const ExactRational& bound, std::size_t family_size) {
    settle(bound, family_size);
    return std::move(report_);
  }

 private:
  TheoremReport report_;
};

Verdict pairwise_verdict(const SetFamily& fam, const LSet& L, ReportBuilder& rb) {
  if (fam.size() < 2) {
    rb.note("fewer than 2 members: pairwise condition holds vacuously");
    return Verdict::Pass;
  }
  return from_bool(is_l_intersecting(fam, L));
}

Verdict hwise_verdict(const SetFamily& fam, const LSet& L, int h, ReportBuilder& rb) {
  if (fam.size() < static_cast<std::size_t>(h)) {
    rb.note("fewer than h members: h-wise condition holds vacuously");
    return Verdict::Pass;
  }
  return from_bool(is_hwise_l_intersecting(fam, L, h));
}

bool min_pair_intersection_at_least(const SetFamily& fam, int t) {
  const auto& m = fam.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (intersection_size(m[i], m[j]) < t) return false;
  return true;
}

std::optional<int> uniform_size(const SetFamily& fam) {
  if (fam.empty()) return std::nullopt;
  const int k = fam[0].size();
  for (const auto& m : fam.members())
    if (m.size() != k) return std::nullopt;
  return k;
}

const KSet& need_k(const std::optional<KSet>& K, TheoremId t) {
  if (!K || K->values().empty()) throw ParameterMismatch(to_string(t) + " requires a size set K");
  return *K;
}

int need_h(const std::optional<KwiseParams>& kwise, TheoremId t, int min_h, int max_member) {
  if (!kwise) throw ParameterMismatch(to_string(t) + " requires the intersection arity h");
  if (kwise->h < min_h) {
    throw ParameterMismatch(to_string(t) + " requires h >= " + std::to_string(min_h) + ", got " +
                            std::to_string(kwise->h));
  }
  if (kwise->max_member_size && *kwise->max_member_size != max_member) {
    throw ParameterMismatch("max_member_size " + std::to_string(*kwise->max_member_size) +
                            " disagrees with the family's largest member " + std::to_string(max_member));
  }
  return kwise->h;
}

void reject_kwise(const std::optional<KwiseParams>& kwise, TheoremId t) {
  if (kwise && kwise->h != 2)
    throw ParameterMismatch(to_string(t) + " is a pairwise theorem; h must be 2");
}

void equality_clause(ReportBuilder& rb, const SetFamily& fam, int l1, const Natural& n, const Natural& threshold) {
  TheoremReport& r = rb.report();
  if (!r.tight) return;
  r.common_core = common_intersection(fam).size() >= l1;
  if (n > threshold)
    rb.note("equality clause asserted (n > threshold): a common l1-subset must exist");
  else if (n == threshold)
    rb.note("equality clause not asserted (n = threshold)");
  else
    rb.note("equality clause not asserted (n below threshold)");
}

}  // namespace

std::string to_string(TheoremId id) {
  for (const auto& t : kTheoremNames)
    if (t.id == id) return t.name;
  return "UNKNOWN";
}

std::string to_string(QTheorem id) {
  switch (id) {
    case QTheorem::T1_11: return "T1_11";
    case QTheorem::T1_12: return "T1_12";
    case QTheorem::T1_13: return "T1_13";
    case QTheorem::T1_14: return "T1_14";
    case QTheorem::T1_15: return "T1_15";
    case QTheorem::T1_16: return "T1_16";
  }
  return "UNKNOWN";
}

std::optional<TheoremId> parse_theorem_id(std::string_view text) {
  const std::string t = lower(text);
  for (const auto& e : kTheoremNames)
    if (t == lower(e.name) || t == e.alias) return e.id;
  return std::nullopt;
}

std::optional<QTheorem> parse_qtheorem(std::string_view text) {
  const std::string t = lower(text);
  static constexpr std::array<std::pair<const char*, QTheorem>, 6> names{{
      {"11", QTheorem::T1_11}, {"12", QTheorem::T1_12}, {"13", QTheorem::T1_13},
      {"14", QTheorem::T1_14}, {"15", QTheorem::T1_15}, {"16", QTheorem::T1_16},
  }};
  for (const auto& [suffix, id] : names) {
    const std::string s = suffix;
    if (t == "t1_" + s || t == "q1" + s || t == "q" + s) return id;
  }
  return std::nullopt;
}

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> v;
    for (const auto& t : kTheoremNames) v.push_back(t.id);
    return v;
  }();
  return ids;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

std::string TheoremReport::name() const {
  return std::visit([](auto id) { return to_string(id); }, theorem);
}

Verdict TheoremReport::verdict(std::string_view key) const {
  for (const auto& h : hypotheses)
    if (h.key == key) return h.verdict;
  return Verdict::Unknown;
}

void TheoremReport::finalize() {
  effective_bound = floor_nonneg(bound);
  within_bound = family_size <= effective_bound;
  tight = within_bound && family_size == effective_bound;
  applicable = std::all_of(hypotheses.begin(), hypotheses.end(),
                           [](const HypothesisCheck& h) { return h.verdict == Verdict::Pass; });
}

Natural ekr_bound(std::int64_t n, std::int64_t k) {
  require(n >= 1 && k >= 1, "ekr_bound: n and k must be positive");
  return binom(n - 1, k - 1);
}

bool ekr_hypothesis(std::int64_t n, std::int64_t k) { return n >= 2 * k; }

Natural t_intersecting_bound(std::int64_t n, std::int64_t k, std::int64_t t) {
  require(n >= 1 && k >= 1 && t >= 1, "t_intersecting_bound: n, k, t must be positive");
  require(t <= k, "t_intersecting_bound: t must not exceed k");
  return binom(n - t, k - t);
}

bool t_intersecting_hypothesis(std::int64_t n, std::int64_t k, std::int64_t t) {
  return n >= (t + 1) * (k - t + 1);
}

Natural frankl_wilson_bound(std::int64_t n, std::int64_t s) {
  require(n >= 1 && s >= 0, "frankl_wilson_bound: need n >= 1, s >= 0");
  return binom_sum(n, 0, s);
}

Natural abs_bound(std::int64_t n, std::int64_t s, std::int64_t r) {
  require(n >= 1 && s >= 0 && r >= 1, "abs_bound: need n >= 1, s >= 0, r >= 1");
  return binom_sum(n, s - r + 1, s);
}

Natural snevily_bound(std::int64_t n, std::int64_t s) {
  require(n >= 1, "snevily_bound: n must be positive");
  require(s >= 0, "snevily_bound: s must be nonnegative");
  return binom_sum(n - 1, 0, s);
}

Natural thm17_bound(std::int64_t n, std::int64_t l1, std::int64_t s, std::int64_t r) {
  require(l1 >= 0 && s >= 1 && r >= 1, "thm17_bound: need l1 >= 0, s >= 1, r >= 1");
  require(l1 <= n, "thm17_bound: l1 must not exceed n");
  return binom_sum(n - l1, s - r + 1, s);
}

Natural thm17_threshold(std::int64_t k, std::int64_t l1, std::int64_t s) {
  require(k >= 0 && l1 >= 0 && s >= 0, "thm17_threshold: arguments must be nonnegative");
  return binom(k * k, l1 + 1) * s + l1;
}

ExactRational fs_kwise_bound(std::int64_t h, std::int64_t n, std::int64_t s, std::int64_t l1) {
  require(h >= 3, "fs_kwise_bound: h must be >= 3");
  require(n >= 1 && s >= 1 && l1 >= 0, "fs_kwise_bound: need n >= 1, s >= 1, l1 >= 0");
  require(l1 <= n, "fs_kwise_bound: l1 must not exceed n");
  return fs_formula(h, n, s, l1);
}

Natural gs_kwise_bound(std::int64_t h, std::int64_t n, std::int64_t s, std::int64_t l1) {
  require(h >= 2, "gs_kwise_bound: h must be >= 2");
  require(n >= 1 && s >= 0 && l1 >= 0, "gs_kwise_bound: need n >= 1, s >= 0, l1 >= 0");
  require(l1 <= n, "gs_kwise_bound: l1 must not exceed n");
  return Natural(h - 1) * binom_sum(n - l1, 0, s);
}

Natural lemma36_bound(std::int64_t h, std::int64_t n, std::int64_t s, std::int64_t l1) {
  require(h >= 3, "lemma36_bound: h must be >= 3");
  require(l1 >= 1, "lemma36_bound: l1 must be positive");
  require(n >= 1 && s >= 1, "lemma36_bound: need n >= 1, s >= 1");
  require(l1 <= n, "lemma36_bound: l1 must not exceed n");
  return lemma36_formula(h, n, s, l1);
}

Natural lemma32_bound(std::int64_t n, std::int64_t s) {
  require(n >= 1 && s >= 0, "lemma32_bound: need n >= 1, s >= 0");
  return binom_sum(n, 0, s);
}

Natural prop33_threshold(std::int64_t k, std::int64_t l1, std::int64_t s) {
  require(k >= 0 && l1 >= 0 && s >= 0, "prop33_threshold: arguments must be nonnegative");
  return (binom(k * k + k, l1 + 1) + 1) * s + l1;
}

Natural lemma36_threshold(std::int64_t k, std::int64_t l1, std::int64_t s) {
  require(k >= 0 && l1 >= 0 && s >= 0, "lemma36_threshold: arguments must be nonnegative");
  return binom(k * k + k, l1 + 1) * s + l1;
}

TheoremReport apply_theorem(TheoremId t, const SetFamily& fam, const LSet& L, const std::optional<KSet>& K,
                            const std::optional<KwiseParams>& kwise, const ApplyOptions& options) {
  if (fam.empty()) throw DomainError("apply_theorem: family is empty");
  if (L.empty()) throw DomainError("apply_theorem: L is empty");

  const std::int64_t n = fam.n();
  const std::int64_t s = L.s();
  const std::int64_t l1 = L.min();
  const int kmax = fam.max_member_size();
  const std::size_t m = fam.size();
  ReportBuilder rb(t);

  switch (t) {
    case TheoremId::EKR_1_1: {
      reject_kwise(kwise, t);
      const auto k = uniform_size(fam);
      rb.check("uniform", "all members have the same size k", k.has_value());
      const std::int64_t kk = k.value_or(kmax);
      rb.check("k_positive", "k >= 1", kk >= 1);
      rb.check("intersecting", "every two members intersect", m < 2 || min_pair_intersection_at_least(fam, 1));
      rb.check("n_ge_2k", "n >= 2k (" + std::to_string(n) + " >= " + std::to_string(2 * kk) + ")",
               ekr_hypothesis(n, kk));
      return rb.done(ExactRational(kk >= 1 ? binom(n - 1, kk - 1) : Natural(0)), m);
    }
    case TheoremId::TINT_1_2: {
      reject_kwise(kwise, t);
      const auto k = uniform_size(fam);
      const std::int64_t kk = k.value_or(kmax);
      const std::int64_t tt = l1;
      rb.note("t is taken as min(L) = " + std::to_string(tt));
      rb.check("uniform", "all members have the same size k", k.has_value());
      rb.check("t_positive", "t >= 1", tt >= 1);
      rb.check("t_le_k", "t <= k", tt <= kk);
      rb.check("t_intersecting", "every two members share at least t elements",
               m < 2 || min_pair_intersection_at_least(fam, static_cast<int>(tt)));
      const std::int64_t need = (tt + 1) * (kk - tt + 1);
      rb.check("threshold", "n >= (t+1)(k-t+1) (" + std::to_string(n) + " >= " + std::to_string(need) + ")",
               n >= need);
      return rb.done(ExactRational(tt <= kk ? binom(n - tt, kk - tt) : Natural(0)), m);
    }
    case TheoremId::FW_1_3: {
      reject_kwise(kwise, t);
      rb.check("l_intersecting", "pairwise intersection sizes lie in L", pairwise_verdict(fam, L, rb));
      return rb.done(ExactRational(frankl_wilson_bound(n, s)), m);
    }
    case TheoremId::ABS_1_4: {
      reject_kwise(kwise, t);
      const KSet& k_set = need_k(K, t);
      const std::int64_t r = k_set.r();
      rb.check("sizes_in_K", "every member size lies in K", sizes_in(fam, k_set));
      rb.check("l_intersecting", "pairwise intersection sizes lie in L", pairwise_verdict(fam, L, rb));
      rb.check("k_gt_s_minus_r", "k_i > s - r = " + std::to_string(s - r) + " for every k_i in K",
               k_set.values().front() > s - r);
      return rb.done(ExactRational(abs_bound(n, s, r)), m);
    }
    case TheoremId::SNEVILY_1_5: {
      reject_kwise(kwise, t);
      rb.check("l_intersecting", "pairwise intersection sizes lie in L", pairwise_verdict(fam, L, rb));
      rb.check("l_positive", "every element of L is positive", l1 >= 1);
      return rb.done(ExactRational(snevily_bound(n, s)), m);
    }
    case TheoremId::CONJ_1_6:
    case TheoremId::THM_1_7: {
      reject_kwise(kwise, t);
      const KSet& k_set = need_k(K, t);
      const std::int64_t r = k_set.r();
      rb.check("sizes_in_K", "every member size lies in K", sizes_in(fam, k_set));
      rb.check("l_intersecting", "pairwise intersection sizes lie in L", pairwise_verdict(fam, L, rb));
      rb.check("l1_le_n", "l1 <= n", l1 <= n);
      Natural threshold = 0;
      if (t == TheoremId::CONJ_1_6) {
        rb.check("k_gt_s_minus_r", "k_i > s - r = " + std::to_string(s - r) + " for every k_i in K",
                 k_set.values().front() > s - r);
      } else {
        rb.check("k_gt_s_minus_r_plus_l1",
                 "k_i > s - r + l1 = " + std::to_string(s - r + l1) + " for every k_i in K",
                 k_set.values().front() > s - r + l1);
        threshold = thm17_threshold(kmax, l1, s);
        rb.check("threshold",
                 "n >= C(k^2, l1+1) s + l1 with k = " + std::to_string(kmax) + " (" + std::to_string(n) +
                     " >= " + str(threshold) + ")",
                 Natural(n) >= threshold);
      }
      rb.settle(ExactRational(sum_shifted(n, l1, s - r + 1, s)), m);
      if (t == TheoremId::THM_1_7) equality_clause(rb, fam, static_cast<int>(l1), n, threshold);
      return std::move(rb.report());
    }
    case TheoremId::COR_1_8: {
      reject_kwise(kwise, t);
      rb.check("l_intersecting", "pairwise intersection sizes lie in L", pairwise_verdict(fam, L, rb));
      rb.check("l1_le_n", "l1 <= n", l1 <= n);
      const Natural threshold = thm17_threshold(kmax, l1, s);
      rb.check("threshold",
               "n >= C(k^2, l1+1) s + l1 with k = " + std::to_string(kmax) + " (" + std::to_string(n) +
                   " >= " + str(threshold) + ")",
               Natural(n) >= threshold);
      rb.settle(ExactRational(sum_shifted(n, l1, 0, s)), m);
      equality_clause(rb, fam, static_cast<int>(l1), n, threshold);
      return std::move(rb.report());
    }
    case TheoremId::FS_1_9:
    case TheoremId::FS_1_10: {
      const int h = need_h(kwise, t, 3, kmax);
      const std::int64_t shift = t == TheoremId::FS_1_9 ? 0 : l1;
      rb.check("hwise", "every " + std::to_string(h) + " members meet in a set of size in L",
               hwise_verdict(fam, L, h, rb));
      rb.check("l1_le_n", "l1 <= n", shift <= n);
      rb.check("n_ge_n0", "n >= n0(h, s) (no explicit n0 is known)",
               options.assert_n0 ? Verdict::Pass : Verdict::Unknown);
      if (options.assert_n0) rb.note("n >= n0 asserted by the caller");
      return rb.done(fs_formula(h, n, s, shift), m);
    }
    case TheoremId::GS_3_4: {
      const int h = need_h(kwise, t, 2, kmax);
      rb.check("hwise", "every " + std::to_string(h) + " members meet in a set of size in L",
               hwise_verdict(fam, L, h, rb));
      return rb.done(ExactRational(gs_kwise_bound(h, n, s, 0)), m);
    }
    case TheoremId::THM_3_5: {
      const int h = need_h(kwise, t, 2, kmax);
      rb.check("hwise", "every " + std::to_string(h) + " members meet in a set of size in L",
               hwise_verdict(fam, L, h, rb));
      rb.check("l1_le_n", "l1 <= n", l1 <= n);
      const Natural threshold = prop33_threshold(kmax, l1, s);
      rb.check("threshold",
               "n >= [C(k^2+k, l1+1) + 1] s + l1 with k = " + std::to_string(kmax) + " (" + std::to_string(n) +
                   " >= " + str(threshold) + ")",
               Natural(n) >= threshold);
      return rb.done(ExactRational(Natural(h - 1) * sum_shifted(n, l1, 0, s)), m);
    }
    case TheoremId::LEMMA_3_6: {
      const int h = need_h(kwise, t, 3, kmax);
      rb.check("l1_positive", "min(L) >= 1", l1 >= 1);
      rb.check("hwise", "every " + std::to_string(h) + " members meet in a set of size in L",
               hwise_verdict(fam, L, h, rb));
      rb.check("l1_le_n", "l1 <= n", l1 <= n);
      const Natural threshold = lemma36_threshold(kmax, l1, s);
      rb.check("threshold",
               "n >= C(k^2+k, l1+1) s + l1 with k = " + std::to_string(kmax) + " (" + std::to_string(n) +
                   " >= " + str(threshold) + ")",
               Natural(n) >= threshold);
      // Some l_r is never the size of an intersection of h-1 distinct members.
      std::vector<bool> seen(L.values().size(), false);
      for_each_combination(m, static_cast<std::size_t>(h - 1), [&](const std::vector<std::size_t>& idx) {
        Subset acc = fam[idx[0]];
        for (std::size_t i = 1; i < idx.size(); ++i) acc &= fam[idx[i]];
        const auto& v = L.values();
        auto it = std::lower_bound(v.begin(), v.end(), acc.size());
        if (it != v.end() && *it == acc.size()) seen[static_cast<std::size_t>(it - v.begin())] = true;
        return !std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
      });
      const bool missing = !std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
      rb.check("missing_size", "some l_r is not the size of any (h-1)-wise intersection", missing);
      return rb.done(ExactRational(lemma36_formula(h, n, s, l1)), m);
    }
    case TheoremId::LEMMA_3_2: {
      reject_kwise(kwise, t);
      PairFamilyInstance inst{fam.ground(), fam.members(), fam.members(), L};
      auto report = check_lemma32_instance(inst);
      report.notes.push_back("applied to the self-paired instance A = B = family");
      return report;
    }
    case TheoremId::PROP_3_3: {
      reject_kwise(kwise, t);
      if (l1 < 1) throw ParameterMismatch("PROP_3_3 requires min(L) >= 1");
      PairFamilyInstance inst{fam.ground(), fam.members(), fam.members(), L};
      auto report = check_prop33_instance(inst);
      report.notes.push_back("applied to the self-paired instance A = B = family");
      return report;
    }
  }
  throw ParameterMismatch("unknown theorem");
}

}  // namespace setsys
