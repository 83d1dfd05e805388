#include "setsys/structural.hpp"

#include <algorithm>
#include <numeric>

#include "setsys/combinations.hpp"
#include "setsys/errors.hpp"

namespace setsys {

namespace {

Subset intersect_all(const std::vector<Subset>& sets, std::size_t count) {
  Subset acc = sets.at(0);
  for (std::size_t i = 1; i < count; ++i) acc &= sets[i];
  return acc;
}

void report_violations(std::vector<std::string>& v) {
  if (!v.empty()) throw PreconditionError(std::move(v));
}

}  // namespace

HellyWitness helly_witness(const SetFamily& fam, Subset target) {
  if (fam.empty()) throw PreconditionError({"family is empty"});
  const Subset total = common_intersection(fam);
  if (total != target) {
    throw PreconditionError({"intersection of the family is " + total.to_string() + ", not the target " +
                             target.to_string()});
  }
  HellyWitness w;
  Subset running = Subset::full(fam.n());
  std::vector<bool> used(fam.size(), false);
  while (running != target || w.indices.empty()) {
    std::size_t best = fam.size();
    int best_size = running.size();
    for (std::size_t i = 0; i < fam.size(); ++i) {
      if (used[i]) continue;
      const int sz = (running & fam[i]).size();
      if (sz < best_size) {
        best = i;
        best_size = sz;
      }
    }
    if (best == fam.size()) {
      // Only reachable when target is the whole ground set: the sole member.
      best = 0;
    }
    used[best] = true;
    w.indices.push_back(best);
    running &= fam[best];
  }
  w.achieved_intersection = running;
  return w;
}

Lemma22Result check_lemma22(const SetFamily& H, Subset F, int l1) {
  std::vector<std::string> bad;
  if (l1 < 1) bad.push_back("l1 must be positive, got " + std::to_string(l1));
  if (H.empty()) {
    bad.push_back("H is empty");
    report_violations(bad);
  }
  if (!F.subset_of(Subset::full(H.n()))) bad.push_back("F " + F.to_string() + " is not a subset of [n]");
  const Subset core = common_intersection(H);
  if (!core.empty()) bad.push_back("intersection of H is " + core.to_string() + ", not empty");
  if (H.index_of(F)) bad.push_back("F " + F.to_string() + " is a member of H");
  for (std::size_t i = 0; i < H.size(); ++i) {
    const int sz = intersection_size(F, H[i]);
    if (sz < l1) {
      bad.push_back("|F ∩ H_" + std::to_string(i + 1) + "| = " + std::to_string(sz) + " < l1 = " +
                    std::to_string(l1));
    }
  }
  report_violations(bad);

  Lemma22Result r;
  for (const auto& h : H.members()) r.union_set |= h;
  r.overlap = intersection_size(r.union_set, F);
  r.ok = r.overlap >= l1 + 1;
  return r;
}

UnionBoundResult check_union_bound(const SetFamily& H, int k) {
  std::vector<std::string> bad;
  if (k < 1) bad.push_back("k must be positive");
  if (H.size() < 2) bad.push_back("H needs t >= 2 members, has " + std::to_string(H.size()));
  if (H.max_member_size() > k) {
    bad.push_back("a member has size " + std::to_string(H.max_member_size()) + " > k = " + std::to_string(k));
  }
  for (std::size_t i = 0; i < H.size(); ++i)
    for (std::size_t j = i + 1; j < H.size(); ++j)
      if (intersection_size(H[i], H[j]) == 0) {
        bad.push_back("H is not intersecting: members " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                      " are disjoint");
      }
  report_violations(bad);

  UnionBoundResult r;
  Subset u;
  for (const auto& h : H.members()) u |= h;
  r.union_size = u.size();
  const std::int64_t t = static_cast<std::int64_t>(H.size());
  r.bound = Natural(k) + Natural(t - 1) * (k - 1);
  r.ok = Natural(r.union_size) <= r.bound;
  return r;
}

TheoremReport check_lemma32_instance(const PairFamilyInstance& inst) {
  if (inst.A.size() != inst.B.size())
    throw ValidityError("pair instance: A and B must have the same length");
  if (inst.L.empty()) throw DomainError("pair instance: L is empty");
  const std::size_t m = inst.A.size();
  bool cond_i = true, cond_ii = true;
  for (std::size_t i = 0; i < m && cond_i; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!inst.L.contains(intersection_size(inst.A[i], inst.B[j]))) {
        cond_i = false;
        break;
      }
  for (std::size_t i = 0; i < m; ++i)
    if (inst.L.contains(intersection_size(inst.A[i], inst.B[i]))) cond_ii = false;

  TheoremReport r;
  r.theorem = TheoremId::LEMMA_3_2;
  r.hypotheses.push_back({"cond_i", "|A_i ∩ B_j| ∈ L for every i < j", cond_i ? Verdict::Pass : Verdict::Fail});
  r.hypotheses.push_back({"cond_ii", "|A_i ∩ B_i| ∉ L for every i", cond_ii ? Verdict::Pass : Verdict::Fail});
  r.bound = ExactRational(lemma32_bound(inst.ground.n, inst.L.s()));
  r.family_size = m;
  r.finalize();
  return r;
}

TheoremReport check_prop33_instance(const PairFamilyInstance& inst, std::optional<int> k_param) {
  if (inst.A.size() != inst.B.size())
    throw ValidityError("pair instance: A and B must have the same length");
  if (inst.L.empty()) throw DomainError("pair instance: L is empty");
  if (inst.L.min() < 1) throw DomainError("check_prop33_instance: min(L) must be >= 1");
  const std::size_t m = inst.A.size();
  const auto& A = inst.A;
  const auto& B = inst.B;
  const LSet& L = inst.L;
  const std::int64_t l1 = L.min();
  const std::int64_t s = L.s();

  int b_max = 0;
  for (const auto& b : B) b_max = std::max(b_max, b.size());
  const int k = k_param.value_or(b_max);

  TheoremReport r;
  r.theorem = TheoremId::PROP_3_3;
  r.hypotheses.push_back({"k_bounds_B", "every member of B has at most k = " + std::to_string(k) + " elements",
                          b_max <= k ? Verdict::Pass : Verdict::Fail});

  const std::size_t block = std::min<std::size_t>(m, static_cast<std::size_t>(k) + 1);
  bool cond_i = true;
  bool tail_i = true;  // no violation with j beyond the leading block
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!L.contains(intersection_size(A[i], B[j]))) {
        if (cond_i) r.notes.push_back("(i) fails at i=" + std::to_string(i + 1) + ", j=" + std::to_string(j + 1));
        cond_i = false;
        if (j >= block) tail_i = false;
      }
  if (!cond_i && tail_i) r.notes.push_back("(i) violations are confined to pairs inside the leading block");
  r.hypotheses.push_back({"cond_i", "|A_i ∩ B_j| ∈ L for every i < j", cond_i ? Verdict::Pass : Verdict::Fail});

  bool cond_ii = true;
  for (std::size_t i = 0; i < m; ++i) {
    if (!B[i].subset_of(A[i])) cond_ii = false;
    if (i >= block && L.contains(intersection_size(A[i], B[i]))) cond_ii = false;
  }
  r.hypotheses.push_back({"cond_ii", "B_i ⊆ A_i for all i and |A_i ∩ B_i| ∉ L for i >= k+2",
                          cond_ii ? Verdict::Pass : Verdict::Fail});

  bool cond_iii = m > 0;
  if (m > 0) {
    const Subset head = intersect_all(B, block);
    const Subset all = intersect_all(B, m);
    cond_iii = head == all && all.size() < l1;
    for (std::size_t i = 0; i < block; ++i)
      if (A[i] != B[i]) cond_iii = false;
  }
  r.hypotheses.push_back({"cond_iii",
                          "∩_{j<=k+1} B_j = ∩ B with size < l1, and A_i = B_i for i <= k+1",
                          cond_iii ? Verdict::Pass : Verdict::Fail});

  const Natural threshold = prop33_threshold(k, l1, s);
  r.hypotheses.push_back({"threshold",
                          "n >= [C(k^2+k, l1+1) + 1] s + l1 (" + std::to_string(inst.ground.n) +
                              " >= " + threshold.str() + ")",
                          Natural(inst.ground.n) >= threshold ? Verdict::Pass : Verdict::Fail});
  const std::int64_t n = inst.ground.n;
  r.bound = ExactRational(n >= l1 ? binom_sum(n - l1, 0, s) : Natural(0));
  r.family_size = m;
  r.notes.push_back("|A| = |B| = " + std::to_string(m));
  r.finalize();
  return r;
}

PartitionResult kwise_partition(const SetFamily& fam, const LSet& L, int h, std::uint64_t tuple_cap) {
  std::vector<std::string> bad;
  if (h < 3) bad.push_back("h must be >= 3, got " + std::to_string(h));
  if (L.empty()) bad.push_back("L is empty");
  if (fam.empty()) bad.push_back("family is empty");
  report_violations(bad);
  if (fam.size() >= static_cast<std::size_t>(h) && !is_hwise_l_intersecting(fam, L, h))
    bad.push_back("family is not " + std::to_string(h) + "-wise L-intersecting");
  const Subset core = common_intersection(fam);
  if (core.size() >= L.min()) {
    bad.push_back("|∩ family| = " + std::to_string(core.size()) + " is not below min(L) = " +
                  std::to_string(L.min()));
  }
  report_violations(bad);

  const std::size_t m = fam.size();
  PartitionResult out;
  out.k = fam.max_member_size();

  // Leading block: the Helly witness, padded in index order to k+1 members.
  const std::size_t block = std::min<std::size_t>(m, static_cast<std::size_t>(out.k) + 1);
  std::vector<std::size_t> order = helly_witness(fam, core).indices;
  std::sort(order.begin(), order.end());
  std::vector<bool> placed(m, false);
  for (auto i : order) placed[i] = true;
  for (std::size_t i = 0; i < m && order.size() < block; ++i)
    if (!placed[i]) {
      placed[i] = true;
      order.push_back(i);
    }

  std::vector<Subset> b_members, companions;
  for (auto i : order) {
    b_members.push_back(fam[i]);
    companions.push_back(fam[i]);
  }
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < m; ++i)
    if (!placed[i]) pending.push_back(i);

  const std::size_t r = static_cast<std::size_t>(h - 1);
  while (pending.size() >= r) {
    std::optional<std::vector<std::size_t>> hit;
    Subset hit_core;
    for_each_combination(pending.size(), r, [&](const std::vector<std::size_t>& idx) {
      if (++out.tuples_scanned > tuple_cap) {
        throw BudgetExceeded("kwise_partition: more than " + std::to_string(tuple_cap) + " tuples scanned");
      }
      Subset acc = fam[pending[idx[0]]];
      for (std::size_t t = 1; t < idx.size(); ++t) acc &= fam[pending[idx[t]]];
      if (!L.contains(acc.size())) {
        hit = idx;
        hit_core = acc;
        return false;
      }
      return true;
    });
    if (!hit) break;
    const std::size_t pos = hit->front();
    const std::size_t chosen = pending[pos];
    order.push_back(chosen);
    b_members.push_back(fam[chosen]);
    companions.push_back(hit_core);
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pos));
  }

  std::vector<Subset> f_members;
  for (auto i : pending) {
    f_members.push_back(fam[i]);
    order.push_back(i);
  }
  out.B = SetFamily(fam.ground(), std::move(b_members));
  out.C = std::move(companions);
  out.F = SetFamily(fam.ground(), std::move(f_members));
  out.reorder = std::move(order);
  return out;
}

PairFamilyInstance as_pair_instance(const PartitionResult& part, const LSet& L) {
  return PairFamilyInstance{part.B.ground(), part.B.members(), part.C, L};
}

CommonCoreResult find_common_core(const SetFamily& fam, const LSet& L, int h, std::uint64_t tuple_cap) {
  std::vector<std::string> bad;
  if (h < 3) bad.push_back("h must be >= 3, got " + std::to_string(h));
  if (L.empty() || L.min() < 1) bad.push_back("min(L) must be >= 1");
  if (fam.size() < static_cast<std::size_t>(h))
    bad.push_back("family needs at least h = " + std::to_string(h) + " members");
  report_violations(bad);
  if (!is_hwise_l_intersecting(fam, L, h))
    bad.push_back("family is not " + std::to_string(h) + "-wise L-intersecting");
  report_violations(bad);

  const int l1 = L.min();
  CommonCoreResult res;
  std::uint64_t scanned = 0;
  for_each_combination(fam.size(), static_cast<std::size_t>(h - 1), [&](const std::vector<std::size_t>& idx) {
    if (++scanned > tuple_cap)
      throw BudgetExceeded("find_common_core: more than " + std::to_string(tuple_cap) + " tuples scanned");
    Subset acc = fam[idx[0]];
    for (std::size_t t = 1; t < idx.size(); ++t) acc &= fam[idx[t]];
    if (acc.size() == l1) {
      res.core = acc;
      res.tuple = idx;
      return false;
    }
    return true;
  });
  if (res.core) {
    for (std::size_t i = 0; i < fam.size(); ++i)
      if (!res.core->subset_of(fam[i])) {
        res.anomaly = "core " + res.core->to_string() + " is not contained in member " + std::to_string(i + 1) +
                      " " + fam[i].to_string();
        break;
      }
  }
  return res;
}

}  // namespace setsys
