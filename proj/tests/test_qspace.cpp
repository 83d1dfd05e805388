#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "setsys/errors.hpp"
#include "setsys/qspace.hpp"

using namespace setsys;

namespace {

FieldPtr F2() { return FieldSpec::make(2); }

Vec e(int n, int i) {
  Vec v(n, 0);
  v[i - 1] = 1;
  return v;
}

Subspace span(const FieldPtr& f, int n, Matrix rows) { return Subspace(f, n, std::move(rows)); }

/// Every vector of F_q^n as a digit vector.
std::vector<Vec> all_vectors(unsigned q, int n) {
  std::vector<Vec> out;
  Vec v(n, 0);
  while (true) {
    out.push_back(v);
    int i = n - 1;
    while (i >= 0 && v[i] == q - 1) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
  }
  return out;
}

std::set<Vec> members_of(const Subspace& U) {
  std::set<Vec> out;
  for (const auto& v : all_vectors(U.F().q(), U.n()))
    if (U.contains(v)) out.insert(v);
  return out;
}

int log_q(std::size_t count, unsigned q) {
  int d = 0;
  while (count > 1) {
    count /= q;
    ++d;
  }
  return d;
}

}  // namespace

TEST(Field, RejectsBadOrders) {
  for (unsigned q : {0u, 1u, 6u, 10u, 12u, 17u, 25u}) EXPECT_THROW(FieldSpec::make(q), DomainError) << q;
}

TEST(Field, AxiomsHoldForEverySupportedOrder) {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    const auto f = FieldSpec::make(q);
    EXPECT_EQ(f->q(), q);
    for (unsigned a = 0; a < q; ++a) {
      EXPECT_EQ(f->add(a, f->neg(a)), 0);
      if (a) EXPECT_EQ(f->mul(a, f->inv(a)), 1);
      for (unsigned b = 0; b < q; ++b) {
        EXPECT_EQ(f->add(a, b), f->add(b, a));
        EXPECT_EQ(f->mul(a, b), f->mul(b, a));
        for (unsigned c = 0; c < q; ++c)
          EXPECT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
      }
    }
  }
}

TEST(Rref, CanonicalFormIsRowSpaceInvariant) {
  const auto f = FieldSpec::make(3);
  const Matrix a = {{1, 2, 0, 1}, {2, 1, 1, 0}};
  const Matrix b = {{0, 0, 1, 1}, {1, 2, 0, 1}, {1, 2, 1, 2}};
  EXPECT_EQ(rref(*f, a), rref(*f, b));
  EXPECT_EQ(rank(*f, b), 2u);
  EXPECT_EQ(span(f, 4, a), span(f, 4, b));
}

TEST(Subspace, ContainsMatchesSpanOracle) {
  const auto f = FieldSpec::make(3);
  const Subspace U = span(f, 3, {{1, 1, 0}, {0, 1, 2}});
  EXPECT_EQ(U.dim(), 2);
  std::set<Vec> spanned;
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned b = 0; b < 3; ++b)
      spanned.insert(Vec{FieldElem(a % 3), FieldElem((a + b) % 3), FieldElem((2 * b) % 3)});
  EXPECT_EQ(members_of(U), spanned);
  EXPECT_THROW(span(f, 3, {{1, 3, 0}}), DomainError);
  EXPECT_THROW(span(f, 3, {{1, 1}}), DomainError);
}

TEST(Enumerate, Examples) {
  const auto lines = enumerate_subspaces(F2(), 2, 1);
  ASSERT_EQ(lines.size(), 3u);
  std::set<Matrix> bases;
  for (const auto& l : lines) bases.insert(l.basis());
  EXPECT_EQ(bases, (std::set<Matrix>{{{1, 0}}, {{0, 1}}, {{1, 1}}}));
  EXPECT_EQ(enumerate_subspaces(F2(), 4, 2).size(), 35u);
  EXPECT_EQ(enumerate_subspaces(FieldSpec::make(3), 2, 1).size(), 4u);
}

TEST(Enumerate, CountsMatchClosureOracle) {
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= n; ++k)
      EXPECT_EQ(enumerate_subspaces(F2(), n, k).size(), oracle::count_binary_subspaces(n, k)) << n << " " << k;
}

TEST(Enumerate, CountsMatchQPascal) {
  for (unsigned q : {2u, 3u, 4u, 5u})
    for (int n = 0; n <= 4; ++n)
      for (int k = 0; k <= n; ++k)
        EXPECT_EQ(Natural(enumerate_subspaces(FieldSpec::make(q), n, k).size()), oracle::q_pascal(n, k, q));
}

TEST(Enumerate, DistinctAndOfRightDimension) {
  const auto all = enumerate_subspaces(FieldSpec::make(3), 4, 2);
  std::set<Matrix> bases;
  for (const auto& U : all) {
    EXPECT_EQ(U.dim(), 2);
    bases.insert(U.basis());
  }
  EXPECT_EQ(bases.size(), all.size());
  EXPECT_THROW(enumerate_subspaces(F2(), 16, 8, 1000), BudgetExceeded);
}

TEST(Lattice, IntersectionExamples) {
  const auto f = F2();
  const Subspace a = span(f, 4, {e(4, 1), e(4, 2)});
  const Subspace b = span(f, 4, {e(4, 2), e(4, 3)});
  EXPECT_EQ(intersection_dim(a, b), 1);
  EXPECT_EQ(intersection_dim(a, a), 2);
  EXPECT_EQ(intersection_dim(span(f, 2, {e(2, 1)}), span(f, 2, {e(2, 2)})), 0);
}

TEST(Lattice, IntersectionAndSumMatchVectorSets) {
  for (unsigned q : {2u, 3u}) {
    const auto f = FieldSpec::make(q);
    std::vector<Subspace> all;
    for (int k = 0; k <= 3; ++k) {
      auto part = enumerate_subspaces(f, 3, k);
      all.insert(all.end(), part.begin(), part.end());
    }
    for (std::size_t i = 0; i < all.size(); i += 3)
      for (std::size_t j = 0; j < all.size(); j += 2) {
        const auto A = members_of(all[i]);
        const auto B = members_of(all[j]);
        std::set<Vec> both;
        std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::inserter(both, both.end()));
        const Subspace I = intersect(all[i], all[j]);
        EXPECT_EQ(members_of(I), both);
        EXPECT_EQ(intersection_dim(all[i], all[j]), log_q(both.size(), q));
        EXPECT_EQ(sum(all[i], all[j]).dim(), all[i].dim() + all[j].dim() - I.dim());
      }
  }
}

TEST(Lattice, SpanExamples) {
  const auto f = F2();
  const Subspace e1 = span(f, 2, {e(2, 1)});
  const Subspace e2 = span(f, 2, {e(2, 2)});
  EXPECT_EQ(span_of(SubspaceFamily(f, 2, {e1, e2})), Subspace::whole(f, 2));
  EXPECT_EQ(span_of(SubspaceFamily(f, 2, {e1})), e1);
  EXPECT_EQ(span_of(SubspaceFamily(f, 2, {e1, span(f, 2, {{1, 1}})})), Subspace::whole(f, 2));
}

TEST(Quotient, Examples) {
  const auto f = F2();
  const Subspace T = span(f, 3, {e(3, 1)});
  std::vector<Subspace> planes;
  for (const auto& P : enumerate_subspaces(f, 3, 2))
    if (P.contains(T)) planes.push_back(P);
  ASSERT_EQ(planes.size(), 3u);
  const auto Q = quotient_family(SubspaceFamily(f, 3, planes), T);
  EXPECT_EQ(Q.n(), 2);
  EXPECT_EQ(Q.size(), 3u);
  for (const auto& U : Q.members()) EXPECT_EQ(U.dim(), 1);
  const auto Z = quotient_family(SubspaceFamily(f, 3, {T}), T);
  EXPECT_EQ(Z[0].dim(), 0);
  EXPECT_THROW(quotient_family(SubspaceFamily(f, 3, {span(f, 3, {e(3, 2)})}), T), PreconditionError);
}

TEST(Quotient, PreservesIntersectionDimensionsOverT) {
  const auto f = FieldSpec::make(3);
  const Subspace T = span(f, 4, {e(4, 4)});
  std::vector<Subspace> over;
  for (const auto& U : enumerate_subspaces(f, 4, 2))
    if (U.contains(T)) over.push_back(U);
  const auto Q = quotient_family(SubspaceFamily(f, 4, over), T);
  for (std::size_t i = 0; i < over.size(); ++i)
    for (std::size_t j = 0; j < over.size(); ++j)
      EXPECT_EQ(intersection_dim(Q[i], Q[j]), intersection_dim(over[i], over[j]) - 1);
}

TEST(QHelly, Examples) {
  const auto f = F2();
  const auto lines = enumerate_subspaces(f, 2, 1);
  EXPECT_EQ(helly_witness_q(SubspaceFamily(f, 2, lines)).indices.size(), 2u);
  const SubspaceFamily planes(f, 3, {span(f, 3, {e(3, 1), e(3, 2)}), span(f, 3, {e(3, 2), e(3, 3)}),
                                     span(f, 3, {e(3, 1), e(3, 3)})});
  const auto w = helly_witness_q(planes);
  EXPECT_EQ(w.indices.size(), 3u);
  EXPECT_EQ(w.achieved_intersection.dim(), 0);
  const SubspaceFamily through(f, 3, {span(f, 3, {e(3, 1), e(3, 2)}), span(f, 3, {e(3, 1), e(3, 3)})});
  EXPECT_THROW(helly_witness_q(through), PreconditionError);
}

TEST(Lemma42, PreconditionErrors) {
  const auto f = F2();
  const Subspace a = span(f, 3, {e(3, 1), e(3, 2)});
  const Subspace b = span(f, 3, {e(3, 1), e(3, 3)});
  EXPECT_THROW(check_lemma42(SubspaceFamily(f, 3, {a, b}), Subspace::whole(f, 3), 1), PreconditionError);
  const Subspace c = span(f, 3, {e(3, 2), e(3, 3)});
  const SubspaceFamily G(f, 3, {a, b, c});
  EXPECT_THROW(check_lemma42(G, a, 1), PreconditionError);
  const auto r = check_lemma42(G, Subspace::whole(f, 3), 1);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.P.dim(), 3);
}

TEST(SpanBound, Examples) {
  const auto f = F2();
  const auto r = check_span_bound(
      SubspaceFamily(f, 3, {span(f, 3, {e(3, 1), e(3, 2)}), span(f, 3, {e(3, 1), e(3, 3)})}), 2);
  EXPECT_EQ(r.span_dim, 3);
  EXPECT_EQ(r.bound, 3);
  EXPECT_TRUE(r.ok);
  const auto r3 = check_span_bound(SubspaceFamily(f, 4, {span(f, 4, {e(4, 1), e(4, 2)}), span(f, 4, {e(4, 1), e(4, 3)}),
                                                         span(f, 4, {e(4, 1), e(4, 4)})}),
                                   2);
  EXPECT_LE(r3.span_dim, 4);
  EXPECT_EQ(r3.bound, 4);
  EXPECT_TRUE(r3.ok);
  EXPECT_THROW(check_span_bound(SubspaceFamily(f, 3, {span(f, 3, {e(3, 1)}), span(f, 3, {e(3, 2)})}), 2),
               PreconditionError);
}

TEST(QBound, Examples) {
  EXPECT_EQ(q_bound(QTheorem::T1_11, {2, 4, 2, {}, {}, {}, {}}).bound, 7);
  const auto t15 = q_bound(QTheorem::T1_15, {2, 7, 2, 1, {}, 1, {}});
  EXPECT_EQ(t15.bound, 64);
  EXPECT_EQ(t15.threshold_rhs, 36);
  EXPECT_TRUE(*t15.threshold_ok);
  EXPECT_EQ(q_bound(QTheorem::T1_13, {2, 4, {}, 2, {}, {}, {}}).bound, 51);
  EXPECT_THROW(q_bound(QTheorem::T1_11, {2, 4, {}, {}, {}, {}, {}}), ParameterMismatch);
  EXPECT_THROW(q_bound(QTheorem::T1_16, {2, 7, 2, 1, {}, 1, {}}), ParameterMismatch);
}

TEST(QBound, ThresholdAgreesWithDirectInequality) {
  for (unsigned q : {2u, 3u, 4u})
    for (int n = 1; n <= 14; ++n)
      for (int l1 = 0; l1 <= std::min(n, 2); ++l1)
        for (int s = 1; s <= 3; ++s)
          for (int k = 1; k <= 3; ++k) {
            const auto r = q_bound(QTheorem::T1_15, {q, n, k, s, {}, l1, {}});
            Natural lhs = 1, qs = 1;
            for (int i = 0; i < n - l1; ++i) lhs *= q;
            for (int i = 0; i < s; ++i) qs *= q;
            const Natural rhs = (qs - 1) * oracle::q_pascal(k * k, l1 + 1, q) + 1;
            EXPECT_EQ(*r.threshold_ok, lhs >= rhs);
          }
}

TEST(ApplyQTheorem, StarOfPlanes) {
  const auto f = F2();
  const Subspace T = span(f, 4, {e(4, 1)});
  std::vector<Subspace> star;
  for (const auto& U : enumerate_subspaces(f, 4, 2))
    if (U.contains(T)) star.push_back(U);
  const auto rep = apply_q_theorem(QTheorem::T1_11, SubspaceFamily(f, 4, star), LSet({1}));
  EXPECT_TRUE(rep.applicable);
  EXPECT_EQ(rep.effective_bound, 7);
  EXPECT_TRUE(rep.tight);
}

TEST(MaxSubspaceFamily, Examples) {
  const auto a = max_subspace_family(F2(), 4, std::vector<int>{2}, LSet({1}));
  EXPECT_TRUE(a.certified);
  EXPECT_EQ(a.max_size, 7);
  ASSERT_TRUE(a.witness);
  for (std::size_t i = 0; i < a.witness->size(); ++i)
    for (std::size_t j = i + 1; j < a.witness->size(); ++j)
      EXPECT_EQ(intersection_dim((*a.witness)[i], (*a.witness)[j]), 1);
  EXPECT_EQ(max_subspace_family(F2(), 3, std::vector<int>{1}, LSet({0})).max_size, 7);
  EXPECT_EQ(max_subspace_family(F2(), 2, std::vector<int>{1}, LSet({1})).max_size, 1);
}

TEST(MaxSubspaceFamily, ThreadCountDoesNotChangeResult) {
  const auto a = max_subspace_family(F2(), 4, std::vector<int>{2}, LSet({0, 1}), 60, 1);
  const auto b = max_subspace_family(F2(), 4, std::vector<int>{2}, LSet({0, 1}), 60, 3);
  EXPECT_EQ(a.max_size, b.max_size);
  EXPECT_EQ(a.max_size, 35);
}

TEST(SubspaceFile, RoundTrip) {
  for (unsigned q : {2u, 3u, 16u}) {
    const auto f = FieldSpec::make(q);
    std::vector<Subspace> members;
    for (int k = 0; k <= 3; ++k) {
      auto part = enumerate_subspaces(f, 3, k);
      members.insert(members.end(), part.begin(), part.begin() + std::min<std::size_t>(part.size(), 5));
    }
    const SubspaceFamily fam(f, 3, members);
    const auto text = serialize_subspace_family(fam);
    EXPECT_EQ(parse_subspace_family_string(text), fam);
  }
}

TEST(SubspaceFile, Errors) {
  EXPECT_THROW(parse_subspace_family_string("q=6 n=2\n"), Error);
  EXPECT_THROW(parse_subspace_family_string("q=2 n=2\nk=1\n12\n"), Error);
  EXPECT_THROW(parse_subspace_family_string("q=2 n=2\nk=2\n10\n10\n"), Error);
  EXPECT_THROW(parse_subspace_family_string("q=2 n=2\nk=1\n10\n\nk=1\n10\n"), ValidityError);
  const auto ok = parse_subspace_family_string("# lines\nq=3 n=2\nk=1\n12\n");
  EXPECT_EQ(ok.size(), 1u);
}
