#include "setsys/qspace.hpp"

#include <algorithm>
#include <sstream>

#include "setsys/clique.hpp"
#include "setsys/combinations.hpp"
#include "setsys/errors.hpp"
#include "setsys/search.hpp"

namespace setsys {

namespace {

void require_same(const Subspace& U, const Subspace& V) {
  if (!U.same_ambient(V)) throw DomainError("subspaces live in different ambient spaces");
}

Matrix stacked(const Subspace& U, const Subspace& V) {
  Matrix rows = U.basis();
  rows.insert(rows.end(), V.basis().begin(), V.basis().end());
  return rows;
}

}  // namespace

std::vector<Subspace> enumerate_subspaces(const FieldPtr& field, int n, int k, std::uint64_t cap) {
  if (!field) throw DomainError("enumerate_subspaces needs a field");
  if (n < 0) throw DomainError("ambient dimension must be nonnegative");
  if (k < 0 || k > n) return {};
  const Natural count = qbinom({n, k, field->q()});
  if (count > cap)
    throw BudgetExceeded("enumeration of " + count.str() + " subspaces exceeds the cap of " + std::to_string(cap));

  const unsigned q = field->q();
  std::vector<Subspace> out;
  out.reserve(static_cast<std::size_t>(count));
  for_each_combination(static_cast<std::size_t>(n), static_cast<std::size_t>(k),
                       [&](const std::vector<std::size_t>& piv) {
                         std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
                         for (auto c : piv) is_pivot[c] = true;
                         std::vector<std::pair<std::size_t, std::size_t>> free;
                         for (std::size_t i = 0; i < piv.size(); ++i)
                           for (std::size_t c = piv[i] + 1; c < static_cast<std::size_t>(n); ++c)
                             if (!is_pivot[c]) free.emplace_back(i, c);
                         Matrix m(piv.size(), Vec(static_cast<std::size_t>(n), 0));
                         for (std::size_t i = 0; i < piv.size(); ++i) m[i][piv[i]] = 1;
                         std::vector<unsigned> digit(free.size(), 0);
                         while (true) {
                           for (std::size_t f = 0; f < free.size(); ++f)
                             m[free[f].first][free[f].second] = static_cast<FieldElem>(digit[f]);
                           out.emplace_back(field, n, m);
                           std::size_t pos = free.size();
                           while (pos > 0 && digit[pos - 1] + 1 == q) digit[--pos] = 0;
                           if (pos == 0) break;
                           ++digit[pos - 1];
                         }
                         return true;
                       });
  if (Natural(out.size()) != count) throw std::logic_error("subspace enumeration count mismatch");
  return out;
}

int intersection_dim(const Subspace& U, const Subspace& V) {
  require_same(U, V);
  return U.dim() + V.dim() - static_cast<int>(rank(U.F(), stacked(U, V)));
}

Subspace intersect(const Subspace& U, const Subspace& V) {
  require_same(U, V);
  const auto n = static_cast<std::size_t>(U.n());
  Matrix rows;
  for (const auto& u : U.basis()) {
    Vec r(2 * n);
    std::copy(u.begin(), u.end(), r.begin());
    std::copy(u.begin(), u.end(), r.begin() + static_cast<std::ptrdiff_t>(n));
    rows.push_back(std::move(r));
  }
  for (const auto& v : V.basis()) {
    Vec r(2 * n, 0);
    std::copy(v.begin(), v.end(), r.begin());
    rows.push_back(std::move(r));
  }
  Matrix out;
  for (auto& r : rref(U.F(), std::move(rows))) {
    if (std::all_of(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n), [](FieldElem x) { return x == 0; }))
      out.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(n), r.end());
  }
  return Subspace(U.field(), U.n(), std::move(out));
}

Subspace sum(const Subspace& U, const Subspace& V) {
  require_same(U, V);
  return Subspace(U.field(), U.n(), stacked(U, V));
}

Subspace span_of(const SubspaceFamily& fam) {
  if (fam.empty()) throw DomainError("span of an empty family");
  Matrix rows;
  for (const auto& m : fam.members()) rows.insert(rows.end(), m.basis().begin(), m.basis().end());
  return Subspace(fam.field(), fam.n(), std::move(rows));
}

Subspace common_intersection(const SubspaceFamily& fam) {
  if (fam.empty()) throw DomainError("intersection of an empty family");
  Subspace acc = fam[0];
  for (std::size_t i = 1; i < fam.size() && acc.dim() > 0; ++i) acc = intersect(acc, fam[i]);
  return acc;
}

Subspace quotient(const Subspace& V, const Subspace& T) {
  require_same(V, T);
  if (!V.contains(T)) throw PreconditionError({"T is not contained in V"});
  const auto piv = T.pivots();
  std::vector<bool> is_pivot(static_cast<std::size_t>(V.n()), false);
  for (int p : piv) is_pivot[static_cast<std::size_t>(p)] = true;
  const FieldSpec& f = V.F();
  Matrix rows;
  for (const auto& v : V.basis()) {
    Vec w = v;
    for (std::size_t i = 0; i < piv.size(); ++i) {
      const FieldElem c = w[static_cast<std::size_t>(piv[i])];
      if (c == 0) continue;
      for (std::size_t j = 0; j < w.size(); ++j) w[j] = f.sub(w[j], f.mul(c, T.basis()[i][j]));
    }
    Vec kept;
    for (std::size_t j = 0; j < w.size(); ++j)
      if (!is_pivot[j]) kept.push_back(w[j]);
    rows.push_back(std::move(kept));
  }
  return Subspace(V.field(), V.n() - T.dim(), std::move(rows));
}

SubspaceFamily quotient_family(const SubspaceFamily& fam, const Subspace& T) {
  std::vector<std::string> violations;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    require_same(fam[i], T);
    if (!fam[i].contains(T)) violations.push_back("member " + std::to_string(i + 1) + " does not contain T");
  }
  if (!violations.empty()) throw PreconditionError(std::move(violations));
  std::vector<Subspace> members;
  for (const auto& m : fam.members()) members.push_back(quotient(m, T));
  return SubspaceFamily(fam.field(), fam.n() - T.dim(), std::move(members));
}

QHellyWitness helly_witness_q(const SubspaceFamily& fam) {
  if (fam.empty()) throw PreconditionError({"family is empty"});
  if (common_intersection(fam).dim() != 0)
    throw PreconditionError({"the members meet in a nonzero subspace"});
  QHellyWitness out;
  Subspace running = Subspace::whole(fam.field(), fam.n());
  while (running.dim() > 0) {
    std::size_t best = fam.size();
    Subspace best_space;
    for (std::size_t i = 0; i < fam.size(); ++i) {
      Subspace cut = intersect(running, fam[i]);
      if (cut.dim() < running.dim() && (best == fam.size() || cut.dim() < best_space.dim())) {
        best = i;
        best_space = std::move(cut);
      }
    }
    out.indices.push_back(best);
    running = std::move(best_space);
  }
  out.achieved_intersection = std::move(running);
  return out;
}

Lemma42Result check_lemma42(const SubspaceFamily& G, const Subspace& V, int l1) {
  std::vector<std::string> violations;
  if (l1 < 1) violations.push_back("l1 must be positive");
  if (G.empty()) {
    violations.push_back("G is empty");
    throw PreconditionError(std::move(violations));
  }
  require_same(G[0], V);
  if (common_intersection(G).dim() != 0) violations.push_back("the members of G meet in a nonzero subspace");
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G[i] == V) violations.push_back("V is member " + std::to_string(i + 1) + " of G");
    const int d = intersection_dim(V, G[i]);
    if (d < l1)
      violations.push_back("dim(V ∩ G_" + std::to_string(i + 1) + ") = " + std::to_string(d) + " < l1");
  }
  if (!violations.empty()) throw PreconditionError(std::move(violations));
  Lemma42Result out;
  out.P = span_of(G);
  out.overlap = intersection_dim(out.P, V);
  out.ok = out.overlap >= l1 + 1;
  return out;
}

SpanBoundResult check_span_bound(const SubspaceFamily& H, int k) {
  std::vector<std::string> violations;
  if (H.size() < 2) violations.push_back("H needs at least two members");
  if (k < 1) violations.push_back("k must be positive");
  for (std::size_t i = 0; i < H.size(); ++i) {
    if (H[i].dim() > k)
      violations.push_back("member " + std::to_string(i + 1) + " has dimension " + std::to_string(H[i].dim()) +
                           " > k");
    for (std::size_t j = i + 1; j < H.size(); ++j)
      if (intersection_dim(H[i], H[j]) == 0)
        violations.push_back("members " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                             " meet trivially");
  }
  if (!violations.empty()) throw PreconditionError(std::move(violations));
  SpanBoundResult out;
  out.span_dim = span_of(H).dim();
  const auto t = static_cast<std::int64_t>(H.size());
  out.bound = Natural(k) + Natural(t - 1) * Natural(k - 1);
  out.ok = Natural(out.span_dim) <= out.bound;
  return out;
}

namespace {

std::int64_t need(const std::optional<std::int64_t>& v, QTheorem t, const char* name) {
  if (!v) throw ParameterMismatch(to_string(t) + " requires " + name);
  return *v;
}

}  // namespace

QBoundResult q_bound(QTheorem theorem, const QBoundParams& p) {
  if (!is_prime_power(p.q)) throw DomainError("q must be a prime power, got " + std::to_string(p.q));
  if (p.n < 0) throw DomainError("n must be nonnegative");
  QBoundResult out;
  const std::uint64_t q = p.q;
  switch (theorem) {
    case QTheorem::T1_11: {
      const auto k = need(p.k, theorem, "k");
      if (k < 1 || p.n < 1) throw DomainError("T1_11 needs n >= 1 and k >= 1");
      out.bound = qbinom({p.n - 1, k - 1, q});
      return out;
    }
    case QTheorem::T1_12: {
      const auto s = need(p.s, theorem, "s");
      out.bound = qbinom({p.n, s, q});
      return out;
    }
    case QTheorem::T1_13: {
      const auto s = need(p.s, theorem, "s");
      out.bound = qbinom_sum(p.n, 0, s, q);
      return out;
    }
    case QTheorem::T1_14: {
      const auto s = need(p.s, theorem, "s");
      const auto t = need(p.t, theorem, "t");
      if (t < 1) throw DomainError("t must be positive");
      out.bound = qbinom_sum(p.n, s - t + 1, s, q);
      return out;
    }
    case QTheorem::T1_15:
    case QTheorem::T1_16: {
      const auto s = need(p.s, theorem, "s");
      const auto l1 = need(p.l1, theorem, "l1");
      const auto k = need(p.k, theorem, "k");
      if (l1 < 0 || l1 > p.n) throw DomainError("l1 must lie in 0..n");
      if (s < 0 || k < 0) throw DomainError("s and k must be nonnegative");
      std::int64_t lo = 0;
      if (theorem == QTheorem::T1_16) {
        const auto r = need(p.r, theorem, "r");
        if (r < 1) throw DomainError("r must be positive");
        lo = s - r + 1;
      }
      out.bound = qbinom_sum(p.n - l1, lo, s, q);
      out.threshold_rhs = (ipow(Natural(q), static_cast<std::uint64_t>(s)) - 1) * qbinom({k * k, l1 + 1, q}) + 1;
      out.threshold_ok = ipow(Natural(q), static_cast<std::uint64_t>(p.n - l1)) >= out.threshold_rhs;
      return out;
    }
  }
  throw ParameterMismatch("unknown theorem");
}

namespace {

Verdict pass_if(bool b) { return b ? Verdict::Pass : Verdict::Fail; }

bool pairwise_dims_in(const SubspaceFamily& fam, const LSet& L) {
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j)
      if (!L.contains(intersection_dim(fam[i], fam[j]))) return false;
  return true;
}

bool pairwise_nontrivial(const SubspaceFamily& fam) {
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j)
      if (intersection_dim(fam[i], fam[j]) == 0) return false;
  return true;
}

std::optional<int> uniform_dim(const SubspaceFamily& fam) {
  if (fam.empty()) return std::nullopt;
  for (const auto& m : fam.members())
    if (m.dim() != fam[0].dim()) return std::nullopt;
  return fam[0].dim();
}

bool dims_in(const SubspaceFamily& fam, const KSet& K) {
  return std::all_of(fam.members().begin(), fam.members().end(),
                     [&](const Subspace& m) { return K.contains(m.dim()); });
}

}  // namespace

TheoremReport apply_q_theorem(QTheorem theorem, const SubspaceFamily& fam, const LSet& L,
                              const std::optional<KSet>& dims) {
  if (fam.empty()) throw DomainError("apply_q_theorem: family is empty");
  if (L.empty()) throw DomainError("apply_q_theorem: L is empty");
  TheoremReport rep;
  rep.theorem = theorem;
  auto check = [&](std::string key, std::string desc, bool ok) {
    rep.hypotheses.push_back({std::move(key), std::move(desc), pass_if(ok)});
  };
  QBoundParams p;
  p.q = fam.field()->q();
  p.n = fam.n();
  p.s = L.s();
  p.l1 = L.min();
  const int kmax = fam.max_dim();
  const std::int64_t s = L.s(), l1 = L.min();

  switch (theorem) {
    case QTheorem::T1_11: {
      const auto k = uniform_dim(fam);
      p.k = k.value_or(kmax);
      check("uniform", "all members have the same dimension k", k.has_value());
      check("k_positive", "k >= 1", *p.k >= 1);
      check("intersecting", "every two members meet nontrivially", pairwise_nontrivial(fam));
      check("n_ge_2k", "n >= 2k", fam.n() >= 2 * *p.k);
      if (*p.k < 1) {
        rep.bound = 0;
        break;
      }
      rep.bound = q_bound(theorem, p).bound;
      break;
    }
    case QTheorem::T1_12:
      check("uniform", "all members have the same dimension", uniform_dim(fam).has_value());
      check("l_intersecting", "pairwise intersection dimensions lie in L", pairwise_dims_in(fam, L));
      rep.bound = q_bound(theorem, p).bound;
      break;
    case QTheorem::T1_13:
      check("l_intersecting", "pairwise intersection dimensions lie in L", pairwise_dims_in(fam, L));
      rep.bound = q_bound(theorem, p).bound;
      break;
    case QTheorem::T1_14: {
      if (!dims || dims->values().empty()) throw ParameterMismatch("T1_14 requires the dimension set");
      p.t = dims->r();
      check("dims_in_K", "every member dimension lies in K", dims_in(fam, *dims));
      check("l_intersecting", "pairwise intersection dimensions lie in L", pairwise_dims_in(fam, L));
      check("k_gt_s_minus_t", "k_i > s - t for every k_i", dims->values().front() > s - dims->r());
      rep.bound = q_bound(theorem, p).bound;
      break;
    }
    case QTheorem::T1_15:
    case QTheorem::T1_16: {
      p.k = kmax;
      if (theorem == QTheorem::T1_16) {
        if (!dims || dims->values().empty()) throw ParameterMismatch("T1_16 requires the dimension set");
        p.r = dims->r();
        check("dims_in_K", "every member dimension lies in K", dims_in(fam, *dims));
        check("k_gt_s_minus_r_plus_l1", "k_i > s - r + l1 for every k_i",
              dims->values().front() > s - dims->r() + l1);
      }
      check("l_intersecting", "pairwise intersection dimensions lie in L", pairwise_dims_in(fam, L));
      if (l1 > fam.n()) {
        check("l1_le_n", "l1 <= n", false);
        rep.bound = 0;
        break;
      }
      const auto res = q_bound(theorem, p);
      check("threshold", "q^(n-l1) >= (q^s - 1) qbinom(k^2, l1+1) + 1 = " + res.threshold_rhs.str() +
                             " with k = " + std::to_string(kmax),
            *res.threshold_ok);
      rep.bound = res.bound;
      break;
    }
  }
  rep.family_size = fam.size();
  rep.finalize();
  return rep;
}

QSearchResult max_subspace_family(const FieldPtr& field, int n, const std::optional<std::vector<int>>& dims,
                                  const LSet& L, double time_budget_s, unsigned threads) {
  if (!field) throw DomainError("max_subspace_family needs a field");
  if (n < 0) throw DomainError("ambient dimension must be nonnegative");
  if (L.empty()) throw DomainError("L must be nonempty");
  std::vector<int> ds;
  if (dims) {
    ds = *dims;
  } else {
    for (int d = 0; d <= n; ++d) ds.push_back(d);
  }
  Natural total = 0;
  for (int d : ds) total += qbinom({n, d, field->q()});
  if (total > kMaxPairwiseVertices)
    throw BudgetExceeded("subspace universe has " + total.str() + " members, above the limit of " +
                         std::to_string(kMaxPairwiseVertices));
  std::vector<Subspace> universe;
  for (int d : ds) {
    auto part = enumerate_subspaces(field, n, d);
    universe.insert(universe.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  CompatGraph g(universe.size());
  for (std::size_t i = 0; i < universe.size(); ++i)
    for (std::size_t j = i + 1; j < universe.size(); ++j)
      if (L.contains(intersection_dim(universe[i], universe[j]))) g.add_edge(i, j);
  const auto res = max_clique(g, SearchLimits{time_budget_s, threads});
  QSearchResult out;
  out.certified = res.certified;
  out.nodes_explored = res.nodes;
  out.max_size = res.clique.size();
  std::vector<Subspace> members;
  for (auto i : res.clique) members.push_back(universe[i]);
  if (!universe.empty()) out.witness = SubspaceFamily(field, n, std::move(members));
  return out;
}

SubspaceFamily parse_subspace_family(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  FieldPtr field;
  int n = -1;
  std::vector<Subspace> members;
  int pending = -1;  // rows still expected for the current block
  Matrix rows;
  std::size_t block_line = 0;

  auto close_block = [&]() {
    if (pending < 0) return;
    if (pending > 0) throw ParseError(line_no, "block has fewer rows than its k");
    const auto k = rows.size();
    Subspace s(field, n, rows);
    if (static_cast<std::size_t>(s.dim()) != k) throw ParseError(block_line, "rows of the block are linearly dependent");
    members.push_back(std::move(s));
    rows.clear();
    pending = -1;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    std::vector<std::string> toks;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) {
      if (pending == 0) close_block();
      continue;
    }
    try {
      if (!field) {
        int q = -1;
        for (const auto& t : toks) {
          if (t.rfind("q=", 0) == 0)
            q = std::stoi(t.substr(2));
          else if (t.rfind("n=", 0) == 0)
            n = std::stoi(t.substr(2));
          else
            throw ParseError(line_no, "expected header \"q=<int> n=<int>\"");
        }
        if (q < 0 || n < 0) throw ParseError(line_no, "expected header \"q=<int> n=<int>\"");
        try {
          field = FieldSpec::make(static_cast<unsigned>(q));
        } catch (const DomainError& e) {
          throw ParseError(line_no, e.what());
        }
        continue;
      }
      if (toks.size() == 1 && toks[0].rfind("k=", 0) == 0) {
        if (pending > 0) throw ParseError(line_no, "block has fewer rows than its k");
        close_block();
        pending = std::stoi(toks[0].substr(2));
        if (pending < 0 || pending > n) throw ParseError(line_no, "k must lie in 0..n");
        block_line = line_no;
        continue;
      }
      if (pending <= 0) throw ParseError(line_no, "row outside a k= block");
      if (toks.size() != 1 || toks[0].size() != static_cast<std::size_t>(n))
        throw ParseError(line_no, "a row must be " + std::to_string(n) + " digits");
      Vec row;
      for (char c : toks[0]) {
        int v = -1;
        if (c >= '0' && c <= '9') v = c - '0';
        if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
        if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
        if (v < 0 || static_cast<unsigned>(v) >= field->q()) throw ParseError(line_no, "digit outside the field");
        row.push_back(static_cast<FieldElem>(v));
      }
      rows.push_back(std::move(row));
      --pending;
    } catch (const std::invalid_argument&) {
      throw ParseError(line_no, "malformed integer");
    } catch (const std::out_of_range&) {
      throw ParseError(line_no, "integer out of range");
    }
  }
  if (!field) throw ParseError(line_no, "missing header");
  close_block();
  try {
    return SubspaceFamily(field, n, std::move(members));
  } catch (const ValidityError& e) {
    throw ValidityError(std::string("duplicate subspace: ") + e.what());
  }
}

SubspaceFamily parse_subspace_family_string(const std::string& text) {
  std::istringstream in(text);
  return parse_subspace_family(in);
}

std::string serialize_subspace_family(const SubspaceFamily& fam) {
  std::ostringstream os;
  os << "q=" << fam.field()->q() << " n=" << fam.n() << "\n";
  for (const auto& m : fam.members()) os << "\nk=" << m.dim() << "\n" << m.to_string();
  return os.str();
}

}  // namespace setsys
