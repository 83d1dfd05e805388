#include "setsys/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "setsys/errors.hpp"
#include "setsys/qspace.hpp"
#include "setsys/report.hpp"
#include "setsys/search.hpp"
#include "setsys/structural.hpp"
#include "setsys/theorems.hpp"

namespace setsys::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DataError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string family, grid, out, theorem, L, K, dims;
  int wise = 2;
  std::int64_t n = 0, l1 = 0, s = 0, r = 0, k = 0, t = 0;
  unsigned q = 2;
  double budget = 60.0;
  unsigned threads = 1;
  bool assert_n0 = false;
};

struct Context {
  Options opt;
  CLI::App* cmd = nullptr;
  std::vector<std::string> args;
  std::ostream* out = nullptr;

  bool has(const std::string& flag) const { return cmd->count(flag) > 0; }
};

std::int64_t need_int(const Context& ctx, const std::string& flag, std::int64_t value, const std::string& who) {
  if (!ctx.has(flag)) throw UsageError(who + " requires " + flag);
  return value;
}

std::vector<int> list_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_int_list(text);
  } catch (const DomainError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

LSet l_flag(const Context& ctx) {
  if (!ctx.has("--L")) throw UsageError(ctx.cmd->get_name() + " requires --L");
  auto v = list_flag("--L", ctx.opt.L);
  if (v.empty()) throw UsageError("--L must not be empty");
  return LSet(v);
}

std::optional<KSet> k_flag(const Context& ctx) {
  if (!ctx.has("--K")) return std::nullopt;
  auto v = list_flag("--K", ctx.opt.K);
  if (v.empty() || v.front() < 1) throw UsageError("--K needs positive sizes");
  return KSet(v);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_subspaces(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    return line.compare(first, 2, "q=") == 0;
  }
  return false;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DataError("cannot write " + path);
  f << text;
}

const char* mark(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    default:
      return "UNKNOWN";
  }
}

const char* mark(bool b) { return b ? "PASS" : "FAIL"; }

void print_report(std::ostream& os, const TheoremReport& rep) {
  os << std::left << std::setw(12) << rep.name() << " bound " << rational_string(rep.bound);
  if (rep.bound != ExactRational(rep.effective_bound)) os << " (floor " << rep.effective_bound << ")";
  os << "  size " << rep.family_size << "  applicable " << (rep.applicable ? "yes" : "no") << "  within "
     << (rep.within_bound ? "yes" : "no") << "  tight " << (rep.tight ? "yes" : "no");
  if (rep.common_core) os << "  common core " << (*rep.common_core ? "yes" : "no");
  os << "\n";
  for (const auto& h : rep.hypotheses)
    os << "    " << std::setw(8) << mark(h.verdict) << h.key << ": " << h.description << "\n";
  for (const auto& note : rep.notes) os << "    note: " << note << "\n";
}

void print_family(std::ostream& os, const SetFamily& fam) {
  for (std::size_t i = 0; i < fam.size(); ++i) os << "  " << i + 1 << ": " << fam[i].to_string() << "\n";
}

// Anomaly: a theorem whose hypotheses all pass is exceeded. The conjecture
// is not a theorem.
bool is_anomaly(const TheoremReport& rep) {
  if (!rep.applicable || rep.within_bound) return false;
  const auto* id = std::get_if<TheoremId>(&rep.theorem);
  return !(id && *id == TheoremId::CONJ_1_6);
}

std::string anomaly_text(const TheoremReport& rep) {
  return rep.name() + ": family of size " + rep.family_size.str() + " exceeds bound " + rep.effective_bound.str() +
         " with every hypothesis satisfied";
}

struct Outcome {
  ReportDocument doc;
  int code = kOk;
};

// bound -----------------------------------------------------------------

struct BoundLine {
  std::string label;
  Verdict verdict;
};

Outcome cmd_bound(Context& ctx) {
  const auto& o = ctx.opt;
  if (!ctx.has("--theorem")) throw UsageError("bound requires --theorem");
  Outcome res;
  ExactRational bound;
  std::vector<BoundLine> lines;
  std::string name;
  auto threshold = [&](const Natural& t) {
    lines.push_back({"threshold n ≥ " + t.str(), Natural(o.n) >= t ? Verdict::Pass : Verdict::Fail});
  };

  if (auto qt = parse_qtheorem(o.theorem)) {
    name = to_string(*qt);
    QBoundParams p;
    p.q = o.q;
    p.n = need_int(ctx, "--n", o.n, name);
    if (ctx.has("--k")) p.k = o.k;
    if (ctx.has("--s")) p.s = o.s;
    if (ctx.has("--t")) p.t = o.t;
    if (ctx.has("--l1")) p.l1 = o.l1;
    if (ctx.has("--r")) p.r = o.r;
    const auto qb = q_bound(*qt, p);
    bound = ExactRational(qb.bound);
    if (*qt == QTheorem::T1_11 && p.k)
      lines.push_back({"n ≥ 2k", p.n >= 2 * *p.k ? Verdict::Pass : Verdict::Fail});
    if (qb.threshold_ok)
      lines.push_back({"threshold q^(n-l1) ≥ " + qb.threshold_rhs.str(), *qb.threshold_ok ? Verdict::Pass : Verdict::Fail});
  } else if (auto id = parse_theorem_id(o.theorem)) {
    name = to_string(*id);
    const auto n = need_int(ctx, "--n", o.n, name);
    switch (*id) {
      case TheoremId::EKR_1_1: {
        const auto k = need_int(ctx, "--k", o.k, name);
        bound = ExactRational(ekr_bound(n, k));
        lines.push_back({"n ≥ 2k", ekr_hypothesis(n, k) ? Verdict::Pass : Verdict::Fail});
        break;
      }
      case TheoremId::TINT_1_2: {
        const auto k = need_int(ctx, "--k", o.k, name);
        const auto t = need_int(ctx, "--t", o.t, name);
        bound = ExactRational(t_intersecting_bound(n, k, t));
        lines.push_back({"threshold n ≥ " + std::to_string((t + 1) * (k - t + 1)),
                         t_intersecting_hypothesis(n, k, t) ? Verdict::Pass : Verdict::Fail});
        break;
      }
      case TheoremId::FW_1_3:
        bound = ExactRational(frankl_wilson_bound(n, need_int(ctx, "--s", o.s, name)));
        break;
      case TheoremId::SNEVILY_1_5:
        bound = ExactRational(snevily_bound(n, need_int(ctx, "--s", o.s, name)));
        break;
      case TheoremId::ABS_1_4:
        bound = ExactRational(abs_bound(n, need_int(ctx, "--s", o.s, name), need_int(ctx, "--r", o.r, name)));
        break;
      case TheoremId::CONJ_1_6:
      case TheoremId::THM_1_7: {
        const auto l1 = need_int(ctx, "--l1", o.l1, name);
        const auto s = need_int(ctx, "--s", o.s, name);
        const auto r = need_int(ctx, "--r", o.r, name);
        bound = ExactRational(thm17_bound(n, l1, s, r));
        if (*id == TheoremId::THM_1_7) {
          // smallest admissible member size unless --k names the largest one
          const std::int64_t k = ctx.has("--k") ? o.k : s - r + l1 + 1;
          threshold(thm17_threshold(k, l1, s));
        }
        break;
      }
      case TheoremId::COR_1_8: {
        const auto l1 = need_int(ctx, "--l1", o.l1, name);
        const auto s = need_int(ctx, "--s", o.s, name);
        const auto k = need_int(ctx, "--k", o.k, name);
        bound = ExactRational(thm17_bound(n, l1, s, s + 1));
        threshold(thm17_threshold(k, l1, s));
        break;
      }
      case TheoremId::FS_1_9:
      case TheoremId::FS_1_10: {
        const auto h = ctx.has("--wise") ? o.wise : throw UsageError(name + " requires --wise");
        const auto s = need_int(ctx, "--s", o.s, name);
        const std::int64_t l1 = *id == TheoremId::FS_1_10 ? need_int(ctx, "--l1", o.l1, name) : 0;
        bound = fs_kwise_bound(h, n, s, l1);
        lines.push_back({"n ≥ n0", o.assert_n0 ? Verdict::Pass : Verdict::Unknown});
        break;
      }
      case TheoremId::GS_3_4: {
        const auto h = ctx.has("--wise") ? o.wise : throw UsageError(name + " requires --wise");
        bound = ExactRational(gs_kwise_bound(h, n, need_int(ctx, "--s", o.s, name), 0));
        break;
      }
      case TheoremId::THM_3_5:
      case TheoremId::LEMMA_3_6: {
        const auto h = ctx.has("--wise") ? o.wise : throw UsageError(name + " requires --wise");
        const auto s = need_int(ctx, "--s", o.s, name);
        const auto l1 = need_int(ctx, "--l1", o.l1, name);
        const auto k = need_int(ctx, "--k", o.k, name);
        if (*id == TheoremId::THM_3_5) {
          if (l1 > n) throw DomainError("l1 must not exceed n");
          bound = ExactRational(Natural(h - 1) * binom_sum(n - l1, 0, s));
          threshold(prop33_threshold(k, l1, s));
        } else {
          bound = ExactRational(lemma36_bound(h, n, s, l1));
          threshold(lemma36_threshold(k, l1, s));
        }
        break;
      }
      case TheoremId::LEMMA_3_2:
        bound = ExactRational(lemma32_bound(n, need_int(ctx, "--s", o.s, name)));
        break;
      case TheoremId::PROP_3_3: {
        const auto s = need_int(ctx, "--s", o.s, name);
        const auto l1 = need_int(ctx, "--l1", o.l1, name);
        const auto k = need_int(ctx, "--k", o.k, name);
        if (l1 > n) throw DomainError("l1 must not exceed n");
        bound = ExactRational(binom_sum(n - l1, 0, s));
        threshold(prop33_threshold(k, l1, s));
        break;
      }
    }
  } else {
    throw UsageError("unknown theorem '" + o.theorem + "'");
  }

  std::ostringstream line;
  line << "bound = " << rational_string(bound);
  for (const auto& l : lines) line << ", " << l.label << ": " << mark(l.verdict);
  *ctx.out << line.str() << "\n";

  Json r;
  r["theorem"] = name;
  r["bound"] = to_json(bound);
  Json checks = Json::array();
  for (const auto& l : lines) checks.push_back(Json{{"label", l.label}, {"verdict", to_string(l.verdict)}});
  r["checks"] = std::move(checks);
  res.doc.results.push_back(std::move(r));
  return res;
}

// check -----------------------------------------------------------------

Outcome cmd_check(Context& ctx) {
  const auto& o = ctx.opt;
  if (!ctx.has("--family")) throw UsageError("check requires --family");
  const LSet L = l_flag(ctx);
  const auto K = k_flag(ctx);
  const std::string text = read_file(o.family);
  Outcome res;
  std::vector<TheoremReport> reports;
  std::vector<std::string> skipped;

  if (looks_like_subspaces(text)) {
    const auto fam = parse_subspace_family_string(text);
    std::vector<QTheorem> which;
    if (ctx.has("--theorem") && o.theorem != "all") {
      auto qt = parse_qtheorem(o.theorem);
      if (!qt) throw UsageError("unknown subspace theorem '" + o.theorem + "'");
      which.push_back(*qt);
    } else {
      which = {QTheorem::T1_11, QTheorem::T1_12, QTheorem::T1_13, QTheorem::T1_14, QTheorem::T1_15, QTheorem::T1_16};
    }
    for (auto t : which) {
      try {
        reports.push_back(apply_q_theorem(t, fam, L, K));
      } catch (const ParameterMismatch& e) {
        if (which.size() == 1) throw;
        skipped.push_back(to_string(t) + ": " + e.what());
      }
    }
  } else {
    const auto fam = parse_family_string(text);
    const int h = o.wise;
    if (h < 2) throw UsageError("--wise must be at least 2");
    std::vector<TheoremId> which;
    if (ctx.has("--theorem") && o.theorem != "all") {
      auto id = parse_theorem_id(o.theorem);
      if (!id) throw UsageError("unknown theorem '" + o.theorem + "'");
      which.push_back(*id);
    } else {
      which = theorems_for_arity(h);
    }
    for (auto t : which) {
      const bool kwise_theorem = t == TheoremId::FS_1_9 || t == TheoremId::FS_1_10 || t == TheoremId::GS_3_4 ||
                                 t == TheoremId::THM_3_5 || t == TheoremId::LEMMA_3_6;
      std::optional<KwiseParams> kwise;
      if (kwise_theorem) kwise = KwiseParams{h, std::nullopt};
      try {
        reports.push_back(apply_theorem(t, fam, L, K, kwise, ApplyOptions{o.assert_n0}));
      } catch (const ParameterMismatch& e) {
        if (which.size() == 1) throw;
        skipped.push_back(to_string(t) + ": " + e.what());
      }
    }
  }

  for (const auto& rep : reports) {
    print_report(*ctx.out, rep);
    res.doc.results.push_back(to_json(rep));
    if (is_anomaly(rep)) res.doc.anomalies.push_back(anomaly_text(rep));
  }
  for (const auto& s : skipped) *ctx.out << "skipped " << s << "\n";
  return res;
}

// witness ---------------------------------------------------------------

Outcome cmd_witness(Context& ctx) {
  if (!ctx.has("--family")) throw UsageError("witness requires --family");
  const std::string text = read_file(ctx.opt.family);
  Outcome res;
  Json r;
  if (looks_like_subspaces(text)) {
    const auto fam = parse_subspace_family_string(text);
    const auto w = helly_witness_q(fam);
    *ctx.out << "witness (" << w.indices.size() << " of " << fam.size() << " members, max dim " << fam.max_dim()
             << ") meets in dimension 0:\n";
    Json idx = Json::array();
    for (auto i : w.indices) {
      *ctx.out << "  member " << i + 1 << "\n";
      idx.push_back(i + 1);
    }
    r["indices"] = std::move(idx);
    r["achieved_dim"] = w.achieved_intersection.dim();
    if (w.indices.size() > static_cast<std::size_t>(fam.max_dim()) + 1)
      res.doc.anomalies.push_back("witness larger than max dimension + 1");
  } else {
    const auto fam = parse_family_string(text);
    const Subset target = common_intersection(fam);
    const auto w = helly_witness(fam, target);
    *ctx.out << "witness (" << w.indices.size() << " of " << fam.size() << " members, max size "
             << fam.max_member_size() << ") meets in " << w.achieved_intersection.to_string() << ":\n";
    Json idx = Json::array();
    for (auto i : w.indices) {
      *ctx.out << "  " << i + 1 << ": " << fam[i].to_string() << "\n";
      idx.push_back(i + 1);
    }
    r["indices"] = std::move(idx);
    r["achieved_intersection"] = w.achieved_intersection.elements();
    if (w.indices.size() > static_cast<std::size_t>(fam.max_member_size()) + 1)
      res.doc.anomalies.push_back("witness larger than max size + 1");
  }
  res.doc.results.push_back(std::move(r));
  return res;
}

// partition -------------------------------------------------------------

Outcome cmd_partition(Context& ctx) {
  if (!ctx.has("--family")) throw UsageError("partition requires --family");
  const LSet L = l_flag(ctx);
  const int h = ctx.has("--wise") ? ctx.opt.wise : 3;
  const auto fam = parse_family_string(read_file(ctx.opt.family));
  const auto part = kwise_partition(fam, L, h);
  Outcome res;
  auto& os = *ctx.out;
  os << "leading block and extracted members (B, companion C), k = " << part.k << ":\n";
  for (std::size_t i = 0; i < part.B.size(); ++i)
    os << "  " << part.reorder[i] + 1 << ": " << part.B[i].to_string() << "  companion " << part.C[i].to_string()
       << "\n";
  os << "remainder F (" << part.F.size() << " members):\n";
  for (std::size_t i = 0; i < part.F.size(); ++i)
    os << "  " << part.reorder[part.B.size() + i] + 1 << ": " << part.F[i].to_string() << "\n";

  Json r = to_json(part);
  const bool f_ok = part.F.size() < static_cast<std::size_t>(h - 1) ||
                    (h - 1 == 2 ? is_l_intersecting(part.F, L) : is_hwise_l_intersecting(part.F, L, h - 1));
  os << "F is " << h - 1 << "-wise L-intersecting: " << mark(f_ok) << "\n";
  r["F_reduced_arity"] = f_ok;
  if (!f_ok) res.doc.anomalies.push_back("remainder is not (h-1)-wise L-intersecting");
  if (L.min() >= 1) {
    const auto rep = check_prop33_instance(as_pair_instance(part, L), part.k);
    print_report(os, rep);
    r["pair_check"] = to_json(rep);
  } else {
    os << "pair check skipped: min(L) = 0\n";
  }
  res.doc.results.push_back(std::move(r));
  return res;
}

// search ----------------------------------------------------------------

void print_search(std::ostream& os, const Natural& max, bool certified) {
  if (certified)
    os << "max = " << max << " (certified)\n";
  else
    os << "max >= " << max << " (uncertified: time budget exhausted)\n";
}

Outcome cmd_search(Context& ctx) {
  const auto& o = ctx.opt;
  SearchSpec spec;
  spec.n = static_cast<int>(need_int(ctx, "--n", o.n, "search"));
  spec.L = l_flag(ctx);
  spec.K = k_flag(ctx);
  spec.h = o.wise;
  spec.time_budget_s = o.budget;
  spec.threads = o.threads;
  const auto result = max_family(spec);
  Outcome res;
  print_search(*ctx.out, result.max_size, result.certified);
  if (result.witness) print_family(*ctx.out, *result.witness);
  res.doc.results.push_back(to_json(result));
  if (!result.certified) res.code = kBudget;
  return res;
}

// construct -------------------------------------------------------------

Outcome cmd_construct(Context& ctx) {
  const auto& o = ctx.opt;
  const auto n = need_int(ctx, "--n", o.n, "construct");
  const auto l1 = need_int(ctx, "--l1", o.l1, "construct");
  const auto s = need_int(ctx, "--s", o.s, "construct");
  const auto r = need_int(ctx, "--r", o.r, "construct");
  const auto fam = construct_extremal(static_cast<int>(n), static_cast<int>(l1), static_cast<int>(s),
                                      static_cast<int>(r));
  const std::string text = serialize_family(fam);
  if (ctx.has("--out")) {
    write_file(o.out, text);
    *ctx.out << "wrote " << fam.size() << " members to " << o.out << "\n";
  } else {
    *ctx.out << text;
  }
  return {};
}

// qenum -----------------------------------------------------------------

Outcome cmd_qenum(Context& ctx) {
  const auto& o = ctx.opt;
  const auto n = static_cast<int>(need_int(ctx, "--n", o.n, "qenum"));
  const auto field = FieldSpec::make(o.q);
  std::vector<int> dims;
  if (ctx.has("--dims")) {
    dims = list_flag("--dims", o.dims);
  } else {
    for (int d = 0; d <= n; ++d) dims.push_back(d);
  }
  std::vector<Subspace> all;
  Outcome res;
  for (int d : dims) {
    auto part = enumerate_subspaces(field, n, d);
    const Natural expected = qbinom({n, d, o.q});
    *ctx.out << "dim " << d << ": " << part.size() << " subspaces (Gaussian binomial " << expected << ")\n";
    res.doc.results.push_back(Json{{"dim", d}, {"count", part.size()}, {"qbinom", to_json(expected)}});
    if (Natural(part.size()) != expected) res.doc.anomalies.push_back("count mismatch in dimension " + std::to_string(d));
    all.insert(all.end(), part.begin(), part.end());
  }
  if (ctx.has("--out")) {
    write_file(o.out, serialize_subspace_family(SubspaceFamily(field, n, std::move(all))));
    *ctx.out << "wrote subspaces to " << o.out << "\n";
    ctx.opt.out.clear();
  }
  return res;
}

// qsearch ---------------------------------------------------------------

Outcome cmd_qsearch(Context& ctx) {
  const auto& o = ctx.opt;
  const auto n = static_cast<int>(need_int(ctx, "--n", o.n, "qsearch"));
  const LSet L = l_flag(ctx);
  const auto field = FieldSpec::make(o.q);
  std::optional<std::vector<int>> dims;
  if (ctx.has("--dims")) dims = list_flag("--dims", o.dims);
  const auto result = max_subspace_family(field, n, dims, L, o.budget, o.threads);
  Outcome res;
  print_search(*ctx.out, result.max_size, result.certified);
  res.doc.results.push_back(to_json(result));
  if (!result.certified) {
    res.code = kBudget;
    return res;
  }
  if (result.witness && !result.witness->empty()) {
    std::optional<KSet> K;
    if (dims && !dims->empty() && dims->front() >= 1) K = KSet(*dims);
    for (auto t : {QTheorem::T1_11, QTheorem::T1_12, QTheorem::T1_13, QTheorem::T1_14, QTheorem::T1_15,
                   QTheorem::T1_16}) {
      try {
        const auto rep = apply_q_theorem(t, *result.witness, L, K);
        print_report(*ctx.out, rep);
        res.doc.results.push_back(to_json(rep));
        if (is_anomaly(rep)) res.doc.anomalies.push_back(anomaly_text(rep));
      } catch (const ParameterMismatch&) {
      } catch (const DomainError&) {
      }
    }
  }
  return res;
}

// scan ------------------------------------------------------------------

Outcome cmd_scan(Context& ctx) {
  const auto& o = ctx.opt;
  std::vector<GridCell> grid;
  if (ctx.has("--grid")) {
    std::ifstream in(o.grid);
    if (!in) throw DataError("cannot open " + o.grid);
    grid = parse_grid(in);
  } else {
    GridCell cell;
    cell.n = static_cast<int>(need_int(ctx, "--n", o.n, "scan without --grid"));
    cell.L = l_flag(ctx);
    cell.K = k_flag(ctx);
    cell.h = o.wise;
    grid.push_back(std::move(cell));
  }
  ScanOptions so;
  so.time_budget_s = o.budget;
  so.threads = o.threads;
  so.apply.assert_n0 = o.assert_n0;
  if (ctx.has("--theorem")) {
    auto id = parse_theorem_id(o.theorem);
    if (!id) throw UsageError("unknown theorem '" + o.theorem + "'");
    so.theorems.push_back(*id);
  }
  const auto cells = tightness_scan(grid, so);
  Outcome res;
  bool uncertified = false, errored = false;
  for (const auto& c : cells) {
    *ctx.out << c.cell.to_string() << ": ";
    if (c.error) {
      *ctx.out << "error: " << *c.error << "\n";
      errored = true;
    } else {
      print_search(*ctx.out, c.search->max_size, c.search->certified);
      if (!c.search->certified) uncertified = true;
      for (const auto& rep : c.reports) {
        *ctx.out << "  " << std::left << std::setw(12) << rep.name() << " bound " << std::setw(8)
                 << rational_string(rep.bound) << (rep.applicable ? " applicable" : " hypotheses fail")
                 << (rep.tight ? ", tight" : "") << (rep.within_bound ? "" : ", exceeded") << "\n";
      }
    }
    res.doc.results.push_back(to_json(c));
    for (const auto& a : c.anomalies) res.doc.anomalies.push_back(a);
  }
  if (errored)
    res.code = kData;
  else if (uncertified)
    res.code = kBudget;
  return res;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--out", o.out, "Write the report (or data file) to PATH");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounds, witnesses and exhaustive searches for L-intersecting families", "setsys"};
  app.require_subcommand(1);
  Context ctx;
  ctx.out = &out;
  ctx.args = args;
  Options& o = ctx.opt;

  auto* bound = app.add_subcommand("bound", "Evaluate a theorem's bound and threshold");
  bound->add_option("--theorem", o.theorem, "Theorem id or alias")->required();
  bound->add_option("--n", o.n);
  bound->add_option("--l1", o.l1);
  bound->add_option("--s", o.s);
  bound->add_option("--r", o.r);
  bound->add_option("--k", o.k, "Member size (or dimension)");
  bound->add_option("--t", o.t);
  bound->add_option("--q", o.q);
  bound->add_option("--wise", o.wise, "Intersection arity h");
  bound->add_flag("--assert-n0", o.assert_n0);

  auto* check = app.add_subcommand("check", "Apply theorems to a family file");
  check->add_option("--family", o.family)->required();
  check->add_option("--L", o.L)->required();
  check->add_option("--K", o.K);
  check->add_option("--wise", o.wise);
  check->add_option("--theorem", o.theorem, "Theorem id, alias or 'all'");
  check->add_flag("--assert-n0", o.assert_n0);

  auto* witness = app.add_subcommand("witness", "Small subfamily meeting in the full intersection");
  witness->add_option("--family", o.family)->required();

  auto* partition = app.add_subcommand("partition", "Split an h-wise family into (B, C, F)");
  partition->add_option("--family", o.family)->required();
  partition->add_option("--L", o.L)->required();
  partition->add_option("--wise", o.wise);

  auto* search = app.add_subcommand("search", "Certified maximum family search");
  search->add_option("--n", o.n)->required();
  search->add_option("--L", o.L)->required();
  search->add_option("--K", o.K);
  search->add_option("--wise", o.wise);
  search->add_option("--budget", o.budget, "Seconds");
  search->add_option("--threads", o.threads);

  auto* construct = app.add_subcommand("construct", "Extremal family meeting the bound with equality");
  construct->add_option("--n", o.n)->required();
  construct->add_option("--l1", o.l1)->required();
  construct->add_option("--s", o.s)->required();
  construct->add_option("--r", o.r)->required();

  auto* qenum = app.add_subcommand("qenum", "Enumerate subspaces of F_q^n");
  qenum->add_option("--q", o.q);
  qenum->add_option("--n", o.n)->required();
  qenum->add_option("--dims", o.dims);

  auto* qsearch = app.add_subcommand("qsearch", "Certified maximum subspace family search");
  qsearch->add_option("--q", o.q);
  qsearch->add_option("--n", o.n)->required();
  qsearch->add_option("--dims", o.dims);
  qsearch->add_option("--L", o.L)->required();
  qsearch->add_option("--budget", o.budget);
  qsearch->add_option("--threads", o.threads);

  auto* scan = app.add_subcommand("scan", "Search every grid cell and compare against the bounds");
  scan->add_option("--grid", o.grid, "Grid file");
  scan->add_option("--n", o.n);
  scan->add_option("--L", o.L);
  scan->add_option("--K", o.K);
  scan->add_option("--wise", o.wise);
  scan->add_option("--theorem", o.theorem);
  scan->add_option("--budget", o.budget);
  scan->add_option("--threads", o.threads);
  scan->add_flag("--assert-n0", o.assert_n0);

  for (auto* sub : {bound, check, witness, partition, search, construct, qenum, qsearch, scan}) add_common(sub, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  ctx.cmd = app.get_subcommands().front();
  const std::string name = ctx.cmd->get_name();

  Outcome res;
  try {
    if (o.wise < 2) throw UsageError("--wise must be at least 2");
    if (o.threads < 1) throw UsageError("--threads must be positive");
    if (name == "bound")
      res = cmd_bound(ctx);
    else if (name == "check")
      res = cmd_check(ctx);
    else if (name == "witness")
      res = cmd_witness(ctx);
    else if (name == "partition")
      res = cmd_partition(ctx);
    else if (name == "search")
      res = cmd_search(ctx);
    else if (name == "construct")
      res = cmd_construct(ctx);
    else if (name == "qenum")
      res = cmd_qenum(ctx);
    else if (name == "qsearch")
      res = cmd_qsearch(ctx);
    else
      res = cmd_scan(ctx);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParameterMismatch& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const PreconditionError& e) {
    err << e.what() << "\n";
    return kData;
  } catch (const Error& e) {
    err << "data error: " << e.what() << "\n";
    return kData;
  }

  res.doc.invocation = Json{{"command", name}, {"args", args}};
  if (!ctx.opt.out.empty() && name != "construct") write_file(ctx.opt.out, res.doc.dump());
  if (!res.doc.anomalies.empty()) {
    for (const auto& a : res.doc.anomalies) err << "ANOMALY: " << a << "\n";
    return kAnomaly;
  }
  return res.code;
}

}  // namespace setsys::cli
