#include "setsys/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "setsys/bitset.hpp"
#include "setsys/clique.hpp"
#include "setsys/combinations.hpp"
#include "setsys/errors.hpp"

namespace setsys {

std::vector<Subset> candidate_universe(int n, const std::optional<KSet>& K) {
  if (n < 1 || n > kMaxGround) throw DomainError("n must lie in 1.." + std::to_string(kMaxGround));
  Natural total = 0;
  if (K) {
    for (int k : K->values()) total += binom(n, k);
  } else {
    total = ipow(Natural(2), static_cast<std::uint64_t>(n));
  }
  if (total > kMaxUniverse)
    throw BudgetExceeded("candidate universe has " + total.str() + " members, above the limit of " +
                         std::to_string(kMaxUniverse));
  std::vector<Subset> out;
  out.reserve(static_cast<std::size_t>(total));
  if (!K) {
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) out.emplace_back(b);
    return out;
  }
  for (int k : K->values()) {
    if (k > n) continue;
    for_each_combination(static_cast<std::size_t>(n), static_cast<std::size_t>(k),
                         [&](const std::vector<std::size_t>& idx) {
                           Subset s;
                           for (auto i : idx) s.insert(static_cast<int>(i) + 1);
                           out.push_back(s);
                           return true;
                         });
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void validate(const SearchSpec& spec) {
  if (spec.h < 2) throw DomainError("h must be at least 2");
  if (spec.n < 1 || spec.n > kMaxGround) throw DomainError("n must lie in 1.." + std::to_string(kMaxGround));
  if (spec.L.empty()) throw DomainError("L must be nonempty");
  if (spec.threads < 1) throw DomainError("thread count must be positive");
}

bool satisfies(const SetFamily& fam, const SearchSpec& spec) {
  if (spec.K && !sizes_in(fam, *spec.K)) return false;
  if (fam.size() < static_cast<std::size_t>(spec.h)) return true;
  return spec.h == 2 ? is_l_intersecting(fam, spec.L) : is_hwise_l_intersecting(fam, spec.L, spec.h);
}

SetFamily family_from(const SearchSpec& spec, const std::vector<Subset>& universe,
                      const std::vector<std::size_t>& idx) {
  std::vector<Subset> members;
  members.reserve(idx.size());
  for (auto i : idx) members.push_back(universe[i]);
  SetFamily fam(GroundSet{spec.n}, std::move(members));
  if (!satisfies(fam, spec)) throw std::logic_error("search produced an invalid family");
  return fam;
}

CompatGraph pairwise_graph(const std::vector<Subset>& universe, const LSet& L) {
  if (universe.size() > kMaxPairwiseVertices)
    throw BudgetExceeded("pairwise search is limited to " + std::to_string(kMaxPairwiseVertices) + " candidates");
  bool in_l[kMaxGround + 1] = {};
  for (int v : L.values())
    if (v <= kMaxGround) in_l[v] = true;
  CompatGraph g(universe.size());
  for (std::size_t i = 0; i < universe.size(); ++i)
    for (std::size_t j = i + 1; j < universe.size(); ++j)
      if (in_l[intersection_size(universe[i], universe[j])]) g.add_edge(i, j);
  return g;
}

// Good(S) = { Y in the universe : |Y ∩ S| ∈ L }.
class GoodCache {
 public:
  GoodCache(const std::vector<Subset>& universe, const LSet& L) : universe_(universe) {
    for (int v : L.values())
      if (v <= kMaxGround) in_l_[v] = true;
  }

  const Bitset& get(Subset s) {
    auto it = cache_.find(s.bits());
    if (it != cache_.end()) return it->second;
    Bitset b(universe_.size());
    for (std::size_t i = 0; i < universe_.size(); ++i)
      if (in_l_[intersection_size(universe_[i], s)]) b.set(i);
    return cache_.emplace(s.bits(), std::move(b)).first->second;
  }

 private:
  const std::vector<Subset>& universe_;
  bool in_l_[kMaxGround + 1] = {};
  std::unordered_map<std::uint64_t, Bitset> cache_;
};

// Partial family P with S[j] = the distinct intersections of j distinct
// members (S[0] = {[n]}), kept sorted.
struct Partial {
  std::vector<std::size_t> members;
  std::vector<std::vector<Subset>> S;
};

void insert_sorted(std::vector<Subset>& v, Subset s) {
  auto it = std::lower_bound(v.begin(), v.end(), s);
  if (it == v.end() || *it != s) v.insert(it, s);
}

bool has_sorted(const std::vector<Subset>& v, Subset s) { return std::binary_search(v.begin(), v.end(), s); }

// Search over families for h >= 3. Candidates are filtered so that every
// h-tuple containing at most one candidate is valid; the bound colours the
// graph Y ~ Z iff |Y ∩ Z ∩ J| ∈ L for every (h-2)-wise intersection J of P.
class HwiseEngine {
 public:
  HwiseEngine(const SearchSpec& spec, const std::vector<Subset>& universe)
      : spec_(spec), universe_(universe), h_(spec.h) {}

  struct Node {
    Partial partial;
    Bitset cand;
    std::vector<Bitset> rows;  // valid for members of cand, restricted to cand
  };

  Node root() const {
    const std::size_t V = universe_.size();
    Node node;
    node.partial.S.assign(static_cast<std::size_t>(h_), {});
    node.partial.S[0].push_back(Subset::full(spec_.n));
    node.cand = Bitset(V);
    node.cand.set_all();
    node.rows.assign(V, Bitset());
    for (std::size_t y = 0; y < V; ++y) {
      node.rows[y] = node.cand;
      node.rows[y].reset(y);
    }
    return node;
  }

  // Child of `node` adding vertex v, with candidates drawn from `pool`.
  Node child(const Node& node, std::size_t v, const Bitset& pool, GoodCache& good) const {
    Node out;
    const Subset x = universe_[v];
    out.partial.members = node.partial.members;
    out.partial.members.push_back(v);
    out.partial.S = node.partial.S;
    std::vector<Subset> new_top, new_mid;
    for (int j = h_ - 1; j >= 1; --j) {
      const auto& prev = node.partial.S[static_cast<std::size_t>(j - 1)];
      auto& cur = out.partial.S[static_cast<std::size_t>(j)];
      for (Subset J : prev) {
        const Subset I = x & J;
        if (has_sorted(node.partial.S[static_cast<std::size_t>(j)], I)) continue;
        insert_sorted(cur, I);
        if (j == h_ - 1) insert_sorted(new_top, I);
        if (j == h_ - 2) insert_sorted(new_mid, I);
      }
    }
    out.cand = pool;
    for (Subset I : new_top) out.cand &= good.get(I);
    out.rows.assign(universe_.size(), Bitset());
    out.cand.for_each([&](std::size_t y) {
      Bitset row = node.rows[y] & out.cand;
      for (Subset J : new_mid) row &= good.get(universe_[y] & J);
      out.rows[y] = std::move(row);
    });
    return out;
  }

  static void colour_sort(const Node& node, std::vector<std::size_t>& order, std::vector<std::size_t>& colours) {
    order.clear();
    colours.clear();
    Bitset uncoloured = node.cand;
    std::size_t colour = 0;
    while (uncoloured.any()) {
      ++colour;
      Bitset q = uncoloured;
      for (std::size_t v = q.first(); v != Bitset::npos; v = q.next(v)) {
        uncoloured.reset(v);
        q.subtract(node.rows[v]);
        order.push_back(v);
        colours.push_back(colour);
      }
    }
  }

  static std::size_t bound(const Node& node) {
    std::vector<std::size_t> order, colours;
    colour_sort(node, order, colours);
    return colours.empty() ? 0 : colours.back();
  }

 private:
  const SearchSpec& spec_;
  const std::vector<Subset>& universe_;
  int h_;
};

class HwiseMax {
 public:
  HwiseMax(const SearchSpec& spec, const std::vector<Subset>& universe)
      : engine_(spec, universe), universe_(universe), spec_(spec), deadline_(spec.time_budget_s) {}

  struct Outcome {
    std::vector<std::size_t> best;
    bool certified;
    std::uint64_t nodes;
  };

  Outcome run() {
    root_ = engine_.root();
    HwiseEngine::colour_sort(root_, root_order_, root_colours_);
    next_task_ = static_cast<std::ptrdiff_t>(root_order_.size()) - 1;
    const unsigned threads = std::max(1U, spec_.threads);
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back([this] { worker(); });
      for (auto& th : pool) th.join();
    }
    return Outcome{best_, !stopped_.load(), nodes_.load()};
  }

 private:
  void worker() {
    GoodCache good(universe_, spec_.L);
    std::uint64_t local = 0;
    while (!stopped_.load(std::memory_order_relaxed)) {
      std::ptrdiff_t idx;
      {
        std::lock_guard<std::mutex> lock(task_mutex_);
        idx = next_task_--;
      }
      if (idx < 0) break;
      const auto i = static_cast<std::size_t>(idx);
      if (root_colours_[i] <= best_size_.load()) break;
      Bitset pool(universe_.size());
      for (std::size_t j = 0; j < i; ++j) pool.set(root_order_[j]);
      auto node = engine_.child(root_, root_order_[i], pool, good);
      ++local;
      expand(node, good, local);
    }
    nodes_.fetch_add(local);
  }

  void expand(HwiseEngine::Node& node, GoodCache& good, std::uint64_t& local) {
    offer(node.partial.members);
    if (node.cand.none()) return;
    if ((++local & 255U) == 0 && deadline_.expired()) stopped_.store(true);
    if (stopped_.load(std::memory_order_relaxed)) return;
    std::vector<std::size_t> order, colours;
    HwiseEngine::colour_sort(node, order, colours);
    const std::size_t depth = node.partial.members.size();
    Bitset pool = node.cand;
    for (std::size_t i = order.size(); i-- > 0;) {
      if (depth + colours[i] <= best_size_.load(std::memory_order_relaxed)) return;
      const std::size_t v = order[i];
      pool.reset(v);
      auto kid = engine_.child(node, v, pool, good);
      expand(kid, good, local);
      if (stopped_.load(std::memory_order_relaxed)) return;
    }
  }

  void offer(const std::vector<std::size_t>& members) {
    if (members.size() <= best_size_.load()) return;
    std::lock_guard<std::mutex> lock(best_mutex_);
    if (members.size() > best_.size()) {
      best_ = members;
      best_size_.store(members.size());
    }
  }

  HwiseEngine engine_;
  const std::vector<Subset>& universe_;
  const SearchSpec& spec_;
  Deadline deadline_;
  HwiseEngine::Node root_;
  std::vector<std::size_t> root_order_, root_colours_;
  std::ptrdiff_t next_task_ = -1;
  std::mutex task_mutex_, best_mutex_;
  std::vector<std::size_t> best_;
  std::atomic<std::size_t> best_size_{0};
  std::atomic<bool> stopped_{false};
  std::atomic<std::uint64_t> nodes_{0};
};

// Ascending enumeration of h-wise families with exactly `target` members.
// Returns false once fn asked to stop or the deadline passed.
bool hwise_each(const HwiseEngine& engine, const HwiseEngine::Node& node, std::size_t target, GoodCache& good,
                const Deadline& deadline, std::uint64_t& ticks, bool& timed_out,
                const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  const std::size_t depth = node.partial.members.size();
  if (depth == target) return fn(node.partial.members);
  if ((++ticks & 255U) == 0 && deadline.expired()) timed_out = true;
  if (timed_out) return false;
  if (depth + node.cand.count() < target) return true;
  if (depth + HwiseEngine::bound(node) < target) return true;
  Bitset pool = node.cand;
  for (std::size_t v = node.cand.first(); v != Bitset::npos; v = node.cand.next(v)) {
    pool.reset(v);
    if (depth + 1 + pool.count() < target) return true;
    auto kid = engine.child(node, v, pool, good);
    if (!hwise_each(engine, kid, target, good, deadline, ticks, timed_out, fn)) return false;
  }
  return true;
}

std::uint64_t each_family(const SearchSpec& spec, const std::vector<Subset>& universe, std::size_t size,
                          const Deadline& deadline, bool& timed_out,
                          const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  timed_out = false;
  if (spec.h == 2) {
    const CompatGraph g = pairwise_graph(universe, spec.L);
    if (deadline.expired()) {
      timed_out = true;
      return 0;
    }
    return for_each_clique_of_size(g, size, fn);
  }
  if (universe.size() > kMaxHwiseVertices)
    throw BudgetExceeded("h-wise search is limited to " + std::to_string(kMaxHwiseVertices) + " candidates");
  HwiseEngine engine(spec, universe);
  GoodCache good(universe, spec.L);
  std::uint64_t ticks = 0, visited = 0;
  hwise_each(engine, engine.root(), size, good, deadline, ticks, timed_out,
             [&](const std::vector<std::size_t>& idx) {
               ++visited;
               return fn(idx);
             });
  return visited;
}

}  // namespace

SearchResult max_family(const SearchSpec& spec) {
  validate(spec);
  const auto universe = candidate_universe(spec.n, spec.K);
  SearchResult out;
  std::vector<std::size_t> best;
  if (spec.h == 2) {
    const CompatGraph g = pairwise_graph(universe, spec.L);
    auto res = max_clique(g, SearchLimits{spec.time_budget_s, spec.threads});
    best = std::move(res.clique);
    out.certified = res.certified;
    out.nodes_explored = res.nodes;
  } else {
    if (universe.size() > kMaxHwiseVertices)
      throw BudgetExceeded("h-wise search is limited to " + std::to_string(kMaxHwiseVertices) + " candidates");
    HwiseMax search(spec, universe);
    auto res = search.run();
    best = std::move(res.best);
    out.certified = res.certified;
    out.nodes_explored = res.nodes;
    std::sort(best.begin(), best.end());
    if (out.certified && !best.empty()) {
      Deadline deadline(spec.time_budget_s);
      bool timed_out = false;
      each_family(spec, universe, best.size(), deadline, timed_out, [&](const std::vector<std::size_t>& idx) {
        best = idx;
        return false;
      });
    }
  }
  out.max_size = best.size();
  if (!universe.empty()) out.witness = family_from(spec, universe, best);
  return out;
}

std::uint64_t for_each_family_of_size(const SearchSpec& spec, std::size_t size,
                                      const std::function<bool(const SetFamily&)>& fn) {
  validate(spec);
  const auto universe = candidate_universe(spec.n, spec.K);
  Deadline none(0);
  bool timed_out = false;
  return each_family(spec, universe, size, none, timed_out, [&](const std::vector<std::size_t>& idx) {
    return fn(family_from(spec, universe, idx));
  });
}

SetFamily construct_extremal(int n, int l1, int s, int r) {
  if (n < 1 || n > kMaxGround) throw DomainError("n must lie in 1.." + std::to_string(kMaxGround));
  if (l1 < 0 || l1 > n) throw DomainError("l1 must lie in 0..n");
  if (s < 1) throw DomainError("s must be at least 1");
  if (r < 1 || r > s + 1) throw DomainError("r must lie in 1..s+1");
  const Natural expected = thm17_bound(n, l1, s, r);
  if (expected > kMaxUniverse) throw BudgetExceeded("construction has " + expected.str() + " members");

  const Subset core = Subset::full(l1);
  const auto free = static_cast<std::size_t>(n - l1);
  std::vector<Subset> members;
  for (int j = s - r + 1; j <= s; ++j) {
    if (j > n - l1) break;
    for_each_combination(free, static_cast<std::size_t>(j), [&](const std::vector<std::size_t>& idx) {
      Subset m = core;
      for (auto i : idx) m.insert(l1 + 1 + static_cast<int>(i));
      members.push_back(m);
      return true;
    });
  }
  std::sort(members.begin(), members.end());
  SetFamily fam(GroundSet{n}, std::move(members));

  if (Natural(fam.size()) != expected)
    throw std::logic_error("construction size " + std::to_string(fam.size()) + " differs from " + expected.str());
  std::vector<int> lv;
  for (int v = l1; v <= s + l1 - 1; ++v) lv.push_back(v);
  if (fam.size() >= 2 && !is_l_intersecting(fam, LSet(lv)))
    throw std::logic_error("construction is not L-intersecting");
  return fam;
}

std::string GridCell::to_string() const {
  std::ostringstream os;
  os << "n=" << n << " L=" << L.to_string();
  if (K) os << " K=" << K->to_string();
  os << " h=" << h;
  return os.str();
}

std::vector<TheoremId> theorems_for_arity(int h) {
  using T = TheoremId;
  if (h == 2)
    return {T::EKR_1_1, T::TINT_1_2,  T::FW_1_3,    T::ABS_1_4, T::SNEVILY_1_5, T::CONJ_1_6,
            T::THM_1_7, T::COR_1_8,   T::LEMMA_3_2, T::PROP_3_3, T::GS_3_4,     T::THM_3_5};
  return {T::FS_1_9, T::FS_1_10, T::GS_3_4, T::THM_3_5, T::LEMMA_3_6};
}

namespace {

bool is_pairwise_only(TheoremId t) {
  switch (t) {
    case TheoremId::FS_1_9:
    case TheoremId::FS_1_10:
    case TheoremId::GS_3_4:
    case TheoremId::THM_3_5:
    case TheoremId::LEMMA_3_6:
      return false;
    default:
      return true;
  }
}

std::optional<KSet> sizes_of(const SetFamily& fam) {
  std::vector<int> sizes;
  for (const auto& m : fam.members())
    if (m.size() > 0) sizes.push_back(m.size());
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  if (sizes.empty()) return std::nullopt;
  return KSet(sizes);
}

}  // namespace

std::vector<CellOutcome> tightness_scan(const std::vector<GridCell>& grid, const ScanOptions& options) {
  std::vector<CellOutcome> out;
  for (const auto& cell : grid) {
    CellOutcome co;
    co.cell = cell;
    try {
      SearchSpec spec{cell.n, cell.L, cell.K, cell.h, options.time_budget_s, options.threads};
      co.search = max_family(spec);
    } catch (const Error& e) {
      co.error = e.what();
      out.push_back(std::move(co));
      continue;
    }
    const auto& res = *co.search;
    if (!res.certified || !res.witness || res.witness->empty()) {
      out.push_back(std::move(co));
      continue;
    }
    const SetFamily& w = *res.witness;
    const auto K = cell.K ? cell.K : sizes_of(w);
    const auto theorems = options.theorems.empty() ? theorems_for_arity(cell.h) : options.theorems;
    for (TheoremId t : theorems) {
      if (is_pairwise_only(t) && cell.h != 2) continue;
      std::optional<KwiseParams> kwise;
      if (!is_pairwise_only(t)) kwise = KwiseParams{cell.h, std::nullopt};
      try {
        auto report = apply_theorem(t, w, cell.L, K, kwise, options.apply);
        if (!cell.K && K && (t == TheoremId::ABS_1_4 || t == TheoremId::CONJ_1_6 || t == TheoremId::THM_1_7))
          report.notes.push_back("K taken from the witness sizes " + K->to_string());
        if (report.applicable && !report.within_bound) {
          if (t == TheoremId::CONJ_1_6) {
            report.notes.push_back("certified maximum exceeds the conjectured bound");
          } else {
            co.anomalies.push_back(cell.to_string() + ": " + report.name() + " bound " +
                                   report.effective_bound.str() + " exceeded by certified maximum " +
                                   res.max_size.str());
          }
        }
        co.reports.push_back(std::move(report));
      } catch (const ParameterMismatch&) {
      } catch (const DomainError&) {
      }
    }
    out.push_back(std::move(co));
  }
  return out;
}

std::vector<GridCell> parse_grid(std::istream& in) {
  std::vector<GridCell> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    GridCell cell;
    bool have_n = false, have_l = false, any = false;
    try {
      while (ls >> tok) {
        any = true;
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw ParseError(line_no, "expected key=value, got '" + tok + "'");
        const std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
        if (key == "n") {
          cell.n = std::stoi(value);
          have_n = true;
        } else if (key == "L") {
          cell.L = LSet(parse_int_list(value));
          have_l = true;
        } else if (key == "K") {
          cell.K = KSet(parse_int_list(value));
        } else if (key == "h") {
          cell.h = std::stoi(value);
        } else {
          throw ParseError(line_no, "unknown key '" + key + "'");
        }
      }
    } catch (const std::invalid_argument&) {
      throw ParseError(line_no, "malformed integer");
    } catch (const std::out_of_range&) {
      throw ParseError(line_no, "integer out of range");
    } catch (const DomainError& e) {
      throw ParseError(line_no, e.what());
    }
    if (!any) continue;
    if (!have_n || !have_l) throw ParseError(line_no, "a grid cell needs n= and L=");
    out.push_back(std::move(cell));
  }
  return out;
}

}  // namespace setsys
