#include "setsys/clique.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

namespace setsys {

CompatGraph::CompatGraph(std::size_t n) : rows_(n, Bitset(n)) {}

void CompatGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) return;
  rows_[u].set(v);
  rows_[v].set(u);
}

Deadline::Deadline(double seconds) {
  if (seconds > 0) {
    end_ = std::chrono::steady_clock::now() +
           std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
  }
}

bool Deadline::expired() const { return end_ && std::chrono::steady_clock::now() >= *end_; }

namespace {

// Greedy sequential colouring of P; vertices come out grouped by colour in
// ascending colour order.
void colour_sort(const CompatGraph& g, const Bitset& P, std::vector<std::size_t>& order,
                 std::vector<std::size_t>& colours) {
  order.clear();
  colours.clear();
  Bitset uncoloured = P;
  std::size_t colour = 0;
  while (uncoloured.any()) {
    ++colour;
    Bitset q = uncoloured;
    for (std::size_t v = q.first(); v != Bitset::npos; v = q.next(v)) {
      // q only loses bits at indices > v, so walking with next() is safe.
      uncoloured.reset(v);
      q.subtract(g.neighbors(v));
      order.push_back(v);
      colours.push_back(colour);
    }
  }
}

class Search {
 public:
  Search(const CompatGraph& g, const SearchLimits& limits) : g_(g), limits_(limits), deadline_(limits.time_budget_s) {}

  CliqueOutcome run() {
    const std::size_t n = g_.size();
    Bitset all(n);
    all.set_all();
    colour_sort(g_, all, root_order_, root_colours_);
    next_task_ = static_cast<std::ptrdiff_t>(root_order_.size()) - 1;

    const unsigned threads = std::max(1U, limits_.threads);
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back([this] { worker(); });
      for (auto& th : pool) th.join();
    }

    CliqueOutcome out;
    out.certified = !stopped_.load();
    out.nodes = nodes_.load();
    out.clique = best_;
    std::sort(out.clique.begin(), out.clique.end());
    if (out.certified && !out.clique.empty()) {
      if (auto canon = first_clique_of_size(g_, out.clique.size(), deadline_)) out.clique = *canon;
    }
    return out;
  }

 private:
  void worker() {
    std::vector<std::size_t> current;
    std::uint64_t local_nodes = 0;
    while (!stopped_.load(std::memory_order_relaxed)) {
      std::ptrdiff_t idx;
      {
        std::lock_guard<std::mutex> lock(task_mutex_);
        idx = next_task_--;
      }
      if (idx < 0) break;
      const auto i = static_cast<std::size_t>(idx);
      if (root_colours_[i] <= best_size_.load()) break;
      const std::size_t v = root_order_[i];
      Bitset P(g_.size());
      for (std::size_t j = 0; j < i; ++j) P.set(root_order_[j]);
      P &= g_.neighbors(v);
      current.assign(1, v);
      ++local_nodes;
      if (P.none())
        offer(current);
      else
        expand(current, P, local_nodes);
    }
    nodes_.fetch_add(local_nodes);
  }

  void expand(std::vector<std::size_t>& current, Bitset P, std::uint64_t& local_nodes) {
    if ((++local_nodes & 1023U) == 0 && deadline_.expired()) stopped_.store(true);
    if (stopped_.load(std::memory_order_relaxed)) return;
    std::vector<std::size_t> order, colours;
    colour_sort(g_, P, order, colours);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + colours[i] <= best_size_.load(std::memory_order_relaxed)) return;
      const std::size_t v = order[i];
      current.push_back(v);
      Bitset child = P & g_.neighbors(v);
      if (child.none())
        offer(current);
      else
        expand(current, std::move(child), local_nodes);
      current.pop_back();
      P.reset(v);
      if (stopped_.load(std::memory_order_relaxed)) return;
    }
  }

  void offer(const std::vector<std::size_t>& clique) {
    if (clique.size() <= best_size_.load()) return;
    std::lock_guard<std::mutex> lock(best_mutex_);
    if (clique.size() > best_.size()) {
      best_ = clique;
      best_size_.store(clique.size());
    }
  }

  const CompatGraph& g_;
  SearchLimits limits_;
  Deadline deadline_;
  std::vector<std::size_t> root_order_, root_colours_;
  std::ptrdiff_t next_task_ = -1;
  std::mutex task_mutex_, best_mutex_;
  std::vector<std::size_t> best_;
  std::atomic<std::size_t> best_size_{0};
  std::atomic<bool> stopped_{false};
  std::atomic<std::uint64_t> nodes_{0};
};

bool first_rec(const CompatGraph& g, std::vector<std::size_t>& current, const Bitset& P, std::size_t target,
               const Deadline& deadline, std::uint64_t& ticks, bool& timed_out) {
  if (current.size() == target) return true;
  if ((++ticks & 1023U) == 0 && deadline.expired()) timed_out = true;
  if (timed_out) return false;
  Bitset rest = P;
  for (std::size_t v = P.first(); v != Bitset::npos; v = P.next(v)) {
    if (current.size() + rest.count() < target) return false;
    rest.reset(v);
    Bitset child = rest & g.neighbors(v);
    const std::size_t need = target - current.size() - 1;
    if (child.count() >= need && (need == 0 || colouring_bound(g, child) >= need)) {
      current.push_back(v);
      if (first_rec(g, current, child, target, deadline, ticks, timed_out)) return true;
      current.pop_back();
      if (timed_out) return false;
    }
  }
  return false;
}

void each_rec(const CompatGraph& g, std::vector<std::size_t>& current, const Bitset& P, std::size_t target,
              const std::function<bool(const std::vector<std::size_t>&)>& fn, std::uint64_t& visited, bool& stop) {
  if (current.size() == target) {
    ++visited;
    if (!fn(current)) stop = true;
    return;
  }
  Bitset rest = P;
  for (std::size_t v = P.first(); v != Bitset::npos && !stop; v = P.next(v)) {
    if (current.size() + rest.count() < target) return;
    rest.reset(v);
    Bitset child = rest & g.neighbors(v);
    const std::size_t need = target - current.size() - 1;
    if (child.count() >= need && (need == 0 || colouring_bound(g, child) >= need)) {
      current.push_back(v);
      each_rec(g, current, child, target, fn, visited, stop);
      current.pop_back();
    }
  }
}

}  // namespace

std::size_t colouring_bound(const CompatGraph& g, const Bitset& P) {
  std::vector<std::size_t> order, colours;
  colour_sort(g, P, order, colours);
  return colours.empty() ? 0 : colours.back();
}

CliqueOutcome max_clique(const CompatGraph& g, const SearchLimits& limits) {
  if (g.size() == 0) return CliqueOutcome{{}, true, 0};
  Search search(g, limits);
  return search.run();
}

std::optional<std::vector<std::size_t>> first_clique_of_size(const CompatGraph& g, std::size_t target,
                                                             const Deadline& deadline) {
  std::vector<std::size_t> current;
  if (target == 0) return current;
  Bitset all(g.size());
  all.set_all();
  std::uint64_t ticks = 0;
  bool timed_out = false;
  if (first_rec(g, current, all, target, deadline, ticks, timed_out)) return current;
  return std::nullopt;
}

std::uint64_t for_each_clique_of_size(const CompatGraph& g, std::size_t target,
                                      const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> current;
  std::uint64_t visited = 0;
  bool stop = false;
  if (target == 0) {
    fn(current);
    return 1;
  }
  Bitset all(g.size());
  all.set_all();
  each_rec(g, current, all, target, fn, visited, stop);
  return visited;
}

}  // namespace setsys
