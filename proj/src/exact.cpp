#include "prism/exact.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <mutex>
#include <numeric>
#include <thread>

#include "prism/bounds.hpp"
#include "prism/errors.hpp"

namespace prism {

GreedyResult greedy_span_for_order(const PrismGraph& g, std::span<const int> order) {
  const int count = g.vertex_count();
  if (static_cast<int>(order.size()) != count) {
    throw NotAPermutation("order has " + std::to_string(order.size()) + " entries, graph has " +
                          std::to_string(count) + " vertices");
  }
  std::vector<char> seen(count, 0);
  for (int v : order) {
    if (v < 0 || v >= count || seen[v]) throw NotAPermutation("repeated or unknown vertex");
    seen[v] = 1;
  }

  const int required = g.diameter() + 1;
  GreedyResult out;
  out.labels.resize(count);
  for (int t = 0; t < count; ++t) {
    int c = t == 0 ? 1 : out.labels[t - 1] + 1;
    for (int j = 0; j < t; ++j) {
      c = std::max(c, out.labels[j] + required - g.distance(order[j], order[t]));
    }
    out.labels[t] = c;
  }
  out.span = out.labels.back();
  return out;
}

GreedyResult greedy_span_for_order(const PrismGraph& g, std::span<const Vertex> order) {
  std::vector<int> indices;
  indices.reserve(order.size());
  for (const auto& v : order) {
    if (v.position() > g.n()) throw NotAPermutation("vertex " + v.to_string() + " not in graph");
    indices.push_back(g.index(v));
  }
  return greedy_span_for_order(g, std::span<const int>(indices));
}

bool is_vertex_transitive(const PrismGraph& g) {
  const int count = g.vertex_count();
  // Assign images in BFS order from vertex 0 so every new vertex has an
  // already-mapped neighbour constraining it.
  std::vector<int> bfs_order(count);
  std::iota(bfs_order.begin(), bfs_order.end(), 0);
  const auto row0 = g.distances_from(0);
  std::stable_sort(bfs_order.begin(), bfs_order.end(),
                   [&](int a, int b) { return row0[a] < row0[b]; });

  std::vector<int> image(count, -1);
  std::vector<char> taken(count, 0);

  auto extend = [&](auto&& self, int t) -> bool {
    if (t == count) return true;
    const int x = bfs_order[t];
    for (int y = 0; y < count; ++y) {
      if (taken[y]) continue;
      bool ok = true;
      for (int p = 0; p < t && ok; ++p) {
        const int prev = bfs_order[p];
        ok = g.distance(x, prev) == g.distance(y, image[prev]);
      }
      if (!ok) continue;
      image[x] = y;
      taken[y] = 1;
      if (self(self, t + 1)) return true;
      image[x] = -1;
      taken[y] = 0;
    }
    return false;
  };

  for (int target = 0; target < count; ++target) {
    std::fill(image.begin(), image.end(), -1);
    std::fill(taken.begin(), taken.end(), 0);
    image[0] = target;
    taken[target] = 1;
    if (!extend(extend, 1)) return false;
  }
  return true;
}

SearchConfig default_search_config(int n, int s) {
  SearchConfig cfg;
  cfg.use_phi_pruning = in_phi_scope(n, s);
  if (case_select(n, s) != CaseId::Unsupported) {
    cfg.upper_bound_hint = construct_labeling(n, s).span();
  }
  cfg.workers = std::max(1u, std::thread::hardware_concurrency());
  return cfg;
}

namespace {

class OrderSearch {
 public:
  OrderSearch(const PrismGraph& g, const SearchConfig& cfg)
      : g_(g),
        count_(g.vertex_count()),
        diameter_(g.diameter()),
        phi_(cfg.use_phi_pruning ? phi(g.n(), g.s()) : 0),
        best_(cfg.upper_bound_hint ? *cfg.upper_bound_hint + 1 : INT_MAX),
        witness_(g.n(), g.s()) {
    if (cfg.time_budget) {
      deadline_ = std::chrono::steady_clock::now() + *cfg.time_budget;
      has_deadline_ = true;
    }
  }

  void run(bool fix_first, unsigned workers) {
    std::vector<std::pair<int, int>> tasks;
    const int firsts = fix_first ? 1 : count_;
    for (int a = 0; a < firsts; ++a) {
      for (int b = 0; b < count_; ++b) {
        if (a != b) tasks.emplace_back(a, b);
      }
    }
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      Worker w(*this);
      for (std::size_t t = next++; t < tasks.size() && !stop_.load(); t = next++) {
        w.root(tasks[t].first, tasks[t].second);
      }
      nodes_ += w.nodes;
    };
    workers = std::clamp<unsigned>(workers, 1u, static_cast<unsigned>(tasks.size()));
    if (workers == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }
  }

  bool found() const { return found_; }
  bool stopped() const { return stop_.load(); }
  int best() const { return best_.load(); }
  long long nodes() const { return nodes_.load(); }
  const Labeling& witness() const { return witness_; }

 private:
  struct Worker {
    explicit Worker(OrderSearch& s)
        : search(s), order(s.count_), labels(s.count_), used(s.count_, 0) {}

    // Least label for v placed after order[0..t), labels strictly increasing.
    int next_label(int t, int v) const {
      const int last = labels[t - 1];
      int c = last + 1;
      const auto row = search.g_.distances_from(v);
      for (int j = t - 1; j >= 0; --j) {
        // Farther back, c_j + diam + 1 - d <= last + 1 always holds.
        if (labels[j] + search.diameter_ <= last + 1) break;
        c = std::max(c, labels[j] + search.diameter_ + 1 - row[order[j]]);
      }
      return c;
    }

    // Lower bound on the final span once a vertex with label `label` sits at
    // position t, preceded by label `prev`, with `remaining` still to place.
    int final_bound(int label, int prev, int remaining) const {
      int lb = label + remaining;
      if (search.phi_ > 0) {
        lb = std::max(lb, label + (remaining / 2) * search.phi_ + remaining % 2);
        if (remaining % 2 == 1) lb = std::max(lb, prev + ((remaining + 1) / 2) * search.phi_);
      }
      return lb;
    }

    void root(int first, int second) {
      order[0] = first;
      labels[0] = 1;
      used[first] = 1;
      const int c = next_label(1, second);
      if (final_bound(c, 1, search.count_ - 2) < search.best_.load(std::memory_order_relaxed)) {
        order[1] = second;
        labels[1] = c;
        used[second] = 1;
        expand(2);
        used[second] = 0;
      }
      used[first] = 0;
    }

    void expand(int t) {
      ++nodes;
      if ((nodes & 1023) == 0 && search.has_deadline_ &&
          std::chrono::steady_clock::now() >= search.deadline_) {
        search.stop_.store(true);
      }
      if (search.stop_.load(std::memory_order_relaxed)) return;

      if (t == search.count_) {
        search.offer(order, labels);
        return;
      }

      const int remaining = search.count_ - t - 1;
      std::vector<std::pair<int, int>> children;  // (label, vertex)
      children.reserve(static_cast<std::size_t>(search.count_ - t));
      const int incumbent = search.best_.load(std::memory_order_relaxed);
      for (int v = 0; v < search.count_; ++v) {
        if (used[v]) continue;
        const int c = next_label(t, v);
        if (final_bound(c, labels[t - 1], remaining) < incumbent) children.emplace_back(c, v);
      }
      std::sort(children.begin(), children.end());

      for (const auto& [c, v] : children) {
        if (final_bound(c, labels[t - 1], remaining) >=
            search.best_.load(std::memory_order_relaxed)) {
          break;  // sorted by label, so every later child is pruned too
        }
        order[t] = v;
        labels[t] = c;
        used[v] = 1;
        expand(t + 1);
        used[v] = 0;
        if (search.stop_.load(std::memory_order_relaxed)) return;
      }
    }

    OrderSearch& search;
    std::vector<int> order;
    std::vector<int> labels;
    std::vector<char> used;
    long long nodes = 0;
  };

  void offer(const std::vector<int>& order, const std::vector<int>& labels) {
    const int span = labels.back();
    std::lock_guard<std::mutex> lock(mutex_);
    if (span >= best_.load()) return;
    best_.store(span);
    std::vector<int> by_index(count_);
    for (int t = 0; t < count_; ++t) by_index[order[t]] = labels[t];
    witness_ = Labeling(g_.n(), g_.s(), std::move(by_index));
    found_ = true;
  }

  const PrismGraph& g_;
  const int count_;
  const int diameter_;
  const int phi_;
  std::atomic<int> best_;
  std::atomic<bool> stop_{false};
  std::atomic<long long> nodes_{0};
  bool has_deadline_ = false;
  std::chrono::steady_clock::time_point deadline_{};
  std::mutex mutex_;
  Labeling witness_;
  bool found_ = false;
};

}  // namespace

ExactResult exact_radio_number(const PrismGraph& g, const SearchConfig& cfg) {
  if (cfg.use_phi_pruning && !in_phi_scope(g.n(), g.s())) {
    throw OutsideTheoremScope("phi pruning requested for (" + std::to_string(g.n()) + ", " +
                              std::to_string(g.s()) + ")");
  }
  const auto started = std::chrono::steady_clock::now();
  const bool fix_first = cfg.fix_first_vertex && is_vertex_transitive(g);

  OrderSearch search(g, cfg);
  search.run(fix_first, cfg.workers);

  ExactResult result;
  result.first_vertex_fixed = fix_first;
  result.nodes_explored = search.nodes();
  result.proven_optimal = !search.stopped();

  if (search.found()) {
    result.rn = search.best();
    result.witness = search.witness();
    return result;
  }
  if (!search.stopped()) {
    // Completed without reaching the hint: the hint was below rn. Search again
    // from scratch; the nodes spent proving rn > hint are kept in the count.
    SearchConfig retry = cfg;
    retry.upper_bound_hint.reset();
    if (cfg.time_budget) {
      const auto spent = std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - started);
      retry.time_budget = std::max(std::chrono::milliseconds(0), *cfg.time_budget - spent);
    }
    ExactResult again = exact_radio_number(g, retry);
    again.nodes_explored += result.nodes_explored;
    return again;
  }
  // Budget ran out before any labeling better than the hint was completed.
  // Fall back to the greedy span of the identity order as an upper bound.
  std::vector<int> identity(g.vertex_count());
  std::iota(identity.begin(), identity.end(), 0);
  const GreedyResult greedy = greedy_span_for_order(g, std::span<const int>(identity));
  result.rn = greedy.span;
  result.witness = Labeling(g.n(), g.s(), greedy.labels);
  return result;
}

}  // namespace prism
