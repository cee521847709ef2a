#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <vector>

#include "prism/graph.hpp"
#include "prism/labeler.hpp"

namespace prism {

struct SearchConfig {
  // Initial incumbent; the search still looks for a witness of this span.
  std::optional<int> upper_bound_hint;
  std::optional<std::chrono::milliseconds> time_budget;
  // Prune with the phi gap (labels two apart differ by >= phi). Only legal
  // inside the phi table's scope; exact_radio_number throws otherwise.
  bool use_phi_pruning = false;
  // Fix the first vertex of the order. Only applied once the graph is
  // confirmed vertex-transitive; otherwise ignored.
  bool fix_first_vertex = false;
  unsigned workers = 1;
};

/// phi pruning when in scope, incumbent from construct_labeling when the
/// instance has a construction, fix_first_vertex off.
SearchConfig default_search_config(int n, int s);

struct ExactResult {
  int rn = 0;
  Labeling witness{0, 0};
  long long nodes_explored = 0;
  bool proven_optimal = false;  // false only when the time budget ran out
  bool first_vertex_fixed = false;
};

struct GreedyResult {
  int span = 0;
  std::vector<int> labels;  // labels[t] belongs to order[t]
};

/// Minimal labels when vertices receive increasing labels in `order`:
/// c(order_1) = 1, then each label is the least value above the previous one
/// satisfying the radio condition against every earlier vertex. `order`
/// holds vertex indices. Throws NotAPermutation.
GreedyResult greedy_span_for_order(const PrismGraph& g, std::span<const int> order);
GreedyResult greedy_span_for_order(const PrismGraph& g, std::span<const Vertex> order);

/// rn(g) by depth-first search over label-sorted vertex orders with greedy
/// labels and branch-and-bound. Top-level branches (first and second vertex)
/// are spread over `workers` threads sharing the incumbent.
ExactResult exact_radio_number(const PrismGraph& g, const SearchConfig& cfg);

/// True when for every vertex v there is an automorphism taking vertex 0 to
/// v. Backtracking over distance-preserving maps; intended for small graphs.
bool is_vertex_transitive(const PrismGraph& g);

}  // namespace prism
