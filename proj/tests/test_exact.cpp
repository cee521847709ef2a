#include <gtest/gtest.h>

#include <algorithm>
#include <climits>
#include <numeric>
#include <random>

#include "oracle.hpp"
#include "prism/bounds.hpp"
#include "prism/errors.hpp"
#include "prism/exact.hpp"
#include "prism/labeler.hpp"
#include "prism/verifier.hpp"

using namespace prism;
using namespace std::chrono_literals;

namespace {

SearchConfig bare(unsigned workers = 1) {
  SearchConfig cfg;
  cfg.workers = workers;
  return cfg;
}

}  // namespace

TEST(Greedy, Z33ForcesConsecutiveLabels) {
  const auto g = build_graph(3, 3);
  std::vector<int> order(6);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937 rng(3);
  for (int t = 0; t < 20; ++t) {
    std::shuffle(order.begin(), order.end(), rng);
    const auto r = greedy_span_for_order(g, std::span<const int>(order));
    EXPECT_EQ(r.span, 6);
    EXPECT_EQ(r.labels, (std::vector<int>{1, 2, 3, 4, 5, 6}));
  }
}

TEST(Greedy, ConstructiveOrderReproducesConstructiveSpan) {
  for (auto [n, s] : {std::pair{5, 1}, {8, 2}, {10, 3}, {12, 1}, {9, 3}}) {
    const auto g = build_graph(n, s);
    const auto order = position_sequence(n, s);
    const auto r = greedy_span_for_order(g, std::span<const Vertex>(order));
    EXPECT_EQ(r.span, lower_bound_rn(n, s)) << n << "," << s;
    EXPECT_EQ(r.labels, label_sequence(n, s));
  }
}

TEST(Greedy, LexicographicOrderOnZ41) {
  const auto g = build_graph(4, 1);
  std::vector<int> order(8);
  std::iota(order.begin(), order.end(), 0);
  const auto r = greedy_span_for_order(g, std::span<const int>(order));
  EXPECT_EQ(r.span, 21);
  EXPECT_GE(r.span, 11);
}

TEST(Greedy, RejectsNonPermutations) {
  const auto g = build_graph(4, 1);
  std::vector<int> order = {0, 1, 2, 3, 4, 5, 6, 6};
  EXPECT_THROW(greedy_span_for_order(g, std::span<const int>(order)), NotAPermutation);
  order.pop_back();
  EXPECT_THROW(greedy_span_for_order(g, std::span<const int>(order)), NotAPermutation);
  order = {0, 1, 2, 3, 4, 5, 6, 8};
  EXPECT_THROW(greedy_span_for_order(g, std::span<const int>(order)), NotAPermutation);
}

TEST(Greedy, ProducesRadioLabelings) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 4 + trial % 5;
    const int s = 1 + trial % 3;
    const auto g = build_graph(n, s);
    std::vector<int> order(2 * n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const auto r = greedy_span_for_order(g, std::span<const int>(order));
    std::vector<int> by_index(2 * n);
    for (int t = 0; t < 2 * n; ++t) by_index[order[t]] = r.labels[t];
    EXPECT_TRUE(verify(g, Labeling(n, s, by_index)).valid);
  }
}

TEST(Exact, KnownValues) {
  const std::tuple<int, int, int> cases[] = {
      {3, 3, 6}, {4, 3, 9}, {4, 1, 11}, {4, 2, 8}, {5, 1, 14}, {5, 2, 14}, {5, 3, 10}};
  for (const auto& [n, s, rn] : cases) {
    const auto g = build_graph(n, s);
    for (const auto& cfg : {bare(), default_search_config(n, s)}) {
      const auto r = exact_radio_number(g, cfg);
      EXPECT_TRUE(r.proven_optimal);
      EXPECT_EQ(r.rn, rn) << n << "," << s;
      EXPECT_EQ(r.witness.span(), r.rn);
      EXPECT_TRUE(verify(g, r.witness).valid);
    }
  }
}

TEST(Exact, AgreesWithLabelSearchOracle) {
  // Independent route: search label vectors directly instead of orders.
  for (auto [n, s] : {std::pair{3, 1}, {3, 2}, {3, 3}, {4, 1}, {4, 2}, {4, 3}, {5, 3}}) {
    const int expected = oracle::radio_number_by_label_search(oracle::floyd_warshall(n, s));
    EXPECT_EQ(exact_radio_number(build_graph(n, s), bare()).rn, expected) << n << "," << s;
  }
}

TEST(Exact, OutsideTheoremScopeInstances) {
  EXPECT_EQ(exact_radio_number(build_graph(3, 1), bare()).rn, 6);
  EXPECT_EQ(exact_radio_number(build_graph(3, 2), bare()).rn, 8);
}

TEST(Exact, PhiPruningChangesOnlyNodeCount) {
  for (auto [n, s] : {std::pair{5, 1}, {5, 2}, {6, 3}}) {
    const auto g = build_graph(n, s);
    SearchConfig with = bare();
    with.use_phi_pruning = true;
    const auto a = exact_radio_number(g, bare());
    const auto b = exact_radio_number(g, with);
    EXPECT_EQ(a.rn, b.rn);
    EXPECT_LE(b.nodes_explored, a.nodes_explored);
  }
}

TEST(Exact, PhiPruningRequiresScope) {
  SearchConfig cfg;
  cfg.use_phi_pruning = true;
  EXPECT_THROW(exact_radio_number(build_graph(4, 3), cfg), OutsideTheoremScope);
  EXPECT_THROW(exact_radio_number(build_graph(3, 3), cfg), OutsideTheoremScope);
  EXPECT_FALSE(default_search_config(4, 3).use_phi_pruning);
  EXPECT_EQ(default_search_config(4, 3).upper_bound_hint, 9);
  EXPECT_FALSE(default_search_config(3, 1).upper_bound_hint.has_value());
}

TEST(Exact, DeterministicAcrossWorkerCounts) {
  for (auto [n, s] : {std::pair{5, 1}, {5, 2}, {6, 2}}) {
    const auto g = build_graph(n, s);
    const auto one = exact_radio_number(g, bare(1));
    const auto again = exact_radio_number(g, bare(1));
    const auto many = exact_radio_number(g, bare(4));
    EXPECT_EQ(one.rn, again.rn);
    EXPECT_EQ(one.witness, again.witness);
    EXPECT_EQ(one.nodes_explored, again.nodes_explored);
    EXPECT_EQ(one.rn, many.rn);
    EXPECT_TRUE(verify(g, many.witness).valid);
  }
}

TEST(Exact, HintBelowRadioNumberStillFindsOptimum) {
  const auto g = build_graph(5, 1);
  SearchConfig cfg = bare();
  cfg.upper_bound_hint = 10;
  const auto r = exact_radio_number(g, cfg);
  EXPECT_TRUE(r.proven_optimal);
  EXPECT_EQ(r.rn, 14);
  EXPECT_TRUE(verify(g, r.witness).valid);
}

TEST(Exact, BudgetExhaustionReportsUpperBound) {
  const auto g = build_graph(7, 2);
  SearchConfig cfg = bare();
  cfg.time_budget = 5ms;
  const auto r = exact_radio_number(g, cfg);
  EXPECT_FALSE(r.proven_optimal);
  EXPECT_GE(r.rn, lower_bound_rn(7, 2));
  EXPECT_EQ(r.witness.span(), r.rn);
  EXPECT_TRUE(verify(g, r.witness).valid);
}

TEST(Exact, FixFirstVertexOnlyAfterTransitivityCheck) {
  for (auto [n, s] : {std::pair{4, 1}, {4, 2}, {4, 3}, {5, 1}, {5, 3}, {6, 2}}) {
    const auto g = build_graph(n, s);
    EXPECT_TRUE(is_vertex_transitive(g));
    SearchConfig cfg = bare();
    cfg.fix_first_vertex = true;
    const auto fixed = exact_radio_number(g, cfg);
    const auto free = exact_radio_number(g, bare());
    EXPECT_TRUE(fixed.first_vertex_fixed);
    EXPECT_FALSE(free.first_vertex_fixed);
    EXPECT_EQ(fixed.rn, free.rn);
    EXPECT_LE(fixed.nodes_explored, free.nodes_explored);
  }
}

TEST(Exact, MinimumGreedyOverAllOrdersIsTheRadioNumber) {
  for (auto [n, s] : {std::pair{3, 3}, {4, 1}, {4, 3}}) {
    const auto g = build_graph(n, s);
    std::vector<int> order(2 * n);
    std::iota(order.begin(), order.end(), 0);
    int best = INT_MAX;
    do {
      best = std::min(best, greedy_span_for_order(g, std::span<const int>(order)).span);
    } while (std::next_permutation(order.begin(), order.end()));
    EXPECT_EQ(best, exact_radio_number(g, bare()).rn);
  }
}
