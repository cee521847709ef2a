#pragma once

#include <span>
#include <utility>
#include <vector>

#include "prism/vertex.hpp"

namespace prism {

/// Immutable generalized prism graph Z_{n,s}.
///
/// Two n-cycles (cycle 1 and cycle 2) plus the cross edges (1,i)-(2,i+sigma)
/// for sigma in [-floor((s-1)/2), floor(s/2)]. All-pairs hop distances are
/// computed by BFS at construction and the diameter is checked against
/// floor((n + 3 - s) / 2).
class PrismGraph {
 public:
  PrismGraph(int n, int s);

  int n() const noexcept { return n_; }
  int s() const noexcept { return s_; }
  int vertex_count() const noexcept { return 2 * n_; }
  int diameter() const noexcept { return diameter_; }

  Vertex vertex(int index) const { return Vertex::from_index(index, n_); }
  int index(const Vertex& v) const noexcept { return v.index(n_); }
  Vertex make_vertex(long long cycle, long long position) const {
    return Vertex(cycle, position, n_);
  }

  int distance(int u, int v) const noexcept { return dist_[u * vertex_count() + v]; }
  int distance(const Vertex& u, const Vertex& v) const noexcept {
    return distance(index(u), index(v));
  }
  // Row u of the distance matrix.
  std::span<const int> distances_from(int u) const noexcept {
    return {dist_.data() + static_cast<std::size_t>(u) * vertex_count(),
            static_cast<std::size_t>(vertex_count())};
  }

  std::span<const int> neighbors(int u) const noexcept { return adj_[u]; }
  bool adjacent(int u, int v) const noexcept { return distance(u, v) == 1; }
  int degree(int u) const noexcept { return static_cast<int>(adj_[u].size()); }

  // Each undirected edge once, as (smaller index, larger index), sorted.
  std::vector<std::pair<int, int>> edges() const;

 private:
  int n_;
  int s_;
  int diameter_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<int> dist_;
};

/// Validates (n, s), throwing UnsupportedParameters if the graph is not in
/// the supported family.
void check_graph_parameters(int n, int s);

inline PrismGraph build_graph(int n, int s) { return PrismGraph(n, s); }

// floor((n + 3 - s) / 2)
constexpr int diameter_formula(int n, int s) noexcept { return (n + 3 - s) / 2; }

/// An ordered list of distinct vertices, consecutive entries (cyclically)
/// adjacent in the host graph.
struct CycleView {
  std::vector<Vertex> vertices;
  int length() const noexcept { return static_cast<int>(vertices.size()); }
};

/// The principal n-cycle (which, 1), ..., (which, n); `which` is 1 or 2.
CycleView principal_cycle(const PrismGraph& g, int which);

/// The standard maximum-length (1,1)-tight cycle with n + 3 - s vertices:
///   s = 1: (1,1), (1,2), (2,2), ..., (2,n), (2,1)
///   s = 2, 3: (1,1), (2,2), ..., (2, n + 3 - s)   (positions mod n)
CycleView standard_cycle(const PrismGraph& g);

/// True when `cycle` is a cycle subgraph of `g`: length >= 3, distinct
/// entries, consecutive entries adjacent.
bool is_cycle_subgraph(const PrismGraph& g, const CycleView& cycle);

/// True iff graph distance from v equals along-cycle distance from v for
/// every vertex on the cycle. Throws NotOnCycle if v is absent.
bool is_v_tight(const PrismGraph& g, const CycleView& cycle, const Vertex& v);

/// True iff the cycle is v-tight for every v on it.
bool is_tight(const PrismGraph& g, const CycleView& cycle);

}  // namespace prism
