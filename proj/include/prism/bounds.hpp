#pragma once

#include <optional>
#include <vector>

#include "prism/graph.hpp"

namespace prism {

/// n = 4k + r with k >= 1, r in {0,1,2,3}.
struct PhiParams {
  int n;
  int k;
  int r;
  int s;

  /// Throws OutsideTheoremScope for n < 4, (n, s) == (4, 3) or s not in {1,2,3}.
  static PhiParams from(int n, int s);
};

/// True when (n, s) is inside the scope of the phi table and lower bound.
bool in_phi_scope(int n, int s) noexcept;

/// Minimum gap between labels two apart in the label-sorted vertex order.
/// Literal table in k, indexed by (r, s):
///
///          s=1   s=2   s=3
///   r=0    k+2   k+1   k+2
///   r=1    k+2   k+2   k+1
///   r=2    k+3   k+2   k+2
///   r=3    k+2   k+3   k+2
int phi(int n, int s);

/// (n - 1) * phi(n, s) + 2.
int lower_bound_rn(int n, int s);

/// Offset D with d((1,y), (2,y+D)) = diam: floor((n+1)/2) for s in {1,3},
/// floor((n+2)/2) for s = 2.
int d_offset(int n, int s);

/// Case-1 rotation step. k for n = 4k+1 or (n = 4k+2, k odd); k+1 for
/// n = 4k+3 or (n = 4k+2, k even). Throws OutsideTheoremScope when r == 0
/// or n < 5.
int omega(int n);

struct TripleViolation {
  Vertex u;
  Vertex v;
  Vertex w;
  int distance_sum;
};

struct TripleBoundReport {
  bool holds = true;
  long long triples_checked = 0;
  long long triples_skipped = 0;
  int bound = 0;  // n + 3 - s
  std::vector<TripleViolation> violations;
};

/// Every 3-subset {u,v,w} has d(u,v) + d(v,w) + d(u,w) <= n + 3 - s. For
/// s = 3 triples containing both (1,j) and (2,j) for some j are skipped.
/// Exhaustive; violations (up to `max_witnesses`) are kept as witnesses.
TripleBoundReport triple_bound_report(const PrismGraph& g, std::size_t max_witnesses = 16);

inline bool check_triple_bound(const PrismGraph& g) { return triple_bound_report(g, 0).holds; }

}  // namespace prism
