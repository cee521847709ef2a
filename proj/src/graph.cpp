#include "prism/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <string>

#include "prism/errors.hpp"

namespace prism {

void check_graph_parameters(int n, int s) {
  if (s < 1 || s > 3) {
    throw UnsupportedParameters("s = " + std::to_string(s) + " (need 1 <= s <= 3)");
  }
  if (n < 3) throw UnsupportedParameters("n = " + std::to_string(n) + " (need n >= 3)");
  if (s > n) throw UnsupportedParameters("s > n");
}

PrismGraph::PrismGraph(int n, int s) : n_(n), s_(s) {
  check_graph_parameters(n, s);
  const int count = 2 * n;
  adj_.assign(count, {});

  auto connect = [&](const Vertex& a, const Vertex& b) {
    const int u = a.index(n);
    const int v = b.index(n);
    if (u == v) return;
    auto& nu = adj_[u];
    if (std::find(nu.begin(), nu.end(), v) != nu.end()) return;  // coincident offsets
    nu.push_back(v);
    adj_[v].push_back(u);
  };

  for (int cycle = 1; cycle <= 2; ++cycle) {
    for (int j = 1; j <= n; ++j) connect(Vertex(cycle, j, n), Vertex(cycle, j + 1, n));
  }
  const int lo = -((s - 1) / 2);
  const int hi = s / 2;
  for (int i = 1; i <= n; ++i) {
    for (int sigma = lo; sigma <= hi; ++sigma) connect(Vertex(1, i, n), Vertex(2, i + sigma, n));
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());

  dist_.assign(static_cast<std::size_t>(count) * count, -1);
  std::deque<int> queue;
  for (int src = 0; src < count; ++src) {
    int* row = dist_.data() + static_cast<std::size_t>(src) * count;
    row[src] = 0;
    queue.assign(1, src);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : adj_[u]) {
        if (row[v] < 0) {
          row[v] = row[u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  diameter_ = *std::max_element(dist_.begin(), dist_.end());
  if (*std::min_element(dist_.begin(), dist_.end()) < 0) {
    throw std::logic_error("PrismGraph: graph is disconnected");
  }
  if (diameter_ != diameter_formula(n, s)) {
    throw std::logic_error("PrismGraph: BFS diameter " + std::to_string(diameter_) +
                           " disagrees with floor((n+3-s)/2) = " +
                           std::to_string(diameter_formula(n, s)));
  }
}

std::vector<std::pair<int, int>> PrismGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

CycleView principal_cycle(const PrismGraph& g, int which) {
  if (which != 1 && which != 2) {
    throw std::invalid_argument("principal_cycle: which must be 1 or 2");
  }
  CycleView c;
  c.vertices.reserve(g.n());
  for (int j = 1; j <= g.n(); ++j) c.vertices.push_back(g.make_vertex(which, j));
  return c;
}

CycleView standard_cycle(const PrismGraph& g) {
  const int n = g.n();
  const int length = n + 3 - g.s();
  CycleView c;
  c.vertices.reserve(length);
  c.vertices.push_back(g.make_vertex(1, 1));
  if (g.s() == 1) {
    c.vertices.push_back(g.make_vertex(1, 2));
    for (int i = 3; i <= length; ++i) c.vertices.push_back(g.make_vertex(2, i - 1));
  } else {
    for (int i = 2; i <= length; ++i) c.vertices.push_back(g.make_vertex(2, i));
  }
  return c;
}

bool is_cycle_subgraph(const PrismGraph& g, const CycleView& cycle) {
  const int len = cycle.length();
  if (len < 3) return false;
  std::vector<char> seen(g.vertex_count(), 0);
  for (const auto& v : cycle.vertices) {
    if (v.position() > g.n() || seen[g.index(v)]) return false;
    seen[g.index(v)] = 1;
  }
  for (int t = 0; t < len; ++t) {
    if (!g.adjacent(g.index(cycle.vertices[t]), g.index(cycle.vertices[(t + 1) % len]))) {
      return false;
    }
  }
  return true;
}

bool is_v_tight(const PrismGraph& g, const CycleView& cycle, const Vertex& v) {
  const auto& vs = cycle.vertices;
  const auto it = std::find(vs.begin(), vs.end(), v);
  if (it == vs.end()) throw NotOnCycle(v.to_string());
  const int len = cycle.length();
  const int at = static_cast<int>(it - vs.begin());
  for (int t = 0; t < len; ++t) {
    const int gap = std::abs(t - at);
    const int along = std::min(gap, len - gap);
    if (g.distance(v, vs[t]) != along) return false;
  }
  return true;
}

bool is_tight(const PrismGraph& g, const CycleView& cycle) {
  return std::all_of(cycle.vertices.begin(), cycle.vertices.end(),
                     [&](const Vertex& v) { return is_v_tight(g, cycle, v); });
}

}  // namespace prism
