#include "prism/bounds.hpp"

#include <array>
#include <cstdlib>
#include <string>

#include "prism/errors.hpp"

namespace prism {

PhiParams PhiParams::from(int n, int s) {
  if (s < 1 || s > 3) throw OutsideTheoremScope("s = " + std::to_string(s));
  if (n < 4) throw OutsideTheoremScope("n = " + std::to_string(n) + " < 4");
  if (n == 4 && s == 3) throw OutsideTheoremScope("(n, s) = (4, 3)");
  return PhiParams{n, n / 4, n % 4, s};
}

bool in_phi_scope(int n, int s) noexcept {
  return s >= 1 && s <= 3 && n >= 4 && !(n == 4 && s == 3);
}

int phi(int n, int s) {
  // Offset added to k, rows r = 0..3, columns s = 1..3.
  static constexpr std::array<std::array<int, 3>, 4> kOffset{{
      {2, 1, 2},
      {2, 2, 1},
      {3, 2, 2},
      {2, 3, 2},
  }};
  const PhiParams p = PhiParams::from(n, s);
  return p.k + kOffset[p.r][p.s - 1];
}

int lower_bound_rn(int n, int s) { return (n - 1) * phi(n, s) + 2; }

int d_offset(int n, int s) {
  check_graph_parameters(n, s);
  return s == 2 ? (n + 2) / 2 : (n + 1) / 2;
}

int omega(int n) {
  const int k = n / 4;
  const int r = n % 4;
  if (r == 0 || k < 1) {
    throw OutsideTheoremScope("omega is defined for n = 4k + r, r in {1,2,3}, k >= 1; n = " +
                              std::to_string(n));
  }
  if (r == 1) return k;
  if (r == 3) return k + 1;
  return k % 2 == 1 ? k : k + 1;
}

TripleBoundReport triple_bound_report(const PrismGraph& g, std::size_t max_witnesses) {
  TripleBoundReport report;
  const int n = g.n();
  const int count = g.vertex_count();
  report.bound = n + 3 - g.s();

  // For s = 3, skip triples containing a vertical pair (1,j), (2,j).
  auto vertical = [&](int a, int b) { return g.s() == 3 && std::abs(a - b) == n; };

  for (int u = 0; u < count; ++u) {
    for (int v = u + 1; v < count; ++v) {
      const int duv = g.distance(u, v);
      const bool uv_vertical = vertical(u, v);
      for (int w = v + 1; w < count; ++w) {
        if (uv_vertical || vertical(u, w) || vertical(v, w)) {
          ++report.triples_skipped;
          continue;
        }
        ++report.triples_checked;
        const int sum = duv + g.distance(v, w) + g.distance(u, w);
        if (sum > report.bound) {
          report.holds = false;
          if (report.violations.size() < max_witnesses) {
            report.violations.push_back({g.vertex(u), g.vertex(v), g.vertex(w), sum});
          }
        }
      }
    }
  }
  return report;
}

}  // namespace prism
