#include <gtest/gtest.h>

#include <numeric>

#include "prism/bounds.hpp"
#include "prism/errors.hpp"
#include "prism/graph.hpp"
#include "prism/labeler.hpp"

using namespace prism;

TEST(Phi, TableValues) {
  EXPECT_EQ(phi(8, 2), 3);
  EXPECT_EQ(phi(5, 1), 3);
  EXPECT_EQ(phi(7, 3), 3);
  EXPECT_EQ(phi(7, 3), 7 / 2);
  // One row per r at k = 2.
  EXPECT_EQ(phi(8, 1), 4);
  EXPECT_EQ(phi(9, 3), 3);
  EXPECT_EQ(phi(10, 1), 5);
  EXPECT_EQ(phi(11, 2), 5);
}

TEST(Phi, SmallS3ValuesAreFloorHalfN) {
  for (int n = 5; n <= 7; ++n) EXPECT_EQ(phi(n, 3), n / 2);
}

TEST(Phi, ScopeErrors) {
  EXPECT_THROW(phi(3, 1), OutsideTheoremScope);
  EXPECT_THROW(phi(4, 3), OutsideTheoremScope);
  EXPECT_THROW(phi(8, 4), OutsideTheoremScope);
  EXPECT_THROW(lower_bound_rn(4, 3), OutsideTheoremScope);
  EXPECT_FALSE(in_phi_scope(4, 3));
  EXPECT_TRUE(in_phi_scope(4, 2));
  const auto p = PhiParams::from(11, 2);
  EXPECT_EQ(p.k, 2);
  EXPECT_EQ(p.r, 3);
}

TEST(Phi, EqualsTripleSumBoundFromBfsDiameter) {
  // Summing the radio condition over three consecutive labels and bounding
  // the distance sum by n + 3 - s gives c(a_{i+2}) - c(a_i) >= ceil of this.
  for (int s = 1; s <= 3; ++s) {
    for (int n = 4; n <= 120; ++n) {
      if (!in_phi_scope(n, s)) continue;
      const int diam = build_graph(n, s).diameter();
      const int twice = 3 + 3 * diam - (n + 3 - s);
      EXPECT_EQ(phi(n, s), (twice + 1) / 2) << n << "," << s;
    }
  }
}

TEST(LowerBound, Examples) {
  EXPECT_EQ(lower_bound_rn(8, 2), 23);
  EXPECT_EQ(lower_bound_rn(5, 1), 14);
  EXPECT_EQ(lower_bound_rn(4, 1), 11);
}

TEST(DOffset, ExamplesAndDiameterDistance) {
  EXPECT_EQ(d_offset(8, 1), 4);
  EXPECT_EQ(d_offset(8, 2), 5);
  EXPECT_EQ(d_offset(5, 3), 3);
  const auto z81 = build_graph(8, 1);
  EXPECT_EQ(z81.distance(z81.make_vertex(1, 1), z81.make_vertex(2, 5)), 5);
  const auto z53 = build_graph(5, 3);
  EXPECT_EQ(z53.distance(z53.make_vertex(1, 1), z53.make_vertex(2, 4)), 2);

  for (int s = 1; s <= 3; ++s) {
    for (int n = std::max(3, s); n <= 100; ++n) {
      const auto g = build_graph(n, s);
      const int d = d_offset(n, s);
      for (int y = 1; y <= n; ++y) {
        ASSERT_EQ(g.distance(g.make_vertex(1, y), g.make_vertex(2, y + d)), g.diameter())
            << n << "," << s << " y=" << y;
      }
    }
  }
}

TEST(Omega, Examples) {
  EXPECT_EQ(omega(5), 1);
  EXPECT_EQ(omega(10), 3);
  EXPECT_EQ(omega(7), 2);
  EXPECT_EQ(omega(6), 1);
  EXPECT_THROW(omega(8), OutsideTheoremScope);
  EXPECT_THROW(omega(3), OutsideTheoremScope);
}

TEST(Omega, CoprimeToN) {
  for (int n = 5; n <= 200; ++n) {
    if (n % 4 == 0) continue;
    EXPECT_EQ(std::gcd(n, omega(n)), 1) << n;
  }
}

TEST(Bounds, TwicePhiCoversDiameter) {
  for (int s = 1; s <= 3; ++s) {
    for (int n = 4; n <= 200; ++n) {
      if (in_phi_scope(n, s)) EXPECT_GE(2 * phi(n, s), diameter_formula(n, s)) << n << "," << s;
    }
  }
}

TEST(Bounds, UsefulFactsOverCaseOne) {
  int cases = 0;
  for (int s = 1; s <= 3; ++s) {
    for (int n = 4; n <= 200; ++n) {
      if (case_select(n, s) != CaseId::Case1) continue;
      ++cases;
      const int diam = build_graph(n, s).diameter();
      const int p = phi(n, s);
      const int w = omega(n);
      EXPECT_GE(p + w, diam + 1) << n << "," << s;
      EXPECT_GE(p - w, (n - s) % 2 == 0 ? 1 : 2) << n << "," << s;
    }
  }
  EXPECT_GT(cases, 400);
}

TEST(TripleBound, Examples) {
  const auto r81 = triple_bound_report(build_graph(8, 1));
  EXPECT_TRUE(r81.holds);
  EXPECT_EQ(r81.triples_checked, 560);  // C(16, 3)
  EXPECT_EQ(r81.triples_skipped, 0);

  const auto r73 = triple_bound_report(build_graph(7, 3));
  EXPECT_TRUE(r73.holds);
  EXPECT_EQ(r73.triples_checked, 280);
  EXPECT_EQ(r73.triples_checked + r73.triples_skipped, 364);  // C(14, 3)

  EXPECT_TRUE(check_triple_bound(build_graph(5, 2)));
}

TEST(TripleBound, ExceptionalTriplesReallyExceedTheBound) {
  // Without the exclusion Z_{8,3} fails: d((1,1),(2,1)) = 1 and both are at
  // distance 4 from (1,5), so the sum is 9 > 8.
  const auto g = build_graph(8, 3);
  const auto a = g.make_vertex(1, 1);
  const auto b = g.make_vertex(2, 1);
  const auto c = g.make_vertex(1, 5);
  EXPECT_EQ(g.distance(a, b) + g.distance(b, c) + g.distance(a, c), 9);
}

TEST(TripleBound, HoldsForSmallGraphs) {
  for (int s = 1; s <= 3; ++s) {
    for (int n = 4; n <= 14; ++n) EXPECT_TRUE(check_triple_bound(build_graph(n, s))) << n << "," << s;
  }
}
