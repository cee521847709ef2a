#include "prism/selftest.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <string>

#include "prism/bounds.hpp"
#include "prism/exact.hpp"
#include "prism/graph.hpp"
#include "prism/labeler.hpp"
#include "prism/verifier.hpp"

namespace prism {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++result_.checks;
    if (ok) return;
    result_.passed = false;
    if (result_.failures.size() < 10) result_.failures.push_back(what);
  }

  template <typename Fn>
  void guarded(const std::string& context, Fn&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      check(false, context + ": " + e.what());
    }
  }

  SuiteResult finish() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::string tag(int n, int s) {
  return "Z_{" + std::to_string(n) + "," + std::to_string(s) + "}";
}

SuiteResult core_suite(int n_max) {
  Suite suite("prism_core");
  for (int s = 1; s <= 3; ++s) {
    for (int n = std::max(3, s); n <= n_max; ++n) {
      suite.guarded(tag(n, s), [&] {
        const PrismGraph g(n, s);
        suite.check(g.diameter() == diameter_formula(n, s), tag(n, s) + " diameter");
        for (int u = 0; u < g.vertex_count(); ++u) {
          suite.check(g.degree(u) == 2 + s, tag(n, s) + " degree of " + g.vertex(u).to_string());
        }
        if (n <= 30) {
          const int count = g.vertex_count();
          bool metric = true;
          for (int u = 0; u < count && metric; ++u) {
            metric = g.distance(u, u) == 0;
            for (int v = 0; v < count && metric; ++v) {
              metric = g.distance(u, v) == g.distance(v, u) && (u == v || g.distance(u, v) > 0);
              for (int w = 0; w < count && metric; ++w) {
                metric = g.distance(u, w) <= g.distance(u, v) + g.distance(v, w);
              }
            }
          }
          suite.check(metric, tag(n, s) + " distance is a metric");
        }
        for (int which = 1; which <= 2; ++which) {
          const CycleView c = principal_cycle(g, which);
          suite.check(is_cycle_subgraph(g, c) && is_tight(g, c),
                      tag(n, s) + " principal cycle " + std::to_string(which) + " tight");
        }
        const CycleView sc = standard_cycle(g);
        suite.check(sc.length() == n + 3 - s && is_cycle_subgraph(g, sc) &&
                        is_v_tight(g, sc, g.make_vertex(1, 1)),
                    tag(n, s) + " standard cycle (1,1)-tight");
        if (s == 1) {
          bool closed_form = true;
          for (int u = 0; u < g.vertex_count(); ++u) {
            for (int v = 0; v < g.vertex_count(); ++v) {
              const Vertex a = g.vertex(u);
              const Vertex b = g.vertex(v);
              const int dy = std::abs(a.position() - b.position());
              const int expect = std::abs(a.cycle() - b.cycle()) + std::min(dy, n - dy);
              closed_form = closed_form && g.distance(u, v) == expect;
            }
          }
          suite.check(closed_form, tag(n, s) + " closed-form prism distance");
        }
      });
    }
  }
  return suite.finish();
}

SuiteResult bounds_suite(int n_max, const std::function<int(int, int)>& phi_fn) {
  Suite suite("bounds");
  for (int s = 1; s <= 3; ++s) {
    for (int n = 4; n <= n_max; ++n) {
      if (!in_phi_scope(n, s)) continue;
      suite.guarded(tag(n, s), [&] {
        const PrismGraph g(n, s);
        const int p = phi_fn(n, s);
        const int diam = g.diameter();
        suite.check(2 * p >= diam, tag(n, s) + " 2 phi >= diam");
        if (case_select(n, s) == CaseId::Case1) {
          const int w = omega(n);
          suite.check(p + w >= diam + 1, tag(n, s) + " phi + omega >= diam + 1");
          suite.check(p - w >= ((n - s) % 2 == 0 ? 1 : 2), tag(n, s) + " phi - omega parity bound");
        }
        const int lb = (n - 1) * p + 2;
        suite.check(lb == construct_labeling(n, s).span(),
                    tag(n, s) + " lower bound " + std::to_string(lb) +
                        " equals constructed span");
        const int d = d_offset(n, s);
        bool offset_ok = true;
        for (int y = 1; y <= n; ++y) {
          offset_ok = offset_ok && g.distance(g.make_vertex(1, y), g.make_vertex(2, y + d)) == diam;
        }
        suite.check(offset_ok, tag(n, s) + " d((1,y),(2,y+D)) = diam");
        if (n <= 12) suite.check(check_triple_bound(g), tag(n, s) + " triple distance bound");
      });
    }
  }
  return suite.finish();
}

SuiteResult labeler_suite(int n_max) {
  Suite suite("labeler");
  for (int s = 1; s <= 3; ++s) {
    for (int n = std::max(3, s); n <= n_max; ++n) {
      const CaseId id = case_select(n, s);
      if (id == CaseId::Unsupported) continue;
      suite.guarded(tag(n, s), [&] {
        const PrismGraph g(n, s);
        const Labeling lab = construct_labeling(n, s);
        suite.check(lab.complete(), tag(n, s) + " labeling complete");
        suite.check(verify(g, lab).valid, tag(n, s) + " radio condition");
        if (id == CaseId::Special33 || id == CaseId::Special43) return;

        const auto positions = position_sequence(n, s);
        const std::set<Vertex> distinct(positions.begin(), positions.end());
        suite.check(static_cast<int>(distinct.size()) == 2 * n, tag(n, s) + " bijective");
        suite.check(lab.span() == lower_bound_rn(n, s), tag(n, s) + " span = (n-1) phi + 2");
        bool consecutive = true;
        for (int i = 0; i < n; ++i) {
          consecutive = consecutive && g.distance(positions[2 * i], positions[2 * i + 1]) ==
                                           g.diameter();
        }
        suite.check(consecutive, tag(n, s) + " consecutive pairs at diameter");
        const auto seq = label_sequence(n, s);
        bool window = true;
        for (int a = 0; a + 4 < 2 * n; ++a) {
          for (int b = a + 4; b < 2 * n && window; ++b) {
            window = seq[b] - seq[a] >= g.diameter();
          }
        }
        suite.check(window, tag(n, s) + " gap >= 4 pairs automatically satisfied");
      });
    }
  }
  return suite.finish();
}

SuiteResult verifier_suite(int n_max) {
  Suite suite("verifier");
  for (int s = 1; s <= 3; ++s) {
    for (int n = std::max(4, s); n <= n_max; ++n) {
      suite.guarded(tag(n, s), [&] {
        const PrismGraph g(n, s);
        const Labeling lab = construct_labeling(n, s);
        const auto base = verify(g, lab);
        suite.check(base.pairs_checked == static_cast<long long>(n) * (2 * n - 1),
                    tag(n, s) + " pairs checked");
        const auto moved = verify(g, lab.shifted(10));
        suite.check(moved.valid == base.valid && moved.span == base.span + 10,
                    tag(n, s) + " translation invariance");
        // Collapse two labels: the duplicate has to be reported.
        std::vector<int> raw(lab.labels().begin(), lab.labels().end());
        raw[1] = raw[0];
        const auto broken = verify(g, Labeling(n, s, raw));
        const bool flagged = std::any_of(
            broken.violations.begin(), broken.violations.end(), [&](const Violation& v) {
              return g.index(v.u) == 0 && g.index(v.v) == 1 && v.label_gap == 0;
            });
        suite.check(!broken.valid && flagged, tag(n, s) + " duplicate label flagged");
      });
    }
  }
  return suite.finish();
}

SuiteResult exact_suite(int n_max) {
  Suite suite("exact");
  const std::pair<int, int> instances[] = {{3, 3}, {4, 1}, {4, 2}, {4, 3}, {5, 1}, {5, 2}, {5, 3}};
  for (const auto& [n, s] : instances) {
    if (n > n_max) continue;
    suite.guarded(tag(n, s), [&] {
      const PrismGraph g(n, s);
      const ExactResult r = exact_radio_number(g, default_search_config(n, s));
      const int expected = n == 3 ? 6 : (n == 4 && s == 3 ? 9 : lower_bound_rn(n, s));
      suite.check(r.proven_optimal && r.rn == expected,
                  tag(n, s) + " exact rn " + std::to_string(r.rn) + " vs " +
                      std::to_string(expected));
      suite.check(verify(g, r.witness).valid && r.witness.span() == r.rn,
                  tag(n, s) + " exact witness verifies");
    });
  }
  return suite.finish();
}

}  // namespace

std::vector<SuiteResult> run_selftest(const SelfTestOptions& options) {
  const auto phi_fn = options.phi_override ? options.phi_override
                                           : std::function<int(int, int)>(
                                                 [](int n, int s) { return phi(n, s); });
  std::vector<SuiteResult> out;
  out.push_back(core_suite(options.n_max));
  out.push_back(bounds_suite(options.n_max, phi_fn));
  out.push_back(labeler_suite(options.n_max));
  out.push_back(verifier_suite(options.n_max));
  out.push_back(exact_suite(options.n_max));
  return out;
}

}  // namespace prism
