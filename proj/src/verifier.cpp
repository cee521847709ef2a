#include "prism/verifier.hpp"

#include <cstdlib>

#include "prism/errors.hpp"

namespace prism {

VerificationReport verify(const PrismGraph& g, const Labeling& lab) {
  if (lab.n() != g.n() || lab.s() != g.s()) {
    throw LabelingError("labeling references unknown vertex: labeling is for Z_{" +
                        std::to_string(lab.n()) + "," + std::to_string(lab.s()) +
                        "}, graph is Z_{" + std::to_string(g.n()) + "," +
                        std::to_string(g.s()) + "}");
  }
  if (!lab.complete()) throw LabelingError("labeling incomplete");

  VerificationReport report;
  report.diameter = g.diameter();
  report.span = lab.span();
  const int required = g.diameter() + 1;
  const int count = g.vertex_count();
  for (int u = 0; u < count; ++u) {
    const auto row = g.distances_from(u);
    const int cu = lab.label_at(u);
    for (int v = u + 1; v < count; ++v) {
      ++report.pairs_checked;
      const int gap = std::abs(cu - lab.label_at(v));
      if (row[v] + gap < required) {
        report.violations.push_back({g.vertex(u), g.vertex(v), row[v], gap, required});
      }
    }
  }
  report.valid = report.violations.empty();
  return report;
}

int span_of(const Labeling& lab) { return lab.span(); }

}  // namespace prism
