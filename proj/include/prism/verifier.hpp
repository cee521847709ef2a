#pragma once

#include <vector>

#include "prism/graph.hpp"
#include "prism/labeler.hpp"

namespace prism {

struct Violation {
  Vertex u;
  Vertex v;
  int distance;
  int label_gap;
  int required;  // diam + 1
};

struct VerificationReport {
  bool valid = true;
  std::vector<Violation> violations;  // lexicographic by (u, v), u < v
  int span = 0;
  int diameter = 0;
  long long pairs_checked = 0;
};

/// Checks d(u,v) + |c(u) - c(v)| >= diam + 1 on every unordered pair.
/// Duplicate labels surface as violations since d <= diam. Throws
/// LabelingError if `lab` is for a different graph ("labeling references
/// unknown vertex") or leaves a vertex unlabeled ("labeling incomplete").
VerificationReport verify(const PrismGraph& g, const Labeling& lab);

int span_of(const Labeling& lab);

}  // namespace prism
