#pragma once

#include <string_view>
#include <vector>

#include "prism/graph.hpp"

namespace prism {

enum class CaseId { Case1, Case2, Case3, Case4, Special33, Special43, Unsupported };

std::string_view to_string(CaseId id) noexcept;

/// Which construction covers (n, s). Total on valid parameters; n = 3 with
/// s in {1, 2} maps to Unsupported. Throws UnsupportedParameters only when
/// (n, s) is not a valid Z_{n,s}.
CaseId case_select(int n, int s);

/// A vertex -> label assignment over the 2n vertices of Z_{n,s}.
///
/// Stored by vertex index; 0 marks an unlabeled vertex. Constructed
/// labelings are complete with distinct labels starting at 1, but the type
/// also carries arbitrary (possibly invalid) labelings read from files so
/// the verifier can report on them.
class Labeling {
 public:
  Labeling(int n, int s);
  Labeling(int n, int s, std::vector<int> labels_by_index);

  int n() const noexcept { return n_; }
  int s() const noexcept { return s_; }
  int vertex_count() const noexcept { return 2 * n_; }

  // Throws LabelingError for a non-positive label or double assignment.
  void assign(const Vertex& v, int label);
  int label(const Vertex& v) const noexcept { return labels_[v.index(n_)]; }
  int label_at(int index) const noexcept { return labels_[index]; }
  bool is_labeled(const Vertex& v) const noexcept { return label(v) != 0; }
  bool complete() const noexcept;
  std::span<const int> labels() const noexcept { return labels_; }

  /// Maximum assigned label; throws LabelingError("empty labeling") if none.
  int span() const;

  /// Copy with every assigned label increased by `delta`.
  Labeling shifted(int delta) const;

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  int n_;
  int s_;
  std::vector<int> labels_;
};

/// c(alpha_1), ..., c(alpha_2n): c(alpha_{2i-1}) = 1 + (i-1) phi,
/// c(alpha_{2i}) = 2 + (i-1) phi.
std::vector<int> label_sequence(int n, int s);

// Position functions, indexed by the 1-based alpha index j in 1..2n.
// Coordinates are reduced through Vertex, so first coordinates 0 and 3
// land on cycles 2 and 1. Each throws WrongCase outside its case.
Vertex position_case1(int n, int s, int j);
Vertex position_case2(int n, int s, int j);
Vertex position_case3(int n, int s, int j);
Vertex position_case4(int n, int s, int j);

/// The case-selected position function over j = 1..2n. Throws WrongCase for
/// Special33, Special43 and Unsupported.
std::vector<Vertex> position_sequence(int n, int s);

/// Optimal labeling of Z_{n,s}. Throws UnsupportedParameters for
/// Unsupported and invalid (n, s).
Labeling construct_labeling(int n, int s);

/// The span-9 labeling of Z_{4,3} found by exhaustive search
/// (see exact_radio_number), kept as a constant.
Labeling special43_witness();

}  // namespace prism
