#include "prism/labeler.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "prism/bounds.hpp"
#include "prism/errors.hpp"

namespace prism {

std::string_view to_string(CaseId id) noexcept {
  switch (id) {
    case CaseId::Case1: return "Case1";
    case CaseId::Case2: return "Case2";
    case CaseId::Case3: return "Case3";
    case CaseId::Case4: return "Case4";
    case CaseId::Special33: return "Special33";
    case CaseId::Special43: return "Special43";
    case CaseId::Unsupported: return "Unsupported";
  }
  return "Unsupported";
}

CaseId case_select(int n, int s) {
  check_graph_parameters(n, s);
  if (n == 3) return s == 3 ? CaseId::Special33 : CaseId::Unsupported;
  if (n == 4 && s == 3) return CaseId::Special43;
  const int k = n / 4;
  const int r = n % 4;
  if (r == 0) return s == 2 ? CaseId::Case3 : CaseId::Case2;
  if (r == 2 && k % 2 == 0 && s == 3) return CaseId::Case4;
  return CaseId::Case1;
}

Labeling::Labeling(int n, int s) : n_(n), s_(s), labels_(static_cast<std::size_t>(2 * n), 0) {}

Labeling::Labeling(int n, int s, std::vector<int> labels_by_index)
    : n_(n), s_(s), labels_(std::move(labels_by_index)) {
  if (labels_.size() != static_cast<std::size_t>(2 * n)) {
    throw LabelingError("labeling must have 2n entries");
  }
  if (std::any_of(labels_.begin(), labels_.end(), [](int c) { return c < 0; })) {
    throw LabelingError("labels must be positive integers");
  }
}

void Labeling::assign(const Vertex& v, int label) {
  if (label < 1) throw LabelingError("labels must be positive integers");
  int& slot = labels_[v.index(n_)];
  if (slot != 0) throw LabelingError("vertex " + v.to_string() + " labeled twice");
  slot = label;
}

bool Labeling::complete() const noexcept {
  return std::none_of(labels_.begin(), labels_.end(), [](int c) { return c == 0; });
}

int Labeling::span() const {
  const int best = labels_.empty() ? 0 : *std::max_element(labels_.begin(), labels_.end());
  if (best == 0) throw LabelingError("empty labeling");
  return best;
}

Labeling Labeling::shifted(int delta) const {
  Labeling out = *this;
  for (int& c : out.labels_) {
    if (c != 0) c += delta;
  }
  if (std::any_of(out.labels_.begin(), out.labels_.end(), [](int c) { return c < 0; }) ||
      std::count(out.labels_.begin(), out.labels_.end(), 0) !=
          std::count(labels_.begin(), labels_.end(), 0)) {
    throw LabelingError("shift produces a non-positive label");
  }
  return out;
}

std::vector<int> label_sequence(int n, int s) {
  const int step = phi(n, s);
  std::vector<int> seq;
  seq.reserve(static_cast<std::size_t>(2 * n));
  for (int i = 1; i <= n; ++i) {
    seq.push_back(1 + (i - 1) * step);
    seq.push_back(2 + (i - 1) * step);
  }
  return seq;
}

namespace {

void require_case(int n, int s, CaseId expected) {
  const CaseId actual = case_select(n, s);
  if (actual != expected) {
    throw WrongCase("(n, s) = (" + std::to_string(n) + ", " + std::to_string(s) + ") is " +
                    std::string(to_string(actual)) + ", not " + std::string(to_string(expected)));
  }
}

// 1-based alpha index j -> i with j in {2i - 1, 2i}.
long long half_index(int n, int j) {
  if (j < 1 || j > 2 * n) throw std::out_of_range("alpha index out of range 1..2n");
  return (j + 1) / 2;
}

}  // namespace

Vertex position_case1(int n, int s, int j) {
  require_case(n, s, CaseId::Case1);
  const long long i = half_index(n, j);
  const long long w = omega(n);
  const long long d = d_offset(n, s);
  if (j % 2 == 1) return Vertex(1, 1 + w * (i - 1), n);
  return Vertex(2, 1 + d + w * (i - 1), n);
}

Vertex position_case2(int n, int s, int j) {
  require_case(n, s, CaseId::Case2);
  const long long i = half_index(n, j);
  const long long k = n / 4;
  const long long l = (i - 1) / 4;
  if (j % 2 == 1) return Vertex(1 + l, 1 + k * (i - 1) - l, n);
  return Vertex(2 + l, 1 + k * (i + 1) - l, n);
}

Vertex position_case3(int n, int s, int j) {
  require_case(n, s, CaseId::Case3);
  const long long i = half_index(n, j);
  const long long k = n / 4;
  const long long l = (i - 1) / 2;
  if (j % 2 == 1) return Vertex(i, 1 + k * (i - 1) - l, n);
  return Vertex(i, 1 + k * (i + 1) - l, n);
}

Vertex position_case4(int n, int s, int j) {
  require_case(n, s, CaseId::Case4);
  const long long i = half_index(n, j);
  const long long k = n / 4;
  const long long l = i <= 2 * k + 1 ? 0 : 1;
  if (j % 2 == 1) return Vertex(l, 1 + (i - 1) * k, n);
  return Vertex(l, 2 + (i + 1) * k, n);
}

std::vector<Vertex> position_sequence(int n, int s) {
  Vertex (*position)(int, int, int) = nullptr;
  switch (case_select(n, s)) {
    case CaseId::Case1: position = position_case1; break;
    case CaseId::Case2: position = position_case2; break;
    case CaseId::Case3: position = position_case3; break;
    case CaseId::Case4: position = position_case4; break;
    default:
      throw WrongCase("no position function for (" + std::to_string(n) + ", " +
                      std::to_string(s) + ")");
  }
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(2 * n));
  for (int j = 1; j <= 2 * n; ++j) out.push_back(position(n, s, j));
  return out;
}

Labeling special43_witness() {
  // Indexed (1,1)..(1,4), (2,1)..(2,4).
  return Labeling(4, 3, {1, 6, 2, 7, 3, 8, 4, 9});
}

Labeling construct_labeling(int n, int s) {
  const CaseId id = case_select(n, s);
  switch (id) {
    case CaseId::Unsupported:
      throw UnsupportedParameters("(" + std::to_string(n) + ", " + std::to_string(s) +
                                  ") has no construction; use the exact solver");
    case CaseId::Special33: {
      Labeling lab(3, 3);
      for (int idx = 0; idx < 6; ++idx) lab.assign(Vertex::from_index(idx, 3), idx + 1);
      return lab;
    }
    case CaseId::Special43:
      return special43_witness();
    default:
      break;
  }
  const auto positions = position_sequence(n, s);
  const auto labels = label_sequence(n, s);
  Labeling lab(n, s);
  for (std::size_t j = 0; j < positions.size(); ++j) lab.assign(positions[j], labels[j]);
  return lab;
}

}  // namespace prism
