#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "prism/exact.hpp"
#include "prism/graph.hpp"
#include "prism/labeler.hpp"
#include "prism/verifier.hpp"

namespace prism {

enum class OutputFormat { Text, Json, Csv, Dot };

/// Parses "text", "json", "csv", "dot"; throws std::invalid_argument.
OutputFormat parse_output_format(std::string_view name);

// Labeling JSON, keys in this order, labels sorted by (cycle, pos):
//   {"n": int, "s": int, "diameter": int, "span": int,
//    "labels": [{"cycle": 1|2, "pos": int, "label": int}, ...]}
std::string labeling_to_json(const PrismGraph& g, const Labeling& lab);

// Header "cycle,pos,label", one row per vertex in (cycle, pos) order.
std::string labeling_to_csv(const Labeling& lab);

// graph Z_<n>_<s> { c<cycle>_p<pos> [label="<int>"]; ... edges ... }
// Pass nullptr to export the bare graph.
std::string graph_to_dot(const PrismGraph& g, const Labeling* lab = nullptr);

std::string labeling_to_text(const PrismGraph& g, const Labeling& lab);

std::string report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

std::string exact_result_to_json(const PrismGraph& g, const ExactResult& result);

class MalformedInput : public std::runtime_error {
 public:
  explicit MalformedInput(const std::string& what) : std::runtime_error(what) {}
};

struct ParsedLabeling {
  Labeling labeling;
  int declared_diameter;
  int declared_span;
};

/// Reads the labeling JSON schema. Throws MalformedInput for syntax errors,
/// missing or mistyped fields, unsupported (n, s), vertices outside the
/// graph, duplicate vertices, unlabeled vertices or non-positive labels.
ParsedLabeling parse_labeling_json(std::string_view text);

}  // namespace prism
