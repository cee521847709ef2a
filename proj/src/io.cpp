#include "prism/io.hpp"

#include <climits>
#include <sstream>

#include <json.hpp>

#include "prism/errors.hpp"

namespace prism {

using ordered_json = nlohmann::ordered_json;

OutputFormat parse_output_format(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "dot") return OutputFormat::Dot;
  throw std::invalid_argument("unknown output format '" + std::string(name) + "'");
}

namespace {

std::string node_id(const Vertex& v) {
  return "c" + std::to_string(v.cycle()) + "_p" + std::to_string(v.position());
}

ordered_json vertex_json(const Vertex& v) {
  ordered_json j;
  j["cycle"] = v.cycle();
  j["pos"] = v.position();
  return j;
}

ordered_json labeling_object(const PrismGraph& g, const Labeling& lab) {
  ordered_json j;
  j["n"] = lab.n();
  j["s"] = lab.s();
  j["diameter"] = g.diameter();
  j["span"] = lab.span();
  ordered_json rows = ordered_json::array();
  for (int idx = 0; idx < lab.vertex_count(); ++idx) {
    const Vertex v = Vertex::from_index(idx, lab.n());
    ordered_json row;
    row["cycle"] = v.cycle();
    row["pos"] = v.position();
    row["label"] = lab.label_at(idx);
    rows.push_back(std::move(row));
  }
  j["labels"] = std::move(rows);
  return j;
}

}  // namespace

std::string labeling_to_json(const PrismGraph& g, const Labeling& lab) {
  return labeling_object(g, lab).dump(2) + "\n";
}

std::string labeling_to_csv(const Labeling& lab) {
  std::ostringstream os;
  os << "cycle,pos,label\n";
  for (int idx = 0; idx < lab.vertex_count(); ++idx) {
    const Vertex v = Vertex::from_index(idx, lab.n());
    os << v.cycle() << ',' << v.position() << ',' << lab.label_at(idx) << '\n';
  }
  return os.str();
}

std::string graph_to_dot(const PrismGraph& g, const Labeling* lab) {
  std::ostringstream os;
  os << "graph Z_" << g.n() << '_' << g.s() << " {\n";
  for (int idx = 0; idx < g.vertex_count(); ++idx) {
    os << "  " << node_id(g.vertex(idx));
    if (lab != nullptr) os << " [label=\"" << lab->label_at(idx) << "\"]";
    os << ";\n";
  }
  for (const auto& [u, v] : g.edges()) {
    os << "  " << node_id(g.vertex(u)) << " -- " << node_id(g.vertex(v)) << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string labeling_to_text(const PrismGraph& g, const Labeling& lab) {
  std::ostringstream os;
  os << "Z_{" << g.n() << "," << g.s() << "}  diameter " << g.diameter() << "  span "
     << lab.span() << "\n";
  os << "vertex  label\n";
  for (int idx = 0; idx < lab.vertex_count(); ++idx) {
    os << g.vertex(idx) << "  " << lab.label_at(idx) << "\n";
  }
  return os.str();
}

std::string report_to_json(const VerificationReport& report) {
  ordered_json j;
  j["valid"] = report.valid;
  j["span"] = report.span;
  j["diameter"] = report.diameter;
  j["pairs_checked"] = report.pairs_checked;
  ordered_json rows = ordered_json::array();
  for (const auto& v : report.violations) {
    ordered_json row;
    row["u"] = vertex_json(v.u);
    row["v"] = vertex_json(v.v);
    row["distance"] = v.distance;
    row["label_gap"] = v.label_gap;
    row["required"] = v.required;
    rows.push_back(std::move(row));
  }
  j["violations"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream os;
  os << (report.valid ? "valid" : "INVALID") << "  span " << report.span << "  pairs checked "
     << report.pairs_checked << "  violations " << report.violations.size() << "\n";
  for (const auto& v : report.violations) {
    os << "  " << v.u << " " << v.v << ": d=" << v.distance << " + |gap|=" << v.label_gap << " < "
       << v.required << "\n";
  }
  return os.str();
}

std::string exact_result_to_json(const PrismGraph& g, const ExactResult& result) {
  ordered_json j;
  j["n"] = g.n();
  j["s"] = g.s();
  j["rn"] = result.rn;
  j["proven_optimal"] = result.proven_optimal;
  j["nodes_explored"] = result.nodes_explored;
  j["first_vertex_fixed"] = result.first_vertex_fixed;
  j["witness"] = labeling_object(g, result.witness);
  return j.dump(2) + "\n";
}

namespace {

int required_int(const nlohmann::json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw MalformedInput(std::string("missing field '") + key + "'");
  if (!it->is_number_integer()) {
    throw MalformedInput(std::string("field '") + key + "' must be an integer");
  }
  const auto value = it->get<long long>();
  if (value < INT_MIN || value > INT_MAX) {
    throw MalformedInput(std::string("field '") + key + "' out of range");
  }
  return static_cast<int>(value);
}

}  // namespace

ParsedLabeling parse_labeling_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw MalformedInput("top level must be an object");

  const int n = required_int(doc, "n");
  const int s = required_int(doc, "s");
  const int diameter = required_int(doc, "diameter");
  const int span = required_int(doc, "span");
  try {
    check_graph_parameters(n, s);
  } catch (const UnsupportedParameters& e) {
    throw MalformedInput(e.what());
  }

  const auto labels = doc.find("labels");
  if (labels == doc.end() || !labels->is_array()) {
    throw MalformedInput("field 'labels' must be an array");
  }
  Labeling lab(n, s);
  for (const auto& row : *labels) {
    if (!row.is_object()) throw MalformedInput("each label entry must be an object");
    const int cycle = required_int(row, "cycle");
    const int pos = required_int(row, "pos");
    const int label = required_int(row, "label");
    if (cycle < 1 || cycle > 2 || pos < 1 || pos > n) {
      throw MalformedInput("labeling references unknown vertex (" + std::to_string(cycle) + "," +
                           std::to_string(pos) + ")");
    }
    try {
      lab.assign(Vertex(cycle, pos, n), label);
    } catch (const LabelingError& e) {
      throw MalformedInput(e.what());
    }
  }
  if (!lab.complete()) throw MalformedInput("labeling incomplete");
  return ParsedLabeling{std::move(lab), diameter, span};
}

}  // namespace prism
