#include "prism/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "prism/bounds.hpp"
#include "prism/errors.hpp"
#include "prism/exact.hpp"
#include "prism/io.hpp"
#include "prism/labeler.hpp"
#include "prism/selftest.hpp"
#include "prism/verifier.hpp"

namespace prism::cli {

namespace {

struct GraphArgs {
  int n = 0;
  int s = 0;
};

void add_graph_args(CLI::App* cmd, GraphArgs& args) {
  cmd->add_option("--n", args.n, "cycle length n")->required();
  cmd->add_option("--s", args.s, "number of cross offsets s (1..3)")->required();
}

std::chrono::milliseconds parse_budget(const std::string& text) {
  static const std::regex pattern(R"(^\s*(\d+)\s*(ms|s|m|h)?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw std::invalid_argument("budget must look like 500ms, 60s, 5m or 2h");
  }
  const long long value = std::stoll(m[1].str());
  const std::string unit = m[2].matched ? m[2].str() : "s";
  if (unit == "ms") return std::chrono::milliseconds(value);
  if (unit == "s") return std::chrono::seconds(value);
  if (unit == "m") return std::chrono::minutes(value);
  return std::chrono::hours(value);
}

// rn from the theorem or the two special constants; nullopt when neither applies.
std::optional<int> known_rn(int n, int s) {
  switch (case_select(n, s)) {
    case CaseId::Special33: return 6;
    case CaseId::Special43: return 9;
    case CaseId::Unsupported: return std::nullopt;
    default: return lower_bound_rn(n, s);
  }
}

int cmd_rn(const GraphArgs& a, OutputFormat format, std::ostream& out, std::ostream& err) {
  const auto rn = known_rn(a.n, a.s);
  if (!rn) {
    err << "error: outside theorem scope; use exact\n";
    return kBadInput;
  }
  if (format == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["n"] = a.n;
    j["s"] = a.s;
    j["rn"] = *rn;
    const CaseId id = case_select(a.n, a.s);
    j["source"] = (id == CaseId::Special33 || id == CaseId::Special43) ? "special" : "formula";
    out << j.dump(2) << "\n";
  } else {
    out << *rn << "\n";
  }
  return kOk;
}

int emit_labeling(const PrismGraph& g, const Labeling& lab, OutputFormat format,
                  std::ostream& out) {
  switch (format) {
    case OutputFormat::Json: out << labeling_to_json(g, lab); break;
    case OutputFormat::Csv: out << labeling_to_csv(lab); break;
    case OutputFormat::Dot: out << graph_to_dot(g, &lab); break;
    case OutputFormat::Text: out << labeling_to_text(g, lab); break;
  }
  return kOk;
}

int cmd_label(const GraphArgs& a, OutputFormat format, std::ostream& out, std::ostream& err) {
  if (case_select(a.n, a.s) == CaseId::Unsupported) {
    err << "error: no construction for Z_{" << a.n << "," << a.s
        << "}; outside theorem scope; use exact\n";
    return kBadInput;
  }
  const PrismGraph g(a.n, a.s);
  const Labeling lab = construct_labeling(a.n, a.s);
  const auto report = verify(g, lab);
  if (!report.valid) {
    err << "internal error: constructed labeling fails verification\n" << report_to_text(report);
    return kInternalError;
  }
  return emit_labeling(g, lab, format, out);
}

int cmd_verify(const std::string& file, OutputFormat format, std::ostream& out,
               std::ostream& err) {
  std::string text;
  if (file == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
      err << "error: cannot open " << file << "\n";
      return kBadInput;
    }
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::optional<ParsedLabeling> parsed;
  try {
    parsed.emplace(parse_labeling_json(text));
  } catch (const MalformedInput& e) {
    err << "error: malformed labeling: " << e.what() << "\n";
    return kBadInput;
  }
  const auto& lab = parsed->labeling;
  const PrismGraph g(lab.n(), lab.s());
  const auto report = verify(g, lab);
  if (parsed->declared_diameter != g.diameter()) {
    err << "warning: declared diameter " << parsed->declared_diameter << " differs from actual "
        << g.diameter() << "\n";
  }
  if (parsed->declared_span != report.span) {
    err << "warning: declared span " << parsed->declared_span << " differs from actual "
        << report.span << "\n";
  }
  out << (format == OutputFormat::Json ? report_to_json(report) : report_to_text(report));
  return report.valid ? kOk : kInvalidLabeling;
}

struct ExactArgs {
  std::string budget;
  bool no_phi = false;
  bool no_hint = false;
  bool fix_first = false;
  unsigned workers = 0;
};

int cmd_exact(const GraphArgs& a, const ExactArgs& x, OutputFormat format, std::ostream& out,
              std::ostream& err) {
  const PrismGraph g(a.n, a.s);
  SearchConfig cfg = default_search_config(a.n, a.s);
  if (x.no_phi) cfg.use_phi_pruning = false;
  if (x.no_hint) cfg.upper_bound_hint.reset();
  cfg.fix_first_vertex = x.fix_first;
  if (x.workers > 0) cfg.workers = x.workers;
  if (!x.budget.empty()) {
    try {
      cfg.time_budget = parse_budget(x.budget);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n";
      return kBadInput;
    }
  }
  const ExactResult r = exact_radio_number(g, cfg);
  if (!verify(g, r.witness).valid || r.witness.span() != r.rn) {
    err << "internal error: exact witness fails verification\n";
    return kInternalError;
  }
  if (format == OutputFormat::Json) {
    out << exact_result_to_json(g, r);
  } else {
    if (r.proven_optimal) {
      out << "rn " << r.rn << "  proven optimal";
    } else {
      out << "rn <= " << r.rn << "  budget exhausted (upper bound only)";
    }
    out << "  nodes " << r.nodes_explored << (r.first_vertex_fixed ? "  first vertex fixed" : "")
        << "\n";
    if (format != OutputFormat::Text) err << "note: only text and json apply to exact\n";
  }
  return kOk;
}

int cmd_table(int n_min, int n_max, OutputFormat format, std::ostream& out, std::ostream& err) {
  if (n_min < 3 || n_max < n_min) {
    err << "error: need 3 <= n-min <= n-max\n";
    return kBadInput;
  }
  struct Row {
    int n, s;
    std::string phi, rn_formula, rn_constructed, match, note;
  };
  std::vector<Row> rows;
  bool all_match = true;
  for (int n = n_min; n <= n_max; ++n) {
    for (int s = 1; s <= 3; ++s) {
      Row row{n, s, "-", "-", "-", "-", ""};
      const CaseId id = case_select(n, s);
      if (in_phi_scope(n, s)) row.phi = std::to_string(phi(n, s));
      if (id == CaseId::Unsupported) {
        row.note = "unsupported";
      } else {
        const int formula = *known_rn(n, s);
        const PrismGraph g(n, s);
        const Labeling lab = construct_labeling(n, s);
        const bool ok = verify(g, lab).valid && lab.span() == formula;
        all_match = all_match && ok;
        row.rn_formula = std::to_string(formula);
        row.rn_constructed = std::to_string(lab.span());
        row.match = ok ? "true" : "false";
        row.note = (id == CaseId::Special33 || id == CaseId::Special43) ? "special"
                                                                         : std::string(to_string(id));
      }
      rows.push_back(std::move(row));
    }
  }

  if (format == OutputFormat::Json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json j;
      j["n"] = r.n;
      j["s"] = r.s;
      j["phi"] = r.phi == "-" ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(std::stoi(r.phi));
      j["rn_formula"] = r.rn_formula == "-" ? nlohmann::ordered_json(nullptr)
                                            : nlohmann::ordered_json(std::stoi(r.rn_formula));
      j["rn_constructed_span"] = r.rn_constructed == "-"
                                     ? nlohmann::ordered_json(nullptr)
                                     : nlohmann::ordered_json(std::stoi(r.rn_constructed));
      j["match"] = r.match == "-" ? nlohmann::ordered_json(nullptr)
                                  : nlohmann::ordered_json(r.match == "true");
      j["note"] = r.note;
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << "\n";
  } else if (format == OutputFormat::Csv) {
    out << "n,s,phi,rn_formula,rn_constructed_span,match,note\n";
    for (const auto& r : rows) {
      out << r.n << ',' << r.s << ',' << r.phi << ',' << r.rn_formula << ',' << r.rn_constructed
          << ',' << r.match << ',' << r.note << '\n';
    }
  } else {
    out << std::setw(4) << "n" << std::setw(3) << "s" << std::setw(6) << "phi" << std::setw(13)
        << "rn_formula" << std::setw(16) << "rn_constructed" << std::setw(7) << "match"
        << "  note\n";
    for (const auto& r : rows) {
      out << std::setw(4) << r.n << std::setw(3) << r.s << std::setw(6) << r.phi << std::setw(13)
          << r.rn_formula << std::setw(16) << r.rn_constructed << std::setw(7) << r.match << "  "
          << r.note << "\n";
    }
  }
  return all_match ? kOk : kInternalError;
}

int cmd_selftest(int n_max, const std::string& fault, std::ostream& out, std::ostream& err) {
  SelfTestOptions options;
  options.n_max = n_max;
  if (fault == "phi") {
    // Off by one in the (r = 0, s = 1) cell.
    options.phi_override = [](int n, int s) { return phi(n, s) + (n % 4 == 0 && s == 1 ? 1 : 0); };
  } else if (!fault.empty()) {
    err << "error: unknown fault '" << fault << "' (known: phi)\n";
    return kBadInput;
  }
  if (n_max < 3) {
    err << "error: n-max must be at least 3\n";
    return kBadInput;
  }
  bool all = true;
  for (const auto& suite : run_selftest(options)) {
    all = all && suite.passed;
    out << (suite.passed ? "PASS " : "FAIL ") << suite.name << "  (" << suite.checks
        << " checks)\n";
    for (const auto& f : suite.failures) out << "    " << f << "\n";
  }
  out << (all ? "all suites passed\n" : "self-test FAILED\n");
  return all ? kOk : kInternalError;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radio labelings of generalized prism graphs Z_{n,s}, 1 <= s <= 3"};
  app.require_subcommand(1);

  std::string format_name = "text";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "text | json | csv | dot")
        ->check(CLI::IsMember({"text", "json", "csv", "dot"}));
  };

  GraphArgs graph;
  auto* rn = app.add_subcommand("rn", "print rn(Z_{n,s})");
  add_graph_args(rn, graph);
  add_format(rn);

  auto* label = app.add_subcommand("label", "print the optimal labeling");
  add_graph_args(label, graph);
  add_format(label);

  std::string file;
  auto* verify_cmd = app.add_subcommand("verify", "check a JSON labeling against the radio condition");
  verify_cmd->add_option("--file", file, "labeling JSON file, or - for stdin")->required();
  add_format(verify_cmd);

  ExactArgs exact_args;
  auto* exact = app.add_subcommand("exact", "exact radio number by branch and bound");
  add_graph_args(exact, graph);
  exact->add_option("--budget", exact_args.budget, "time budget, e.g. 60s or 5m");
  exact->add_flag("--no-phi-pruning", exact_args.no_phi, "disable the phi gap bound");
  exact->add_flag("--no-hint", exact_args.no_hint, "do not seed the incumbent from the construction");
  exact->add_flag("--fix-first", exact_args.fix_first,
                  "fix the first vertex when the graph is vertex-transitive");
  exact->add_option("--workers", exact_args.workers, "worker threads (default: hardware)");
  add_format(exact);

  int n_min = 4;
  int n_max = 12;
  auto* table = app.add_subcommand("table", "tabulate phi, rn and constructed spans");
  table->add_option("--n-min", n_min, "smallest n")->capture_default_str();
  table->add_option("--n-max", n_max, "largest n")->capture_default_str();
  add_format(table);

  int selftest_n_max = 20;
  std::string fault;
  auto* selftest = app.add_subcommand("selftest", "run the invariant suites");
  selftest->add_option("--n-max", selftest_n_max, "largest n")->capture_default_str();
  selftest->add_option("--inject-fault", fault, "test mode: corrupt a component (phi)");

  auto* export_cmd = app.add_subcommand("export", "write Z_{n,s} as a DOT graph");
  add_graph_args(export_cmd, graph);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    const OutputFormat format = parse_output_format(format_name);
    if (rn->parsed()) return cmd_rn(graph, format, out, err);
    if (label->parsed()) return cmd_label(graph, format, out, err);
    if (verify_cmd->parsed()) return cmd_verify(file, format, out, err);
    if (exact->parsed()) return cmd_exact(graph, exact_args, format, out, err);
    if (table->parsed()) return cmd_table(n_min, n_max, format, out, err);
    if (selftest->parsed()) return cmd_selftest(selftest_n_max, fault, out, err);
    if (export_cmd->parsed()) {
      out << graph_to_dot(PrismGraph(graph.n, graph.s));
      return kOk;
    }
  } catch (const UnsupportedParameters& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const OutsideTheoremScope& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kBadInput;
}

}  // namespace prism::cli
