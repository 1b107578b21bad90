// Copyright 2026 The simplicial-lines Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "report.hpp"
#include "simplicial_lines/error.hpp"
#include "simplicial_lines/families.hpp"
#include "simplicial_lines/graph_io.hpp"
#include "simplicial_lines/monomial.hpp"
#include "simplicial_lines/serialization.hpp"
#include "simplicial_lines/shelling.hpp"
#include "verify_suites.hpp"

namespace simplicial_lines::cli {

namespace {

struct GenOptions {
  std::string family;
  int param = 0;
  std::string out;
};

struct AnalyzeOptions {
  std::string in;
  std::vector<std::string> complexes;
  std::string format = "text";
  bool dedupe = false;
};

struct ShellOptions {
  std::string in;
  std::string complex = "line";
  std::string mode = "search";
  std::string method = "both";
  std::string ordering_file;
  std::string format = "text";
  std::optional<std::size_t> max_facets;
  bool dedupe = false;
};

struct VerifyOptions {
  std::string suite = "all";
  std::optional<int> max_n;
  std::string format = "text";
};

DuplicatePolicy policy(bool dedupe) {
  return dedupe ? DuplicatePolicy::kDedupe : DuplicatePolicy::kReject;
}

int cmd_gen(const GenOptions& o, std::ostream& out, std::ostream& err) {
  SimpleGraph g;
  try {
    g = family_graph(o.family, o.param);
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  try {
    write_graph_file(o.out, g);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  out << "wrote " << o.family << ' ' << o.param << " (n=" << g.vertex_count()
      << ", m=" << g.edge_count() << ") to " << o.out << '\n';
  return kExitOk;
}

std::vector<ComplexKind> parse_kinds(const std::vector<std::string>& names) {
  std::vector<ComplexKind> kinds;
  for (const std::string& name : names) {
    auto kind = parse_complex_kind(name);
    if (!kind) throw std::invalid_argument("unknown complex '" + name + "'");
    if (std::find(kinds.begin(), kinds.end(), *kind) == kinds.end()) {
      kinds.push_back(*kind);
    }
  }
  if (kinds.empty()) {
    kinds = {ComplexKind::kLine, ComplexKind::kGallai,
             ComplexKind::kAntiGallai};
  }
  return kinds;
}

int cmd_analyze(const AnalyzeOptions& o, std::ostream& out,
                std::ostream& err) {
  SimpleGraph g;
  std::vector<ComplexKind> kinds;
  try {
    kinds = parse_kinds(o.complexes);
    g = read_graph_file(o.in, policy(o.dedupe));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  const AnalysisReport report = analyze_graph(g, kinds);
  if (o.format == "json") {
    out << report_to_json(report).dump(2) << '\n';
  } else {
    out << report_to_text(report);
  }
  return report.any_failure() ? kExitCheckFailed : kExitOk;
}

std::size_t search_bound(const std::optional<std::size_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("SL_MAX_FACETS")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw std::invalid_argument("SL_MAX_FACETS must be a positive integer");
    }
  }
  return kDefaultMaxFacets;
}

// Accepts a bare array of facets ([[1,2,3],...]) or an object with either
// "ordering" (facet indices, as printed in certificates) or "facets".
std::vector<std::size_t> read_ordering(const std::string& path,
                                       const SimplicialComplex& complex) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid ordering JSON: ") + e.what());
  }
  if (doc.is_array()) {
    return ordering_from_facets(complex, faces_from_json(doc));
  }
  if (doc.is_object() && doc.contains("ordering") &&
      doc["ordering"].is_array() && !doc["ordering"].empty()) {
    std::vector<std::size_t> ordering;
    for (const Json& v : doc["ordering"]) {
      if (!v.is_number_unsigned()) {
        throw ParseError("\"ordering\" must hold facet indices");
      }
      ordering.push_back(v.get<std::size_t>());
    }
    return ordering;
  }
  if (doc.is_object() && doc.contains("facets")) {
    return ordering_from_facets(complex, faces_from_json(doc["facets"]));
  }
  throw ParseError("ordering file must be a facet array or an object with "
                   "\"ordering\" or \"facets\"");
}

void print_certificate_text(const ShellingCertificate& cert,
                            std::ostream& out) {
  out << "method: " << to_string(cert.method) << '\n';
  out << "verdict: " << to_string(cert.verdict) << '\n';
  for (std::size_t pos = 0; pos < cert.steps.size(); ++pos) {
    const ShellingStep& s = cert.steps[pos];
    out << "  " << pos + 1 << ". " << index_notation(cert.facets[s.facet]);
    if (pos == 0) {
      out << "  (first facet)\n";
      continue;
    }
    out << (s.ok ? "  ok  " : "  FAIL  ");
    out << (cert.method == ShellingMethod::kDefinition ? "meets: "
                                                       : "residuals: ");
    for (std::size_t i = 0; i < s.evidence.size(); ++i) {
      if (i > 0) out << ", ";
      if (cert.method == ShellingMethod::kDefinition) {
        out << s.evidence[i].to_string();
      } else {
        out << Monomial(s.evidence[i]).to_string();
      }
    }
    out << '\n';
  }
  out << "note: " << cert.note << '\n';
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::kShellable:
      return kExitOk;
    case Verdict::kNotShellable:
      return kExitNotShellable;
    case Verdict::kInconclusive:
      return kExitInconclusive;
  }
  return kExitInconclusive;
}

int cmd_shell(const ShellOptions& o, std::ostream& out, std::ostream& err) {
  SimplicialComplex complex;
  std::vector<ShellingMethod> methods;
  std::size_t bound = 0;
  std::optional<std::vector<std::size_t>> ordering;
  try {
    auto kind = parse_complex_kind(o.complex);
    if (!kind) throw std::invalid_argument("unknown complex '" + o.complex + "'");
    if (o.method == "both") {
      methods = {ShellingMethod::kDefinition, ShellingMethod::kResiduals};
    } else if (auto m = parse_shelling_method(o.method)) {
      methods = {*m};
    } else {
      throw std::invalid_argument("unknown method '" + o.method + "'");
    }
    bound = search_bound(o.max_facets);
    complex = complex_of(read_graph_file(o.in, policy(o.dedupe)), *kind);
    if (complex.is_void()) {
      throw ComplexError("the " + o.complex +
                         " complex of this graph is void; nothing to shell");
    }
    if (!o.ordering_file.empty()) {
      ordering = read_ordering(o.ordering_file, complex);
    }
    if (o.mode == "verify" && !ordering) {
      throw std::invalid_argument("--mode verify needs --ordering");
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  std::vector<ShellingCertificate> certs;
  try {
    for (ShellingMethod method : methods) {
      if (o.mode == "verify") {
        certs.push_back(verify_ordering(complex, *ordering, method));
      } else if (o.mode == "greedy") {
        certs.push_back(greedy_shelling_order(complex, method));
      } else if (complex.facet_count() > bound && ordering) {
        certs.push_back(verify_ordering(complex, *ordering, method));
      } else {
        certs.push_back(
            find_shelling_order(complex, method, SearchOptions{bound}));
      }
    }
  } catch (const ShellingError& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ShellingError::Kind::kBoundExceeded ? kExitBoundExceeded
                                                           : kExitInputError;
  }

  const bool agree = certs.size() < 2 || certs[0].verdict == certs[1].verdict;
  if (o.format == "json") {
    if (certs.size() == 1) {
      out << certificate_to_json(certs[0]).dump(2) << '\n';
    } else {
      Json doc;
      doc["agree"] = agree;
      doc["definition"] = certificate_to_json(certs[0]);
      doc["residuals"] = certificate_to_json(certs[1]);
      out << doc.dump(2) << '\n';
    }
  } else {
    out << "complex: " << o.complex << " (" << complex.facet_count()
        << " facets)\n";
    for (const auto& cert : certs) print_certificate_text(cert, out);
    if (certs.size() == 2) {
      out << "methods agree: " << (agree ? "yes" : "NO") << '\n';
    }
  }
  if (!agree) {
    err << "error: definition and residual verdicts disagree\n";
    return kExitCheckFailed;
  }
  return exit_for(certs[0].verdict);
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  std::vector<std::string> names;
  if (o.suite == "all") {
    names = suite_names();
  } else if (auto canonical = canonical_suite_name(o.suite)) {
    names = {*canonical};
  } else {
    err << "error: unknown suite '" << o.suite << "'\n";
    return kExitInputError;
  }
  std::vector<SuiteResult> results;
  try {
    for (const auto& name : names) results.push_back(run_suite(name, o.max_n));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  bool all_pass = true;
  for (const auto& r : results) all_pass = all_pass && r.passed();
  if (o.format == "json") {
    Json doc;
    doc["status"] = all_pass ? "PASS" : "FAIL";
    Json suites = Json::array();
    for (const auto& r : results) suites.push_back(suite_to_json(r));
    doc["suites"] = std::move(suites);
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& r : results) out << suite_to_text(r);
    out << "summary:\n";
    for (const auto& r : results) {
      out << "  " << (r.passed() ? "PASS" : "FAIL") << "  " << r.name << " ("
          << r.rows.size() << " rows)\n";
    }
  }
  return all_pass ? kExitOk : kExitSuiteFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Line, Gallai and anti-Gallai simplicial complexes of graphs",
               "simplicial-lines"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a named graph family");
  gen_cmd->add_option("family", gen.family, "wheel|friendship|prism|cycle|star|path|complete")
      ->required();
  gen_cmd->add_option("param", gen.param, "Family parameter")->required();
  gen_cmd->add_option("out", gen.out, "Output path (.json or edge list)")
      ->required();

  AnalyzeOptions analyze;
  auto* analyze_cmd =
      app.add_subcommand("analyze", "Report complexes and theorem checks");
  analyze_cmd->add_option("in", analyze.in, "Graph file")->required();
  analyze_cmd->add_option("--complex", analyze.complexes,
                          "line, gallai, anti-gallai (repeat or comma-separate)")
      ->delimiter(',');
  analyze_cmd->add_option("--format", analyze.format)
      ->check(CLI::IsMember({"text", "json"}));
  analyze_cmd->add_flag("--dedupe", analyze.dedupe,
                        "Collapse repeated edges instead of rejecting them");

  ShellOptions shell;
  auto* shell_cmd = app.add_subcommand("shell", "Decide shellability");
  shell_cmd->add_option("in", shell.in, "Graph file")->required();
  shell_cmd->add_option("--complex", shell.complex)
      ->check(CLI::IsMember({"line", "gallai", "anti-gallai"}));
  shell_cmd->add_option("--mode", shell.mode)
      ->check(CLI::IsMember({"search", "verify", "greedy"}));
  shell_cmd->add_option("--method", shell.method)
      ->check(CLI::IsMember({"definition", "residuals", "both"}));
  shell_cmd->add_option("--ordering", shell.ordering_file,
                        "JSON facet ordering to verify");
  shell_cmd->add_option("--max-facets", shell.max_facets,
                        "Exhaustive search bound (default 20, env SL_MAX_FACETS)");
  shell_cmd->add_option("--format", shell.format)
      ->check(CLI::IsMember({"text", "json"}));
  shell_cmd->add_flag("--dedupe", shell.dedupe);

  VerifyOptions verify;
  auto* verify_cmd =
      app.add_subcommand("verify", "Run the built-in verification suites");
  verify_cmd->add_option("--suite", verify.suite, "Suite name or 'all'");
  verify_cmd->add_option("--max-n", verify.max_n, "Family or corpus bound");
  verify_cmd->add_option("--format", verify.format)
      ->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream cli_out;
    std::ostringstream cli_err;
    const int code = app.exit(e, cli_out, cli_err);
    out << cli_out.str();
    err << cli_err.str();
    return code == 0 ? kExitOk : kExitInputError;
  }

  if (*gen_cmd) return cmd_gen(gen, out, err);
  if (*analyze_cmd) return cmd_analyze(analyze, out, err);
  if (*shell_cmd) return cmd_shell(shell, out, err);
  return cmd_verify(verify, out, err);
}

}  // namespace simplicial_lines::cli
