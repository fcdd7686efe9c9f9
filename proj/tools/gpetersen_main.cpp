// Copyright 2026 The gpetersen Authors.
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

// Command-line front end.
//
// Exit codes: 0 success, 1 usage or invalid parameters, 2 a check disagreed,
// 3 a search ran out of budget. GP_ORACLE_BUDGET overrides the node budget.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gpetersen/algebra.hpp"
#include "gpetersen/cayley.hpp"
#include "gpetersen/core_classifier.hpp"
#include "gpetersen/gp_core.hpp"
#include "gpetersen/hom_engine.hpp"
#include "gpetersen/plane.hpp"
#include "gpetersen/serialize.hpp"

namespace gpetersen {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDisagree = 2;
constexpr int kExitInconclusive = 3;

std::string Flag(bool b) { return b ? "yes" : "no"; }

std::string Optional(const std::optional<long long>& v) {
  return v ? std::to_string(*v) : "-";
}

int RunClassify(int n, int k, bool json, bool brute_aut) {
  const PlaneRow row =
      ClassifyRow(n, k, brute_aut, SearchBudget::FromEnvironment());
  const CoreVerdict verdict = ClassifyCore(n, k);
  if (json) {
    Json j = ToJson(row);
    j["core_verdict"] = ToJson(verdict);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "G(" << n << "," << k << ")\n"
            << "  d, a:                 " << verdict.d << ", " << verdict.a << "\n"
            << "  bipartite:            " << Flag(row.bipartite) << "\n"
            << "  core:                 " << Flag(row.core);
  if (verdict.reason) std::cout << " (" << ToString(*verdict.reason) << ")";
  std::cout << "\n"
            << "  vertex transitive:    " << Flag(row.vertex_transitive) << "\n"
            << "  group graph:          " << Flag(row.group_graph) << "\n"
            << "  2-gen monoid graph:   " << Flag(row.two_gen_monoid_graph) << "\n"
            << "  loopless obstruction: " << Flag(row.loopless_obstruction) << "\n"
            << "  |Aut| expected:       " << Optional(row.aut_order_expected) << "\n"
            << "  |Aut| found:          " << Optional(row.aut_order_found) << "\n";
  return kExitOk;
}

int RunVerify(const VerifyOptions& options) {
  const VerifyReport report =
      VerifySweep(options, SearchBudget::FromEnvironment());
  for (const VerifyFinding& f : report.findings) {
    std::cout << f.check << " G(" << f.n << "," << f.k << "): "
              << (f.inconclusive ? "inconclusive" : "DISAGREE") << ": "
              << f.detail << "\n";
  }
  std::cout << "checked " << report.instances_checked << " instance checks, "
            << report.disagreements() << " disagreements, "
            << report.inconclusive() << " inconclusive\n";
  if (report.disagreements() > 0) return kExitDisagree;
  if (report.inconclusive() > 0) return kExitInconclusive;
  return kExitOk;
}

int RunRetract(int n, int k, const std::string& format) {
  const GPParams params(n, k);
  const VertexMap f = BuildRetraction(n, k);
  const SimpleGraph g = BuildGP(params);
  const std::vector<int> target = InnerCycleThroughV0(params);
  if (!VerifyRetraction(g, f, target)) {
    std::cerr << "internal error: retraction failed verification\n";
    return kExitDisagree;
  }
  const std::string name = "G(" + std::to_string(n) + "," + std::to_string(k) + ")";
  if (format == "dot") {
    std::cout << RetractionToDot(g, f, name);
    return kExitOk;
  }
  Json j;
  j["n"] = n;
  j["k"] = k;
  j["verdict"] = ToJson(ClassifyCore(n, k));
  j["target"] = target;
  j["map"] = VertexMapToJson(f, n);
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int ReportExit(const RepresentationReport& r) {
  if (r.iso_status == SearchStatus::kBudgetExhausted) return kExitInconclusive;
  return r.realizes() ? kExitOk : kExitDisagree;
}

int RunCayley(const std::string& construction, int n, int k,
              const std::string& format) {
  const Representation rep = BuildConstruction(construction, n, k);
  // Builtins carry their own target.
  for (const BuiltinTable& b : BuiltinTables()) {
    if (b.name == construction) {
      n = b.target_n;
      k = b.target_k;
    }
  }
  const RepresentationReport report = VerifyRepresentation(
      rep.table, rep.connection, n, k, SearchBudget::FromEnvironment());
  if (format == "json") {
    Json j;
    j["construction"] = construction;
    j["target"] = {n, k};
    j["report"] = ToJson(report);
    j["table"] = TableToJson(rep.table, rep.connection);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "// " << construction << " for G(" << n << "," << k
              << "): loops " << report.loops << ", parallel digons "
              << report.parallel_digons << ", antiparallel digons "
              << report.antiparallel_digons << ", isomorphic "
              << Flag(report.iso_witness.has_value()) << "\n";
    std::cout << ToDot(BuildCayley(rep.table, rep.connection), rep.table,
                       "Cay(" + construction + ")");
  }
  return ReportExit(report);
}

int RunTable(const std::string& name) {
  const BuiltinTable& b = Builtin(name);
  std::cout << TableToJson(b.table, b.connection).dump(2) << "\n";
  return kExitOk;
}

int RunCheckTable(const std::string& path, int n, int k) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  Json json;
  try {
    json = Json::parse(in);
  } catch (const Json::exception& e) {
    throw DomainError(std::string("invalid JSON: ") + e.what());
  }
  const ParsedTable parsed = TableFromJson(json);
  if (parsed.connection.empty()) {
    throw DomainError("table JSON needs a non-empty \"connection\"");
  }
  GPParams(n, k);
  const RepresentationReport report = VerifyRepresentation(
      parsed.table, parsed.connection, n, k, SearchBudget::FromEnvironment());
  std::cout << ToJson(report).dump(2) << "\n";
  return ReportExit(report);
}

int RunScan(int n_max, bool brute_aut, const std::string& output) {
  const std::vector<PlaneRow> rows =
      Scan(n_max, brute_aut, SearchBudget::FromEnvironment());
  std::ostringstream csv;
  csv << PlaneCsvHeader();
  for (const PlaneRow& row : rows) csv << ToCsvLine(row);
  if (output.empty() || output == "-") {
    std::cout << csv.str();
  } else {
    std::ofstream out(output);
    if (!out) throw DomainError("cannot write " + output);
    out << csv.str();
  }
  return kExitOk;
}

std::string JoinNames() {
  std::string s;
  for (const std::string& name : ConstructionNames()) {
    if (!s.empty()) s += ", ";
    s += name;
  }
  return s;
}

int Main(int argc, char** argv) {
  CLI::App app{"Generalized Petersen graphs: cores, retractions and Cayley "
               "realizations."};
  app.require_subcommand(1);

  int n = 0, k = 0;
  bool json = false, brute_aut = false;
  auto* classify = app.add_subcommand("classify", "Summarize G(n,k).");
  classify->add_option("n", n)->required();
  classify->add_option("k", k)->required();
  classify->add_flag("--json", json, "Emit JSON.");
  classify->add_flag("--brute-aut", brute_aut,
                     "Enumerate Aut even when n > 12.");

  VerifyOptions verify_options;
  bool no_core = false, no_endo = false, no_aut = false;
  auto* verify = app.add_subcommand(
      "verify", "Compare closed forms against the search oracles.");
  verify->add_option("--nmax", verify_options.n_max, "Largest n.")
      ->default_val(12);
  verify->add_flag("--no-core", no_core);
  verify->add_flag("--no-endo", no_endo);
  verify->add_flag("--no-aut", no_aut);
  verify->add_option("--core-ceiling", verify_options.core_ceiling)
      ->default_val(16);
  verify->add_option("--endo-ceiling", verify_options.endo_ceiling)
      ->default_val(12);
  verify->add_option("--aut-ceiling", verify_options.aut_ceiling)
      ->default_val(12);

  std::string format = "json";
  auto* retract = app.add_subcommand(
      "retract", "Retraction of a non-core G(n,k) onto its inner cycle.");
  retract->add_option("n", n)->required();
  retract->add_option("k", k)->required();
  retract->add_option("--format", format)
      ->check(CLI::IsMember({"dot", "json"}));

  std::string construction;
  std::string cayley_format = "dot";
  auto* cayley = app.add_subcommand(
      "cayley", "Build and verify a Cayley realization (" + JoinNames() + ").");
  cayley->add_option("construction", construction)->required();
  cayley->add_option("n", n, "Needed for cay1*, group.");
  cayley->add_option("k", k, "Needed for cay1*, group.");
  cayley->add_option("--format", cayley_format)
      ->check(CLI::IsMember({"dot", "json"}));

  std::string table_name;
  auto* table = app.add_subcommand("table", "Print a builtin table as JSON.");
  table->add_option("name", table_name)->required();

  std::string path;
  std::vector<int> target;
  auto* check = app.add_subcommand(
      "check-table", "Verify that a JSON table realizes G(n,k).");
  check->add_option("path", path)->required();
  check->add_option("--target", target, "n k")->expected(2)->required();

  int scan_max = 16;
  std::string out_format = "csv", output;
  auto* scan = app.add_subcommand("scan", "One CSV row per (n,k).");
  scan->add_option("--nmax", scan_max)->required();
  scan->add_option("--out", out_format)->check(CLI::IsMember({"csv"}));
  scan->add_option("--output", output, "File to write; stdout by default.");
  scan->add_flag("--brute-aut", brute_aut);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (classify->parsed()) return RunClassify(n, k, json, brute_aut);
    if (verify->parsed()) {
      verify_options.core = !no_core;
      verify_options.endo = !no_endo;
      verify_options.aut = !no_aut;
      return RunVerify(verify_options);
    }
    if (retract->parsed()) return RunRetract(n, k, format);
    if (cayley->parsed()) {
      const auto& names = ConstructionNames();
      if (std::find(names.begin(), names.end(), construction) == names.end()) {
        std::cerr << "unknown construction '" << construction
                  << "'; valid names: " << JoinNames() << "\n";
        return kExitUsage;
      }
      return RunCayley(construction, n, k, cayley_format);
    }
    if (table->parsed()) return RunTable(table_name);
    if (check->parsed()) return RunCheckTable(path, target[0], target[1]);
    if (scan->parsed()) return RunScan(scan_max, brute_aut, output);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace gpetersen

int main(int argc, char** argv) { return gpetersen::Main(argc, argv); }
