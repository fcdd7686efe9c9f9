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

#include "gpetersen/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "gpetersen/gp_core.hpp"

namespace gpetersen {

namespace {

// Fixed palette, cycled when there are more colours than entries.
constexpr const char* kArcColours[] = {"black", "red", "blue", "darkgreen",
                                       "orange", "purple"};

std::string NodeName(const SimpleGraph& g, int v) {
  return g.label(v).empty() ? std::to_string(v) : g.label(v);
}

std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

template <class T>
Json OptionalJson(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json ToJson(const CoreVerdict& verdict) {
  Json j;
  j["status"] = ToString(verdict.status);
  j["reason"] = verdict.reason ? Json(ToString(*verdict.reason)) : Json(nullptr);
  j["d"] = verdict.d;
  j["a"] = verdict.a;
  return j;
}

Json TableToJson(const OpTable& table, const std::vector<int>& connection) {
  Json j;
  j["order"] = table.order();
  j["table"] = table.Rows();
  j["labels"] = table.labels();
  j["connection"] = connection;
  return j;
}

ParsedTable TableFromJson(const Json& json) {
  try {
    if (!json.is_object()) throw DomainError("table JSON must be an object");
    const int order = json.at("order").get<int>();
    const auto rows = json.at("table").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(rows.size()) != order) {
      throw DomainError("\"order\" does not match the number of rows");
    }
    std::vector<std::string> labels;
    if (json.contains("labels")) {
      labels = json.at("labels").get<std::vector<std::string>>();
    }
    std::vector<int> connection;
    if (json.contains("connection")) {
      connection = json.at("connection").get<std::vector<int>>();
    }
    for (int c : connection) {
      if (c < 0 || c >= order) throw DomainError("connection element out of range");
    }
    return ParsedTable{OpTable::FromRows(rows, std::move(labels)),
                       std::move(connection)};
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed table JSON: ") + e.what());
  }
}

Json VertexMapToJson(const VertexMap& map, int n) {
  Json j;
  j["domain_size"] = map.domain_size();
  j["codomain_size"] = map.codomain_size;
  j["image"] = map.image;
  if (n > 0) {
    Json labelled = Json::object();
    for (int v = 0; v < map.domain_size(); ++v) {
      labelled[GPLabel(n, v)] = GPLabel(n, map(v));
    }
    j["labelled"] = labelled;
  }
  return j;
}

Json ToJson(const RepresentationReport& report) {
  Json j;
  j["associative"] = report.associative;
  j["identity"] = OptionalJson(report.identity);
  j["generates"] = report.generates;
  j["loopless"] = report.loopless;
  j["loops"] = report.loops;
  j["parallel_digons"] = report.parallel_digons;
  j["antiparallel_digons"] = report.antiparallel_digons;
  j["iso_target"] = report.iso_target
                        ? Json::array({report.iso_target->first,
                                       report.iso_target->second})
                        : Json(nullptr);
  j["iso_status"] = ToString(report.iso_status);
  j["iso_witness"] =
      report.iso_witness ? Json(report.iso_witness->image) : Json(nullptr);
  return j;
}

Json ToJson(const PlaneRow& row) {
  Json j;
  j["n"] = row.n;
  j["k"] = row.k;
  j["bipartite"] = row.bipartite;
  j["core"] = row.core;
  j["vertex_transitive"] = row.vertex_transitive;
  j["group_graph"] = row.group_graph;
  j["two_gen_monoid_graph"] = row.two_gen_monoid_graph;
  j["loopless_obstruction"] = row.loopless_obstruction;
  j["aut_order_expected"] = OptionalJson(row.aut_order_expected);
  j["aut_order_found"] = OptionalJson(row.aut_order_found);
  return j;
}

std::string ToDot(const SimpleGraph& graph, const std::string& name,
                  const std::vector<int>& highlight) {
  std::vector<char> filled(graph.num_vertices(), 0);
  for (int v : highlight) filled[v] = 1;
  std::ostringstream out;
  out << "graph " << Quote(name) << " {\n";
  for (int v = 0; v < graph.num_vertices(); ++v) {
    out << "  " << Quote(NodeName(graph, v));
    if (filled[v]) out << " [style=filled, fillcolor=gray]";
    out << ";\n";
  }
  for (const auto& [a, b] : graph.Edges()) {
    out << "  " << Quote(NodeName(graph, a)) << " -- "
        << Quote(NodeName(graph, b)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string RetractionToDot(const SimpleGraph& graph, const VertexMap& f,
                            const std::string& name) {
  const std::vector<int> image = ImageOf(f);
  std::vector<char> filled(graph.num_vertices(), 0);
  for (int v : image) filled[v] = 1;
  std::ostringstream out;
  out << "graph " << Quote(name) << " {\n";
  for (int v = 0; v < graph.num_vertices(); ++v) {
    out << "  " << Quote(NodeName(graph, v)) << " [label="
        << Quote(NodeName(graph, v) + " > " + NodeName(graph, f(v)));
    if (filled[v]) out << ", style=filled, fillcolor=gray";
    out << "];\n";
  }
  for (const auto& [a, b] : graph.Edges()) {
    out << "  " << Quote(NodeName(graph, a)) << " -- "
        << Quote(NodeName(graph, b)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string ToDot(const CayleyDigraph& digraph, const OpTable& table,
                  const std::string& name) {
  constexpr int kPalette = sizeof(kArcColours) / sizeof(kArcColours[0]);
  std::ostringstream out;
  out << "digraph " << Quote(name) << " {\n";
  for (int s = 0; s < digraph.size(); ++s) {
    out << "  " << s << " [label=" << Quote(table.labels()[s]) << "];\n";
  }
  for (const Arc& a : digraph.arcs()) {
    const int c = digraph.connection()[a.color];
    out << "  " << a.from << " -> " << a.to << " [color="
        << kArcColours[a.color % kPalette]
        << ", label=" << Quote(table.labels()[c]) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string PlaneCsvHeader() {
  return "# gpetersen plane v1\n"
         "n,k,bipartite,core,vertex_transitive,group_graph,"
         "two_gen_monoid_graph,loopless_obstruction,aut_order_expected,"
         "aut_order_found\n";
}

std::string ToCsvLine(const PlaneRow& row) {
  auto flag = [](bool b) { return b ? "1" : "0"; };
  auto opt = [](const std::optional<long long>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  std::ostringstream out;
  out << row.n << ',' << row.k << ',' << flag(row.bipartite) << ','
      << flag(row.core) << ',' << flag(row.vertex_transitive) << ','
      << flag(row.group_graph) << ',' << flag(row.two_gen_monoid_graph) << ','
      << flag(row.loopless_obstruction) << ',' << opt(row.aut_order_expected)
      << ',' << opt(row.aut_order_found) << '\n';
  return out.str();
}

}  // namespace gpetersen
