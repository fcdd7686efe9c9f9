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

// JSON, DOT and CSV emitters. Output depends only on the input values, so
// repeated runs are byte-identical.

#ifndef GPETERSEN_SERIALIZE_HPP_
#define GPETERSEN_SERIALIZE_HPP_

#include <string>
#include <vector>

#include "json.hpp"

#include "gpetersen/algebra.hpp"
#include "gpetersen/cayley.hpp"
#include "gpetersen/core_classifier.hpp"
#include "gpetersen/plane.hpp"
#include "gpetersen/simple_graph.hpp"

namespace gpetersen {

using Json = nlohmann::ordered_json;

// {"status", "reason", "d", "a"}; reason is null unless status is "core".
Json ToJson(const CoreVerdict& verdict);

// {"order", "table", "labels", "connection"}.
Json TableToJson(const OpTable& table, const std::vector<int>& connection = {});

struct ParsedTable {
  OpTable table;
  std::vector<int> connection;
};

// Inverse of TableToJson; "labels" and "connection" are optional. Throws
// DomainError on malformed input.
ParsedTable TableFromJson(const Json& json);

Json ToJson(const RepresentationReport& report);
Json ToJson(const PlaneRow& row);

// {"domain_size", "codomain_size", "image": [...]} plus G(n,k) labels when
// n > 0.
Json VertexMapToJson(const VertexMap& map, int n = 0);

// Undirected graph; vertex labels are used when set. Vertices in
// `highlight` are filled.
std::string ToDot(const SimpleGraph& graph, const std::string& name,
                  const std::vector<int>& highlight = {});

// Retraction of G(n, k): image vertices filled, every node labelled with its
// image.
std::string RetractionToDot(const SimpleGraph& graph, const VertexMap& f,
                            const std::string& name);

// Directed multigraph with one colour per connection element; loops kept.
std::string ToDot(const CayleyDigraph& digraph, const OpTable& table,
                  const std::string& name);

// Versioned comment line, then the column header.
std::string PlaneCsvHeader();
std::string ToCsvLine(const PlaneRow& row);

}  // namespace gpetersen

#endif  // GPETERSEN_SERIALIZE_HPP_
