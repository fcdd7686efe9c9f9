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

#include "gpetersen/cayley.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gpetersen/core_classifier.hpp"
#include "gpetersen/gp_core.hpp"

namespace gpetersen {

CayleyDigraph::CayleyDigraph(const OpTable& table, std::vector<int> connection)
    : size_(table.order()), connection_(std::move(connection)) {
  for (int c : connection_) {
    if (c < 0 || c >= size_) throw DomainError("connection element out of range");
  }
  arcs_.reserve(static_cast<std::size_t>(size_) * connection_.size());
  for (int s = 0; s < size_; ++s) {
    for (int i = 0; i < static_cast<int>(connection_.size()); ++i) {
      arcs_.push_back(Arc{s, table(s, connection_[i]), i});
    }
  }
}

std::vector<int> CayleyDigraph::LoopVertices() const {
  std::vector<int> out;
  for (const Arc& a : arcs_) {
    if (a.from == a.to && (out.empty() || out.back() != a.from)) {
      out.push_back(a.from);
    }
  }
  return out;
}

int CayleyDigraph::num_loops() const {
  return static_cast<int>(std::count_if(
      arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.from == a.to; }));
}

CayleyDigraph BuildCayley(const OpTable& table,
                          const std::vector<int>& connection) {
  return CayleyDigraph(table, connection);
}

UnderlyingReport UnderlyingGraph(const CayleyDigraph& digraph) {
  UnderlyingReport r{SimpleGraph(digraph.size()), 0, 0, 0};
  std::map<std::pair<int, int>, int> multiplicity;
  for (const Arc& a : digraph.arcs()) {
    if (a.from == a.to) {
      ++r.loops;
      continue;
    }
    ++multiplicity[{a.from, a.to}];
    r.graph.AddEdge(a.from, a.to);
  }
  for (const auto& [arc, count] : multiplicity) {
    r.parallel_digons += count * (count - 1) / 2;
    if (arc.first < arc.second) {
      const auto back = multiplicity.find({arc.second, arc.first});
      if (back != multiplicity.end()) r.antiparallel_digons += count * back->second;
    }
  }
  return r;
}

std::vector<int> GeneratedClosure(const OpTable& table,
                                  const std::vector<int>& connection) {
  std::vector<bool> seen(table.order(), false);
  std::vector<int> queue;
  auto add = [&](int x) {
    if (!seen[x]) {
      seen[x] = true;
      queue.push_back(x);
    }
  };
  for (int c : connection) {
    if (c < 0 || c >= table.order()) throw DomainError("element out of range");
    add(c);
  }
  if (const auto e = FindIdentity(table)) add(*e);
  // Every product of generators is a word, and every word is reached by
  // right multiplication under associativity.
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int c : connection) add(table(queue[head], c));
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool Generates(const OpTable& table, const std::vector<int>& connection) {
  return static_cast<int>(GeneratedClosure(table, connection).size()) ==
         table.order();
}

HomSearchResult FindIsomorphism(const SimpleGraph& g, const SimpleGraph& h,
                                const SearchBudget& budget, int max_vertices) {
  HomSearchResult absent;
  absent.status = SearchStatus::kAbsent;
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) {
    return absent;
  }
  if (g.num_vertices() > max_vertices) {
    throw DomainError("isomorphism search refuses graphs above the vertex limit");
  }
  auto [cg, ch] = InvariantColouring(g, h);
  std::vector<int> sg = cg, sh = ch;
  std::sort(sg.begin(), sg.end());
  std::sort(sh.begin(), sh.end());
  if (sg != sh) return absent;
  HomConstraints constraints;
  constraints.injective = true;
  constraints.induced = true;
  constraints.domain_colours = std::move(cg);
  constraints.codomain_colours = std::move(ch);
  HomSearchResult r = FindHomomorphism(g, h, constraints, budget);
  if (r.map && !IsIsomorphism(g, h, *r.map)) {
    throw std::logic_error("isomorphism search returned a non-isomorphism");
  }
  return r;
}

bool IsGroupGraph(int n, int k) {
  const GPParams params(n, k);
  return Mod(static_cast<long long>(k) * k, n) == 1;
}

bool Is2GenMonoidGraph(int n, int k) {
  const GPParams params(n, k);
  return (n == 5 && k == 2) || IsGroupGraph(n, k) ||
         SatisfiesCay1Congruence(n, k);
}

std::optional<bool> Is2ConnMonoidGraphRestricted(int n, int k) {
  const GPParams params(n, k);
  const bool petersen = n == 5 && k == 2;
  if (params.d() == 1) {
    return petersen || (n == 10 && k == 3) || IsGroupGraph(n, k);
  }
  if (params.inner_len() % 2 == 1) {
    return petersen || IsGroupGraph(n, k) || SatisfiesCay1Congruence(n, k);
  }
  return std::nullopt;
}

bool LooplessSemigroupObstruction(int n, int k) {
  return ClassifyCore(n, k).is_core() && n != 4 * k && !IsGroupGraph(n, k);
}

std::vector<int> AlphaGammaConnection() {
  return {AlphaGammaElement(1, 0), AlphaGammaElement(0, 1)};
}

std::optional<Representation> TwoGenRepresentation(int n, int k) {
  if (!Is2GenMonoidGraph(n, k)) return std::nullopt;
  if (n == 5 && k == 2) return BuildConstruction("petersen-m", n, k);
  if (IsGroupGraph(n, k)) return BuildConstruction("group", n, k);
  return BuildConstruction("cay1", n, k);
}

const std::vector<std::string>& ConstructionNames() {
  static const std::vector<std::string> names = {
      "petersen-s", "petersen-m", "petersen-sp", "petersen-mp", "dodecahedron",
      "desargues",  "cay1",       "cay1-rev",    "cay1-loop",   "group"};
  return names;
}

Representation BuildConstruction(const std::string& name, int n, int k) {
  for (const BuiltinTable& b : BuiltinTables()) {
    if (b.name == name) return Representation{name, b.table, b.connection};
  }
  if (name == "cay1" || name == "cay1-rev" || name == "cay1-loop") {
    const Cay1Variant variant = name == "cay1"       ? Cay1Variant::kStandard
                                : name == "cay1-rev" ? Cay1Variant::kReversed
                                                     : Cay1Variant::kLooped;
    return Representation{name, Cay1Monoid(n, k), Cay1Connection(n, k, variant)};
  }
  if (name == "group") {
    const GPParams params(n, k);
    return Representation{name, PresentedGroupAlphaGamma(n, k),
                          AlphaGammaConnection()};
  }
  throw DomainError("unknown construction: " + name);
}

RepresentationReport VerifyRepresentation(const OpTable& table,
                                          const std::vector<int>& connection,
                                          int n, int k,
                                          const SearchBudget& budget) {
  RepresentationReport r;
  r.associative = IsAssociative(table, connection);
  r.identity = FindIdentity(table);
  r.generates = Generates(table, connection);
  const UnderlyingReport u = UnderlyingGraph(BuildCayley(table, connection));
  r.loops = u.loops;
  r.loopless = u.loops == 0;
  r.parallel_digons = u.parallel_digons;
  r.antiparallel_digons = u.antiparallel_digons;
  if (!GPParams::IsValid(n, k)) return r;
  r.iso_target = std::make_pair(n, k);
  const SimpleGraph target = BuildGP(GPParams(n, k));
  const HomSearchResult iso = FindIsomorphism(u.graph, target, budget);
  r.iso_status = iso.status;
  r.iso_witness = iso.map;
  return r;
}

std::optional<GeneratorWitness> InvertibleGeneratorWitness(
    const OpTable& table, const std::vector<int>& connection) {
  const std::optional<int> e = FindIdentity(table);
  if (!e) return std::nullopt;
  const std::vector<int> units = Invertibles(table);
  const SimpleGraph graph =
      UnderlyingGraph(BuildCayley(table, connection)).graph;
  for (int c : connection) {
    if (!std::binary_search(units.begin(), units.end(), c)) continue;
    const int order = ElementOrder(table, c);
    if (order <= 2) continue;
    GeneratorWitness w{c, order, {}};
    int power = *e;
    for (int i = 0; i < order; ++i) {
      w.cycle.push_back(power);
      power = table(power, c);
    }
    if (IsCycleIn(graph, w.cycle)) return w;
  }
  return std::nullopt;
}

}  // namespace gpetersen
