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

// Exact backtracking search for graph homomorphisms.
//
// The kernel assigns domain vertices one at a time. The next vertex is the
// unassigned one with the most assigned neighbours (ties: smallest id), and
// its candidates are tried in ascending order. After each assignment the
// candidate set of every unassigned neighbour is intersected with the
// neighbourhood of the new image, then arc consistency is restored over all
// edges (a candidate x of v survives only if each neighbour of v keeps a
// candidate adjacent to x). Injective mode also removes the image from every
// other candidate set, and induced mode intersects non-neighbours with the
// non-neighbourhood; together they give isomorphism and automorphism search.
//
// Search results are deterministic: the same input always visits the same
// nodes in the same order. Exhausting the budget is reported as its own
// status and is never folded into "absent".

#ifndef GPETERSEN_HOM_ENGINE_HPP_
#define GPETERSEN_HOM_ENGINE_HPP_

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "gpetersen/simple_graph.hpp"

namespace gpetersen {

struct SearchBudget {
  static constexpr std::uint64_t kDefaultMaxNodes = 100'000'000;

  // Cap on candidate assignments tried by a single search call.
  std::uint64_t max_nodes = kDefaultMaxNodes;
  std::optional<std::chrono::milliseconds> max_time;

  // Default budget, with max_nodes overridden by GP_ORACLE_BUDGET if set.
  static SearchBudget FromEnvironment();
};

enum class SearchStatus { kFound, kAbsent, kBudgetExhausted };

const char* ToString(SearchStatus status);

using PartialAssignment = std::vector<std::pair<int, int>>;

struct HomConstraints {
  // Pre-assigned (domain vertex, image) pairs.
  PartialAssignment fixed;
  // Codomain vertices that no domain vertex may map to.
  std::vector<int> forbidden_targets;
  bool injective = false;
  // Non-adjacent domain pairs must map to non-adjacent images.
  bool induced = false;
  // If both are non-empty, v may only map to x with equal colours.
  std::vector<int> domain_colours;
  std::vector<int> codomain_colours;
};

struct HomSearchResult {
  SearchStatus status = SearchStatus::kAbsent;
  // Present iff status == kFound; always passes IsHomomorphism.
  std::optional<VertexMap> map;
  std::uint64_t nodes = 0;
};

HomSearchResult FindHomomorphism(const SimpleGraph& from, const SimpleGraph& to,
                                 const HomConstraints& constraints = {},
                                 const SearchBudget& budget = {});

// Calls visit on every solution in search order until it returns false.
// Returns kFound if stopped by the visitor, kAbsent if the search space was
// exhausted, kBudgetExhausted otherwise.
SearchStatus ForEachHomomorphism(
    const SimpleGraph& from, const SimpleGraph& to,
    const HomConstraints& constraints, const SearchBudget& budget,
    const std::function<bool(const VertexMap&)>& visit);

enum class Verdict { kFalse, kTrue, kInconclusive };

const char* ToString(Verdict verdict);

struct CoreOracleResult {
  Verdict is_core = Verdict::kInconclusive;
  // When is_core == kFalse: an endomorphism missing `avoided_vertex`, the
  // smallest avoidable vertex.
  std::optional<VertexMap> witness;
  int avoided_vertex = -1;
};

// G is a core iff no endomorphism misses a vertex. One search per vertex; the
// per-vertex searches run in parallel and each gets the full budget.
CoreOracleResult IsCoreOracle(const SimpleGraph& graph,
                              const SearchBudget& budget = {});

// f is edge-preserving, maps into `target`, and fixes `target` pointwise.
bool VerifyRetraction(const SimpleGraph& graph, const VertexMap& f,
                      const std::vector<int>& target);

struct EndoTransitivityResult {
  Verdict verdict = Verdict::kInconclusive;
  // First ordered pair (u, v) in row-major order with no endomorphism u -> v.
  std::optional<std::pair<int, int>> failing_pair;
};

// For every ordered pair (u, v) searches an endomorphism with u -> v. The
// graph is expected to be connected and loop-free.
EndoTransitivityResult IsEndoTransitiveOracle(const SimpleGraph& graph,
                                              const SearchBudget& budget = {});

// Whether the subgraph induced by image(f) is a retract of G. Only
// kInconclusive on budget exhaustion.
Verdict ImageIsRetractCheck(const SimpleGraph& graph, const VertexMap& f,
                            const SearchBudget& budget = {});

// Joint vertex colouring of two graphs by isomorphism-invariant data
// (degree, neighbour degrees, closed-walk counts up to length 8). Equal
// colours are necessary for v in `a` to map to x in `b` under an
// isomorphism. Returns {colours of a, colours of b}.
std::pair<std::vector<int>, std::vector<int>> InvariantColouring(
    const SimpleGraph& a, const SimpleGraph& b);

namespace reference {

// Serial versions of the parallel oracles above, same results.
CoreOracleResult IsCoreOracle(const SimpleGraph& graph,
                              const SearchBudget& budget = {});
EndoTransitivityResult IsEndoTransitiveOracle(const SimpleGraph& graph,
                                              const SearchBudget& budget = {});

}  // namespace reference

}  // namespace gpetersen

#endif  // GPETERSEN_HOM_ENGINE_HPP_
