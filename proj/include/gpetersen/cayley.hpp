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

// Right Cayley digraphs of finite semigroups, their underlying simple graphs,
// and the closed-form answers to "is G(n, k) a group / monoid graph".

#ifndef GPETERSEN_CAYLEY_HPP_
#define GPETERSEN_CAYLEY_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpetersen/algebra.hpp"
#include "gpetersen/hom_engine.hpp"
#include "gpetersen/simple_graph.hpp"

namespace gpetersen {

struct Arc {
  int from = 0;
  int to = 0;
  int color = 0;  // index into the connection list

  bool operator==(const Arc&) const = default;
};

// One arc s -> s*c per carrier element s and connection element c, ordered
// by s, then by position of c.
class CayleyDigraph {
 public:
  CayleyDigraph(const OpTable& table, std::vector<int> connection);

  int size() const { return size_; }
  const std::vector<int>& connection() const { return connection_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  // Target of the arc leaving s with colour index `color`.
  int target(int s, int color) const {
    return arcs_[static_cast<std::size_t>(s) * connection_.size() + color].to;
  }
  // Elements s with s*c = s for some c, ascending.
  std::vector<int> LoopVertices() const;
  int num_loops() const;

 private:
  int size_ = 0;
  std::vector<int> connection_;
  std::vector<Arc> arcs_;
};

CayleyDigraph BuildCayley(const OpTable& table, const std::vector<int>& connection);

// Parallel digon: two arcs x -> y, x != y. Antiparallel digon: arcs x -> y
// and y -> x. Both are counted as pairs of arcs.
struct UnderlyingReport {
  SimpleGraph graph;
  int loops = 0;
  int parallel_digons = 0;
  int antiparallel_digons = 0;
};

// Suppresses loops, forgets orientation, merges parallel edges.
UnderlyingReport UnderlyingGraph(const CayleyDigraph& digraph);

// Smallest subset containing `connection` and closed under the operation,
// plus the identity when the table has one. Sorted.
std::vector<int> GeneratedClosure(const OpTable& table,
                                  const std::vector<int>& connection);
bool Generates(const OpTable& table, const std::vector<int>& connection);

constexpr int kDefaultIsoVertexLimit = 128;

// Isomorphism search with invariant-colour refinement. Size or edge-count
// mismatch returns kAbsent without searching. Throws DomainError above
// `max_vertices`.
HomSearchResult FindIsomorphism(const SimpleGraph& g, const SimpleGraph& h,
                                const SearchBudget& budget = {},
                                int max_vertices = kDefaultIsoVertexLimit);

// k^2 = 1 (mod n).
bool IsGroupGraph(int n, int k);

// (5,2), or k^2 = 1, or k^2 = +-k (mod n).
bool Is2GenMonoidGraph(int n, int k);

// Decided without a generation hypothesis when gcd(n,k) = 1 or n/gcd is odd;
// nullopt elsewhere.
std::optional<bool> Is2ConnMonoidGraphRestricted(int n, int k);

// Core, n != 4k and k^2 != 1 (mod n): every semigroup realization has loops.
bool LooplessSemigroupObstruction(int n, int k);

struct Representation {
  std::string construction;
  OpTable table;
  std::vector<int> connection;
};

// Table and connection set realizing G(n, k) with |C| = 2, whenever
// Is2GenMonoidGraph holds: petersen-m for (5,2), the alpha/gamma group for
// k^2 = 1, the cay1 monoid otherwise.
std::optional<Representation> TwoGenRepresentation(int n, int k);

// CLI construction names: petersen-s, petersen-m, petersen-sp, petersen-mp,
// dodecahedron, desargues, cay1, cay1-rev, cay1-loop, group.
const std::vector<std::string>& ConstructionNames();

// Builtins ignore n and k. Throws DomainError for unknown names or
// parameters outside the construction's range.
Representation BuildConstruction(const std::string& name, int n, int k);

// Ids of alpha and gamma in PresentedGroupAlphaGamma.
std::vector<int> AlphaGammaConnection();

struct RepresentationReport {
  bool associative = false;
  std::optional<int> identity;
  bool generates = false;
  bool loopless = false;
  int loops = 0;
  int parallel_digons = 0;
  int antiparallel_digons = 0;
  std::optional<std::pair<int, int>> iso_target;
  SearchStatus iso_status = SearchStatus::kAbsent;
  // Present iff iso_status == kFound; maps carrier elements to G(n,k) ids.
  std::optional<VertexMap> iso_witness;

  bool realizes() const { return associative && iso_witness.has_value(); }
};

// Associativity, identity, generation, loop census and isomorphism with
// G(n, k). Failures are reported in the fields; only a carrier above the
// isomorphism vertex limit throws. Invalid (n, k) leaves iso_target empty.
RepresentationReport VerifyRepresentation(const OpTable& table,
                                          const std::vector<int>& connection,
                                          int n, int k,
                                          const SearchBudget& budget = {});

struct GeneratorWitness {
  int element = 0;
  int order = 0;
  // e, g, g^2, ..., g^{order-1}.
  std::vector<int> cycle;
};

// An invertible c in C of order > 2 whose powers form a cycle in the
// underlying graph of Cay(T, C). nullopt if none qualifies.
std::optional<GeneratorWitness> InvertibleGeneratorWitness(
    const OpTable& table, const std::vector<int>& connection);

}  // namespace gpetersen

#endif  // GPETERSEN_CAYLEY_HPP_
