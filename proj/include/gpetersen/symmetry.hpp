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

#ifndef GPETERSEN_SYMMETRY_HPP_
#define GPETERSEN_SYMMETRY_HPP_

#include <optional>
#include <vector>

#include "gpetersen/cayley.hpp"
#include "gpetersen/gp_core.hpp"
#include "gpetersen/hom_engine.hpp"
#include "gpetersen/simple_graph.hpp"

namespace gpetersen {

// Bijection on 0..size-1. Construction from a non-bijective image throws.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);
  static Permutation Identity(int size);
  // Throws DomainError when the map is not a bijection.
  static Permutation FromVertexMap(const VertexMap& map);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int v) const { return image_[v]; }
  const std::vector<int>& image() const { return image_; }
  VertexMap ToVertexMap() const;

  // (this * other)(v) = this(other(v)).
  Permutation operator*(const Permutation& other) const;
  Permutation Inverse() const;
  int Order() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

// alpha: u_i -> u_{i+1}, v_i -> v_{i+1}.
Permutation Rotation(const GPParams& params);
// beta: u_i -> u_{-i}, v_i -> v_{-i}.
Permutation Reflection(const GPParams& params);
// gamma: u_i -> v_{ki}, v_i -> u_{ki}. Only a bijection when gcd(n,k) = 1,
// and only an automorphism when k^2 = +-1 mod n, so it is returned unchecked.
VertexMap InsideOut(const GPParams& params);

bool IsAutomorphism(const SimpleGraph& graph, const VertexMap& map);

// k^2 = +-1 (mod n), or the dodecahedron (10, 2).
bool IsVertexTransitive(int n, int k);

bool IsExceptionalAutPair(int n, int k);

// |Aut G(n,k)| for non-exceptional pairs: 4n when k^2 = +-1 (mod n), else
// 2n. nullopt for the seven exceptional pairs.
std::optional<long long> ExpectedAutOrder(int n, int k);

constexpr int kDefaultAutVertexLimit = 60;

struct AutGroupResult {
  SearchStatus status = SearchStatus::kAbsent;  // kAbsent: enumeration done
  std::vector<Permutation> elements;             // sorted
};

// All automorphisms via the homomorphism kernel in injective + induced mode
// with invariant-colour refinement. Throws DomainError above `max_vertices`.
AutGroupResult AutGroupBruteforce(const SimpleGraph& graph,
                                  const SearchBudget& budget = {},
                                  int max_vertices = kDefaultAutVertexLimit);

// Closed under composition and inverse, and contains the identity.
bool IsGroup(const std::vector<Permutation>& elements);

// Orbits of the group generated by `generators`, each sorted, ordered by
// smallest member.
std::vector<std::vector<int>> Orbits(int size,
                                     const std::vector<Permutation>& generators);

// f(m)*c == f(m*c) for every carrier element m and connection element c.
bool IsColorEndomorphism(const CayleyDigraph& digraph, const VertexMap& f);

// Left multiplication m' -> m*m' as a map on the carrier.
VertexMap LeftMultiplication(const OpTable& table, int m);

}  // namespace gpetersen

#endif  // GPETERSEN_SYMMETRY_HPP_
