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

// Generalized Petersen graphs G(n, k) and their cycle metrics.
//
// Vertex layout is fixed: outer vertex u_i has id i and inner vertex v_i has
// id n + i. Outer rim edges are u_i u_{i+1}, inner edges v_i v_{i+k}, spokes
// u_i v_i, all indices mod n.

#ifndef GPETERSEN_GP_CORE_HPP_
#define GPETERSEN_GP_CORE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "gpetersen/simple_graph.hpp"

namespace gpetersen {

// Validated (n, k) with 3 <= n and 0 < k < n/2.
class GPParams {
 public:
  // Throws DomainError outside the window.
  GPParams(int n, int k);

  static bool IsValid(int n, int k) { return n >= 3 && k > 0 && 2 * k < n; }

  int n() const { return n_; }
  int k() const { return k_; }
  // gcd(n, k).
  int d() const { return d_; }
  // Length of each inner cycle, n / d. Not to be confused with odd girth.
  int inner_len() const { return n_ / d_; }

  bool operator==(const GPParams&) const = default;

 private:
  int n_;
  int k_;
  int d_;
};

// All valid (n, k) with n_min <= n <= n_max, ordered by (n, k).
std::vector<GPParams> AllParams(int n_max, int n_min = 3);

enum class Side { kOuter, kInner };

struct GPVertex {
  Side side;
  int index;  // in [0, n)

  bool operator==(const GPVertex&) const = default;
};

// Euclidean remainder in [0, m).
inline int Mod(long long x, long long m) {
  const long long r = x % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

inline int OuterId(int n, int i) { return Mod(i, n); }
inline int InnerId(int n, int i) { return n + Mod(i, n); }
GPVertex ToGPVertex(int n, int id);
// "u<i>" / "v<i>".
std::string GPLabel(int n, int id);

SimpleGraph BuildGP(const GPParams& params);

bool IsBipartiteGP(const GPParams& params);

// Number of inner-edge components (should be d) and their sizes.
std::vector<int> InnerComponentSizes(const GPParams& params);

// Length of a shortest odd cycle; nullopt iff the graph is bipartite.
// Uses BFS from every vertex, so it is exact and polynomial.
std::optional<int> OddGirth(const SimpleGraph& graph);

struct CycleWitness {
  // Cycle as a closed walk without the repeated first vertex.
  std::vector<int> vertices;
  int length = 0;
  int spoke_count = 0;
  bool uses_inner = false;
  bool uses_outer = false;
};

// Fills length/spoke/side annotations for a vertex cycle in G(n, k).
CycleWitness AnnotateCycle(int n, std::vector<int> vertices);

// True when consecutive vertices (cyclically) are adjacent and distinct.
bool IsCycleIn(const SimpleGraph& graph, const std::vector<int>& vertices);

constexpr int kDefaultWitnessBound = 32;

// Every cycle of odd-girth length, each listed once starting at its smallest
// vertex and oriented so that the second vertex is smaller than the last.
// Throws DomainError for bipartite input or n above `max_n`.
std::vector<CycleWitness> MinOddCycleWitnesses(
    const GPParams& params, int max_n = kDefaultWitnessBound);

// Tensor product with K2: (v, s) has id 2v + s; {u, v} lifts to
// {(u,0),(v,1)} and {(u,1),(v,0)}.
SimpleGraph KroneckerCover(const SimpleGraph& graph);

// Generalized prism: two l-cycles joined by l disjoint paths of length m.
// Vertex z_{i,j} (0 <= j <= m) has id j*l + i; m = 1 reproduces G(l, 1).
SimpleGraph BuildGeneralizedPrism(int ell, int m);

}  // namespace gpetersen

#endif  // GPETERSEN_GP_CORE_HPP_
