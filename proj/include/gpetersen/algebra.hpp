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

// Finite binary operations given by their multiplication tables, structural
// predicates on them, and the concrete semigroups and monoids used to realize
// generalized Petersen graphs as Cayley graphs.

#ifndef GPETERSEN_ALGEBRA_HPP_
#define GPETERSEN_ALGEBRA_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gpetersen/simple_graph.hpp"

namespace gpetersen {

// Carrier 0..order-1; entry(a, b) = a*b. Closure is checked on construction.
class OpTable {
 public:
  OpTable() = default;
  OpTable(int order, std::vector<int> entries,
          std::vector<std::string> labels = {});
  static OpTable FromRows(const std::vector<std::vector<int>>& rows,
                          std::vector<std::string> labels = {});

  int order() const { return order_; }
  int operator()(int a, int b) const {
    return entries_[static_cast<std::size_t>(a) * order_ + b];
  }
  std::vector<std::vector<int>> Rows() const;
  // Labels default to the decimal element id.
  const std::vector<std::string>& labels() const { return labels_; }

  bool operator==(const OpTable& other) const {
    return order_ == other.order_ && entries_ == other.entries_;
  }

 private:
  int order_ = 0;
  std::vector<int> entries_;
  std::vector<std::string> labels_;
};

// Full (ab)c = a(bc) scan, parallel over a.
bool IsAssociative(const OpTable& table);

// Light's test over `generators` when their closure under right
// multiplication is the whole carrier; otherwise the full scan.
bool IsAssociative(const OpTable& table, std::span<const int> generators);

// Serial twins of the OpenMP kernels.
namespace reference {
bool IsAssociative(const OpTable& table);
}  // namespace reference

// Two-sided identity; a one-sided identity alone gives nullopt.
std::optional<int> FindIdentity(const OpTable& table);

// Elements with a two-sided inverse relative to the identity; empty if there
// is no identity.
std::vector<int> Invertibles(const OpTable& table);

// Least m >= 1 with g^m = e. Throws DomainError without an identity or when
// g is not invertible.
int ElementOrder(const OpTable& table, int g);

std::vector<int> Idempotents(const OpTable& table);

// For every a some x has axa = a, xax = x and ax = xa.
bool IsCompletelyRegular(const OpTable& table);

struct AlgebraReport {
  bool associative = false;
  std::optional<int> identity;
  bool is_monoid = false;
  bool is_group = false;
  std::vector<int> idempotents;
  bool idempotents_closed = false;
  bool completely_regular = false;
  bool is_orthogroup = false;
};

AlgebraReport Analyze(const OpTable& table);

bool IsOrthogroup(const OpTable& table);

// map[a*b] == map[a]*map[b] for all a, b.
bool IsSemigroupHomomorphism(const OpTable& from, const OpTable& to,
                             const std::vector<int>& map);

// Z_n under addition.
OpTable CyclicGroup(int n);
// Symmetries of the n-gon, order 2n: r^i s^j has id i + n*j.
OpTable DihedralGroup(int n);
// All products equal zero_id.
OpTable NullSemigroup(int size, int zero_id);
// l_i * l_j = l_i.
OpTable LeftZeroBand(int size);
// (x, y) has id x*|T2| + y.
OpTable DirectProduct(const OpTable& t1, const OpTable& t2);
// <alpha, gamma | alpha^n = gamma^2 = 1, gamma alpha gamma = alpha^k> on
// pairs (i, e) = alpha^i gamma^e, id 2i + e. Requires k^2 = 1 (mod n).
OpTable PresentedGroupAlphaGamma(int n, int k);
inline int AlphaGammaElement(int i, int e) { return 2 * i + e; }

// Which half of R = S u T keeps the left R' coordinate.
enum class NullExtensionProduct {
  // (s, i)(r, j) = (sr, i),  (t, i)(r, j) = (tr, ij)
  kSKeepsLeft,
  // (s, i)(r, j) = (sr, ij), (t, i)(r, j) = (tr, i)
  kTKeepsLeft,
};

// R = S u T with ST, TS inside T (T given by `t_elements`) and a second
// semigroup R', multiplied on R x R' (id r*|R'| + i) as selected above.
// kSKeepsLeft is not associative on the Desargues input (M x Z2 with
// T = {6,...,9}: ((0,0)(6,0))(6,1) = (9,1) but (0,0)((6,0)(6,1)) = (9,0));
// kTKeepsLeft is, and is the default.
// Throws DomainError if the partition condition fails or the result is not
// associative.
OpTable CombinatorNullExtension(
    const OpTable& r, const std::vector<int>& t_elements,
    const OpTable& r_prime,
    NullExtensionProduct product = NullExtensionProduct::kTKeepsLeft);

// S u (T x L_R) with homomorphisms phi: S -> T, psi: S -> R:
//   s(t, l_r) = (phi(s)t, l_{psi(s)r}),   (t, l_r)s = (t phi(s), l_r),
//   (t, l_r)(t', l_r') = (tt', l_r).
// S keeps ids 0..|S|-1; (t, l_r) has id |S| + t*|R| + r.
OpTable CombinatorLeftBandExtension(const OpTable& s, const OpTable& t,
                                    const OpTable& r,
                                    const std::vector<int>& phi,
                                    const std::vector<int>& psi);

// k^2 = +-k (mod n).
bool SatisfiesCay1Congruence(int n, int k);

// Z_n u (Z_{n/d} x L_d) with reduction maps; order 2n, identity 0. Throws
// DomainError unless k^2 = +-k (mod n).
OpTable Cay1Monoid(int n, int k);
// Id of (i, l_j) in Cay1Monoid(n, k).
int Cay1Element(int n, int k, int i, int j);

enum class Cay1Variant {
  kStandard,  // C = {1, (1, l_0)}
  kReversed,  // C = {1, (-1, l_0)}
  kLooped,    // C = {1, (0, l_0)}
};

std::vector<int> Cay1Connection(int n, int k, Cay1Variant variant);

struct BuiltinTable {
  std::string name;
  OpTable table;
  std::vector<int> connection;
  int target_n = 0;
  int target_k = 0;
};

// Transcribed tables plus the Desargues extension, each with its
// connection set and target graph:
//   petersen-s, petersen-m   (Z6 u N[6,9], C = {1, 6}, G(5,2))
//   petersen-sp, petersen-mp (D3 u N[6,9], C = {0, 4, 8}, G(5,2))
//   dodecahedron             (D6 u N[12,15] u N[16,19], C = {1,11,18}, G(10,2))
//   desargues                (petersen-m x Z2, C = {(1,1),(6,0)}, G(10,3))
const std::vector<BuiltinTable>& BuiltinTables();
// Throws DomainError for unknown names.
const BuiltinTable& Builtin(const std::string& name);

}  // namespace gpetersen

#endif  // GPETERSEN_ALGEBRA_HPP_
