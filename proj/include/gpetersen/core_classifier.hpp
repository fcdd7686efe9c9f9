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

// Closed-form core classification of G(n, k) and the explicit retractions
// that witness the non-core cases.
//
// With d = gcd(n, k) and a the unique integer in (0, n/d) with a*k = d mod n,
// a non-bipartite G(n, k) is a core exactly when
//   (c1) n/d is even, or
//   (c2) a + d is even and a >= d + 2, or
//   (c3) a + d is odd and a + d + 2 <= n/d.
// Otherwise it retracts onto the inner cycle through v_0.

#ifndef GPETERSEN_CORE_CLASSIFIER_HPP_
#define GPETERSEN_CORE_CLASSIFIER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "gpetersen/gp_core.hpp"
#include "gpetersen/simple_graph.hpp"

namespace gpetersen {

struct CoreParams {
  int d = 0;
  int a = 0;
  int g_inner = 0;  // n / d
};

CoreParams ComputeCoreParams(const GPParams& params);

// The modular witness a, via the inverse of k/d modulo n/d.
int ComputeA(int n, int k);

enum class CoreStatus { kBipartite, kCore, kNotCore };
enum class CoreReason { kC1, kC2, kC3 };
enum class NotCoreCase {
  kAEvenSmall,  // a + d even and a <= d
  kAOddLarge,   // a + d odd and a + d >= n/d
};

struct CoreVerdict {
  CoreStatus status = CoreStatus::kBipartite;
  std::optional<CoreReason> reason;        // set iff kCore
  std::optional<NotCoreCase> not_core_case;  // set iff kNotCore
  int d = 0;
  int a = 0;

  bool is_core() const { return status == CoreStatus::kCore; }
  bool operator==(const CoreVerdict&) const = default;
};

CoreVerdict ClassifyCore(int n, int k);

std::string ToString(CoreStatus status);
std::string ToString(CoreReason reason);

// Whether some shortest odd cycle uses a spoke, read off the exhaustive
// witness list. Throws DomainError on bipartite input.
bool HasSpokedMinOddCycle(int n, int k, int max_n = kDefaultWitnessBound);

// Retraction of G(n, k) onto the inner cycle (v_0, v_k, v_2k, ...). Throws
// DomainError unless ClassifyCore reports kNotCore.
VertexMap BuildRetraction(int n, int k);

// Vertex ids of the inner cycle through v_0, in cycle order.
std::vector<int> InnerCycleThroughV0(const GPParams& params);

// phi(z_{i,j}) = x_{(i+j) mod l} on BuildGeneralizedPrism(l, m).
VertexMap PrismEndomorphism(int ell, int m);

bool IsEndomorphismTransitive(int n, int k);

// The odd cycles through v_0 and u_0 whose existence proves the core
// condition: (c2) has length n/d - a + d + 2, (c3) has length a + d + 2.
// nullopt when the corresponding condition does not hold.
std::optional<CycleWitness> C2WitnessCycle(int n, int k);
std::optional<CycleWitness> C3WitnessCycle(int n, int k);

}  // namespace gpetersen

#endif  // GPETERSEN_CORE_CLASSIFIER_HPP_
