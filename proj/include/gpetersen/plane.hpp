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

// Per-instance summary rows over the (n, k) plane, and the sweep that
// compares every closed form against its search oracle.

#ifndef GPETERSEN_PLANE_HPP_
#define GPETERSEN_PLANE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "gpetersen/hom_engine.hpp"

namespace gpetersen {

struct PlaneRow {
  int n = 0;
  int k = 0;
  bool bipartite = false;
  bool core = false;
  bool vertex_transitive = false;
  bool group_graph = false;
  bool two_gen_monoid_graph = false;
  bool loopless_obstruction = false;
  std::optional<long long> aut_order_expected;
  std::optional<long long> aut_order_found;
};

constexpr int kBruteAutDefaultMaxN = 12;

// aut_order_found is filled when n <= 12 or `brute_aut` is set; it stays
// empty if the enumeration runs out of budget.
PlaneRow ClassifyRow(int n, int k, bool brute_aut = false,
                     const SearchBudget& budget = {});

// One row per valid (n, k) with n <= n_max, ordered by (n, k). Rows are
// computed in parallel.
std::vector<PlaneRow> Scan(int n_max, bool brute_aut = false,
                           const SearchBudget& budget = {});

struct VerifyOptions {
  int n_max = 12;
  bool core = true;
  bool endo = true;
  bool aut = true;
  // Checks only run up to min(n_max, ceiling).
  int core_ceiling = 16;
  int endo_ceiling = 12;
  int aut_ceiling = 12;
};

struct VerifyFinding {
  std::string check;  // "core", "endo" or "aut"
  int n = 0;
  int k = 0;
  bool inconclusive = false;  // otherwise a disagreement
  std::string detail;
};

struct VerifyReport {
  int instances_checked = 0;
  std::vector<VerifyFinding> findings;  // ordered by (check, n, k)

  int disagreements() const;
  int inconclusive() const;
};

VerifyReport VerifySweep(const VerifyOptions& options,
                         const SearchBudget& budget = {});

}  // namespace gpetersen

#endif  // GPETERSEN_PLANE_HPP_
