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

#include "gpetersen/plane.hpp"

#include <algorithm>

#include "gpetersen/cayley.hpp"
#include "gpetersen/core_classifier.hpp"
#include "gpetersen/gp_core.hpp"
#include "gpetersen/parallel.hpp"
#include "gpetersen/symmetry.hpp"

namespace gpetersen {

namespace {

// |Aut| for the exceptional pairs that have a value to compare against.
std::optional<long long> KnownExceptionalAutOrder(int n, int k) {
  if (n == 5 && k == 2) return 120;
  if (n == 10 && k == 2) return 120;
  if (n == 10 && k == 3) return 240;
  return std::nullopt;
}

}  // namespace

PlaneRow ClassifyRow(int n, int k, bool brute_aut, const SearchBudget& budget) {
  const GPParams params(n, k);
  PlaneRow row;
  row.n = n;
  row.k = k;
  row.bipartite = IsBipartiteGP(params);
  row.core = ClassifyCore(n, k).is_core();
  row.vertex_transitive = IsVertexTransitive(n, k);
  row.group_graph = IsGroupGraph(n, k);
  row.two_gen_monoid_graph = Is2GenMonoidGraph(n, k);
  row.loopless_obstruction = LooplessSemigroupObstruction(n, k);
  row.aut_order_expected = ExpectedAutOrder(n, k);
  if (n <= kBruteAutDefaultMaxN || brute_aut) {
    const AutGroupResult aut =
        AutGroupBruteforce(BuildGP(params), budget, 2 * n);
    if (aut.status != SearchStatus::kBudgetExhausted) {
      row.aut_order_found = static_cast<long long>(aut.elements.size());
    }
  }
  return row;
}

std::vector<PlaneRow> Scan(int n_max, bool brute_aut,
                           const SearchBudget& budget) {
  const std::vector<GPParams> all = AllParams(n_max);
  return ParallelMap<PlaneRow>(all.size(), [&](std::size_t i) {
    return ClassifyRow(all[i].n(), all[i].k(), brute_aut, budget);
  });
}

int VerifyReport::disagreements() const {
  return static_cast<int>(std::count_if(
      findings.begin(), findings.end(),
      [](const VerifyFinding& f) { return !f.inconclusive; }));
}

int VerifyReport::inconclusive() const {
  return static_cast<int>(findings.size()) - disagreements();
}

VerifyReport VerifySweep(const VerifyOptions& options,
                         const SearchBudget& budget) {
  VerifyReport report;
  auto add = [&](const char* check, int n, int k, bool inconclusive,
                 std::string detail) {
    report.findings.push_back(
        VerifyFinding{check, n, k, inconclusive, std::move(detail)});
  };
  if (options.core) {
    for (const GPParams& p : AllParams(std::min(options.n_max, options.core_ceiling))) {
      if (IsBipartiteGP(p)) continue;
      ++report.instances_checked;
      const bool closed = ClassifyCore(p.n(), p.k()).is_core();
      const CoreOracleResult oracle = IsCoreOracle(BuildGP(p), budget);
      if (oracle.is_core == Verdict::kInconclusive) {
        add("core", p.n(), p.k(), true, "oracle budget exhausted");
        continue;
      }
      const bool searched = oracle.is_core == Verdict::kTrue;
      const bool spoked = HasSpokedMinOddCycle(p.n(), p.k(), p.n());
      if (closed != searched || closed != spoked) {
        add("core", p.n(), p.k(), false,
            std::string("closed form ") + (closed ? "core" : "not core") +
                ", oracle " + (searched ? "core" : "not core") +
                ", spoked min odd cycle " + (spoked ? "yes" : "no"));
      }
    }
  }
  if (options.endo) {
    for (const GPParams& p : AllParams(std::min(options.n_max, options.endo_ceiling))) {
      ++report.instances_checked;
      const bool closed = IsEndomorphismTransitive(p.n(), p.k());
      const EndoTransitivityResult oracle =
          IsEndoTransitiveOracle(BuildGP(p), budget);
      if (oracle.verdict == Verdict::kInconclusive) {
        add("endo", p.n(), p.k(), true, "oracle budget exhausted");
      } else if (closed != (oracle.verdict == Verdict::kTrue)) {
        add("endo", p.n(), p.k(), false,
            std::string("closed form ") + (closed ? "true" : "false") +
                ", oracle " + ToString(oracle.verdict));
      }
    }
  }
  if (options.aut) {
    for (const GPParams& p : AllParams(std::min(options.n_max, options.aut_ceiling))) {
      ++report.instances_checked;
      const AutGroupResult aut =
          AutGroupBruteforce(BuildGP(p), budget, 2 * p.n());
      if (aut.status == SearchStatus::kBudgetExhausted) {
        add("aut", p.n(), p.k(), true, "enumeration budget exhausted");
        continue;
      }
      const long long found = static_cast<long long>(aut.elements.size());
      std::optional<long long> expected = ExpectedAutOrder(p.n(), p.k());
      if (!expected) expected = KnownExceptionalAutOrder(p.n(), p.k());
      if (expected && *expected != found) {
        add("aut", p.n(), p.k(), false,
            "expected |Aut| " + std::to_string(*expected) + ", found " +
                std::to_string(found));
      }
      const bool one_orbit = Orbits(2 * p.n(), aut.elements).size() == 1;
      if (one_orbit != IsVertexTransitive(p.n(), p.k())) {
        add("aut", p.n(), p.k(), false,
            one_orbit ? "one orbit but predicate says intransitive"
                      : "two orbits but predicate says transitive");
      }
    }
  }
  return report;
}

}  // namespace gpetersen
