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

#include "gpetersen/hom_engine.hpp"

#include <cstdlib>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "gpetersen/core_classifier.hpp"
#include "gpetersen/gp_core.hpp"

namespace gpetersen {
namespace {

TEST(FindHomomorphismTest, SmallCases) {
  const HomSearchResult to_edge = FindHomomorphism(CycleGraph(6), CompleteGraph(2));
  ASSERT_EQ(to_edge.status, SearchStatus::kFound);
  EXPECT_TRUE(IsHomomorphism(CycleGraph(6), CompleteGraph(2), *to_edge.map));

  EXPECT_EQ(FindHomomorphism(CycleGraph(5), CycleGraph(5)).status,
            SearchStatus::kFound);
  EXPECT_EQ(FindHomomorphism(CycleGraph(5), CompleteGraph(2)).status,
            SearchStatus::kAbsent);
  EXPECT_EQ(FindHomomorphism(CompleteGraph(4), CompleteGraph(3)).status,
            SearchStatus::kAbsent);
}

TEST(FindHomomorphismTest, PetersenToPentagonIsAbsent) {
  const HomSearchResult r =
      FindHomomorphism(BuildGP(GPParams(5, 2)), CycleGraph(5));
  EXPECT_EQ(r.status, SearchStatus::kAbsent);
  EXPECT_FALSE(r.map.has_value());
}

// All 5^10 maps, no pruning at all.
TEST(FindHomomorphismTest, PetersenToPentagonExhaustiveOracle) {
  const SimpleGraph petersen = BuildGP(GPParams(5, 2));
  const SimpleGraph c5 = CycleGraph(5);
  const std::vector<Edge> edges = petersen.Edges();
  std::vector<int> image(10, 0);
  long long homs = 0;
  for (long long code = 0; code < 9765625; ++code) {
    long long c = code;
    for (int v = 0; v < 10; ++v) {
      image[v] = static_cast<int>(c % 5);
      c /= 5;
    }
    bool ok = true;
    for (const auto& [a, b] : edges) {
      if (!c5.HasEdge(image[a], image[b])) {
        ok = false;
        break;
      }
    }
    homs += ok;
  }
  EXPECT_EQ(homs, 0);
}

TEST(FindHomomorphismTest, RespectsFixedAndForbidden) {
  const SimpleGraph c6 = CycleGraph(6);
  HomConstraints constraints;
  constraints.fixed = {{0, 3}};
  constraints.forbidden_targets = {4};
  const HomSearchResult r = FindHomomorphism(c6, c6, constraints);
  ASSERT_EQ(r.status, SearchStatus::kFound);
  EXPECT_EQ((*r.map)(0), 3);
  for (int x : r.map->image) EXPECT_NE(x, 4);
  EXPECT_TRUE(IsHomomorphism(c6, c6, *r.map));
}

TEST(FindHomomorphismTest, InconsistentFixedAssignmentIsAbsent) {
  HomConstraints constraints;
  constraints.fixed = {{0, 0}, {1, 2}};  // 0-1 is an edge, 0-2 is not
  EXPECT_EQ(FindHomomorphism(CycleGraph(5), CycleGraph(5), constraints).status,
            SearchStatus::kAbsent);
}

TEST(FindHomomorphismTest, BudgetExhaustionIsNotAbsence) {
  SearchBudget tiny;
  tiny.max_nodes = 3;
  const HomSearchResult r =
      FindHomomorphism(BuildGP(GPParams(5, 2)), CycleGraph(5), {}, tiny);
  EXPECT_EQ(r.status, SearchStatus::kBudgetExhausted);
  EXPECT_FALSE(r.map.has_value());
}

TEST(FindHomomorphismTest, Deterministic) {
  const SimpleGraph g = BuildGP(GPParams(12, 5));
  const HomSearchResult a = FindHomomorphism(g, CompleteGraph(2));
  const HomSearchResult b = FindHomomorphism(g, CompleteGraph(2));
  ASSERT_EQ(a.status, SearchStatus::kFound);
  EXPECT_EQ(a.map, b.map);
  EXPECT_EQ(a.nodes, b.nodes);
}

TEST(ForEachHomomorphismTest, CountsAutomorphismsOfCycles) {
  HomConstraints injective;
  injective.injective = true;
  for (int len = 3; len <= 9; ++len) {
    int count = 0;
    const SearchStatus s = ForEachHomomorphism(
        CycleGraph(len), CycleGraph(len), injective, {},
        [&](const VertexMap&) {
          ++count;
          return true;
        });
    EXPECT_EQ(s, SearchStatus::kAbsent);
    EXPECT_EQ(count, 2 * len);
  }
}

TEST(ForEachHomomorphismTest, CountsColouringsOfC5) {
  // Proper 3-colourings of C5: (k-1)^n + (-1)^n (k-1) = 32 - 2.
  int count = 0;
  ForEachHomomorphism(CycleGraph(5), CompleteGraph(3), {}, {},
                      [&](const VertexMap&) {
                        ++count;
                        return true;
                      });
  EXPECT_EQ(count, 30);
}

TEST(ForEachHomomorphismTest, VisitorCanStopEarly) {
  int count = 0;
  const SearchStatus s = ForEachHomomorphism(
      CycleGraph(6), CycleGraph(6), {}, {}, [&](const VertexMap&) {
        return ++count < 4;
      });
  EXPECT_EQ(s, SearchStatus::kFound);
  EXPECT_EQ(count, 4);
}

TEST(ForEachHomomorphismTest, EndomorphismsComposeToEndomorphisms) {
  const SimpleGraph g = BuildGP(GPParams(6, 1));
  std::vector<VertexMap> endos;
  ForEachHomomorphism(g, g, {}, {}, [&](const VertexMap& f) {
    endos.push_back(f);
    return endos.size() < 200;
  });
  std::mt19937 rng(20261017);
  std::uniform_int_distribution<std::size_t> pick(0, endos.size() - 1);
  for (int trial = 0; trial < 500; ++trial) {
    const VertexMap& f = endos[pick(rng)];
    const VertexMap& h = endos[pick(rng)];
    EXPECT_TRUE(IsHomomorphism(g, g, Compose(f, h)));
  }
}

TEST(IsCoreOracleTest, SmallCases) {
  EXPECT_EQ(IsCoreOracle(CompleteGraph(3)).is_core, Verdict::kTrue);
  EXPECT_EQ(IsCoreOracle(CycleGraph(7)).is_core, Verdict::kTrue);
  EXPECT_EQ(IsCoreOracle(CycleGraph(6)).is_core, Verdict::kFalse);
  EXPECT_EQ(IsCoreOracle(BuildGP(GPParams(5, 2))).is_core, Verdict::kTrue);
}

TEST(IsCoreOracleTest, PrismWitnessMissesAVertex) {
  const SimpleGraph g = BuildGP(GPParams(6, 1));
  const CoreOracleResult r = IsCoreOracle(g);
  ASSERT_EQ(r.is_core, Verdict::kFalse);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(IsHomomorphism(g, g, *r.witness));
  EXPECT_EQ(r.avoided_vertex, 0);
  for (int x : r.witness->image) EXPECT_NE(x, r.avoided_vertex);
}

TEST(IsCoreOracleTest, ParallelMatchesSerialReference) {
  for (const GPParams& p : AllParams(11)) {
    const SimpleGraph g = BuildGP(p);
    const CoreOracleResult par = IsCoreOracle(g);
    const CoreOracleResult ser = reference::IsCoreOracle(g);
    EXPECT_EQ(par.is_core, ser.is_core) << p.n() << "," << p.k();
    EXPECT_EQ(par.avoided_vertex, ser.avoided_vertex) << p.n() << "," << p.k();
    EXPECT_EQ(par.witness, ser.witness) << p.n() << "," << p.k();
  }
}

TEST(IsCoreOracleTest, TinyBudgetIsInconclusive) {
  SearchBudget tiny;
  tiny.max_nodes = 2;
  EXPECT_EQ(IsCoreOracle(BuildGP(GPParams(5, 2)), tiny).is_core,
            Verdict::kInconclusive);
}

TEST(VerifyRetractionTest, Basics) {
  const SimpleGraph c6 = CycleGraph(6);
  EXPECT_TRUE(VerifyRetraction(c6, IdentityMap(6), {0, 1, 2, 3, 4, 5}));
  // Fold C6 onto the edge {0, 1}.
  EXPECT_TRUE(VerifyRetraction(c6, VertexMap{6, {0, 1, 0, 1, 0, 1}}, {0, 1}));
  // Edge-preserving but does not fix the target.
  EXPECT_FALSE(VerifyRetraction(c6, VertexMap{6, {1, 0, 1, 0, 1, 0}}, {0, 1}));
  // Not edge-preserving.
  EXPECT_FALSE(VerifyRetraction(c6, VertexMap{6, {0, 0, 0, 0, 0, 0}}, {0}));
  // Image escapes the target.
  EXPECT_FALSE(VerifyRetraction(c6, IdentityMap(6), {0, 1}));
}

TEST(IsEndoTransitiveOracleTest, KnownInstances) {
  EXPECT_EQ(IsEndoTransitiveOracle(BuildGP(GPParams(4, 1))).verdict,
            Verdict::kTrue);
  EXPECT_EQ(IsEndoTransitiveOracle(BuildGP(GPParams(5, 2))).verdict,
            Verdict::kTrue);
  const EndoTransitivityResult r =
      IsEndoTransitiveOracle(BuildGP(GPParams(15, 3)));
  EXPECT_EQ(r.verdict, Verdict::kFalse);
  ASSERT_TRUE(r.failing_pair.has_value());
  // The witness pair really has no endomorphism.
  HomConstraints c;
  c.fixed = {*r.failing_pair};
  const SimpleGraph g = BuildGP(GPParams(15, 3));
  EXPECT_EQ(FindHomomorphism(g, g, c).status, SearchStatus::kAbsent);
}

TEST(IsEndoTransitiveOracleTest, ParallelMatchesSerialReference) {
  for (const GPParams& p : AllParams(9)) {
    const SimpleGraph g = BuildGP(p);
    const EndoTransitivityResult par = IsEndoTransitiveOracle(g);
    const EndoTransitivityResult ser = reference::IsEndoTransitiveOracle(g);
    EXPECT_EQ(par.verdict, ser.verdict) << p.n() << "," << p.k();
    EXPECT_EQ(par.failing_pair, ser.failing_pair) << p.n() << "," << p.k();
  }
}

TEST(ImageIsRetractCheckTest, IdentityAndRetraction) {
  const SimpleGraph g = BuildGP(GPParams(15, 3));
  EXPECT_EQ(ImageIsRetractCheck(g, IdentityMap(30)), Verdict::kTrue);
  EXPECT_EQ(ImageIsRetractCheck(g, BuildRetraction(15, 3)), Verdict::kTrue);
}

TEST(ImageIsRetractCheckTest, MobiusKantorImageThatIsNotARetract) {
  // Found by enumerating End(G(8,3)): the image {u0, u1, u2, u7, v7} induces
  // the path v7 u7 u0 u1 u2, whose ends are at distance 2 in G(8,3) (via v2),
  // so no retraction onto it exists.
  const SimpleGraph g = BuildGP(GPParams(8, 3));
  const VertexMap f{16, {0, 1, 0, 1, 0, 1, 0, 7, 1, 0, 7, 2, 7, 0, 1, 15}};
  ASSERT_TRUE(IsHomomorphism(g, g, f));
  EXPECT_EQ(ImageOf(f), (std::vector<int>{0, 1, 2, 7, 15}));
  EXPECT_EQ(ImageIsRetractCheck(g, f), Verdict::kFalse);
}

TEST(ImageIsRetractCheckTest, RejectsNonEndomorphisms) {
  EXPECT_THROW(ImageIsRetractCheck(CycleGraph(5), VertexMap{5, {0, 0, 0, 0, 0}}),
               DomainError);
}

TEST(InvariantColouringTest, ConstantOnRotationOrbits) {
  const SimpleGraph g = BuildGP(GPParams(7, 2));
  const auto [a, b] = InvariantColouring(g, g);
  EXPECT_EQ(a, b);
  for (int i = 0; i < 7; ++i) {
    EXPECT_EQ(a[i], a[0]);
    EXPECT_EQ(a[7 + i], a[7]);
  }
}

TEST(SearchBudgetTest, EnvironmentOverride) {
  ::setenv("GP_ORACLE_BUDGET", "12345", 1);
  EXPECT_EQ(SearchBudget::FromEnvironment().max_nodes, 12345u);
  ::unsetenv("GP_ORACLE_BUDGET");
  EXPECT_EQ(SearchBudget::FromEnvironment().max_nodes,
            SearchBudget::kDefaultMaxNodes);
}

}  // namespace
}  // namespace gpetersen
