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

#include "gpetersen/core_classifier.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "gtest/gtest.h"
#include "gpetersen/gp_core.hpp"
#include "gpetersen/hom_engine.hpp"

namespace gpetersen {
namespace {

// Every a in (0, n/d) with a*k = d (mod n), by scanning.
std::vector<int> WitnessesByScan(int n, int k) {
  const int d = std::gcd(n, k);
  std::vector<int> out;
  for (int a = 1; a < n / d; ++a) {
    if (static_cast<long long>(a) * k % n == d) out.push_back(a);
  }
  return out;
}

TEST(ComputeATest, MatchesExhaustiveScanAndIsUnique) {
  for (const GPParams& p : AllParams(80)) {
    const std::vector<int> scan = WitnessesByScan(p.n(), p.k());
    ASSERT_EQ(scan.size(), 1u) << p.n() << "," << p.k();
    EXPECT_EQ(ComputeA(p.n(), p.k()), scan[0]) << p.n() << "," << p.k();
  }
}

TEST(ComputeATest, KnownValues) {
  EXPECT_EQ(ComputeA(15, 3), 1);
  EXPECT_EQ(ComputeA(15, 6), 3);
  EXPECT_EQ(ComputeA(10, 4), 3);
  const CoreParams cp = ComputeCoreParams(GPParams(15, 6));
  EXPECT_EQ(cp.d, 3);
  EXPECT_EQ(cp.a, 3);
  EXPECT_EQ(cp.g_inner, 5);
}

TEST(ClassifyCoreTest, Examples) {
  const CoreVerdict dodecahedron = ClassifyCore(10, 2);
  EXPECT_EQ(dodecahedron.status, CoreStatus::kCore);
  EXPECT_EQ(dodecahedron.reason, CoreReason::kC3);
  EXPECT_EQ(dodecahedron.d, 2);
  EXPECT_EQ(dodecahedron.a, 1);

  const CoreVerdict v15_3 = ClassifyCore(15, 3);
  EXPECT_EQ(v15_3.status, CoreStatus::kNotCore);
  EXPECT_EQ(v15_3.not_core_case, NotCoreCase::kAEvenSmall);

  EXPECT_EQ(ClassifyCore(7, 1).status, CoreStatus::kNotCore);

  const CoreVerdict v16_6 = ClassifyCore(16, 6);
  EXPECT_EQ(v16_6.status, CoreStatus::kCore);
  EXPECT_EQ(v16_6.reason, CoreReason::kC1);

  EXPECT_EQ(ClassifyCore(8, 3).status, CoreStatus::kBipartite);
  EXPECT_EQ(ClassifyCore(5, 2).reason, CoreReason::kC2);
  EXPECT_EQ(ClassifyCore(10, 4).not_core_case, NotCoreCase::kAOddLarge);
}

TEST(ClassifyCoreTest, VerdictFieldsAreConsistent) {
  for (const GPParams& p : AllParams(60)) {
    const CoreVerdict v = ClassifyCore(p.n(), p.k());
    const int g = p.inner_len(), a = v.a, d = v.d;
    ASSERT_EQ(d, p.d());
    ASSERT_EQ(v.reason.has_value(), v.status == CoreStatus::kCore);
    ASSERT_EQ(v.not_core_case.has_value(), v.status == CoreStatus::kNotCore);
    if (v.status == CoreStatus::kBipartite) {
      EXPECT_TRUE(p.n() % 2 == 0 && p.k() % 2 == 1);
      continue;
    }
    if (v.reason == CoreReason::kC1) {
      EXPECT_EQ(g % 2, 0);
    }
    if (v.reason == CoreReason::kC2) {
      EXPECT_TRUE(g % 2 == 1 && (a + d) % 2 == 0 && a >= d + 2);
    }
    if (v.reason == CoreReason::kC3) {
      EXPECT_TRUE(g % 2 == 1 && (a + d) % 2 == 1 && a + d + 2 <= g);
    }
    if (v.not_core_case == NotCoreCase::kAEvenSmall) {
      EXPECT_TRUE(g % 2 == 1 && (a + d) % 2 == 0 && a <= d);
    }
    if (v.not_core_case == NotCoreCase::kAOddLarge) {
      EXPECT_TRUE(g % 2 == 1 && (a + d) % 2 == 1 && a + d >= g);
    }
  }
}

TEST(ClassifyCoreTest, AgreesWithOracleUpTo12) {
  for (const GPParams& p : AllParams(12)) {
    if (IsBipartiteGP(p)) continue;
    const Verdict oracle = IsCoreOracle(BuildGP(p)).is_core;
    ASSERT_NE(oracle, Verdict::kInconclusive);
    EXPECT_EQ(ClassifyCore(p.n(), p.k()).is_core(), oracle == Verdict::kTrue)
        << p.n() << "," << p.k();
  }
}

TEST(ClassifyCoreTest, CoprimeInstancesAreCoresExceptPrisms) {
  for (const GPParams& p : AllParams(40)) {
    if (p.d() != 1) continue;
    const bool expected = !IsBipartiteGP(p) && p.k() != 1;
    EXPECT_EQ(ClassifyCore(p.n(), p.k()).is_core(), expected)
        << p.n() << "," << p.k();
  }
}

TEST(HasSpokedMinOddCycleTest, Examples) {
  EXPECT_TRUE(HasSpokedMinOddCycle(10, 2));
  EXPECT_FALSE(HasSpokedMinOddCycle(15, 3));
  EXPECT_TRUE(HasSpokedMinOddCycle(5, 2));
  EXPECT_THROW(HasSpokedMinOddCycle(8, 3), DomainError);
}

TEST(BuildRetractionTest, HandComputedValuesFor15_3) {
  const VertexMap f = BuildRetraction(15, 3);
  EXPECT_EQ(f(OuterId(15, 0)), InnerId(15, 3));
  EXPECT_EQ(f(OuterId(15, 1)), InnerId(15, 6));
  EXPECT_EQ(f(OuterId(15, 2)), InnerId(15, 3));
  EXPECT_EQ(f(InnerId(15, 0)), InnerId(15, 0));
  EXPECT_EQ(ImageOf(f), (std::vector<int>{15, 18, 21, 24, 27}));
  EXPECT_TRUE(VerifyRetraction(BuildGP(GPParams(15, 3)), f,
                               InnerCycleThroughV0(GPParams(15, 3))));
}

TEST(BuildRetractionTest, ReflectedCaseFor10_4) {
  const VertexMap f = BuildRetraction(10, 4);
  const std::vector<int> cycle = InnerCycleThroughV0(GPParams(10, 4));
  EXPECT_EQ(cycle, (std::vector<int>{InnerId(10, 0), InnerId(10, 4),
                                     InnerId(10, 8), InnerId(10, 2),
                                     InnerId(10, 6)}));
  EXPECT_TRUE(VerifyRetraction(BuildGP(GPParams(10, 4)), f, cycle));
  std::vector<int> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(ImageOf(f), sorted);
}

TEST(BuildRetractionTest, EveryNonCoreInstanceUpTo40) {
  int checked = 0;
  for (const GPParams& p : AllParams(40)) {
    if (ClassifyCore(p.n(), p.k()).status != CoreStatus::kNotCore) continue;
    ++checked;
    const VertexMap f = BuildRetraction(p.n(), p.k());
    std::vector<int> cycle = InnerCycleThroughV0(p);
    ASSERT_EQ(static_cast<int>(cycle.size()), p.inner_len());
    ASSERT_TRUE(VerifyRetraction(BuildGP(p), f, cycle)) << p.n() << "," << p.k();
    std::sort(cycle.begin(), cycle.end());
    EXPECT_EQ(ImageOf(f), cycle);
  }
  EXPECT_EQ(checked, 65);
}

TEST(BuildRetractionTest, RejectsCoresAndBipartite) {
  EXPECT_THROW(BuildRetraction(5, 2), DomainError);
  EXPECT_THROW(BuildRetraction(8, 3), DomainError);
}

TEST(PrismEndomorphismTest, TriangularPrism) {
  const VertexMap phi = PrismEndomorphism(3, 1);
  // u_i -> u_i, v_i -> u_{i+1}.
  EXPECT_EQ(phi.image, (std::vector<int>{0, 1, 2, 1, 2, 0}));
  EXPECT_TRUE(IsHomomorphism(BuildGP(GPParams(3, 1)), BuildGP(GPParams(3, 1)),
                             phi));
}

TEST(PrismEndomorphismTest, GeneralizedPrisms) {
  for (int ell = 3; ell <= 9; ++ell) {
    for (int m = 1; m <= 4; ++m) {
      const SimpleGraph g = BuildGeneralizedPrism(ell, m);
      const VertexMap phi = PrismEndomorphism(ell, m);
      ASSERT_TRUE(IsHomomorphism(g, g, phi)) << ell << "," << m;
      EXPECT_EQ(static_cast<int>(ImageOf(phi).size()), ell);
      EXPECT_TRUE(IsHomomorphism(g, g, Compose(phi, phi)));
    }
  }
  EXPECT_THROW(PrismEndomorphism(2, 1), DomainError);
}

TEST(IsEndomorphismTransitiveTest, Examples) {
  EXPECT_TRUE(IsEndomorphismTransitive(8, 3));
  EXPECT_TRUE(IsEndomorphismTransitive(10, 2));
  EXPECT_FALSE(IsEndomorphismTransitive(15, 3));
}

TEST(WitnessCycleTest, ExistAndVerifyExactlyUnderTheirCondition) {
  for (const GPParams& p : AllParams(40)) {
    const int n = p.n(), k = p.k();
    const CoreVerdict v = ClassifyCore(n, k);
    const SimpleGraph g = BuildGP(p);
    const auto c2 = C2WitnessCycle(n, k);
    const auto c3 = C3WitnessCycle(n, k);
    EXPECT_EQ(c2.has_value(), v.reason == CoreReason::kC2) << n << "," << k;
    EXPECT_EQ(c3.has_value(), v.reason == CoreReason::kC3) << n << "," << k;
    if (c2) {
      EXPECT_TRUE(IsCycleIn(g, c2->vertices)) << n << "," << k;
      EXPECT_EQ(c2->length, p.inner_len() - v.a + v.d + 2);
      EXPECT_LE(c2->length, p.inner_len());
      EXPECT_EQ(c2->length % 2, 1);
      EXPECT_GT(c2->spoke_count, 0);
    }
    if (c3) {
      EXPECT_TRUE(IsCycleIn(g, c3->vertices)) << n << "," << k;
      EXPECT_EQ(c3->length, v.a + v.d + 2);
      EXPECT_LE(c3->length, p.inner_len());
      EXPECT_EQ(c3->length % 2, 1);
      EXPECT_GT(c3->spoke_count, 0);
    }
  }
}

}  // namespace
}  // namespace gpetersen
