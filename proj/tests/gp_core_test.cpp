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

#include "gpetersen/gp_core.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "gpetersen/simple_graph.hpp"

namespace gpetersen {
namespace {

TEST(SimpleGraphTest, RejectsLoopsAndCollapsesParallelEdges) {
  SimpleGraph g(3);
  EXPECT_TRUE(g.AddEdge(0, 1));
  EXPECT_FALSE(g.AddEdge(1, 0));
  EXPECT_THROW(g.AddEdge(2, 2), DomainError);
  EXPECT_THROW(g.AddEdge(0, 3), DomainError);
  EXPECT_EQ(g.num_edges(), 1);
  EXPECT_TRUE(g.HasEdge(1, 0));
  EXPECT_FALSE(g.HasEdge(1, 2));
}

TEST(SimpleGraphTest, EdgesAreSortedPairs) {
  SimpleGraph g(4);
  g.AddEdge(3, 1);
  g.AddEdge(2, 0);
  g.AddEdge(1, 0);
  EXPECT_EQ(g.Edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}}));
}

TEST(SimpleGraphTest, BipartitenessOfSmallGraphs) {
  EXPECT_TRUE(IsBipartite(CycleGraph(6)));
  EXPECT_FALSE(IsBipartite(CycleGraph(5)));
  EXPECT_FALSE(IsBipartite(CompleteGraph(3)));
  EXPECT_TRUE(IsBipartite(DisjointUnion(CycleGraph(4), CycleGraph(8))));
  EXPECT_FALSE(IsBipartite(DisjointUnion(CycleGraph(4), CycleGraph(7))));
}

TEST(SimpleGraphTest, MapHelpers) {
  const SimpleGraph c6 = CycleGraph(6);
  VertexMap rot{6, {1, 2, 3, 4, 5, 0}};
  EXPECT_TRUE(IsIsomorphism(c6, c6, rot));
  EXPECT_EQ(Compose(rot, rot).image, (std::vector<int>{2, 3, 4, 5, 0, 1}));
  VertexMap fold{2, {0, 1, 0, 1, 0, 1}};
  EXPECT_TRUE(IsHomomorphism(c6, CompleteGraph(2), fold));
  EXPECT_FALSE(IsBijective(fold));
  EXPECT_EQ(ImageOf(fold), (std::vector<int>{0, 1}));
  VertexMap collapse{6, {0, 0, 1, 2, 3, 4}};
  EXPECT_FALSE(IsHomomorphism(c6, c6, collapse));
}

TEST(GPParamsTest, Window) {
  EXPECT_NO_THROW(GPParams(3, 1));
  EXPECT_NO_THROW(GPParams(4, 1));
  EXPECT_THROW(GPParams(2, 1), DomainError);
  EXPECT_THROW(GPParams(4, 2), DomainError);
  EXPECT_THROW(GPParams(7, 0), DomainError);
  EXPECT_THROW(GPParams(7, 4), DomainError);
  const GPParams p(15, 6);
  EXPECT_EQ(p.d(), 3);
  EXPECT_EQ(p.inner_len(), 5);
}

TEST(GPParamsTest, AllParamsEnumeratesTheWindowInOrder) {
  const std::vector<GPParams> all = AllParams(8);
  std::vector<std::pair<int, int>> got;
  for (const GPParams& p : all) got.emplace_back(p.n(), p.k());
  const std::vector<std::pair<int, int>> want = {
      {3, 1}, {4, 1}, {5, 1}, {5, 2}, {6, 1}, {6, 2},
      {7, 1}, {7, 2}, {7, 3}, {8, 1}, {8, 2}, {8, 3}};
  EXPECT_EQ(got, want);
}

TEST(BuildGPTest, PetersenGraph) {
  const SimpleGraph g = BuildGP(GPParams(5, 2));
  EXPECT_EQ(g.num_vertices(), 10);
  EXPECT_EQ(g.num_edges(), 15);
  EXPECT_TRUE(g.HasEdge(OuterId(5, 4), OuterId(5, 0)));
  EXPECT_TRUE(g.HasEdge(InnerId(5, 0), InnerId(5, 2)));
  EXPECT_TRUE(g.HasEdge(InnerId(5, 4), InnerId(5, 1)));
  EXPECT_TRUE(g.HasEdge(OuterId(5, 3), InnerId(5, 3)));
  EXPECT_EQ(g.label(0), "u0");
  EXPECT_EQ(g.label(7), "v2");
  EXPECT_EQ(GPLabel(5, 9), "v4");
  EXPECT_EQ(ToGPVertex(5, 6), (GPVertex{Side::kInner, 1}));
}

TEST(BuildGPTest, EveryInstanceIsCubicWith3nEdges) {
  for (const GPParams& p : AllParams(30)) {
    const SimpleGraph g = BuildGP(p);
    ASSERT_EQ(g.num_edges(), 3 * p.n()) << p.n() << "," << p.k();
    for (int v = 0; v < g.num_vertices(); ++v) {
      ASSERT_EQ(g.degree(v), 3) << p.n() << "," << p.k() << " v=" << v;
    }
  }
}

TEST(BuildGPTest, BipartiteExactlyForEvenNOddK) {
  for (const GPParams& p : AllParams(30)) {
    const bool expected = p.n() % 2 == 0 && p.k() % 2 == 1;
    EXPECT_EQ(IsBipartiteGP(p), expected) << p.n() << "," << p.k();
    EXPECT_EQ(IsBipartite(BuildGP(p)), expected) << p.n() << "," << p.k();
  }
}

// Union-find over the inner edges v_i v_{i+k}, straight from the definition.
std::vector<int> InnerComponentsByUnionFind(int n, int k) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (int i = 0; i < n; ++i) parent[find(i)] = find((i + k) % n);
  std::map<int, int> sizes;
  for (int i = 0; i < n; ++i) ++sizes[find(i)];
  std::vector<int> out;
  for (const auto& [root, size] : sizes) out.push_back(size);
  std::sort(out.begin(), out.end());
  return out;
}

TEST(InnerComponentsTest, MatchesUnionFindOracle) {
  for (const GPParams& p : AllParams(40)) {
    std::vector<int> got = InnerComponentSizes(p);
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, InnerComponentsByUnionFind(p.n(), p.k()))
        << p.n() << "," << p.k();
    EXPECT_EQ(static_cast<int>(got.size()), p.d());
  }
}

// Shortest odd closed walk via boolean adjacency powers; a shortest odd
// closed walk is always a cycle, so this is the odd girth.
std::optional<int> OddGirthByWalks(const SimpleGraph& g) {
  const int m = g.num_vertices();
  using Matrix = std::vector<std::vector<char>>;
  Matrix adj(m, std::vector<char>(m, 0));
  for (const auto& [a, b] : g.Edges()) adj[a][b] = adj[b][a] = 1;
  auto times = [&](const Matrix& x, const Matrix& y) {
    Matrix z(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i) {
      for (int l = 0; l < m; ++l) {
        if (!x[i][l]) continue;
        for (int j = 0; j < m; ++j) z[i][j] |= y[l][j];
      }
    }
    return z;
  };
  const Matrix square = times(adj, adj);
  Matrix power = adj;
  for (int len = 1; len <= m; len += 2) {
    for (int i = 0; i < m; ++i) {
      if (power[i][i]) return len;
    }
    power = times(power, square);
  }
  return std::nullopt;
}

TEST(OddGirthTest, MatchesWalkOracle) {
  for (const GPParams& p : AllParams(20)) {
    EXPECT_EQ(OddGirth(BuildGP(p)), OddGirthByWalks(BuildGP(p)))
        << p.n() << "," << p.k();
  }
}

TEST(OddGirthTest, KnownValues) {
  EXPECT_EQ(OddGirth(BuildGP(GPParams(5, 2))), 5);
  EXPECT_EQ(OddGirth(BuildGP(GPParams(15, 3))), 5);
  EXPECT_EQ(OddGirth(BuildGP(GPParams(3, 1))), 3);
  EXPECT_EQ(OddGirth(BuildGP(GPParams(8, 3))), std::nullopt);
  EXPECT_EQ(OddGirth(CycleGraph(9)), 9);
}

// Plain DFS over all simple paths, no distance pruning; each cycle is
// canonicalized as a rotation/reflection-minimal vertex sequence.
std::set<std::vector<int>> CyclesOfLength(const SimpleGraph& g, int len) {
  std::set<std::vector<int>> out;
  std::vector<int> path;
  std::vector<char> on(g.num_vertices(), 0);
  auto canonical = [](std::vector<int> c) {
    std::vector<int> best;
    for (int dir = 0; dir < 2; ++dir) {
      for (std::size_t r = 0; r < c.size(); ++r) {
        std::vector<int> rot(c.begin() + r, c.end());
        rot.insert(rot.end(), c.begin(), c.begin() + r);
        if (best.empty() || rot < best) best = rot;
      }
      std::reverse(c.begin(), c.end());
    }
    return best;
  };
  std::function<void(int)> dfs = [&](int v) {
    if (static_cast<int>(path.size()) == len) {
      if (g.HasEdge(v, path.front())) out.insert(canonical(path));
      return;
    }
    for (int w : g.neighbors(v)) {
      if (on[w]) continue;
      on[w] = 1;
      path.push_back(w);
      dfs(w);
      path.pop_back();
      on[w] = 0;
    }
  };
  for (int s = 0; s < g.num_vertices(); ++s) {
    on[s] = 1;
    path = {s};
    dfs(s);
    on[s] = 0;
  }
  return out;
}

std::set<std::vector<int>> WitnessSet(const GPParams& p) {
  std::set<std::vector<int>> out;
  for (const CycleWitness& w : MinOddCycleWitnesses(p)) out.insert(w.vertices);
  return out;
}

TEST(MinOddCycleWitnessesTest, MatchesPlainEnumerationOn15_3) {
  const GPParams p(15, 3);
  const std::set<std::vector<int>> expected =
      CyclesOfLength(BuildGP(p), *OddGirth(BuildGP(p)));
  EXPECT_EQ(WitnessSet(p), expected);
  // Only the three inner 5-cycles are shortest; none uses a spoke.
  EXPECT_EQ(expected.size(), 3u);
  for (const CycleWitness& w : MinOddCycleWitnesses(p)) {
    EXPECT_EQ(w.spoke_count, 0);
    EXPECT_TRUE(w.uses_inner);
    EXPECT_FALSE(w.uses_outer);
  }
}

TEST(MinOddCycleWitnessesTest, MatchesPlainEnumerationUpTo16) {
  for (const GPParams& p : AllParams(16)) {
    if (IsBipartiteGP(p)) continue;
    const SimpleGraph g = BuildGP(p);
    EXPECT_EQ(WitnessSet(p), CyclesOfLength(g, *OddGirth(g)))
        << p.n() << "," << p.k();
  }
}

TEST(MinOddCycleWitnessesTest, AnnotationsAreConsistent) {
  for (const GPParams& p : AllParams(20)) {
    if (IsBipartiteGP(p)) continue;
    const SimpleGraph g = BuildGP(p);
    for (const CycleWitness& w : MinOddCycleWitnesses(p)) {
      ASSERT_TRUE(IsCycleIn(g, w.vertices));
      ASSERT_EQ(w.length, static_cast<int>(w.vertices.size()));
      ASSERT_EQ(w.length, *OddGirth(g));
      ASSERT_EQ(w.spoke_count % 2, 0) << "a cycle crosses the spokes evenly";
      ASSERT_EQ(w.spoke_count > 0, w.uses_inner && w.uses_outer);
    }
  }
}

TEST(MinOddCycleWitnessesTest, RejectsBipartiteAndOversizedInput) {
  EXPECT_THROW(MinOddCycleWitnesses(GPParams(8, 3)), DomainError);
  EXPECT_THROW(MinOddCycleWitnesses(GPParams(33, 2)), DomainError);
  EXPECT_NO_THROW(MinOddCycleWitnesses(GPParams(33, 2), 33));
}

TEST(AnnotateCycleTest, CountsSpokes) {
  // u0 u1 v1 v0 in the 6-prism.
  const CycleWitness w = AnnotateCycle(6, {0, 1, 7, 6});
  EXPECT_EQ(w.length, 4);
  EXPECT_EQ(w.spoke_count, 2);
  EXPECT_TRUE(w.uses_inner);
  EXPECT_TRUE(w.uses_outer);
}

TEST(KroneckerCoverTest, DoublesVerticesAndEdgesAndIsBipartite) {
  const SimpleGraph petersen = BuildGP(GPParams(5, 2));
  const SimpleGraph cover = KroneckerCover(petersen);
  EXPECT_EQ(cover.num_vertices(), 20);
  EXPECT_EQ(cover.num_edges(), 30);
  EXPECT_TRUE(IsBipartite(cover));
  EXPECT_TRUE(cover.HasEdge(2 * 0 + 0, 2 * 1 + 1));
  EXPECT_FALSE(cover.HasEdge(2 * 0 + 0, 2 * 1 + 0));
}

TEST(GeneralizedPrismTest, OneLayerIsThePrism) {
  for (int ell = 3; ell <= 9; ++ell) {
    EXPECT_EQ(BuildGeneralizedPrism(ell, 1), BuildGP(GPParams(ell, 1)));
  }
  const SimpleGraph g = BuildGeneralizedPrism(5, 3);
  EXPECT_EQ(g.num_vertices(), 20);
  EXPECT_EQ(g.num_edges(), 5 + 5 + 5 * 3);
}

}  // namespace
}  // namespace gpetersen
