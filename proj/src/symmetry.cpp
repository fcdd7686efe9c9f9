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

#include "gpetersen/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gpetersen {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> hit(image_.size(), 0);
  for (int x : image_) {
    if (x < 0 || x >= size() || hit[x]) {
      throw DomainError("permutation image is not a bijection");
    }
    hit[x] = 1;
  }
}

Permutation Permutation::Identity(int size) {
  std::vector<int> image(size);
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::FromVertexMap(const VertexMap& map) {
  if (map.codomain_size != map.domain_size()) {
    throw DomainError("permutation needs equal domain and codomain");
  }
  return Permutation(map.image);
}

VertexMap Permutation::ToVertexMap() const { return VertexMap{size(), image_}; }

Permutation Permutation::operator*(const Permutation& other) const {
  if (size() != other.size()) throw DomainError("permutation size mismatch");
  std::vector<int> image(size());
  for (int v = 0; v < size(); ++v) image[v] = image_[other.image_[v]];
  return Permutation(std::move(image));
}

Permutation Permutation::Inverse() const {
  std::vector<int> image(size());
  for (int v = 0; v < size(); ++v) image[image_[v]] = v;
  return Permutation(std::move(image));
}

int Permutation::Order() const {
  // lcm of cycle lengths
  long long order = 1;
  std::vector<char> seen(size(), 0);
  for (int v = 0; v < size(); ++v) {
    if (seen[v]) continue;
    long long len = 0;
    for (int w = v; !seen[w]; w = image_[w]) {
      seen[w] = 1;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return static_cast<int>(order);
}

Permutation Rotation(const GPParams& params) {
  const int n = params.n();
  std::vector<int> image(2 * n);
  for (int i = 0; i < n; ++i) {
    image[OuterId(n, i)] = OuterId(n, i + 1);
    image[InnerId(n, i)] = InnerId(n, i + 1);
  }
  return Permutation(std::move(image));
}

Permutation Reflection(const GPParams& params) {
  const int n = params.n();
  std::vector<int> image(2 * n);
  for (int i = 0; i < n; ++i) {
    image[OuterId(n, i)] = OuterId(n, -i);
    image[InnerId(n, i)] = InnerId(n, -i);
  }
  return Permutation(std::move(image));
}

VertexMap InsideOut(const GPParams& params) {
  const int n = params.n();
  const long long k = params.k();
  VertexMap f{2 * n, std::vector<int>(2 * n)};
  for (int i = 0; i < n; ++i) {
    f.image[OuterId(n, i)] = InnerId(n, Mod(k * i, n));
    f.image[InnerId(n, i)] = OuterId(n, Mod(k * i, n));
  }
  return f;
}

bool IsAutomorphism(const SimpleGraph& graph, const VertexMap& map) {
  return IsIsomorphism(graph, graph, map);
}

bool IsVertexTransitive(int n, int k) {
  const int sq = Mod(static_cast<long long>(k) * k, n);
  return sq == Mod(1, n) || sq == Mod(-1, n) || (n == 10 && k == 2);
}

bool IsExceptionalAutPair(int n, int k) {
  static constexpr std::pair<int, int> kPairs[] = {
      {4, 1}, {5, 2}, {8, 3}, {10, 2}, {10, 3}, {12, 5}, {24, 5}};
  return std::find(std::begin(kPairs), std::end(kPairs), std::pair{n, k}) !=
         std::end(kPairs);
}

std::optional<long long> ExpectedAutOrder(int n, int k) {
  if (IsExceptionalAutPair(n, k)) return std::nullopt;
  const int sq = Mod(static_cast<long long>(k) * k, n);
  const bool pm1 = sq == Mod(1, n) || sq == Mod(-1, n);
  return pm1 ? 4LL * n : 2LL * n;
}

AutGroupResult AutGroupBruteforce(const SimpleGraph& graph,
                                  const SearchBudget& budget,
                                  int max_vertices) {
  if (graph.num_vertices() > max_vertices) {
    throw DomainError("automorphism enumeration refuses graphs above the limit");
  }
  auto [colours, same] = InvariantColouring(graph, graph);
  HomConstraints constraints;
  constraints.injective = true;
  constraints.induced = true;
  constraints.domain_colours = colours;
  constraints.codomain_colours = std::move(same);
  AutGroupResult result;
  result.status = ForEachHomomorphism(
      graph, graph, constraints, budget, [&](const VertexMap& map) {
        result.elements.push_back(Permutation::FromVertexMap(map));
        return true;
      });
  std::sort(result.elements.begin(), result.elements.end());
  return result;
}

bool IsGroup(const std::vector<Permutation>& elements) {
  if (elements.empty()) return false;
  const std::set<Permutation> set(elements.begin(), elements.end());
  if (!set.count(Permutation::Identity(elements.front().size()))) return false;
  for (const Permutation& p : set) {
    if (!set.count(p.Inverse())) return false;
    for (const Permutation& q : set) {
      if (!set.count(p * q)) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> Orbits(
    int size, const std::vector<Permutation>& generators) {
  std::vector<int> parent(size);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Permutation& g : generators) {
    if (g.size() != size) throw DomainError("generator size mismatch");
    for (int v = 0; v < size; ++v) {
      const int a = find(v), b = find(g(v));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<int>> orbits;
  std::vector<int> slot(size, -1);
  for (int v = 0; v < size; ++v) {
    const int root = find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(orbits.size());
      orbits.emplace_back();
    }
    orbits[slot[root]].push_back(v);
  }
  return orbits;
}

bool IsColorEndomorphism(const CayleyDigraph& digraph, const VertexMap& f) {
  if (f.domain_size() != digraph.size() || f.codomain_size != digraph.size()) {
    return false;
  }
  const int colours = static_cast<int>(digraph.connection().size());
  for (int m = 0; m < digraph.size(); ++m) {
    for (int c = 0; c < colours; ++c) {
      if (f(digraph.target(m, c)) != digraph.target(f(m), c)) return false;
    }
  }
  return true;
}

VertexMap LeftMultiplication(const OpTable& table, int m) {
  if (m < 0 || m >= table.order()) throw DomainError("element out of range");
  VertexMap f{table.order(), std::vector<int>(table.order())};
  for (int x = 0; x < table.order(); ++x) f.image[x] = table(m, x);
  return f;
}

}  // namespace gpetersen
