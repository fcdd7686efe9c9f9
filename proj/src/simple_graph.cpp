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

#include "gpetersen/simple_graph.hpp"

#include <algorithm>
#include <queue>

namespace gpetersen {

SimpleGraph::SimpleGraph(int num_vertices) {
  if (num_vertices < 0) throw DomainError("negative vertex count");
  adjacency_.resize(num_vertices);
  labels_.resize(num_vertices);
}

bool SimpleGraph::AddEdge(int u, int v) {
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) {
    throw DomainError("edge endpoint out of range");
  }
  if (u == v) throw DomainError("loops are not allowed in a SimpleGraph");
  auto& nu = adjacency_[u];
  const auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return false;
  nu.insert(it, v);
  auto& nv = adjacency_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++num_edges_;
  return true;
}

bool SimpleGraph::HasEdge(int u, int v) const {
  const auto& nu = adjacency_[u];
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> SimpleGraph::Edges() const {
  std::vector<Edge> edges;
  edges.reserve(num_edges_);
  for (int u = 0; u < num_vertices(); ++u) {
    for (const int v : adjacency_[u]) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

SimpleGraph CycleGraph(int length) {
  if (length < 3) throw DomainError("a cycle needs at least 3 vertices");
  SimpleGraph g(length);
  for (int i = 0; i < length; ++i) g.AddEdge(i, (i + 1) % length);
  return g;
}

SimpleGraph CompleteGraph(int order) {
  SimpleGraph g(order);
  for (int i = 0; i < order; ++i) {
    for (int j = i + 1; j < order; ++j) g.AddEdge(i, j);
  }
  return g;
}

bool IsBipartite(const SimpleGraph& graph) {
  const int n = graph.num_vertices();
  std::vector<int> colour(n, -1);
  std::queue<int> queue;
  for (int s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop();
      for (const int y : graph.neighbors(x)) {
        if (colour[y] == -1) {
          colour[y] = 1 - colour[x];
          queue.push(y);
        } else if (colour[y] == colour[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

SimpleGraph DisjointUnion(const SimpleGraph& a, const SimpleGraph& b) {
  const int offset = a.num_vertices();
  SimpleGraph g(offset + b.num_vertices());
  for (const auto& [u, v] : a.Edges()) g.AddEdge(u, v);
  for (const auto& [u, v] : b.Edges()) g.AddEdge(u + offset, v + offset);
  return g;
}

VertexMap IdentityMap(int size) {
  VertexMap map{size, std::vector<int>(size)};
  for (int i = 0; i < size; ++i) map.image[i] = i;
  return map;
}

VertexMap Compose(const VertexMap& outer, const VertexMap& inner) {
  if (inner.codomain_size != outer.domain_size()) {
    throw DomainError("composition of incompatible vertex maps");
  }
  VertexMap out{outer.codomain_size, std::vector<int>(inner.image.size())};
  for (std::size_t v = 0; v < inner.image.size(); ++v) {
    out.image[v] = outer.image[inner.image[v]];
  }
  return out;
}

bool IsHomomorphism(const SimpleGraph& from, const SimpleGraph& to,
                    const VertexMap& map) {
  if (map.domain_size() != from.num_vertices()) return false;
  for (const int x : map.image) {
    if (x < 0 || x >= to.num_vertices()) return false;
  }
  for (const auto& [u, v] : from.Edges()) {
    if (!to.HasEdge(map(u), map(v))) return false;
  }
  return true;
}

bool IsBijective(const VertexMap& map) {
  if (map.domain_size() != map.codomain_size) return false;
  std::vector<char> seen(map.codomain_size, 0);
  for (const int x : map.image) {
    if (x < 0 || x >= map.codomain_size || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

bool IsIsomorphism(const SimpleGraph& from, const SimpleGraph& to,
                   const VertexMap& map) {
  return from.num_vertices() == to.num_vertices() &&
         from.num_edges() == to.num_edges() && IsBijective(map) &&
         IsHomomorphism(from, to, map);
}

std::vector<int> ImageOf(const VertexMap& map) {
  std::vector<int> image = map.image;
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return image;
}

}  // namespace gpetersen
