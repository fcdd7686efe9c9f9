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

#ifndef GPETERSEN_SIMPLE_GRAPH_HPP_
#define GPETERSEN_SIMPLE_GRAPH_HPP_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gpetersen {

// Raised when an operation is invoked outside the domain it is defined on
// (bad parameters, wrong graph class, unmet algebraic precondition).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<int, int>;

// Undirected loop-free graph on vertices 0..n-1 with sorted, symmetric
// adjacency lists. Parallel edges are collapsed on insertion.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int num_vertices);

  // Adds {u, v}. Throws DomainError on loops or out-of-range ids. Returns
  // false if the edge was already present.
  bool AddEdge(int u, int v);

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  int num_edges() const { return num_edges_; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  bool HasEdge(int u, int v) const;

  // Edges {a, b} with a < b, sorted lexicographically.
  std::vector<Edge> Edges() const;

  void set_label(int v, std::string label) { labels_[v] = std::move(label); }
  // Empty string when no label was set.
  const std::string& label(int v) const { return labels_[v]; }

  bool operator==(const SimpleGraph& other) const {
    return adjacency_ == other.adjacency_;
  }

 private:
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::string> labels_;
  int num_edges_ = 0;
};

SimpleGraph CycleGraph(int length);
SimpleGraph CompleteGraph(int order);

// Two-colouring by BFS; works per connected component.
bool IsBipartite(const SimpleGraph& graph);

// Disjoint union, second graph's ids shifted by the first's vertex count.
SimpleGraph DisjointUnion(const SimpleGraph& a, const SimpleGraph& b);

// Total map between vertex sets; image[v] is the image of domain vertex v.
struct VertexMap {
  int codomain_size = 0;
  std::vector<int> image;

  int domain_size() const { return static_cast<int>(image.size()); }
  int operator()(int v) const { return image[v]; }
  bool operator==(const VertexMap&) const = default;
};

VertexMap IdentityMap(int size);

// (outer ∘ inner)(v) = outer(inner(v)).
VertexMap Compose(const VertexMap& outer, const VertexMap& inner);

// Edge-preserving check: every edge of `from` maps onto an edge of `to`.
bool IsHomomorphism(const SimpleGraph& from, const SimpleGraph& to,
                    const VertexMap& map);

bool IsBijective(const VertexMap& map);

// Bijective, and edges and non-edges are both preserved.
bool IsIsomorphism(const SimpleGraph& from, const SimpleGraph& to,
                   const VertexMap& map);

// Sorted, duplicate-free image of the map.
std::vector<int> ImageOf(const VertexMap& map);

}  // namespace gpetersen

#endif  // GPETERSEN_SIMPLE_GRAPH_HPP_
