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
#include <numeric>
#include <queue>

namespace gpetersen {

GPParams::GPParams(int n, int k) : n_(n), k_(k), d_(0) {
  if (!IsValid(n, k)) {
    throw DomainError("G(" + std::to_string(n) + "," + std::to_string(k) +
                      ") requires n >= 3 and 0 < k < n/2");
  }
  d_ = std::gcd(n, k);
}

std::vector<GPParams> AllParams(int n_max, int n_min) {
  std::vector<GPParams> out;
  for (int n = std::max(3, n_min); n <= n_max; ++n) {
    for (int k = 1; 2 * k < n; ++k) out.emplace_back(n, k);
  }
  return out;
}

GPVertex ToGPVertex(int n, int id) {
  if (id < 0 || id >= 2 * n) throw DomainError("vertex id out of range");
  return id < n ? GPVertex{Side::kOuter, id} : GPVertex{Side::kInner, id - n};
}

std::string GPLabel(int n, int id) {
  const GPVertex v = ToGPVertex(n, id);
  return (v.side == Side::kOuter ? "u" : "v") + std::to_string(v.index);
}

SimpleGraph BuildGP(const GPParams& params) {
  const int n = params.n();
  const int k = params.k();
  SimpleGraph g(2 * n);
  for (int i = 0; i < n; ++i) {
    g.AddEdge(OuterId(n, i), OuterId(n, i + 1));
    g.AddEdge(InnerId(n, i), InnerId(n, i + k));
    g.AddEdge(OuterId(n, i), InnerId(n, i));
  }
  for (int id = 0; id < 2 * n; ++id) g.set_label(id, GPLabel(n, id));
  return g;
}

bool IsBipartiteGP(const GPParams& params) {
  return params.n() % 2 == 0 && params.k() % 2 == 1;
}

std::vector<int> InnerComponentSizes(const GPParams& params) {
  const int n = params.n();
  std::vector<char> seen(n, 0);
  std::vector<int> sizes;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    int size = 0;
    for (int i = s; !seen[i]; i = Mod(i + params.k(), n)) {
      seen[i] = 1;
      ++size;
    }
    sizes.push_back(size);
  }
  return sizes;
}

std::optional<int> OddGirth(const SimpleGraph& graph) {
  const int n = graph.num_vertices();
  std::optional<int> best;
  std::vector<int> dist(n);
  std::queue<int> queue;
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop();
      // An edge inside one BFS layer closes an odd walk of length 2d+1
      // through s; minimized over all roots this is the odd girth.
      if (best && 2 * dist[x] + 1 >= *best) continue;
      for (const int y : graph.neighbors(x)) {
        if (dist[y] == -1) {
          dist[y] = dist[x] + 1;
          queue.push(y);
        } else if (dist[y] == dist[x]) {
          const int len = 2 * dist[x] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
    while (!queue.empty()) queue.pop();
  }
  return best;
}

CycleWitness AnnotateCycle(int n, std::vector<int> vertices) {
  CycleWitness w;
  w.length = static_cast<int>(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const int a = vertices[i];
    const int b = vertices[(i + 1) % vertices.size()];
    if ((a < n) != (b < n)) ++w.spoke_count;
    if (a < n) w.uses_outer = true;
    if (a >= n) w.uses_inner = true;
  }
  w.vertices = std::move(vertices);
  return w;
}

bool IsCycleIn(const SimpleGraph& graph, const std::vector<int>& vertices) {
  const std::size_t len = vertices.size();
  if (len < 3) return false;
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return false;
  }
  if (sorted.front() < 0 || sorted.back() >= graph.num_vertices()) return false;
  for (std::size_t i = 0; i < len; ++i) {
    if (!graph.HasEdge(vertices[i], vertices[(i + 1) % len])) return false;
  }
  return true;
}

namespace {

class CycleEnumerator {
 public:
  CycleEnumerator(const SimpleGraph& graph, int length)
      : graph_(graph), length_(length), on_path_(graph.num_vertices(), 0) {}

  std::vector<std::vector<int>> Run() {
    const int n = graph_.num_vertices();
    for (start_ = 0; start_ < n; ++start_) {
      BfsFromStart();
      path_.assign(1, start_);
      on_path_[start_] = 1;
      Extend();
      on_path_[start_] = 0;
    }
    return std::move(cycles_);
  }

 private:
  // Distances from start_ through vertices >= start_ only; used to prune
  // paths that can no longer close in time.
  void BfsFromStart() {
    dist_.assign(graph_.num_vertices(), -1);
    std::queue<int> queue;
    dist_[start_] = 0;
    queue.push(start_);
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop();
      for (const int y : graph_.neighbors(x)) {
        if (y > start_ && dist_[y] == -1) {
          dist_[y] = dist_[x] + 1;
          queue.push(y);
        }
      }
    }
  }

  void Extend() {
    const int x = path_.back();
    const int used = static_cast<int>(path_.size());
    if (used == length_) {
      if (graph_.HasEdge(x, start_) && path_[1] < path_.back()) {
        cycles_.push_back(path_);
      }
      return;
    }
    for (const int y : graph_.neighbors(x)) {
      if (y <= start_ || on_path_[y]) continue;
      // After y we still need length_ - used - 1 edges to walk back.
      if (dist_[y] == -1 || dist_[y] > length_ - used) continue;
      on_path_[y] = 1;
      path_.push_back(y);
      Extend();
      path_.pop_back();
      on_path_[y] = 0;
    }
  }

  const SimpleGraph& graph_;
  const int length_;
  int start_ = 0;
  std::vector<char> on_path_;
  std::vector<int> dist_;
  std::vector<int> path_;
  std::vector<std::vector<int>> cycles_;
};

}  // namespace

std::vector<CycleWitness> MinOddCycleWitnesses(const GPParams& params,
                                               int max_n) {
  if (IsBipartiteGP(params)) {
    throw DomainError("no odd cycles: G(n,k) is bipartite");
  }
  if (params.n() > max_n) {
    throw DomainError("witness enumeration bound exceeded (n > " +
                      std::to_string(max_n) + ")");
  }
  const SimpleGraph g = BuildGP(params);
  const int girth = *OddGirth(g);
  std::vector<CycleWitness> out;
  for (auto& cycle : CycleEnumerator(g, girth).Run()) {
    out.push_back(AnnotateCycle(params.n(), std::move(cycle)));
  }
  return out;
}

SimpleGraph KroneckerCover(const SimpleGraph& graph) {
  SimpleGraph cover(2 * graph.num_vertices());
  for (const auto& [u, v] : graph.Edges()) {
    cover.AddEdge(2 * u, 2 * v + 1);
    cover.AddEdge(2 * u + 1, 2 * v);
  }
  return cover;
}

SimpleGraph BuildGeneralizedPrism(int ell, int m) {
  if (ell < 3) throw DomainError("generalized prism needs cycles of length >= 3");
  if (m < 1) throw DomainError("generalized prism needs paths of length >= 1");
  SimpleGraph g(ell * (m + 1));
  const auto id = [ell](int i, int j) { return j * ell + Mod(i, ell); };
  for (int i = 0; i < ell; ++i) {
    g.AddEdge(id(i, 0), id(i + 1, 0));
    g.AddEdge(id(i, m), id(i + 1, m));
    for (int j = 0; j < m; ++j) g.AddEdge(id(i, j), id(i, j + 1));
  }
  return g;
}

}  // namespace gpetersen
