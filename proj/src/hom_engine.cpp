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

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

#include "gpetersen/parallel.hpp"

namespace gpetersen {

SearchBudget SearchBudget::FromEnvironment() {
  SearchBudget budget;
  if (const char* env = std::getenv("GP_ORACLE_BUDGET")) {
    try {
      const unsigned long long value = std::stoull(env);
      if (value > 0) budget.max_nodes = value;
    } catch (const std::exception&) {
      // Unparsable values fall back to the default.
    }
  }
  return budget;
}

const char* ToString(SearchStatus status) {
  switch (status) {
    case SearchStatus::kFound:
      return "found";
    case SearchStatus::kAbsent:
      return "absent";
    case SearchStatus::kBudgetExhausted:
      return "budget_exhausted";
  }
  return "?";
}

const char* ToString(Verdict verdict) {
  switch (verdict) {
    case Verdict::kFalse:
      return "false";
    case Verdict::kTrue:
      return "true";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

using Word = std::uint64_t;

class Backtracker {
 public:
  Backtracker(const SimpleGraph& from, const SimpleGraph& to,
              const HomConstraints& constraints, const SearchBudget& budget,
              const std::function<bool(const VertexMap&)>& visit)
      : from_(from),
        to_(to),
        constraints_(constraints),
        budget_(budget),
        visit_(visit),
        nv_(from.num_vertices()),
        nh_(to.num_vertices()),
        words_((to.num_vertices() + 63) / 64),
        to_adj_(static_cast<std::size_t>(nh_) * words_, 0),
        image_(nv_, -1),
        assigned_neighbours_(nv_, 0),
        domains_(static_cast<std::size_t>(nv_ + 1) * nv_ * words_, 0) {
    for (int x = 0; x < nh_; ++x) {
      for (const int y : to.neighbors(x)) SetBit(AdjRow(x), y);
    }
    start_ = std::chrono::steady_clock::now();
  }

  SearchStatus Run() {
    if (!InitialDomains()) return SearchStatus::kAbsent;
    Solve(0);
    if (stopped_) return SearchStatus::kFound;
    if (exhausted_) return SearchStatus::kBudgetExhausted;
    return SearchStatus::kAbsent;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  static void SetBit(Word* row, int i) { row[i >> 6] |= Word{1} << (i & 63); }
  static void ClearBit(Word* row, int i) {
    row[i >> 6] &= ~(Word{1} << (i & 63));
  }
  static bool TestBit(const Word* row, int i) {
    return (row[i >> 6] >> (i & 63)) & 1;
  }

  Word* AdjRow(int x) { return &to_adj_[static_cast<std::size_t>(x) * words_]; }
  Word* Domain(int level, int v) {
    return &domains_[(static_cast<std::size_t>(level) * nv_ + v) * words_];
  }
  bool Empty(const Word* row) const {
    for (int w = 0; w < words_; ++w) {
      if (row[w]) return false;
    }
    return true;
  }

  bool InitialDomains() {
    std::vector<Word> base(words_, 0);
    for (int x = 0; x < nh_; ++x) SetBit(base.data(), x);
    for (const int x : constraints_.forbidden_targets) {
      if (x >= 0 && x < nh_) ClearBit(base.data(), x);
    }
    const bool coloured = !constraints_.domain_colours.empty() &&
                          !constraints_.codomain_colours.empty();
    for (int v = 0; v < nv_; ++v) {
      Word* d = Domain(0, v);
      std::copy(base.begin(), base.end(), d);
      if (coloured) {
        for (int x = 0; x < nh_; ++x) {
          if (constraints_.domain_colours[v] != constraints_.codomain_colours[x]) {
            ClearBit(d, x);
          }
        }
      }
      if (Empty(d)) return false;
    }
    for (const auto& [v, x] : constraints_.fixed) {
      if (v < 0 || v >= nv_ || x < 0 || x >= nh_) {
        throw DomainError("partial assignment out of range");
      }
      if (image_[v] != -1) {
        if (image_[v] != x) return false;
        continue;
      }
      if (!TestBit(Domain(0, v), x)) return false;
      if (!Assign(0, v, x)) return false;
    }
    return Revise(0);
  }

  // Assigns v -> x and filters the domains stored at `level` in place.
  bool Assign(int level, int v, int x) {
    image_[v] = x;
    Word* dv = Domain(level, v);
    std::fill(dv, dv + words_, 0);
    SetBit(dv, x);
    for (const int w : from_.neighbors(v)) ++assigned_neighbours_[w];
    const Word* adj = AdjRow(x);
    if (!constraints_.injective && !constraints_.induced) {
      for (const int w : from_.neighbors(v)) {
        if (image_[w] != -1) continue;
        Word* dw = Domain(level, w);
        for (int i = 0; i < words_; ++i) dw[i] &= adj[i];
        if (Empty(dw)) return false;
      }
      return true;
    }
    for (int w = 0; w < nv_; ++w) {
      if (image_[w] != -1) continue;
      Word* dw = Domain(level, w);
      if (from_.HasEdge(v, w)) {
        for (int i = 0; i < words_; ++i) dw[i] &= adj[i];
      } else if (constraints_.induced) {
        for (int i = 0; i < words_; ++i) dw[i] &= ~adj[i];
      }
      if (constraints_.injective) ClearBit(dw, x);
      if (Empty(dw)) return false;
    }
    return true;
  }

  // Arc consistency over the edges of `from`: x stays in D(v) only if every
  // neighbour w of v still has a candidate adjacent to x.
  bool Revise(int level) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < nv_; ++v) {
        if (image_[v] != -1) continue;
        Word* dv = Domain(level, v);
        for (int i = 0; i < words_; ++i) {
          Word bits = dv[i];
          while (bits) {
            const int x = i * 64 + std::countr_zero(bits);
            bits &= bits - 1;
            const Word* adj = AdjRow(x);
            for (const int w : from_.neighbors(v)) {
              const Word* dw = Domain(level, w);
              bool support = false;
              for (int j = 0; j < words_ && !support; ++j) {
                support = (adj[j] & dw[j]) != 0;
              }
              if (!support) {
                ClearBit(dv, x);
                changed = true;
                break;
              }
            }
          }
        }
        if (Empty(dv)) return false;
      }
    }
    return true;
  }

  void Unassign(int v) {
    image_[v] = -1;
    for (const int w : from_.neighbors(v)) --assigned_neighbours_[w];
  }

  int SelectVariable() const {
    int best = -1;
    for (int v = 0; v < nv_; ++v) {
      if (image_[v] != -1) continue;
      if (best == -1 || assigned_neighbours_[v] > assigned_neighbours_[best]) {
        best = v;
      }
    }
    return best;
  }

  bool OutOfBudget() {
    if (nodes_ > budget_.max_nodes) return true;
    if (budget_.max_time && (nodes_ & 1023) == 0) {
      const auto elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed > *budget_.max_time) return true;
    }
    return false;
  }

  void Solve(int level) {
    const int v = SelectVariable();
    if (v == -1) {
      VertexMap map{nh_, image_};
      if (!visit_(map)) stopped_ = true;
      return;
    }
    const Word* dv = Domain(level, v);
    std::vector<Word> candidates(dv, dv + words_);
    for (int w = 0; w < words_; ++w) {
      Word bits = candidates[w];
      while (bits) {
        const int x = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        ++nodes_;
        if (OutOfBudget()) {
          exhausted_ = true;
          return;
        }
        std::copy(Domain(level, 0), Domain(level + 1, 0), Domain(level + 1, 0));
        if (Assign(level + 1, v, x) && Revise(level + 1)) Solve(level + 1);
        Unassign(v);
        if (stopped_ || exhausted_) return;
      }
    }
  }

  const SimpleGraph& from_;
  const SimpleGraph& to_;
  const HomConstraints& constraints_;
  const SearchBudget& budget_;
  const std::function<bool(const VertexMap&)>& visit_;
  const int nv_;
  const int nh_;
  const int words_;
  std::vector<Word> to_adj_;
  std::vector<int> image_;
  std::vector<int> assigned_neighbours_;
  std::vector<Word> domains_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
  bool exhausted_ = false;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

SearchStatus ForEachHomomorphism(
    const SimpleGraph& from, const SimpleGraph& to,
    const HomConstraints& constraints, const SearchBudget& budget,
    const std::function<bool(const VertexMap&)>& visit) {
  if (from.num_vertices() == 0) {
    return visit(VertexMap{to.num_vertices(), {}}) ? SearchStatus::kAbsent
                                                   : SearchStatus::kFound;
  }
  if (to.num_vertices() == 0) return SearchStatus::kAbsent;
  Backtracker search(from, to, constraints, budget, visit);
  return search.Run();
}

HomSearchResult FindHomomorphism(const SimpleGraph& from, const SimpleGraph& to,
                                 const HomConstraints& constraints,
                                 const SearchBudget& budget) {
  HomSearchResult result;
  std::function<bool(const VertexMap&)> keep_first =
      [&result](const VertexMap& map) {
        result.map = map;
        return false;
      };
  if (from.num_vertices() == 0) {
    result.status = SearchStatus::kFound;
    result.map = VertexMap{to.num_vertices(), {}};
    return result;
  }
  if (to.num_vertices() == 0) return result;
  Backtracker search(from, to, constraints, budget, keep_first);
  result.status = search.Run();
  result.nodes = search.nodes();
  if (result.map && !IsHomomorphism(from, to, *result.map)) {
    throw std::logic_error("homomorphism search produced an invalid map");
  }
  return result;
}

namespace {

HomSearchResult SearchAvoiding(const SimpleGraph& graph, int w,
                               const SearchBudget& budget) {
  HomConstraints constraints;
  constraints.forbidden_targets = {w};
  return FindHomomorphism(graph, graph, constraints, budget);
}

CoreOracleResult CoreVerdictFrom(const std::vector<HomSearchResult>& results) {
  CoreOracleResult out;
  bool inconclusive = false;
  for (std::size_t w = 0; w < results.size(); ++w) {
    if (results[w].status == SearchStatus::kFound) {
      out.is_core = Verdict::kFalse;
      out.avoided_vertex = static_cast<int>(w);
      out.witness = results[w].map;
      return out;
    }
    if (results[w].status == SearchStatus::kBudgetExhausted) inconclusive = true;
  }
  out.is_core = inconclusive ? Verdict::kInconclusive : Verdict::kTrue;
  return out;
}

HomSearchResult SearchPair(const SimpleGraph& graph, int u, int v,
                           const SearchBudget& budget) {
  HomConstraints constraints;
  constraints.fixed = {{u, v}};
  return FindHomomorphism(graph, graph, constraints, budget);
}

EndoTransitivityResult TransitivityFrom(const std::vector<SearchStatus>& status,
                                        int n) {
  EndoTransitivityResult out;
  bool inconclusive = false;
  for (std::size_t i = 0; i < status.size(); ++i) {
    if (status[i] == SearchStatus::kAbsent) {
      out.verdict = Verdict::kFalse;
      out.failing_pair = {static_cast<int>(i) / n, static_cast<int>(i) % n};
      return out;
    }
    if (status[i] == SearchStatus::kBudgetExhausted) inconclusive = true;
  }
  out.verdict = inconclusive ? Verdict::kInconclusive : Verdict::kTrue;
  return out;
}

}  // namespace

namespace reference {

CoreOracleResult IsCoreOracle(const SimpleGraph& graph,
                              const SearchBudget& budget) {
  const int n = graph.num_vertices();
  std::vector<HomSearchResult> results;
  for (int w = 0; w < n; ++w) {
    results.push_back(SearchAvoiding(graph, w, budget));
    if (results.back().status == SearchStatus::kFound) break;
  }
  return CoreVerdictFrom(results);
}

EndoTransitivityResult IsEndoTransitiveOracle(const SimpleGraph& graph,
                                              const SearchBudget& budget) {
  const int n = graph.num_vertices();
  std::vector<SearchStatus> status;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      status.push_back(SearchPair(graph, u, v, budget).status);
      if (status.back() == SearchStatus::kAbsent) return TransitivityFrom(status, n);
    }
  }
  return TransitivityFrom(status, n);
}

}  // namespace reference

CoreOracleResult IsCoreOracle(const SimpleGraph& graph,
                              const SearchBudget& budget) {
  const auto n = static_cast<std::size_t>(graph.num_vertices());
  std::vector<HomSearchResult> results(n);
  // A found witness at index i makes every index above i irrelevant.
  ParallelFindFirst(n, [&](std::size_t w) {
    results[w] = SearchAvoiding(graph, static_cast<int>(w), budget);
    return results[w].status == SearchStatus::kFound;
  });
  return CoreVerdictFrom(results);
}

EndoTransitivityResult IsEndoTransitiveOracle(const SimpleGraph& graph,
                                              const SearchBudget& budget) {
  const int n = graph.num_vertices();
  const auto pairs = static_cast<std::size_t>(n) * n;
  // Pairs skipped after an earlier failure keep kFound, which is neutral.
  std::vector<SearchStatus> status(pairs, SearchStatus::kFound);
  ParallelFindFirst(pairs, [&](std::size_t i) {
    status[i] = SearchPair(graph, static_cast<int>(i) / n,
                           static_cast<int>(i) % n, budget)
                    .status;
    return status[i] == SearchStatus::kAbsent;
  });
  return TransitivityFrom(status, n);
}

namespace {

std::vector<std::vector<long long>> VertexInvariants(const SimpleGraph& g) {
  constexpr int kMaxWalk = 8;
  const int n = g.num_vertices();
  std::vector<std::vector<long long>> out(n);
  std::vector<long long> cur(n), next(n);
  for (int v = 0; v < n; ++v) {
    auto& inv = out[v];
    inv.push_back(g.degree(v));
    std::vector<long long> nd;
    for (const int w : g.neighbors(v)) nd.push_back(g.degree(w));
    std::sort(nd.begin(), nd.end());
    inv.insert(inv.end(), nd.begin(), nd.end());
    std::fill(cur.begin(), cur.end(), 0);
    cur[v] = 1;
    for (int len = 1; len <= kMaxWalk; ++len) {
      std::fill(next.begin(), next.end(), 0);
      for (int x = 0; x < n; ++x) {
        if (cur[x] == 0) continue;
        for (const int y : g.neighbors(x)) next[y] += cur[x];
      }
      cur.swap(next);
      if (len >= 3) inv.push_back(cur[v]);
    }
  }
  return out;
}

}  // namespace

std::pair<std::vector<int>, std::vector<int>> InvariantColouring(
    const SimpleGraph& a, const SimpleGraph& b) {
  const auto ia = VertexInvariants(a);
  const auto ib = VertexInvariants(b);
  std::vector<std::vector<long long>> all = ia;
  all.insert(all.end(), ib.begin(), ib.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  const auto colour_of = [&all](const std::vector<long long>& inv) {
    return static_cast<int>(std::lower_bound(all.begin(), all.end(), inv) -
                            all.begin());
  };
  std::pair<std::vector<int>, std::vector<int>> out;
  for (const auto& inv : ia) out.first.push_back(colour_of(inv));
  for (const auto& inv : ib) out.second.push_back(colour_of(inv));
  return out;
}

bool VerifyRetraction(const SimpleGraph& graph, const VertexMap& f,
                      const std::vector<int>& target) {
  if (f.domain_size() != graph.num_vertices() ||
      f.codomain_size != graph.num_vertices()) {
    return false;
  }
  if (!IsHomomorphism(graph, graph, f)) return false;
  std::vector<char> in_target(graph.num_vertices(), 0);
  for (const int x : target) {
    if (x < 0 || x >= graph.num_vertices()) return false;
    in_target[x] = 1;
  }
  for (int v = 0; v < graph.num_vertices(); ++v) {
    if (!in_target[f(v)]) return false;
    if (in_target[v] && f(v) != v) return false;
  }
  return true;
}

Verdict ImageIsRetractCheck(const SimpleGraph& graph, const VertexMap& f,
                            const SearchBudget& budget) {
  if (!IsHomomorphism(graph, graph, f)) {
    throw DomainError("image_is_retract_check needs an endomorphism");
  }
  const std::vector<int> image = ImageOf(f);
  std::vector<char> in_image(graph.num_vertices(), 0);
  for (const int x : image) in_image[x] = 1;
  HomConstraints constraints;
  for (const int x : image) constraints.fixed.emplace_back(x, x);
  for (int x = 0; x < graph.num_vertices(); ++x) {
    if (!in_image[x]) constraints.forbidden_targets.push_back(x);
  }
  const HomSearchResult r = FindHomomorphism(graph, graph, constraints, budget);
  switch (r.status) {
    case SearchStatus::kFound:
      return Verdict::kTrue;
    case SearchStatus::kAbsent:
      return Verdict::kFalse;
    case SearchStatus::kBudgetExhausted:
      break;
  }
  return Verdict::kInconclusive;
}

}  // namespace gpetersen
