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

#include <stdexcept>

#include "gpetersen/symmetry.hpp"

namespace gpetersen {

namespace {

// Inverse of x modulo m, for gcd(x, m) = 1 and m >= 2.
int InverseMod(int x, int m) {
  long long old_r = Mod(x, m), r = m;
  long long old_s = 1, s = 0;
  while (r != 0) {
    const long long q = old_r / r;
    long long t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw DomainError("value is not invertible modulo m");
  return Mod(old_s, m);
}

// f(u_i) for i = q*d + r as v_<returned index>, for a witness a <= d with
// a + d even and step k (which may be n - k).
int OuterImageIndex(int n, int k, int d, int a, int i) {
  const int q = i / d;
  const int r = i % d;
  if (r < a) return Mod(static_cast<long long>(q) * d + static_cast<long long>(r + 1) * k, n);
  if ((r - a) % 2 == 0) return Mod(static_cast<long long>(q + 1) * d + k, n);
  return Mod(static_cast<long long>(q + 1) * d, n);
}

VertexMap RetractionFormula(int n, int k, int d, int a) {
  VertexMap f{2 * n, std::vector<int>(2 * n)};
  for (int i = 0; i < n; ++i) {
    const int l = OuterImageIndex(n, k, d, a, i);
    f.image[OuterId(n, i)] = InnerId(n, l);
    f.image[InnerId(n, i)] = InnerId(n, l - k);
  }
  return f;
}

}  // namespace

int ComputeA(int n, int k) {
  const GPParams params(n, k);
  const int d = params.d();
  const int g = params.inner_len();
  return InverseMod(k / d, g);
}

CoreParams ComputeCoreParams(const GPParams& params) {
  return CoreParams{params.d(), ComputeA(params.n(), params.k()),
                    params.inner_len()};
}

CoreVerdict ClassifyCore(int n, int k) {
  const GPParams params(n, k);
  CoreVerdict v;
  v.d = params.d();
  v.a = ComputeA(n, k);
  if (IsBipartiteGP(params)) {
    v.status = CoreStatus::kBipartite;
    return v;
  }
  const int g = params.inner_len();
  const int a = v.a;
  const int d = v.d;
  if (g % 2 == 0) {
    v.status = CoreStatus::kCore;
    v.reason = CoreReason::kC1;
  } else if ((a + d) % 2 == 0) {
    if (a >= d + 2) {
      v.status = CoreStatus::kCore;
      v.reason = CoreReason::kC2;
    } else {
      v.status = CoreStatus::kNotCore;
      v.not_core_case = NotCoreCase::kAEvenSmall;
    }
  } else if (a + d + 2 <= g) {
    v.status = CoreStatus::kCore;
    v.reason = CoreReason::kC3;
  } else {
    v.status = CoreStatus::kNotCore;
    v.not_core_case = NotCoreCase::kAOddLarge;
  }
  return v;
}

std::string ToString(CoreStatus status) {
  switch (status) {
    case CoreStatus::kBipartite:
      return "bipartite";
    case CoreStatus::kCore:
      return "core";
    case CoreStatus::kNotCore:
      return "not_core";
  }
  return "?";
}

std::string ToString(CoreReason reason) {
  switch (reason) {
    case CoreReason::kC1:
      return "c1";
    case CoreReason::kC2:
      return "c2";
    case CoreReason::kC3:
      return "c3";
  }
  return "?";
}

bool HasSpokedMinOddCycle(int n, int k, int max_n) {
  for (const CycleWitness& w : MinOddCycleWitnesses(GPParams(n, k), max_n)) {
    if (w.spoke_count > 0) return true;
  }
  return false;
}

std::vector<int> InnerCycleThroughV0(const GPParams& params) {
  std::vector<int> cycle;
  for (int j = 0; j < params.inner_len(); ++j) {
    cycle.push_back(InnerId(params.n(), j * params.k()));
  }
  return cycle;
}

VertexMap BuildRetraction(int n, int k) {
  const CoreVerdict verdict = ClassifyCore(n, k);
  if (verdict.status != CoreStatus::kNotCore) {
    throw DomainError("build_retraction needs a non-core, non-bipartite G(n,k)");
  }
  const int d = verdict.d;
  const int g = n / d;
  if (*verdict.not_core_case == NotCoreCase::kAEvenSmall) {
    return RetractionFormula(n, k, d, verdict.a);
  }
  // G(n, n-k) has the same edge set; its witness is g - a, with a' + d even
  // and a' <= d.
  const int k_prime = n - k;
  const int a_prime = g - verdict.a;
  if (Mod(static_cast<long long>(a_prime) * k_prime, n) != d || a_prime <= 0 ||
      a_prime >= g || (a_prime + d) % 2 != 0 || a_prime > d) {
    throw std::logic_error("reflected witness a' failed its defining congruence");
  }
  return RetractionFormula(n, k_prime, d, a_prime);
}

VertexMap PrismEndomorphism(int ell, int m) {
  if (ell < 3) throw DomainError("prism endomorphism needs l >= 3");
  if (m < 1) throw DomainError("prism endomorphism needs m >= 1");
  const int size = ell * (m + 1);
  VertexMap phi{size, std::vector<int>(size)};
  for (int j = 0; j <= m; ++j) {
    for (int i = 0; i < ell; ++i) phi.image[j * ell + i] = Mod(i + j, ell);
  }
  return phi;
}

bool IsEndomorphismTransitive(int n, int k) {
  const GPParams params(n, k);
  return IsVertexTransitive(n, k) || IsBipartiteGP(params);
}

std::optional<CycleWitness> C2WitnessCycle(int n, int k) {
  const CoreVerdict v = ClassifyCore(n, k);
  if (v.reason != CoreReason::kC2) return std::nullopt;
  const int g = n / v.d;
  // v_{ak} = v_d, ..., v_{gk} = v_0, u_0, u_1, ..., u_d.
  std::vector<int> cycle;
  for (int j = v.a; j < g; ++j) {
    cycle.push_back(InnerId(n, static_cast<long long>(j) * k % n));
  }
  cycle.push_back(InnerId(n, 0));
  for (int i = 0; i <= v.d; ++i) cycle.push_back(OuterId(n, i));
  return AnnotateCycle(n, std::move(cycle));
}

std::optional<CycleWitness> C3WitnessCycle(int n, int k) {
  const CoreVerdict v = ClassifyCore(n, k);
  if (v.reason != CoreReason::kC3) return std::nullopt;
  // v_0, v_k, ..., v_{ak} = v_d, u_d, u_{d-1}, ..., u_0.
  std::vector<int> cycle;
  for (int j = 0; j <= v.a; ++j) {
    cycle.push_back(InnerId(n, static_cast<long long>(j) * k % n));
  }
  for (int i = v.d; i >= 0; --i) cycle.push_back(OuterId(n, i));
  return AnnotateCycle(n, std::move(cycle));
}

}  // namespace gpetersen
