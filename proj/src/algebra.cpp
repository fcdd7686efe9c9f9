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

#include "gpetersen/algebra.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>
#include <utility>

#include "gpetersen/gp_core.hpp"
#include "gpetersen/parallel.hpp"

namespace gpetersen {

OpTable::OpTable(int order, std::vector<int> entries,
                 std::vector<std::string> labels)
    : order_(order), entries_(std::move(entries)), labels_(std::move(labels)) {
  if (order <= 0) throw DomainError("table order must be positive");
  if (entries_.size() != static_cast<std::size_t>(order) * order) {
    throw DomainError("table must have order^2 entries");
  }
  for (int e : entries_) {
    if (e < 0 || e >= order) throw DomainError("table entry out of range");
  }
  if (labels_.empty()) {
    for (int i = 0; i < order; ++i) labels_.push_back(std::to_string(i));
  } else if (labels_.size() != static_cast<std::size_t>(order)) {
    throw DomainError("label count must equal table order");
  }
}

OpTable OpTable::FromRows(const std::vector<std::vector<int>>& rows,
                          std::vector<std::string> labels) {
  const int m = static_cast<int>(rows.size());
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(m) * m);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != m) {
      throw DomainError("table must be square");
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return OpTable(m, std::move(entries), std::move(labels));
}

std::vector<std::vector<int>> OpTable::Rows() const {
  std::vector<std::vector<int>> rows(order_);
  for (int a = 0; a < order_; ++a) {
    rows[a].assign(entries_.begin() + static_cast<std::ptrdiff_t>(a) * order_,
                   entries_.begin() + static_cast<std::ptrdiff_t>(a + 1) * order_);
  }
  return rows;
}

namespace {

bool AssociativeRow(const OpTable& t, int a) {
  const int m = t.order();
  for (int b = 0; b < m; ++b) {
    const int ab = t(a, b);
    for (int c = 0; c < m; ++c) {
      if (t(ab, c) != t(a, t(b, c))) return false;
    }
  }
  return true;
}

// Left-bracketed products of generators, i.e. closure under right
// multiplication by generators. Does not assume associativity.
std::vector<bool> RightClosure(const OpTable& t, std::span<const int> gens) {
  std::vector<bool> seen(t.order(), false);
  std::vector<int> queue;
  for (int g : gens) {
    if (g < 0 || g >= t.order()) throw DomainError("generator out of range");
    if (!seen[g]) {
      seen[g] = true;
      queue.push_back(g);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int g : gens) {
      const int p = t(queue[head], g);
      if (!seen[p]) {
        seen[p] = true;
        queue.push_back(p);
      }
    }
  }
  return seen;
}

}  // namespace

bool IsAssociative(const OpTable& table) {
  std::atomic<bool> ok{true};
  ParallelFor(table.order(), [&](int a) {
    if (!ok.load(std::memory_order_relaxed)) return;
    if (!AssociativeRow(table, a)) ok.store(false, std::memory_order_relaxed);
  });
  return ok.load();
}

bool IsAssociative(const OpTable& table, std::span<const int> generators) {
  const std::vector<bool> reached = RightClosure(table, generators);
  if (generators.empty() ||
      std::find(reached.begin(), reached.end(), false) != reached.end()) {
    return IsAssociative(table);
  }
  const int m = table.order();
  for (int g : generators) {
    for (int x = 0; x < m; ++x) {
      const int xg = table(x, g);
      for (int y = 0; y < m; ++y) {
        if (table(xg, y) != table(x, table(g, y))) return false;
      }
    }
  }
  return true;
}

namespace reference {

bool IsAssociative(const OpTable& table) {
  for (int a = 0; a < table.order(); ++a) {
    if (!AssociativeRow(table, a)) return false;
  }
  return true;
}

}  // namespace reference

std::optional<int> FindIdentity(const OpTable& table) {
  const int m = table.order();
  for (int e = 0; e < m; ++e) {
    bool neutral = true;
    for (int x = 0; x < m && neutral; ++x) {
      neutral = table(e, x) == x && table(x, e) == x;
    }
    if (neutral) return e;
  }
  return std::nullopt;
}

std::vector<int> Invertibles(const OpTable& table) {
  std::vector<int> out;
  const std::optional<int> e = FindIdentity(table);
  if (!e) return out;
  for (int g = 0; g < table.order(); ++g) {
    for (int h = 0; h < table.order(); ++h) {
      if (table(g, h) == *e && table(h, g) == *e) {
        out.push_back(g);
        break;
      }
    }
  }
  return out;
}

int ElementOrder(const OpTable& table, int g) {
  const std::optional<int> e = FindIdentity(table);
  if (!e) throw DomainError("element order needs an identity");
  if (g < 0 || g >= table.order()) throw DomainError("element out of range");
  int power = g;
  for (int m = 1; m <= table.order(); ++m) {
    if (power == *e) return m;
    power = table(power, g);
  }
  throw DomainError("element is not invertible");
}

std::vector<int> Idempotents(const OpTable& table) {
  std::vector<int> out;
  for (int a = 0; a < table.order(); ++a) {
    if (table(a, a) == a) out.push_back(a);
  }
  return out;
}

bool IsCompletelyRegular(const OpTable& table) {
  const int m = table.order();
  for (int a = 0; a < m; ++a) {
    bool found = false;
    for (int x = 0; x < m && !found; ++x) {
      const int ax = table(a, x);
      found = ax == table(x, a) && table(ax, a) == a &&
              table(table(x, a), x) == x;
    }
    if (!found) return false;
  }
  return true;
}

namespace {

bool IdempotentsClosed(const OpTable& table, const std::vector<int>& idem) {
  for (int e : idem) {
    for (int f : idem) {
      const int ef = table(e, f);
      if (table(ef, ef) != ef) return false;
    }
  }
  return true;
}

}  // namespace

AlgebraReport Analyze(const OpTable& table) {
  AlgebraReport r;
  r.associative = IsAssociative(table);
  r.identity = FindIdentity(table);
  r.is_monoid = r.associative && r.identity.has_value();
  r.is_group = r.is_monoid &&
               static_cast<int>(Invertibles(table).size()) == table.order();
  r.idempotents = Idempotents(table);
  r.idempotents_closed = IdempotentsClosed(table, r.idempotents);
  r.completely_regular = IsCompletelyRegular(table);
  r.is_orthogroup =
      r.associative && r.completely_regular && r.idempotents_closed;
  return r;
}

bool IsOrthogroup(const OpTable& table) { return Analyze(table).is_orthogroup; }

bool IsSemigroupHomomorphism(const OpTable& from, const OpTable& to,
                             const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != from.order()) return false;
  for (int x : map) {
    if (x < 0 || x >= to.order()) return false;
  }
  for (int a = 0; a < from.order(); ++a) {
    for (int b = 0; b < from.order(); ++b) {
      if (map[from(a, b)] != to(map[a], map[b])) return false;
    }
  }
  return true;
}

OpTable CyclicGroup(int n) {
  if (n < 1) throw DomainError("cyclic group needs n >= 1");
  std::vector<int> e(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) e[a * n + b] = (a + b) % n;
  }
  return OpTable(n, std::move(e));
}

OpTable DihedralGroup(int n) {
  if (n < 1) throw DomainError("dihedral group needs n >= 1");
  const int m = 2 * n;
  std::vector<int> e(static_cast<std::size_t>(m) * m);
  std::vector<std::string> labels(m);
  for (int x = 0; x < m; ++x) {
    const int i = x % n, a = x / n;
    labels[x] = "r" + std::to_string(i) + (a ? "s" : "");
    for (int y = 0; y < m; ++y) {
      const int j = y % n, b = y / n;
      // r^i s^a r^j s^b = r^{i + (-1)^a j} s^{a+b}
      const int rot = Mod(a ? i - j : i + j, n);
      e[x * m + y] = rot + n * ((a + b) % 2);
    }
  }
  return OpTable(m, std::move(e), std::move(labels));
}

OpTable NullSemigroup(int size, int zero_id) {
  if (size < 1) throw DomainError("null semigroup needs size >= 1");
  if (zero_id < 0 || zero_id >= size) throw DomainError("zero out of range");
  return OpTable(size, std::vector<int>(static_cast<std::size_t>(size) * size,
                                        zero_id));
}

OpTable LeftZeroBand(int size) {
  if (size < 1) throw DomainError("left-zero band needs size >= 1");
  std::vector<int> e(static_cast<std::size_t>(size) * size);
  std::vector<std::string> labels(size);
  for (int a = 0; a < size; ++a) {
    labels[a] = "l" + std::to_string(a);
    for (int b = 0; b < size; ++b) e[a * size + b] = a;
  }
  return OpTable(size, std::move(e), std::move(labels));
}

namespace {

std::string PairLabel(const std::string& x, const std::string& y) {
  return "(" + x + "," + y + ")";
}

}  // namespace

OpTable DirectProduct(const OpTable& t1, const OpTable& t2) {
  const int p = t1.order(), q = t2.order(), m = p * q;
  std::vector<int> e(static_cast<std::size_t>(m) * m);
  std::vector<std::string> labels(m);
  for (int x = 0; x < m; ++x) {
    labels[x] = PairLabel(t1.labels()[x / q], t2.labels()[x % q]);
    for (int y = 0; y < m; ++y) {
      e[x * m + y] = t1(x / q, y / q) * q + t2(x % q, y % q);
    }
  }
  return OpTable(m, std::move(e), std::move(labels));
}

OpTable PresentedGroupAlphaGamma(int n, int k) {
  if (n < 1) throw DomainError("presented group needs n >= 1");
  if (Mod(static_cast<long long>(k) * k, n) != 1 % n) {
    throw DomainError("presented group needs k^2 = 1 (mod n)");
  }
  const int m = 2 * n;
  std::vector<int> e(static_cast<std::size_t>(m) * m);
  std::vector<std::string> labels(m);
  for (int i = 0; i < n; ++i) {
    for (int eps = 0; eps < 2; ++eps) {
      const int x = AlphaGammaElement(i, eps);
      labels[x] = "a" + std::to_string(i) + (eps ? "g" : "");
      for (int j = 0; j < n; ++j) {
        for (int delta = 0; delta < 2; ++delta) {
          const long long step = eps ? static_cast<long long>(k) * j : j;
          e[x * m + AlphaGammaElement(j, delta)] =
              AlphaGammaElement(Mod(i + step, n), (eps + delta) % 2);
        }
      }
    }
  }
  return OpTable(m, std::move(e), std::move(labels));
}

OpTable CombinatorNullExtension(const OpTable& r,
                                const std::vector<int>& t_elements,
                                const OpTable& r_prime,
                                NullExtensionProduct product) {
  const int p = r.order(), q = r_prime.order();
  std::vector<bool> in_t(p, false);
  for (int t : t_elements) {
    if (t < 0 || t >= p) throw DomainError("T element out of range");
    in_t[t] = true;
  }
  for (int s = 0; s < p; ++s) {
    if (in_t[s]) continue;
    for (int t : t_elements) {
      if (!in_t[r(s, t)] || !in_t[r(t, s)]) {
        throw DomainError("partition condition ST, TS inside T fails");
      }
    }
  }
  if (!IsAssociative(r) || !IsAssociative(r_prime)) {
    throw DomainError("null extension needs associative inputs");
  }
  const int m = p * q;
  std::vector<int> e(static_cast<std::size_t>(m) * m);
  std::vector<std::string> labels(m);
  for (int x = 0; x < m; ++x) {
    const int a = x / q, i = x % q;
    labels[x] = PairLabel(r.labels()[a], r_prime.labels()[i]);
    for (int y = 0; y < m; ++y) {
      const int b = y / q, j = y % q;
      const bool keeps_left =
          in_t[a] == (product == NullExtensionProduct::kTKeepsLeft);
      e[x * m + y] = r(a, b) * q + (keeps_left ? i : r_prime(i, j));
    }
  }
  OpTable out(m, std::move(e), std::move(labels));
  if (!IsAssociative(out)) {
    throw DomainError("null extension produced a non-associative table");
  }
  return out;
}

OpTable CombinatorLeftBandExtension(const OpTable& s, const OpTable& t,
                                    const OpTable& r,
                                    const std::vector<int>& phi,
                                    const std::vector<int>& psi) {
  if (!IsSemigroupHomomorphism(s, t, phi)) {
    throw DomainError("phi is not a semigroup homomorphism S -> T");
  }
  if (!IsSemigroupHomomorphism(s, r, psi)) {
    throw DomainError("psi is not a semigroup homomorphism S -> R");
  }
  const int ns = s.order(), nt = t.order(), nr = r.order();
  const int m = ns + nt * nr;
  auto pair_id = [&](int ti, int ri) { return ns + ti * nr + ri; };
  std::vector<int> e(static_cast<std::size_t>(m) * m);
  std::vector<std::string> labels(m);
  for (int x = 0; x < m; ++x) {
    if (x < ns) {
      labels[x] = s.labels()[x];
    } else {
      labels[x] = PairLabel(t.labels()[(x - ns) / nr],
                            "l" + r.labels()[(x - ns) % nr]);
    }
  }
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      int z;
      if (x < ns && y < ns) {
        z = s(x, y);
      } else if (x < ns) {
        const int ti = (y - ns) / nr, ri = (y - ns) % nr;
        z = pair_id(t(phi[x], ti), r(psi[x], ri));
      } else if (y < ns) {
        const int ti = (x - ns) / nr, ri = (x - ns) % nr;
        z = pair_id(t(ti, phi[y]), ri);
      } else {
        const int ti = (x - ns) / nr, ri = (x - ns) % nr;
        z = pair_id(t(ti, (y - ns) / nr), ri);
      }
      e[x * m + y] = z;
    }
  }
  OpTable out(m, std::move(e), std::move(labels));
  if (!IsAssociative(out)) {
    throw DomainError("left band extension produced a non-associative table");
  }
  return out;
}

bool SatisfiesCay1Congruence(int n, int k) {
  const long long sq = Mod(static_cast<long long>(k) * k, n);
  return sq == Mod(k, n) || sq == Mod(-k, n);
}

OpTable Cay1Monoid(int n, int k) {
  const GPParams params(n, k);
  if (!SatisfiesCay1Congruence(n, k)) {
    throw DomainError("cay1 monoid needs k^2 = +-k (mod n)");
  }
  const int d = params.d(), g = params.inner_len();
  std::vector<int> phi(n), psi(n);
  for (int x = 0; x < n; ++x) {
    phi[x] = x % g;
    psi[x] = x % d;
  }
  return CombinatorLeftBandExtension(CyclicGroup(n), CyclicGroup(g),
                                     CyclicGroup(d), phi, psi);
}

int Cay1Element(int n, int k, int i, int j) {
  const GPParams params(n, k);
  const int d = params.d(), g = params.inner_len();
  return n + Mod(i, g) * d + Mod(j, d);
}

std::vector<int> Cay1Connection(int n, int k, Cay1Variant variant) {
  switch (variant) {
    case Cay1Variant::kStandard:
      return {1, Cay1Element(n, k, 1, 0)};
    case Cay1Variant::kReversed:
      return {1, Cay1Element(n, k, -1, 0)};
    case Cay1Variant::kLooped:
      return {1, Cay1Element(n, k, 0, 0)};
  }
  return {};
}

namespace {

// Columns 0-5 of the Z6 block, then columns 6-8 cycling with the row.
std::vector<std::vector<int>> PetersenRows(bool monoid) {
  std::vector<std::vector<int>> rows = {
      {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, {1, 2, 3, 4, 5, 0, 7, 8, 6, 9},
      {2, 3, 4, 5, 0, 1, 8, 6, 7, 9}, {3, 4, 5, 0, 1, 2, 6, 7, 8, 9},
      {4, 5, 0, 1, 2, 3, 7, 8, 6, 9}, {5, 0, 1, 2, 3, 4, 8, 6, 7, 9},
  };
  for (int r = 6; r <= 9; ++r) {
    std::vector<int> row(10, 9);
    if (monoid) std::fill(row.begin(), row.begin() + 6, r);
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::vector<int>> PetersenPrimeRows(bool monoid) {
  std::vector<std::vector<int>> rows = {
      {5, 4, 3, 2, 1, 0, 8, 7, 6, 9}, {2, 3, 4, 5, 0, 1, 8, 6, 7, 9},
      {1, 0, 5, 4, 3, 2, 7, 6, 8, 9}, {4, 5, 0, 1, 2, 3, 7, 8, 6, 9},
      {3, 2, 1, 0, 5, 4, 6, 8, 7, 9}, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9},
  };
  for (int r = 6; r <= 9; ++r) {
    std::vector<int> row(10, 9);
    if (monoid) std::fill(row.begin(), row.begin() + 6, r);
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::vector<int>> DodecahedronRows() {
  std::vector<std::vector<int>> rows = {
      {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19},
      {1, 0, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 16, 18, 17, 19, 12, 14, 13, 15},
      {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 0, 1, 17, 18, 16, 19, 13, 14, 12, 15},
      {3, 2, 1, 0, 11, 10, 9, 8, 7, 6, 5, 4, 13, 12, 14, 15, 17, 16, 18, 19},
      {4, 5, 6, 7, 8, 9, 10, 11, 0, 1, 2, 3, 14, 12, 13, 15, 18, 16, 17, 19},
      {5, 4, 3, 2, 1, 0, 11, 10, 9, 8, 7, 6, 18, 17, 16, 19, 14, 13, 12, 15},
      {6, 7, 8, 9, 10, 11, 0, 1, 2, 3, 4, 5, 16, 17, 18, 19, 12, 13, 14, 15},
      {7, 6, 5, 4, 3, 2, 1, 0, 11, 10, 9, 8, 12, 14, 13, 15, 16, 18, 17, 19},
      {8, 9, 10, 11, 0, 1, 2, 3, 4, 5, 6, 7, 13, 14, 12, 15, 17, 18, 16, 19},
      {9, 8, 7, 6, 5, 4, 3, 2, 1, 0, 11, 10, 17, 16, 18, 19, 13, 12, 14, 15},
      {10, 11, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 18, 16, 17, 19, 14, 12, 13, 15},
      {11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0, 14, 13, 12, 15, 18, 17, 16, 19},
  };
  for (int r = 12; r <= 19; ++r) {
    const int zero = r < 16 ? 15 : 19;
    std::vector<int> row(20, zero);
    std::fill(row.begin(), row.begin() + 12, r);
    if (r == 15 || r == 19) std::fill(row.begin(), row.end(), r);
    rows.push_back(row);
  }
  return rows;
}

std::vector<BuiltinTable> MakeBuiltins() {
  std::vector<BuiltinTable> out;
  out.push_back({"petersen-s", OpTable::FromRows(PetersenRows(false)), {1, 6},
                 5, 2});
  out.push_back({"petersen-m", OpTable::FromRows(PetersenRows(true)), {1, 6},
                 5, 2});
  out.push_back({"petersen-sp", OpTable::FromRows(PetersenPrimeRows(false)),
                 {0, 4, 8}, 5, 2});
  out.push_back({"petersen-mp", OpTable::FromRows(PetersenPrimeRows(true)),
                 {0, 4, 8}, 5, 2});
  out.push_back({"dodecahedron", OpTable::FromRows(DodecahedronRows()),
                 {1, 11, 18}, 10, 2});
  const OpTable desargues = CombinatorNullExtension(
      out[1].table, {6, 7, 8, 9}, CyclicGroup(2));
  // (1,1) and (6,0) as row-major pairs over M x Z2.
  out.push_back({"desargues", desargues, {1 * 2 + 1, 6 * 2 + 0}, 10, 3});
  return out;
}

}  // namespace

const std::vector<BuiltinTable>& BuiltinTables() {
  static const std::vector<BuiltinTable> tables = MakeBuiltins();
  return tables;
}

const BuiltinTable& Builtin(const std::string& name) {
  for (const BuiltinTable& t : BuiltinTables()) {
    if (t.name == name) return t;
  }
  throw DomainError("unknown builtin table: " + name);
}

}  // namespace gpetersen
