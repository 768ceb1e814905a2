// Copyright 2026 The vennreduce Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact arithmetic for the edge-count bound B(m, n) = m 2^n + sum a_j n^j,
// its recurrence and the accompanying determinant identity.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "venn/common.hpp"

namespace venn {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RationalMatrix = std::vector<std::vector<Rational>>;
using IntMatrix = std::vector<std::vector<BigInt>>;

inline BigInt pow2(int k) { return BigInt(1) << k; }

inline BigInt ipow(long long base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

inline std::string to_string(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

// Gauss-Jordan elimination over the rationals. Pivot rows are searched in
// `row_order` (identity when empty). Throws on a singular matrix.
inline std::vector<Rational> solve_exact(RationalMatrix a, std::vector<Rational> b, std::vector<std::size_t> row_order = {}) {
  const std::size_t n = a.size();
  if (b.size() != n) throw PreconditionError("solve_exact: size mismatch");
  for (const auto& row : a) {
    if (row.size() != n) throw PreconditionError("solve_exact: matrix not square");
  }
  if (row_order.empty()) {
    row_order.resize(n);
    std::iota(row_order.begin(), row_order.end(), std::size_t{0});
  }
  std::vector<char> used(n, 0);
  std::vector<std::size_t> pivot_row(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = n;
    for (std::size_t r : row_order) {
      if (!used[r] && a[r][col] != 0) {
        p = r;
        break;
      }
    }
    if (p == n) throw Error("solve_exact: singular matrix");
    used[p] = 1;
    pivot_row[col] = p;
    const Rational inv = 1 / a[p][col];
    for (auto& v : a[p]) v *= inv;
    b[p] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == p || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[p][c];
      b[r] -= f * b[p];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t col = 0; col < n; ++col) x[col] = b[pivot_row[col]];
  return x;
}

// Fraction-free Bareiss elimination with row swaps.
inline BigInt determinant(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

struct BoundTable {
  int m = 2;
  std::vector<Rational> coefficients;  // a_0 .. a_{m-2}

  Rational evaluate(int n) const {
    Rational value = Rational(m) * Rational(pow2(n));
    Rational power = 1;
    for (const auto& a : coefficients) {
      value += a * power;
      power *= n;
    }
    return value;
  }
};

namespace detail {

inline void conj3_system(int m, RationalMatrix& a, std::vector<Rational>& b) {
  a.clear();
  b.clear();
  for (int k = 2; k <= m; ++k) {
    std::vector<Rational> row;
    for (int j = 0; j <= m - 2; ++j) row.emplace_back(ipow(k, j));
    a.push_back(std::move(row));
    b.emplace_back(BigInt(k) * pow2(k - 1) - BigInt(m) * pow2(k));
  }
}

}  // namespace detail

// Solves sum_j a_j k^j = k 2^(k-1) - m 2^k for k = 2..m.
inline BoundTable conj3_coefficients(int m, std::vector<std::size_t> row_order = {}) {
  if (m < 2) throw PreconditionError("conj3_coefficients: m must be >= 2");
  RationalMatrix a;
  std::vector<Rational> b;
  detail::conj3_system(m, a, b);
  return BoundTable{m, solve_exact(std::move(a), std::move(b), std::move(row_order))};
}

inline BigInt conj3_bound(const BoundTable& table, int n) {
  if (n < 1) throw PreconditionError("conj3_bound: n must be >= 1");
  const Rational v = table.evaluate(n);
  if (boost::multiprecision::denominator(v) != 1) {
    throw Error("conj3_bound: B(" + std::to_string(table.m) + "," + std::to_string(n) + ") = " + to_string(v) + " is not an integer");
  }
  return boost::multiprecision::numerator(v);
}

inline BigInt conj3_bound(int m, int n) { return conj3_bound(conj3_coefficients(m), n); }

// B(m, n) = n 2^(n-1) for 2 <= n <= m+1.
inline bool bound_consistency(int m) {
  const BoundTable table = conj3_coefficients(m);
  for (int n = 2; n <= m + 1; ++n) {
    if (table.evaluate(n) != Rational(BigInt(n) * pow2(n - 1))) return false;
  }
  return true;
}

struct DetIdentity {
  BigInt lhs;
  BigInt rhs;
  bool equal = false;
};

// det[1, k, ..., k^(m-3), k 2^(k-1)] = 2(m-1) det[1, k, ..., k^(m-3), 2^(k-1)],
// rows k = 2..m.
inline DetIdentity det_identity_check(int m) {
  if (m < 3) throw PreconditionError("det_identity_check: m must be >= 3");
  IntMatrix left, right;
  for (int k = 2; k <= m; ++k) {
    std::vector<BigInt> row;
    for (int j = 0; j <= m - 3; ++j) row.push_back(ipow(k, j));
    auto row2 = row;
    row.push_back(BigInt(k) * pow2(k - 1));
    row2.push_back(pow2(k - 1));
    left.push_back(std::move(row));
    right.push_back(std::move(row2));
  }
  DetIdentity out;
  out.lhs = determinant(std::move(left));
  out.rhs = BigInt(2 * (m - 1)) * determinant(std::move(right));
  out.equal = out.lhs == out.rhs;
  return out;
}

// e(m, n) = e(m, n-1) + e(m-1, n-1) + 2^(n-1), e(m, 2) = 4, e(2, n) = 2^(n+1) - 4.
inline BigInt recurrence_edges(int m, int n) {
  if (m < 2 || n < 2) throw PreconditionError("recurrence_edges: needs m >= 2 and n >= 2");
  std::map<std::pair<int, int>, BigInt> memo;
  auto rec = [&](auto&& self, int mm, int nn) -> BigInt {
    if (nn == 2) return 4;
    if (mm == 2) return pow2(nn + 1) - 4;
    const auto key = std::make_pair(mm, nn);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt v = self(self, mm, nn - 1) + self(self, mm - 1, nn - 1) + pow2(nn - 1);
    memo.emplace(key, v);
    return v;
  };
  return rec(rec, m, n);
}

}  // namespace venn
