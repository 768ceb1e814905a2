#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "venn/numerics.hpp"

using namespace venn;

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::string str128(i128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  if (neg) v = -v;
  std::string s;
  while (v > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return neg ? "-" + s : s;
}

// Reduced fraction with positive denominator.
struct Frac {
  i128 p = 0;
  i128 q = 1;
  Frac(i128 a = 0, i128 b = 1) : p(a), q(b) {
    if (q < 0) {
      p = -p;
      q = -q;
    }
    const i128 g = gcd128(p, q);
    if (g > 1) {
      p /= g;
      q /= g;
    }
  }
  Frac operator+(const Frac& o) const { return Frac(p * o.q + o.p * q, q * o.q); }
  Frac operator*(const Frac& o) const { return Frac(p * o.p, q * o.q); }
  std::string str() const { return q == 1 ? str128(p) : str128(p) + "/" + str128(q); }
};

// Monomial coefficients of the polynomial through (x_i, y_i), by summing
// Lagrange basis polynomials.
std::vector<Frac> lagrange(const std::vector<i128>& xs, const std::vector<i128>& ys) {
  const std::size_t n = xs.size();
  std::vector<Frac> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Frac> basis{Frac(1)};
    i128 denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Frac> next(basis.size() + 1);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] = next[k + 1] + basis[k];
        next[k] = next[k] + basis[k] * Frac(-xs[j]);
      }
      basis = next;
      denom *= xs[i] - xs[j];
    }
    for (std::size_t k = 0; k < n; ++k) out[k] = out[k] + basis[k] * Frac(ys[i], denom);
  }
  return out;
}

i128 laplace(const std::vector<std::vector<i128>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  i128 total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<i128>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<i128> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(a[r][k]);
      }
      minor.push_back(row);
    }
    const i128 term = a[0][c] * laplace(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

IntMatrix to_big(const std::vector<std::vector<i128>>& a) {
  IntMatrix out;
  for (const auto& row : a) {
    std::vector<BigInt> r;
    for (i128 v : row) r.emplace_back(str128(v));
    out.push_back(r);
  }
  return out;
}

}  // namespace

TEST(BoundCoefficients, ThreeDimensionalValues) {
  const BoundTable t = conj3_coefficients(3);
  ASSERT_EQ(t.coefficients.size(), 2u);
  EXPECT_EQ(to_string(t.coefficients[0]), "0");
  EXPECT_EQ(to_string(t.coefficients[1]), "-4");
}

TEST(BoundCoefficients, PlaneCaseGivesTwoToTheNPlusOneMinusFour) {
  for (int n = 2; n <= 12; ++n) EXPECT_EQ(conj3_bound(2, n), pow2(n + 1) - 4) << n;
}

TEST(BoundCoefficients, MatchLagrangeInterpolation) {
  for (int m = 2; m <= 12; ++m) {
    std::vector<i128> xs, ys;
    for (int k = 2; k <= m; ++k) {
      xs.push_back(k);
      ys.push_back(static_cast<i128>(k) * (i128{1} << (k - 1)) - static_cast<i128>(m) * (i128{1} << k));
    }
    const auto expected = lagrange(xs, ys);
    const auto got = conj3_coefficients(m).coefficients;
    ASSERT_EQ(got.size(), expected.size()) << m;
    for (std::size_t j = 0; j < got.size(); ++j) EXPECT_EQ(to_string(got[j]), expected[j].str()) << "m=" << m << " j=" << j;
  }
}

TEST(BoundCoefficients, PivotOrderDoesNotChangeSolution) {
  for (int m = 3; m <= 9; ++m) {
    std::vector<std::size_t> reversed;
    for (int r = m - 2; r >= 0; --r) reversed.push_back(static_cast<std::size_t>(r));
    EXPECT_EQ(conj3_coefficients(m).coefficients, conj3_coefficients(m, reversed).coefficients) << m;
  }
}

TEST(Bound, ThreeDimensionalFiveSurfaces) { EXPECT_EQ(conj3_bound(3, 5), 76); }

TEST(Bound, ConsistentWithFullReducibilityCountUpToTwelve) {
  for (int m = 2; m <= 12; ++m) EXPECT_TRUE(bound_consistency(m)) << m;
}

TEST(Bound, Preconditions) {
  EXPECT_THROW(conj3_coefficients(1), PreconditionError);
  EXPECT_THROW(conj3_bound(3, 0), PreconditionError);
}

TEST(SolveExact, SingularMatrixThrows) {
  RationalMatrix a{{1, 2}, {2, 4}};
  EXPECT_THROW(solve_exact(a, {1, 2}), Error);
}

TEST(SolveExact, SmallSystem) {
  RationalMatrix a{{2, 1}, {1, 3}};
  const auto x = solve_exact(a, {3, 5}, {1, 0});
  EXPECT_EQ(to_string(x[0]), "4/5");
  EXPECT_EQ(to_string(x[1]), "7/5");
}

TEST(Determinant, MatchesLaplaceOnRandomMatrices) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 7);
    std::vector<std::vector<i128>> a(n, std::vector<i128>(n));
    for (auto& row : a) {
      for (auto& v : row) v = entry(rng);
    }
    if (trial % 5 == 0 && n > 1) a[1] = a[0];  // force some singular cases
    EXPECT_EQ(determinant(to_big(a)).str(), str128(laplace(a))) << "trial " << trial;
  }
}

TEST(Determinant, ZeroPivotNeedsRowSwap) {
  IntMatrix a{{0, 1}, {1, 0}};
  EXPECT_EQ(determinant(a), -1);
}

TEST(DeterminantIdentity, HoldsUpToTwelve) {
  for (int m = 3; m <= 12; ++m) {
    const DetIdentity d = det_identity_check(m);
    EXPECT_TRUE(d.equal) << m;
    EXPECT_EQ(d.lhs, d.rhs);
  }
}

TEST(DeterminantIdentity, BothSidesMatchLaplace) {
  for (int m = 3; m <= 8; ++m) {
    std::vector<std::vector<i128>> left, right;
    for (int k = 2; k <= m; ++k) {
      std::vector<i128> row;
      i128 p = 1;
      for (int j = 0; j <= m - 3; ++j, p *= k) row.push_back(p);
      auto row2 = row;
      row.push_back(static_cast<i128>(k) * (i128{1} << (k - 1)));
      row2.push_back(i128{1} << (k - 1));
      left.push_back(row);
      right.push_back(row2);
    }
    const DetIdentity d = det_identity_check(m);
    EXPECT_EQ(d.lhs.str(), str128(laplace(left))) << m;
    EXPECT_EQ(d.rhs.str(), str128(2 * (m - 1) * laplace(right))) << m;
  }
}

TEST(Recurrence, MatchesIterativeTable) {
  const int M = 12, N = 16;
  std::vector<std::vector<i128>> e(M + 1, std::vector<i128>(N + 1, 0));
  for (int m = 2; m <= M; ++m) e[m][2] = 4;
  for (int n = 2; n <= N; ++n) e[2][n] = (i128{1} << (n + 1)) - 4;
  for (int m = 3; m <= M; ++m) {
    for (int n = 3; n <= N; ++n) e[m][n] = e[m][n - 1] + e[m - 1][n - 1] + (i128{1} << (n - 1));
  }
  for (int m = 2; m <= M; ++m) {
    for (int n = 2; n <= N; ++n) EXPECT_EQ(recurrence_edges(m, n).str(), str128(e[m][n])) << m << "," << n;
  }
}

TEST(Recurrence, AgreesWithBoundInsideRegime) {
  for (int m = 2; m <= 12; ++m) {
    for (int n = 2; n <= m + 1; ++n) EXPECT_EQ(recurrence_edges(m, n), conj3_bound(m, n)) << m << "," << n;
  }
  EXPECT_EQ(recurrence_edges(3, 5), 76);
  EXPECT_THROW(recurrence_edges(1, 3), PreconditionError);
}
