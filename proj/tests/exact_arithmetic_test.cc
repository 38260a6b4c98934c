// Copyright 2026 The dworkgeom Authors.
//
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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "dworkgeom/cyclo_matrix.h"
#include "dworkgeom/cyclotomic.h"
#include "dworkgeom/errors.h"
#include "dworkgeom/int_matrix.h"
#include "dworkgeom/multipoly.h"
#include "dworkgeom/unipoly.h"
#include "support/properties.h"

namespace dworkgeom {
namespace {

// Leibniz expansion, fine for n <= 6.
BigInt leibniz_det(const IntMatrix& a) {
  const int n = a.rows();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  BigInt total = 0;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inv;
    BigInt t = 1;
    for (int i = 0; i < n; ++i) t *= a(i, p[i]);
    if (inv % 2) total -= t; else total += t;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

IntMatrix random_matrix(std::mt19937_64& rng, int r, int c, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Product of random elementary operations.
IntMatrix random_unimodular(std::mt19937_64& rng, int n, int steps) {
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<int> pick(0, n - 1), mult(-3, 3), kind(0, 2);
  for (int s = 0; s < steps; ++s) {
    const int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    IntMatrix e = IntMatrix::identity(n);
    switch (kind(rng)) {
      case 0: e(i, j) = mult(rng); break;
      case 1: e(i, i) = 0; e(j, j) = 0; e(i, j) = 1; e(j, i) = 1; break;
      default: e(i, i) = -1; break;
    }
    u = e * u;
  }
  return u;
}

bool is_unimodular(const IntMatrix& u) {
  const BigInt d = determinant(u);
  return d == 1 || d == -1;
}

void check_smith(const IntMatrix& a) {
  const SmithForm s = smith_normal_form(a);
  ASSERT_TRUE(is_unimodular(s.u));
  ASSERT_TRUE(is_unimodular(s.v));
  ASSERT_EQ(s.u * a * s.v, s.d);
  for (int i = 0; i < s.d.rows(); ++i)
    for (int j = 0; j < s.d.cols(); ++j)
      if (i != j) ASSERT_EQ(s.d(i, j), 0);
  ASSERT_EQ(static_cast<int>(s.invariant_factors.size()), s.rank);
  for (int i = 0; i < s.rank; ++i) {
    ASSERT_GT(s.invariant_factors[i], 0);
    ASSERT_EQ(s.d(i, i), s.invariant_factors[i]);
    if (i + 1 < s.rank) ASSERT_EQ(s.invariant_factors[i + 1] % s.invariant_factors[i], 0);
  }
}

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(make_rational(6, -4), BigRational(-3, 2));
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(3, 5), 0);
}

TEST(Cyclotomic, RootsOfUnityAndInverses) {
  for (int m : {1, 2, 3, 4, 5, 8, 9, 12, 15, 20}) {
    const auto z = CyclotomicNumber::root_of_unity(m, 1);
    EXPECT_TRUE(z.pow(m).is_one()) << m;
    CyclotomicNumber s = CyclotomicNumber::zero(m);
    for (int k = 0; k < m; ++k) s += CyclotomicNumber::root_of_unity(m, k);
    if (m > 1) EXPECT_TRUE(s.is_zero()) << m;
    const auto a = z + CyclotomicNumber::rational(m, BigRational(3, 7));
    if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one()) << m;
  }
}

TEST(Cyclotomic, LiftIsAHomomorphism) {
  const auto a = CyclotomicNumber::root_of_unity(5, 2) + CyclotomicNumber::rational(5, 2);
  const auto b = CyclotomicNumber::root_of_unity(5, 3);
  EXPECT_EQ((a * b).lift(20), a.lift(20) * b.lift(20));
  EXPECT_EQ(CyclotomicNumber::root_of_unity(4, 1).lift(20), CyclotomicNumber::root_of_unity(20, 5));
}

TEST(Cyclotomic, MixedFieldsAreRejected) {
  const auto a = CyclotomicNumber::root_of_unity(5, 1);
  const auto b = CyclotomicNumber::root_of_unity(8, 1);
  EXPECT_ANY_THROW(a + b);
}

TEST(MultiPoly, RestrictionToALine) {
  // x^2 - y^2 vanishes on the span of (1, 1).
  MultiPoly x = MultiPoly::variable(2, 0, 1), y = MultiPoly::variable(2, 1, 1);
  MultiPoly f = x * x - y * y;
  CycloVector v{CyclotomicNumber::one(1), CyclotomicNumber::one(1)};
  EXPECT_TRUE(poly_restrict(f, {v}).is_zero());
  EXPECT_EQ(f.derivative(0), x * CyclotomicNumber::rational(1, 2));
  EXPECT_EQ(f.degree(), 2);
}

TEST(UniPoly, GcdOfProducts) {
  const int m = 5;
  auto r = [&](int k) { return CyclotomicNumber::root_of_unity(m, k); };
  const UniPoly a = UniPoly::from_roots(m, {r(1), r(2), r(3)});
  const UniPoly b = UniPoly::from_roots(m, {r(2), r(3), r(4)});
  EXPECT_EQ(gcd(a, b).monic(), UniPoly::from_roots(m, {r(2), r(3)}));
}

TEST(IntMatrix, DeterminantAgreesWithLeibniz) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 6;
    const IntMatrix a = random_matrix(rng, n, n, 9);
    EXPECT_EQ(determinant(a), leibniz_det(a));
  }
}

TEST(SmithNormalForm, KnownExamples) {
  const SmithForm s = smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  EXPECT_EQ(s.invariant_factors, (std::vector<BigInt>{2, 6, 12}));
  const SmithForm z = smith_normal_form(IntMatrix{{0, 0}, {0, 0}});
  EXPECT_EQ(z.rank, 0);
  const SmithForm r = smith_normal_form(IntMatrix{{1, 2, 3}, {2, 4, 6}});
  EXPECT_EQ(r.rank, 1);
}

TEST(SmithNormalForm, RandomMatricesSatisfyTheDecomposition) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    std::uniform_int_distribution<int> dim(1, 7);
    check_smith(random_matrix(rng, dim(rng), dim(rng), 12));
  }
}

TEST(SmithNormalForm, InvariantUnderUnimodularChange) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> dim(1, 6);
    const int r = dim(rng), c = dim(rng);
    const IntMatrix a = random_matrix(rng, r, c, 10);
    const IntMatrix b = random_unimodular(rng, r, 12) * a * random_unimodular(rng, c, 12);
    const SmithForm sa = smith_normal_form(a), sb = smith_normal_form(b);
    EXPECT_EQ(sa.invariant_factors, sb.invariant_factors);
    EXPECT_EQ(sa.rank, sb.rank);
  }
}

TEST(SmithNormalForm, SharedInvarianceSuite) {
  const oracle::PropertyResult r = oracle::snf_unimodular_invariance(200, 5);
  EXPECT_EQ(r.checked, 200);
  for (const auto& f : r.failures) ADD_FAILURE() << f;
}

TEST(SmithNormalForm, ProductOfFactorsIsTheDeterminant) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 5;
    const IntMatrix a = random_matrix(rng, n, n, 15);
    const SmithForm s = smith_normal_form(a);
    BigInt prod = s.rank == n ? 1 : 0;
    if (s.rank == n)
      for (const auto& f : s.invariant_factors) prod *= f;
    EXPECT_EQ(prod, BigInt(abs(leibniz_det(a))));
  }
}

TEST(IntMatrix, KernelIsSaturated) {
  const IntMatrix a{{2, 4, 6}};
  const IntMatrix k = integer_kernel(a);
  ASSERT_EQ(k.cols(), 2);
  const IntMatrix zero = a * k;
  for (int j = 0; j < k.cols(); ++j) EXPECT_EQ(zero(0, j), 0);
  EXPECT_EQ(smith_normal_form(k).invariant_factors, (std::vector<BigInt>{1, 1}));
}

TEST(IntMatrix, SolveRationalAndSignature) {
  const IntMatrix a{{2, 1}, {1, 3}};
  const auto x = solve_rational(a, {1, 2});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], BigRational(1, 5));
  EXPECT_EQ((*x)[1], BigRational(3, 5));
  EXPECT_FALSE(solve_rational(IntMatrix{{1, 1}, {1, 1}}, {0, 1}).has_value());
  const Signature s = signature(IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -2}});
  EXPECT_EQ(s.positive, 1);
  EXPECT_EQ(s.negative, 2);
  EXPECT_EQ(s.zero, 0);
}

TEST(CycloMatrix, RankAndKernel) {
  const int m = 3;
  auto w = [&](int k) { return CyclotomicNumber::root_of_unity(m, k); };
  CycloMatrix a{{w(0), w(1)}, {w(1), w(2)}};
  EXPECT_EQ(cyclo_rank(a), 1);
  const auto ker = cyclo_kernel(a, 2);
  ASSERT_EQ(ker.size(), 1u);
  EXPECT_TRUE((w(0) * ker[0][0] + w(1) * ker[0][1]).is_zero());
}

}  // namespace
}  // namespace dworkgeom
