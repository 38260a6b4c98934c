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

#include <set>

#include "dworkgeom/dwork.h"
#include "dworkgeom/errors.h"
#include "support/properties.h"

namespace dworkgeom {
namespace {

using oracle::brute_monomials;

TEST(Hodge, QuinticThreefold) {
  const HodgeDiamond hd = hodge_diamond({3, 5});
  EXPECT_EQ(hd.h[2][1], 101);
  EXPECT_EQ(hd.h[1][2], 101);
  EXPECT_EQ(hd.h[1][1], 1);
  EXPECT_EQ(hd.h[3][0], 1);
  EXPECT_EQ(hd.euler, -200);
}

TEST(Hodge, SexticFourfold) {
  const HodgeDiamond hd = hodge_diamond({4, 6});
  EXPECT_EQ(hd.h[3][1], 426);
  EXPECT_EQ(hd.h[2][2], 1752);
  EXPECT_EQ(hd.h[4][0], 1);
  EXPECT_EQ(hd.euler, 2610);
}

TEST(Hodge, QuarticSurface) {
  const HodgeDiamond hd = hodge_diamond({2, 4});
  EXPECT_EQ(hd.h[1][1], 20);
  EXPECT_EQ(hd.h[2][0], 1);
  EXPECT_EQ(hd.euler, 24);
}

TEST(Hodge, BettiSumIsEuler) {
  for (int m = 1; m <= 5; ++m)
    for (int d = 1; d <= 7; ++d) {
      const HodgeDiamond hd = hodge_diamond({m, d});
      BigInt alt = 0;
      for (int k = 0; k <= 2 * m; ++k) alt += (k % 2 ? -1 : 1) * hd.betti(k);
      EXPECT_EQ(alt, hd.euler) << "m=" << m << " d=" << d;
      EXPECT_EQ(hd.betti(m), middle_betti({m, d})) << "m=" << m << " d=" << d;
    }
}

TEST(Hodge, JacobianRingAgainstMonomialEnumeration) {
  const oracle::PropertyResult r = oracle::jacobian_against_enumeration(7);
  EXPECT_GT(r.checked, 0);
  for (const auto& f : r.failures) ADD_FAILURE() << f;
}

TEST(Hodge, BoundedMonomialCount) {
  for (int nv = 1; nv <= 5; ++nv)
    for (int e = 0; e <= 5; ++e)
      for (long t = 0; t <= 12; ++t) EXPECT_EQ(bounded_monomial_count(nv, e, t), brute_monomials(nv, e, t));
}

TEST(Hodge, RejectsBadClass) {
  EXPECT_THROW(hodge_diamond({0, 5}), InputError);
}

TEST(SingularFibers, CountsForSeveralN) {
  for (int n = 2; n <= 6; ++n) {
    const SingularFiberReport rep = singular_fibers(n);
    ASSERT_EQ(static_cast<int>(rep.fibers.size()), n + 1);
    BigInt want;
    mpz_ui_pow_ui(want.get_mpz_t(), n + 1, n - 1);
    for (const auto& f : rep.fibers) EXPECT_EQ(f.node_count, want);
  }
}

TEST(SingularFibers, EnumeratedNodesMatchScanForCubics) {
  const SingularFiberReport rep = singular_fibers(2, true);
  for (const auto& f : rep.fibers) {
    std::set<std::vector<int>> listed(f.nodes.begin(), f.nodes.end());
    EXPECT_EQ(listed.size(), f.nodes.size());
    EXPECT_EQ(listed, oracle::scan_cubic_nodes(f.r)) << "r=" << f.r;
    EXPECT_EQ(static_cast<long>(listed.size()), f.node_count.get_si());
  }
}

TEST(SingularFibers, EnumeratedNodesAreSingularForQuartics) {
  const SingularFiberReport rep = singular_fibers(3, true);
  const DworkPencil pencil(3);
  for (const auto& f : rep.fibers) {
    ASSERT_EQ(static_cast<long>(f.nodes.size()), f.node_count.get_si());
    const CyclotomicNumber lambda = CyclotomicNumber::root_of_unity(4, f.r);
    for (const auto& idx : f.nodes) {
      CycloVector v;
      for (int i : idx) v.push_back(CyclotomicNumber::root_of_unity(4, i));
      v.push_back(CyclotomicNumber::one(4));
      for (int i = 0; i < 4; ++i) {
        const auto val = pencil.fermat_part().derivative(i).evaluate(v).lift(4) +
                         lambda * pencil.product_part().derivative(i).evaluate(v).lift(4);
        EXPECT_TRUE(val.is_zero());
      }
    }
  }
}

TEST(DworkPencil, Shape) {
  const DworkPencil p(4);
  EXPECT_EQ(p.degree(), 5);
  EXPECT_EQ(p.polynomial().lambda_degree(), 1);
  EXPECT_EQ(p.fermat_part().terms().size(), 5u);
  EXPECT_THROW(DworkPencil(1), InputError);
}

}  // namespace
}  // namespace dworkgeom
