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

#include "dworkgeom/errors.h"
#include "dworkgeom/k3.h"
#include "dworkgeom/multipoly.h"

namespace dworkgeom {
namespace {

std::vector<long> group_of(const IntegralLattice& l) {
  std::vector<long> out;
  for (const auto& f : l.discriminant_group) out.push_back(f.get_si());
  std::sort(out.begin(), out.end());
  return out;
}

BigInt pair(const IntMatrix& g, const std::vector<BigInt>& x, const std::vector<BigInt>& y) {
  BigInt s = 0;
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) s += x[i] * g(i, j) * y[j];
  return s;
}

std::vector<BigInt> add(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

// Sum of the four lines cut by the plane (family f, parameter a).
std::vector<BigInt> plane_section(int family, int a) {
  std::vector<BigInt> h(20, 0);
  for (int b = 1; b <= 4; ++b) h = add(h, line_coordinates(16 * family + 4 * a + b));
  return h;
}

// T = L(2) with L even, by scanning x, y in a box: T(x, y) even, T(x, x) = 0 mod 4.
bool brute_halvable(const IntMatrix& t) {
  const int r = t.rows();
  std::vector<std::vector<BigInt>> box;
  std::vector<int> c(r, -2);
  for (;;) {
    std::vector<BigInt> v(c.begin(), c.end());
    box.push_back(v);
    int i = 0;
    while (i < r && ++c[i] > 2) c[i++] = -2;
    if (i == r) break;
  }
  for (const auto& x : box) {
    if (pair(t, x, x) % 4 != 0) return false;
    for (const auto& y : box)
      if (pair(t, x, y) % 2 != 0) return false;
  }
  return true;
}

TEST(Lines, FortyEightLinesOnF) {
  const auto lines = lines_on_fermat();
  ASSERT_EQ(lines.size(), 48u);
  MultiPoly f(4, 8);
  for (int i = 0; i < 4; ++i) {
    MultiPoly::Exponent e(4, 0);
    e[i] = 4;
    f.add_term(e, CyclotomicNumber::one(8));
  }
  for (const auto& l : lines) EXPECT_TRUE(poly_restrict(f, {l.span[0], l.span[1]}).is_zero()) << l.index;
}

// x0 = u x1, x3 = w x2 meets the three lines sharing u, the three sharing w,
// and for each u' exactly one line x3 = w' x0, x1 = u' x2 (w = w' u u'), the
// same again for the third family: 6 + 4 + 4.
TEST(Lines, EachLineMeetsFourteenOthers) {
  const IntegralLattice m = line_intersection_matrix();
  ASSERT_EQ(m.rank(), 48);
  for (int i = 0; i < 48; ++i) {
    int meets = 0;
    for (int j = 0; j < 48; ++j) {
      if (i == j) {
        EXPECT_EQ(m.gram(i, i), -2);
        continue;
      }
      EXPECT_TRUE(m.gram(i, j) == 0 || m.gram(i, j) == 1);
      meets += m.gram(i, j) == 1;
    }
    EXPECT_EQ(meets, 14) << i + 1;
  }
}

TEST(Lines, HyperplaneClass) {
  const IntMatrix& g = ns_fermat().gram;
  const auto h = plane_section(0, 0);
  EXPECT_EQ(pair(g, h, h), 4);
  for (int f = 0; f < 3; ++f)
    for (int a = 0; a < 4; ++a) EXPECT_EQ(plane_section(f, a), h) << f << " " << a;
  for (int l = 1; l <= 48; ++l) EXPECT_EQ(pair(g, h, line_coordinates(l)), 1) << l;
}

TEST(Lines, CoordinatesReproduceIncidences) {
  const IntegralLattice m = line_intersection_matrix();
  const IntMatrix& g = ns_fermat().gram;
  for (int i = 1; i <= 48; i += 5)
    for (int j = 1; j <= 48; ++j)
      EXPECT_EQ(pair(g, line_coordinates(i), line_coordinates(j)), m.gram(i - 1, j - 1)) << i << " " << j;
}

TEST(NeronSeveri, FermatQuartic) {
  const IntegralLattice ns = ns_fermat();
  EXPECT_EQ(ns.rank(), 20);
  EXPECT_EQ(ns.det, -64);
  EXPECT_EQ(group_of(ns), (std::vector<long>{8, 8}));
  EXPECT_EQ(ns.sig.positive, 1);
  EXPECT_EQ(ns.sig.negative, 19);
  EXPECT_TRUE(ns.is_even());
  const IntegralLattice t = transcendental_fermat();
  EXPECT_EQ(group_of(t), group_of(ns));
  EXPECT_EQ(BigInt(abs(t.det)), BigInt(abs(ns.det)));
}

TEST(GroupActions, GeneratorsPreserveTheForm) {
  const IntMatrix& g = ns_fermat().gram;
  for (const auto& act : {h3_action(), s4_action(), a4_action()})
    for (const auto& m : act.matrices) EXPECT_EQ(m.transpose() * g * m, g) << act.name;
}

TEST(GroupActions, OrdersAndRanks) {
  struct Want {
    LatticeGroupAction act;
    size_t order;
    int inv_rank;
    int omega_rank;
    std::vector<long> group;
  };
  const std::vector<Want> want = {{h3_action(), 16, 2, 18, {2, 2, 8, 8}},
                                  {s4_action(), 24, 3, 17, {4, 12, 12}},
                                  {a4_action(), 12, 4, 16, {2, 2, 12, 12}}};
  for (const auto& w : want) {
    EXPECT_EQ(w.act.group_order, w.order) << w.act.name;
    const Sublattice inv = invariant_lattice(w.act), om = coinvariant_lattice(w.act);
    EXPECT_EQ(inv.lattice.rank(), w.inv_rank) << w.act.name;
    EXPECT_EQ(om.lattice.rank(), w.omega_rank) << w.act.name;
    EXPECT_EQ(inv.lattice.rank() + om.lattice.rank(), 20) << w.act.name;
    EXPECT_EQ(group_of(om.lattice), w.group) << w.act.name;
    EXPECT_EQ(om.lattice.sig.positive, 0) << w.act.name;
  }
}

TEST(GroupActions, CoinvariantsOfA4InsideS4) {
  EXPECT_TRUE(contained_in(coinvariant_lattice(a4_action()).basis, coinvariant_lattice(s4_action()).basis));
  EXPECT_FALSE(contained_in(coinvariant_lattice(s4_action()).basis, coinvariant_lattice(a4_action()).basis));
}

TEST(GroupActions, ListedGeneratorsSpanTheCoinvariants) {
  const Sublattice h3 = coinvariant_lattice(h3_action());
  const Sublattice bspan = span(combination_matrix(omega_h3_generators()), "b");
  EXPECT_EQ(omega_h3_generators().size(), 18u);
  EXPECT_EQ(bspan.lattice.rank(), h3.lattice.rank());
  EXPECT_EQ(bspan.lattice.det, h3.lattice.det);
  EXPECT_TRUE(contained_in(bspan.basis, h3.basis));
  EXPECT_TRUE(contained_in(h3.basis, bspan.basis));

  const Sublattice s4 = coinvariant_lattice(s4_action());
  const Sublattice dspan = span(combination_matrix(omega_s4_generators()), "d");
  EXPECT_EQ(omega_s4_generators().size(), 17u);
  EXPECT_EQ(dspan.lattice.rank(), s4.lattice.rank());
  EXPECT_EQ(dspan.lattice.det, s4.lattice.det);
}

TEST(XLambda, NeronSeveriAndIndexTwo) {
  const XLambdaReport x = ns_xlambda();
  EXPECT_EQ(x.ns.lattice.rank(), 19);
  EXPECT_EQ(group_of(x.ns.lattice), (std::vector<long>{4, 8, 8}));
  EXPECT_EQ(x.det_ratio, 4);
  EXPECT_EQ(x.v_square, -4);
  EXPECT_TRUE(x.equals_v_perp);
  EXPECT_EQ(x.ns.lattice.sig.positive, 1);
}

TEST(XLambda, TranscendentalLatticeIsKummer) {
  const IntegralLattice t = transcendental_xlambda();
  EXPECT_EQ(t.rank(), 3);
  EXPECT_EQ(group_of(t), (std::vector<long>{4, 8, 8}));
  const HalvingResult r = twice_lattice_test(t);
  EXPECT_TRUE(r.halvable);
  ASSERT_TRUE(r.half.has_value());
  EXPECT_TRUE(r.half->is_even());
  EXPECT_EQ(BigInt(abs(r.half->det)) * 8, BigInt(abs(t.det)));
}

TEST(DiscriminantForm, OrdersAndSymmetry) {
  const DiscriminantForm d = discriminant_form(transcendental_xlambda());
  std::vector<long> orders;
  for (const auto& o : d.orders) orders.push_back(o.get_si());
  std::sort(orders.begin(), orders.end());
  EXPECT_EQ(orders, (std::vector<long>{4, 8, 8}));
  for (size_t i = 0; i < d.form.size(); ++i)
    for (size_t j = 0; j < d.form.size(); ++j) {
      EXPECT_EQ(d.form[i][j], d.form[j][i]);
      EXPECT_GE(d.form[i][j], 0);
      EXPECT_LT(d.form[i][j], i == j ? 2 : 1);
    }
}

TEST(Halving, Examples) {
  const HalvingResult f = twice_lattice_test(IntegralLattice::make({"a", "b"}, IntMatrix{{8, 0}, {0, 8}}));
  EXPECT_TRUE(f.halvable);
  ASSERT_TRUE(f.half.has_value());
  EXPECT_EQ(f.half->gram, (IntMatrix{{4, 0}, {0, 4}}));
  const HalvingResult g = twice_lattice_test(IntegralLattice::make({"a", "b"}, IntMatrix{{2, 0}, {0, 6}}));
  EXPECT_FALSE(g.halvable);
  EXPECT_TRUE(g.half_integral);
  EXPECT_FALSE(g.even);
  EXPECT_THROW(twice_lattice_test(IntegralLattice::make({"a", "b"}, IntMatrix{{2, 0}, {0, 3}})), InputError);
}

TEST(Halving, AgreesWithBruteForceOnSmallLattices) {
  int tested = 0, halvable = 0;
  for (long a = 2; a <= 24; ++a)
    for (long b = a; b <= 24; ++b)
      for (long c : {0L, 1L, 2L, 3L, 4L}) {
        if (c * c >= a * b) continue;
        const IntMatrix t{{a, c}, {c, b}};
        const IntegralLattice l = IntegralLattice::make({"x", "y"}, t);
        if (l.length() != l.rank()) {
          EXPECT_THROW(twice_lattice_test(l), InputError);
          continue;
        }
        const bool got = twice_lattice_test(l).halvable;
        EXPECT_EQ(got, brute_halvable(t)) << t.to_string();
        ++tested;
        halvable += got;
      }
  EXPECT_GT(tested, 50);
  EXPECT_GT(halvable, 5);
  EXPECT_LT(halvable, tested);
}

TEST(Nikulin, EmbeddingBound) {
  EXPECT_TRUE(nikulin_embedding_check(19, 1));
  EXPECT_FALSE(nikulin_embedding_check(19, 3));
  EXPECT_TRUE(nikulin_embedding_check(18, 2));
  EXPECT_FALSE(nikulin_embedding_check(18, 3));
}

TEST(MonomialMap, ParseAndPermuteLines) {
  const MonomialMap m = MonomialMap::parse("(123);0,0,4,4");
  EXPECT_EQ(MonomialMap::parse(m.to_string()).to_string(), m.to_string());
  const auto perm = line_permutation(m);
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> want(48);
  std::iota(want.begin(), want.end(), 0);
  EXPECT_EQ(sorted, want);
  EXPECT_ANY_THROW(line_permutation(MonomialMap::parse(";1,0,0,0")));
}

}  // namespace
}  // namespace dworkgeom
