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
#include <map>
#include <numeric>

#include "dworkgeom/cyclo_matrix.h"
#include "dworkgeom/errors.h"
#include "dworkgeom/fixed_locus.h"
#include "dworkgeom/named_groups.h"
#include "dworkgeom/orbifold.h"
#include "support/properties.h"

namespace dworkgeom {
namespace {

const DworkPencil& quintic() {
  static const DworkPencil p(4);
  return p;
}

Subgroup named(const std::string& name) { return Subgroup::generate(4, resolve_group(4, name).generators); }

GroupElement element(const std::string& spec) { return parse_group_spec(4, spec).at(0); }

std::pair<long, long> hodge(const std::string& name) {
  const OrbifoldHodge h = chen_ruan(named(name), quintic());
  return {h.h11(), h.h21()};
}

int common_conductor(const std::vector<CycloVector>& vs) {
  int M = 1;
  for (const auto& v : vs)
    for (const auto& x : v) M = std::lcm(M, x.conductor());
  return M;
}

int span_rank(const std::vector<CycloVector>& vs) {
  const int M = common_conductor(vs);
  CycloMatrix m;
  for (const auto& v : vs) {
    CycloVector row;
    for (const auto& x : v) row.push_back(x.lift(M));
    m.push_back(row);
  }
  return cyclo_rank(m);
}

bool same_span(const std::vector<CycloVector>& a, const std::vector<CycloVector>& b) {
  if (a.size() != b.size()) return false;
  std::vector<CycloVector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return span_rank(both) == static_cast<int>(a.size());
}

const FixedComponent* matching_component(const FixedLocusReport& r, const std::vector<CycloVector>& basis) {
  for (const auto& c : r.components)
    if (same_span(r.eigen.spaces[c.eigenspace].basis, basis)) return &c;
  return nullptr;
}

TEST(PrimeOrderQuotient, ClosedFormExamples) {
  auto q = prime_order_quotient(2, 0, 2, {6, 0}, -200);
  EXPECT_EQ(q.h11, 3);
  EXPECT_EQ(q.h12, 59);
  q = prime_order_quotient(3, 2, 1, {6}, -200);
  EXPECT_EQ(q.h11, 5);
  EXPECT_EQ(q.h12, 49);
  q = prime_order_quotient(5, 10, 0, {}, -200);
  EXPECT_EQ(q.h11, 21);
  EXPECT_EQ(q.h12, 17);
  EXPECT_THROW(prime_order_quotient(4, 0, 0, {}, -200), InputError);
}

TEST(PrimeOrderQuotient, AgreesWithChenRuan) {
  const std::map<std::string, std::pair<long, long>> table = {
      {"Z2", {3, 59}}, {"Z3", {5, 49}}, {"Z5a", {5, 49}}, {"Z5b", {21, 17}}, {"Z5", {1, 21}}, {"Z5c", {1, 21}}};
  for (const auto& [name, want] : table) {
    const Subgroup g = named(name);
    const int p = static_cast<int>(g.order());
    const auto r = fixed_locus(g.generators()[0], quintic());
    const auto q = prime_order_quotient(p, r.point_count(), r.curve_count(), r.genera(), -200);
    EXPECT_EQ(std::make_pair(q.h11, q.h12), want) << name;
    EXPECT_EQ(hodge(name), want) << name;
  }
}

TEST(ChenRuan, RowsThatAgreeWithTheTables) {
  EXPECT_EQ(hodge("D5a"), std::make_pair(3L, 19L));
  EXPECT_EQ(hodge("S3"), std::make_pair(5L, 33L));
  EXPECT_EQ(hodge("G1"), std::make_pair(17L, 21L));
  EXPECT_EQ(hodge("G2"), std::make_pair(49L, 5L));
  EXPECT_EQ(hodge("G3"), std::make_pair(21L, 1L));
  EXPECT_EQ(hodge("Z15"), std::make_pair(17L, 21L));
  EXPECT_EQ(hodge("D5b"), std::make_pair(5L, 33L));
}

TEST(ChenRuan, MirrorPairsSwapHodgeNumbers) {
  auto swap = [](std::pair<long, long> p) { return std::make_pair(p.second, p.first); };
  EXPECT_EQ(hodge("G1"), swap(hodge("Z5b")));
  EXPECT_EQ(hodge("G2"), swap(hodge("Z5a")));
  EXPECT_EQ(hodge("G3"), swap(hodge("Z5c")));
}

TEST(ChenRuan, GridIsSymmetricWithIntegralAges) {
  for (const auto& name : oracle::period_preserving_groups()) {
    const OrbifoldHodge h = chen_ruan(named(name), quintic());
    EXPECT_TRUE(h.symmetric()) << name;
    EXPECT_EQ(h.grid[0][0], 1) << name;
    EXPECT_EQ(h.grid[3][0], 1) << name;
    for (const auto& s : h.sectors) EXPECT_TRUE(s.age == 1 || s.age == 2) << name << " " << s.representative;
  }
}

TEST(ChenRuan, EulerAgreesWithCommutingPairs) {
  for (const auto& name : oracle::period_preserving_groups()) {
    const Subgroup g = named(name);
    const OrbifoldHodge h = chen_ruan(g, quintic());
    EXPECT_EQ(oracle::commuting_pairs_euler(g), BigRational(h.euler())) << name;
  }
}

TEST(ChenRuan, KleinFourByHand) {
  // (-200 - 9*8 + 6*8) / 4: each involution fixes C0+C6 (chi -8), two
  // distinct involutions share 8 fixed points.
  EXPECT_EQ(oracle::commuting_pairs_euler(named("V4")), -56);
  EXPECT_EQ(chen_ruan(named("V4"), quintic()).euler(), -56);
}

TEST(ChenRuan, RefusesOtherAmbients) {
  const DworkPencil k3(3);
  EXPECT_THROW(chen_ruan(Subgroup::generate(3, parse_group_spec(3, "(12)(34)")), k3), InputError);
}

TEST(InvariantCohomology, Examples) {
  EXPECT_EQ(invariant_h12(named("Z2"), quintic()).p12, 53);
  EXPECT_EQ(invariant_h12(named("Z5xZ5"), quintic()).p12, 5);
  EXPECT_EQ(invariant_h12(Subgroup::generate(4, {}), quintic()).p12, 101);
}

TEST(InvariantCohomology, LefschetzIdentity) {
  for (const auto& name : oracle::period_preserving_groups()) {
    const Subgroup g = named(name);
    const InvariantCohomology inv = invariant_h12(g, quintic());
    EXPECT_EQ(inv.p11, 1);
    EXPECT_GE(inv.p12, 0);
    EXPECT_EQ(BigRational(2 * (1 + inv.p11) - (2 + 2 * inv.p12)),
              make_rational(inv.lefschetz_sum, static_cast<long>(inv.group_order)))
        << name;
  }
}

TEST(InvariantCohomology, RejectsPeriodBreakingGroups) {
  EXPECT_ANY_THROW(invariant_h12(Subgroup::generate(4, parse_group_spec(4, "(12)")), quintic()));
}

TEST(Ages, TwoPointsOfTheThreeCycle) {
  const auto r = fixed_locus(element("(123)"), quintic());
  std::vector<BigRational> point_ages;
  for (const auto& c : r.components) {
    if (c.kind == ComponentKind::kIsolatedPoints) point_ages.push_back(age(r, c));
    else EXPECT_EQ(age(r, c), 1);
  }
  std::sort(point_ages.begin(), point_ages.end());
  EXPECT_EQ(point_ages, (std::vector<BigRational>{1, 2}));
}

TEST(Ages, PowersAtAnIsolatedPoint) {
  const GroupElement g = element("h(0,1,1,3,0)");
  const auto r1 = fixed_locus(g, quintic());
  ASSERT_FALSE(r1.components.empty());
  const auto& basis = r1.eigen.spaces[r1.components[0].eigenspace].basis;
  std::vector<BigRational> ages;
  for (int i = 1; i <= 4; ++i) {
    const auto ri = fixed_locus(g.pow(i), quintic());
    const FixedComponent* c = matching_component(ri, basis);
    ASSERT_NE(c, nullptr) << i;
    ages.push_back(age(ri, *c));
  }
  std::sort(ages.begin(), ages.end());
  EXPECT_EQ(ages, (std::vector<BigRational>{1, 1, 2, 2}));
}

TEST(Ages, PairingOverAllNamedSubgroups) {
  const oracle::PropertyResult r = oracle::age_pairing();
  EXPECT_GT(r.checked, 0);
  for (const auto& f : r.failures) ADD_FAILURE() << f;
}

TEST(ComponentQuotient, InvolutionOnTheGenusSixCurve) {
  const auto r = fixed_locus(element("(12)(34)"), quintic());
  const GroupElement c = element("(13)(24)");
  for (const auto& comp : r.components) {
    ASSERT_NE(comp.kind, ComponentKind::kIsolatedPoints);
    ASSERT_EQ(eigenspace_image(r.eigen, c, comp.eigenspace), comp.eigenspace);
    const ComponentAction a = act_on_component(comp, r.eigen.spaces[comp.eigenspace], c, quintic(), {});
    EXPECT_FALSE(a.pointwise);
    // Five points on a = b inside the plane, and (1, 1, -1, -1, 0).
    EXPECT_EQ(a.fixed_points, comp.genus == 6 ? 6 : 2);
  }
}

TEST(ComponentQuotient, PlaneQuinticUnderFreeZ5) {
  const auto r = fixed_locus(element("h(1,4,0,0,0)"), quintic());
  const GroupElement c = element("h(0,0,1,4,0)");
  for (const auto& comp : r.components) {
    if (comp.kind != ComponentKind::kCurve) continue;
    ASSERT_EQ(comp.genus, 6);
    std::vector<GroupElement> stab;
    for (int i = 0; i < 5; ++i) stab.push_back(c.pow(i));
    const CurveQuotient q = component_quotient(comp, r.eigen.spaces[comp.eigenspace], stab, quintic(), {});
    EXPECT_EQ(q.genus, 2);
    EXPECT_EQ(q.kernel, 1u);
  }
}

TEST(ComponentQuotient, TrivialGroupKeepsTheCurve) {
  const auto r = fixed_locus(element("(123)"), quintic());
  for (const auto& comp : r.components) {
    if (comp.kind != ComponentKind::kCurve) continue;
    const CurveQuotient q = component_quotient(comp, r.eigen.spaces[comp.eigenspace], {GroupElement::identity(4)},
                                               quintic(), {});
    EXPECT_EQ(q.genus, comp.genus);
  }
}

}  // namespace
}  // namespace dworkgeom
