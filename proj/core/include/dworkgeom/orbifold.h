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

#ifndef DWORKGEOM_ORBIFOLD_H_
#define DWORKGEOM_ORBIFOLD_H_

#include <array>
#include <string>
#include <vector>

#include "dworkgeom/dwork.h"
#include "dworkgeom/fixed_locus.h"
#include "dworkgeom/group.h"

namespace dworkgeom {

// Angles (in [0,1)) of g acting on the normal space of X^g inside X at a
// generic point of the component, one per normal direction.
std::vector<BigRational> normal_angles(const EigenspaceDecomposition& eigen, const FixedComponent& comp, int degree);
// Sum of the normal angles.
BigRational age(const EigenspaceDecomposition& eigen, const FixedComponent& comp, int degree);
BigRational age(const FixedLocusReport& report, const FixedComponent& comp);
// codim of the component inside X.
int codimension(const FixedComponent& comp, int n);

struct InvariantCohomology {
  long p11 = 1;
  long p12 = 0;
  // Sum of chi(X^g) over all g in G, identity included.
  long lefschetz_sum = 0;
  std::size_t group_order = 1;
};

// Fixed-locus data for every conjugacy class of a group acting on X_lambda.
struct ClassData {
  ConjugacyClass cls;
  FixedLocusReport report;
};

std::vector<ClassData> class_fixed_data(const Subgroup& g, const DworkPencil& pencil, const LambdaPolicy& policy);

InvariantCohomology invariant_h12(const Subgroup& g, const std::vector<ClassData>& data, const DworkPencil& pencil);
InvariantCohomology invariant_h12(const Subgroup& g, const DworkPencil& pencil, const LambdaPolicy& policy = {});

struct QuotientHodge {
  long h11 = 0;
  long h12 = 0;
};

// Closed formula for a prime-order group with m fixed points and k fixed curves.
QuotientHodge prime_order_quotient(int p, long m, long k, const std::vector<int>& genera, long chi_z);

// Action of an element c (commuting with s projectively) on the eigenspaces of s.
// Returns the index of c(E_i) in the decomposition of s.
int eigenspace_image(const EigenspaceDecomposition& s_eigen, const GroupElement& c, int index);

// What an element does to one fixed component.
struct ComponentAction {
  bool pointwise = false;
  // Fixed points on the component when the action is not pointwise.
  long fixed_points = 0;
};

ComponentAction act_on_component(const FixedComponent& comp, const Eigenspace& space, const GroupElement& c,
                                 const DworkPencil& pencil, const LambdaPolicy& policy);

struct CurveQuotient {
  int genus = 0;
  // Elements of the stabilizer fixing the curve pointwise.
  std::size_t kernel = 0;
  long quotient_euler = 0;
};

// Quotient of a curve component by a stabilizing group, by averaging chi(C^c).
CurveQuotient component_quotient(const FixedComponent& comp, const Eigenspace& space,
                                 const std::vector<GroupElement>& stabilizer, const DworkPencil& pencil,
                                 const LambdaPolicy& policy);
// Number of orbits of a stabilizing group on the points of a point component.
long point_orbits(const FixedComponent& comp, const Eigenspace& space, const std::vector<GroupElement>& stabilizer,
                  const DworkPencil& pencil, const LambdaPolicy& policy);

struct SectorContribution {
  std::string representative;
  std::size_t class_size = 0;
  std::size_t centralizer_order = 0;
  ComponentKind kind = ComponentKind::kIsolatedPoints;
  // Eigenvalue angles of the eigenspaces in the component orbit.
  std::vector<BigRational> angles;
  long age = 0;
  // Point orbits, or 1 for a curve orbit.
  long count = 0;
  // Genus of the original curve and of its quotient.
  int genus = 0;
  int quotient_genus = 0;
  long delta_h11 = 0;
  long delta_h21 = 0;
};

struct OrbifoldHodge {
  std::array<std::array<long, 4>, 4> grid{};
  InvariantCohomology invariant;
  std::vector<SectorContribution> sectors;
  std::size_t group_order = 0;
  std::size_t class_count = 0;

  long h11() const { return grid[1][1]; }
  long h21() const { return grid[2][1]; }
  // 2 (h11 - h21), the orbifold Euler number.
  long euler() const { return 2 * (h11() - h21()); }
  bool symmetric() const;
};

OrbifoldHodge chen_ruan(const Subgroup& g, const DworkPencil& pencil, const LambdaPolicy& policy = {});

}  // namespace dworkgeom

#endif  // DWORKGEOM_ORBIFOLD_H_
