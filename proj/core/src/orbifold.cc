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

#include "dworkgeom/orbifold.h"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "dworkgeom/cyclo_matrix.h"
#include "dworkgeom/errors.h"

namespace dworkgeom {

namespace {

bool is_prime_int(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

long exact_div(long num, long den, const std::string& what) {
  if (den == 0 || num % den != 0)
    throw ComputationError(what + ": " + std::to_string(num) + "/" + std::to_string(den) + " is not an integer");
  return num / den;
}

long integral_age(const BigRational& a, const std::string& where) {
  if (a.get_den() != 1) throw ComputationError("non-integral age " + a.get_str() + " at " + where);
  return a.get_num().get_si();
}

// Basis vectors (in ambient coordinates) of the joint eigenspaces of c on E.
std::vector<std::vector<CycloVector>> joint_spaces(const Eigenspace& space, const GroupElement& c) {
  const int k = space.dim();
  std::vector<CycloVector> images;
  CycloMatrix m(k, CycloVector(k));
  for (int j = 0; j < k; ++j) {
    const CycloVector w = apply(c, space.basis[j]);
    const std::vector<CyclotomicNumber> coords = cyclo_coordinates(space.basis, w);
    if (coords.empty()) throw ComputationError("element " + c.to_string() + " does not preserve the eigenspace");
    for (int i = 0; i < k; ++i) m[i][j] = coords[i];
  }
  const EigenspaceDecomposition dc = eigen_decomposition(c);
  std::vector<std::vector<CycloVector>> out;
  int total = 0;
  for (const auto& e : dc.spaces) {
    CycloMatrix shifted = m;
    int cond = e.eigenvalue.conductor();
    for (const auto& row : m)
      for (const auto& x : row) cond = std::lcm(cond, x.conductor());
    shifted = lift_matrix(shifted, cond);
    for (int i = 0; i < k; ++i) shifted[i][i] -= e.eigenvalue.lift(cond);
    const std::vector<CycloVector> ker = cyclo_kernel(shifted, k);
    if (ker.empty()) continue;
    std::vector<CycloVector> vecs;
    for (const auto& x : ker) {
      int vc = cond;
      for (const auto& b : space.basis)
        for (const auto& y : b) vc = std::lcm(vc, y.conductor());
      CycloVector v(space.basis[0].size(), CyclotomicNumber::zero(vc));
      for (int j = 0; j < k; ++j)
        for (size_t i = 0; i < v.size(); ++i) v[i] += x[j].lift(vc) * space.basis[j][i].lift(vc);
      vecs.push_back(std::move(v));
    }
    total += static_cast<int>(vecs.size());
    out.push_back(std::move(vecs));
  }
  if (total != k) throw ComputationError("restricted action of " + c.to_string() + " is not diagonalizable");
  return out;
}

}  // namespace

int codimension(const FixedComponent& comp, int n) { return (n - 1) - comp.dimension(); }

std::vector<BigRational> normal_angles(const EigenspaceDecomposition& eigen, const FixedComponent& comp, int degree) {
  const BigRational theta = eigen.spaces.at(comp.eigenspace).angle;
  std::vector<BigRational> rel;
  for (const auto& a : eigen.spectrum()) rel.push_back(reduce_angle(a - theta));
  auto remove_one = [&](const BigRational& x, const char* what) {
    auto it = std::find(rel.begin(), rel.end(), x);
    if (it == rel.end())
      throw ComputationError(std::string("tangent spectrum of ") + eigen.element.to_string() + " lacks the " + what +
                             " eigenvalue");
    rel.erase(it);
  };
  remove_one(BigRational(0), "tautological");
  remove_one(reduce_angle(-theta * degree), "normal");
  for (int i = 0; i < comp.dimension(); ++i) remove_one(BigRational(0), "tangent");
  for (const auto& x : rel)
    if (x == 0) throw ComputationError("fixed component of " + eigen.element.to_string() + " is not isolated in its dimension");
  std::sort(rel.begin(), rel.end());
  return rel;
}

BigRational age(const EigenspaceDecomposition& eigen, const FixedComponent& comp, int degree) {
  BigRational s = 0;
  for (const auto& x : normal_angles(eigen, comp, degree)) s += x;
  return s;
}

BigRational age(const FixedLocusReport& report, const FixedComponent& comp) {
  return age(report.eigen, comp, report.element.n() + 1);
}

std::vector<ClassData> class_fixed_data(const Subgroup& g, const DworkPencil& pencil, const LambdaPolicy& policy) {
  std::vector<ClassData> out;
  for (auto& cls : conjugacy_classes(g)) {
    if (cls.representative.is_identity()) continue;
    FixedLocusReport rep = fixed_locus(cls.representative, pencil, policy);
    out.push_back({std::move(cls), std::move(rep)});
  }
  return out;
}

InvariantCohomology invariant_h12(const Subgroup& g, const std::vector<ClassData>& data, const DworkPencil& pencil) {
  if (pencil.n() != 4) throw InputError("invariant cohomology is implemented for the quintic threefold (n = 4) only");
  for (const auto& gen : g.generators())
    if (!gen.preserves_period()) throw InputError("generator " + gen.to_string() + " does not preserve the period");
  InvariantCohomology inv;
  inv.group_order = g.order();
  inv.lefschetz_sum = euler_characteristic({3, 5}).get_si();
  for (const auto& d : data) inv.lefschetz_sum += static_cast<long>(d.cls.size) * d.report.euler;
  inv.p11 = 1;
  inv.p12 = 1 - exact_div(inv.lefschetz_sum, 2 * static_cast<long>(g.order()), "Lefschetz average");
  return inv;
}

InvariantCohomology invariant_h12(const Subgroup& g, const DworkPencil& pencil, const LambdaPolicy& policy) {
  return invariant_h12(g, class_fixed_data(g, pencil, policy), pencil);
}

QuotientHodge prime_order_quotient(int p, long m, long k, const std::vector<int>& genera, long chi_z) {
  if (!is_prime_int(p)) throw InputError("prime_order_quotient needs a prime order, got " + std::to_string(p));
  if (static_cast<long>(genera.size()) != k) throw InputError("one genus per fixed curve is required");
  long sum_g = 0;
  for (int g : genera) sum_g += g;
  QuotientHodge q;
  q.h11 = 1 + exact_div((p - 1) * m, 2, "point term") + (p - 1) * k;
  q.h12 = 1 - exact_div(chi_z + (p - 1) * (m + 2 * k - 2 * sum_g), 2L * p, "invariant term") + (p - 1) * sum_g;
  return q;
}

int eigenspace_image(const EigenspaceDecomposition& s_eigen, const GroupElement& c, int index) {
  const GroupElement& s = s_eigen.element;
  if (c * s != s * c) throw InputError("element " + c.to_string() + " does not commute with " + s.to_string());
  // lin(c) lin(s) = xi^(c1 - c2) lin(s) lin(c), so c maps E_theta to E_(theta + (c2 - c1)/(n+1)).
  const int c1 = composition_scalar(c, s);
  const int c2 = composition_scalar(s, c);
  const BigRational shift(c2 - c1, s.n() + 1);
  const int j = s_eigen.find(s_eigen.spaces.at(index).angle + shift);
  if (j < 0) throw ComputationError("eigenspace image not found for " + c.to_string());
  return j;
}

ComponentAction act_on_component(const FixedComponent& comp, const Eigenspace& space, const GroupElement& c,
                                 const DworkPencil& pencil, const LambdaPolicy& policy) {
  ComponentAction act;
  if (space.dim() == 1) {
    act.pointwise = true;
    act.fixed_points = comp.count;
    return act;
  }
  const auto joint = joint_spaces(space, c);
  if (joint.size() == 1) {
    act.pointwise = true;
    act.fixed_points = comp.kind == ComponentKind::kIsolatedPoints ? comp.count : 0;
    return act;
  }
  for (const auto& w : joint) {
    if (w.size() == 1) {
      if (comp.kind == ComponentKind::kFullEigenLine || point_on_pencil(pencil, w[0])) ++act.fixed_points;
    } else if (w.size() == 2 && comp.kind == ComponentKind::kCurve) {
      const int cnt = line_point_count(pencil, w, policy);
      if (cnt < 0) throw ComputationError("a fixed plane curve contains a line; the curve is not smooth");
      act.fixed_points += cnt;
    } else {
      throw ComputationError("unexpected joint eigenspace of dimension " + std::to_string(w.size()));
    }
  }
  return act;
}

CurveQuotient component_quotient(const FixedComponent& comp, const Eigenspace& space,
                                 const std::vector<GroupElement>& stabilizer, const DworkPencil& pencil,
                                 const LambdaPolicy& policy) {
  if (comp.kind == ComponentKind::kIsolatedPoints) throw InputError("component_quotient needs a curve component");
  if (stabilizer.empty()) throw InputError("stabilizer must contain the identity");
  long sum = 0;
  CurveQuotient q;
  for (const auto& c : stabilizer) {
    const ComponentAction a = c.is_identity() ? ComponentAction{true, 0} : act_on_component(comp, space, c, pencil, policy);
    if (a.pointwise) {
      ++q.kernel;
      sum += comp.euler();
    } else {
      sum += a.fixed_points;
    }
  }
  q.quotient_euler = exact_div(sum, static_cast<long>(stabilizer.size()), "Riemann-Hurwitz average");
  const long two_g = 2 - q.quotient_euler;
  if (two_g < 0 || two_g % 2 != 0)
    throw ComputationError("Riemann-Hurwitz inconsistency: quotient Euler number " + std::to_string(q.quotient_euler));
  q.genus = static_cast<int>(two_g / 2);
  return q;
}

long point_orbits(const FixedComponent& comp, const Eigenspace& space, const std::vector<GroupElement>& stabilizer,
                  const DworkPencil& pencil, const LambdaPolicy& policy) {
  if (comp.kind != ComponentKind::kIsolatedPoints) throw InputError("point_orbits needs a point component");
  long sum = 0;
  for (const auto& c : stabilizer)
    sum += c.is_identity() ? comp.count : act_on_component(comp, space, c, pencil, policy).fixed_points;
  return exact_div(sum, static_cast<long>(stabilizer.size()), "Burnside count");
}

bool OrbifoldHodge::symmetric() const {
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      if (grid[p][q] != grid[q][p] || grid[p][q] != grid[3 - p][3 - q]) return false;
  return true;
}

OrbifoldHodge chen_ruan(const Subgroup& g, const DworkPencil& pencil, const LambdaPolicy& policy) {
  if (pencil.n() != 4) throw InputError("chen_ruan is implemented for the quintic threefold (n = 4) only");
  const std::vector<ClassData> data = class_fixed_data(g, pencil, policy);
  OrbifoldHodge out;
  out.group_order = g.order();
  out.class_count = data.size() + 1;
  out.invariant = invariant_h12(g, data, pencil);
  auto& h = out.grid;
  h[0][0] = h[3][3] = h[3][0] = h[0][3] = 1;
  h[1][1] = h[2][2] = out.invariant.p11;
  h[2][1] = h[1][2] = out.invariant.p12;
  const int degree = pencil.degree();
  for (const auto& d : data) {
    const GroupElement& s = d.cls.representative;
    const FixedLocusReport& rep = d.report;
    if (rep.components.empty()) continue;
    const Subgroup cent = centralizer(s, g);
    std::map<int, int> comp_at;
    for (size_t i = 0; i < rep.components.size(); ++i) comp_at[rep.components[i].eigenspace] = static_cast<int>(i);
    // Orbits of the centralizer on component eigenspaces.
    std::map<int, int> parent;
    for (const auto& [e, i] : comp_at) parent[e] = e;
    std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
    std::vector<std::vector<int>> image(cent.order());
    for (size_t ci = 0; ci < cent.order(); ++ci) {
      const GroupElement& c = cent.elements()[ci];
      for (const auto& [e, i] : comp_at) {
        const int f = eigenspace_image(rep.eigen, c, e);
        if (!comp_at.count(f) || rep.components[comp_at[f]].kind != rep.components[i].kind)
          throw ComputationError("centralizer element " + c.to_string() + " does not permute fixed components");
        image[ci].push_back(f);
        parent[root(e)] = root(f);
      }
    }
    std::map<int, std::vector<int>> orbits;
    for (const auto& [e, i] : comp_at) orbits[root(e)].push_back(e);
    for (const auto& [r, members] : orbits) {
      const int e0 = members.front();
      const FixedComponent& comp = rep.components[comp_at[e0]];
      const Eigenspace& space = rep.eigen.spaces[e0];
      const long a = integral_age(age(rep.eigen, comp, degree), s.to_string());
      for (int e : members) {
        const long other = integral_age(age(rep.eigen, rep.components[comp_at[e]], degree), s.to_string());
        if (other != a) throw ComputationError("ages differ inside a centralizer orbit of " + s.to_string());
      }
      std::vector<GroupElement> stab;
      const int slot = static_cast<int>(std::distance(comp_at.begin(), comp_at.find(e0)));
      for (size_t ci = 0; ci < cent.order(); ++ci)
        if (image[ci][slot] == e0) stab.push_back(cent.elements()[ci]);
      SectorContribution sc;
      sc.representative = s.to_string();
      sc.class_size = d.cls.size;
      sc.centralizer_order = cent.order();
      sc.kind = comp.kind;
      for (int e : members) sc.angles.push_back(rep.eigen.spaces[e].angle);
      sc.age = a;
      if (comp.kind == ComponentKind::kIsolatedPoints) {
        sc.count = point_orbits(comp, space, stab, pencil, policy);
        if (a < 0 || a > 3) throw ComputationError("point age out of range");
        h[a][a] += sc.count;
        if (a == 1) sc.delta_h11 = sc.count;
      } else {
        const CurveQuotient q = component_quotient(comp, space, stab, pencil, policy);
        sc.count = 1;
        sc.genus = comp.genus;
        sc.quotient_genus = q.genus;
        if (a < 0 || a > 2) throw ComputationError("curve age out of range");
        h[a][a] += 1;
        h[a + 1][a + 1] += 1;
        h[a + 1][a] += q.genus;
        h[a][a + 1] += q.genus;
        if (a == 1) {
          sc.delta_h11 = 1;
          sc.delta_h21 = q.genus;
        }
      }
      out.sectors.push_back(std::move(sc));
    }
  }
  return out;
}

}  // namespace dworkgeom
