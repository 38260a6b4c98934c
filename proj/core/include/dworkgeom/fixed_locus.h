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

#ifndef DWORKGEOM_FIXED_LOCUS_H_
#define DWORKGEOM_FIXED_LOCUS_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dworkgeom/cyclotomic.h"
#include "dworkgeom/dwork.h"
#include "dworkgeom/group.h"
#include "dworkgeom/multipoly.h"

namespace dworkgeom {

// exp(2 pi i * angle) with angle reduced to [0, 1).
BigRational reduce_angle(const BigRational& angle);

struct Eigenspace {
  BigRational angle;
  CyclotomicNumber eigenvalue;
  std::vector<CycloVector> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

// Eigenspaces of the normalized linear lift P_sigma D_a, sorted by angle.
struct EigenspaceDecomposition {
  GroupElement element;
  int conductor = 1;
  std::vector<Eigenspace> spaces;

  // Index of the eigenspace with the given angle, or -1.
  int find(const BigRational& angle) const;
  // Angle of every coordinate eigenline, with multiplicity.
  std::vector<BigRational> spectrum() const;
};

EigenspaceDecomposition eigen_decomposition(const GroupElement& g);

// Generic-lambda sampling. Values must agree on `samples` draws.
struct LambdaPolicy {
  std::uint64_t seed = 0;
  int samples = 3;
  int bound = 97;
  int max_draws = 24;
};

// Random rationals p/q, |p|, q <= bound, avoiding lambda (lambda^(n+1) - 1) = 0.
std::vector<BigRational> draw_lambdas(const LambdaPolicy& policy, int n, int count);
// Runs f on successive draws until one value has been seen policy.samples times.
long lambda_consensus(const LambdaPolicy& policy, int n, const std::function<long(const BigRational&)>& f);

enum class ComponentKind { kIsolatedPoints, kCurve, kFullEigenLine };

std::string to_string(ComponentKind k);

struct FixedComponent {
  ComponentKind kind = ComponentKind::kIsolatedPoints;
  // Index into the eigen decomposition of the element.
  int eigenspace = -1;
  // Number of points for kIsolatedPoints, 1 otherwise.
  int count = 0;
  int genus = 0;
  int eigenspace_dim = 0;
  // Restriction of F_lambda to the eigenspace, formal in lambda.
  MultiPoly restricted{1, 1, true};
  // Exact coordinates when the points are known individually.
  std::vector<CycloVector> points;

  int dimension() const { return kind == ComponentKind::kIsolatedPoints ? 0 : 1; }
  long euler() const;
};

struct FixedLocusReport {
  GroupElement element;
  EigenspaceDecomposition eigen;
  std::vector<FixedComponent> components;
  long euler = 0;

  int point_count() const;
  int curve_count() const;
  std::vector<int> genera() const;
  // Canonical multiset summary, e.g. "P10" or "C0+C6".
  std::string signature() const;
};

FixedLocusReport fixed_locus(const GroupElement& g, const DworkPencil& pencil, const LambdaPolicy& policy = {});
long euler_of_fixed_locus(const FixedLocusReport& report);

// Whether F vanishes at v for every lambda.
bool point_on_pencil(const DworkPencil& pencil, const CycloVector& v);
// Distinct points of P(span) on X_lambda for generic lambda; span has dim 2.
// Returns -1 if P(span) lies on X.
int line_point_count(const DworkPencil& pencil, const std::vector<CycloVector>& span, const LambdaPolicy& policy);

// Image of the vector v under the normalized linear lift of g.
CycloVector apply(const GroupElement& g, const CycloVector& v);

}  // namespace dworkgeom

#endif  // DWORKGEOM_FIXED_LOCUS_H_
