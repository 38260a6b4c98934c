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

#ifndef DWORKGEOM_K3_H_
#define DWORKGEOM_K3_H_

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dworkgeom/int_matrix.h"
#include "dworkgeom/multipoly.h"

namespace dworkgeom {

// A line on the Fermat quartic, spanned by its s- and t-vectors over Q(xi_8).
struct FermatLine {
  int index = 0;  // 1..48
  int family = 0;  // 0, 1, 2
  int a = 0;       // 0..3
  int b = 1;       // 1..4
  std::array<CycloVector, 2> span;
};

std::vector<FermatLine> lines_on_fermat();
bool lines_meet(const FermatLine& p, const FermatLine& q);

struct IntegralLattice {
  std::vector<std::string> labels;
  IntMatrix gram;
  BigInt det;
  // Invariant factors different from 1; the discriminant group is their product.
  std::vector<BigInt> discriminant_group;
  Signature sig;

  static IntegralLattice make(std::vector<std::string> labels, IntMatrix gram);
  int rank() const { return gram.rows(); }
  bool is_even() const;
  int length() const { return static_cast<int>(discriminant_group.size()); }
};

// 48 x 48 intersection matrix of the lines; diagonal -2.
IntegralLattice line_intersection_matrix();

// Indices (1-based) of the 20 lines used as a basis of NS(F).
const std::vector<int>& ns_basis_lines();
IntegralLattice ns_fermat();
// Coordinates of a line class in the NS(F) basis.
std::vector<BigInt> line_coordinates(int line);

// x -> M x with (M x)_{perm[i]} = xi_8^{exps[i]} x_i.
struct MonomialMap {
  std::vector<int> perm;
  std::vector<int> exps;

  static MonomialMap identity();
  // "(123)" style cycles followed by optional ";e1,e2,e3,e4" exponents of xi_8, applied first.
  static MonomialMap parse(const std::string& text);
  CycloVector apply(const CycloVector& v) const;
  std::string to_string() const;
};

// Image line index for every line; throws if the map does not permute the lines.
std::vector<int> line_permutation(const MonomialMap& g);

struct LatticeGroupAction {
  std::string name;
  std::vector<MonomialMap> generators;
  std::vector<std::vector<int>> line_perms;
  // Columns are images of the NS(F) basis, in NS(F) coordinates.
  std::vector<IntMatrix> matrices;
  std::size_t group_order = 0;
};

LatticeGroupAction action_on_ns(const std::string& name, const std::vector<MonomialMap>& gens);
LatticeGroupAction h3_action();
LatticeGroupAction s4_action();
LatticeGroupAction a4_action();

// A sublattice of NS(F): basis columns in NS(F) coordinates and induced form.
struct Sublattice {
  IntMatrix basis;
  IntegralLattice lattice;
};

Sublattice sublattice(const IntMatrix& basis, const std::string& prefix);
Sublattice invariant_lattice(const LatticeGroupAction& action);
Sublattice coinvariant_lattice(const LatticeGroupAction& action);
// Orthogonal complement of the columns of vecs inside NS(F).
Sublattice orthogonal_complement(const IntMatrix& vecs, const std::string& prefix);
bool contained_in(const IntMatrix& sub, const IntMatrix& super);

using LineCombination = std::vector<std::pair<int, int>>;  // (coefficient, line)
const std::vector<LineCombination>& omega_h3_generators();
const std::vector<LineCombination>& omega_s4_generators();
std::vector<BigInt> combination_coordinates(const LineCombination& c);
IntMatrix combination_matrix(const std::vector<LineCombination>& cs);
// Smallest saturated-free description: the Z-span of the columns, reduced to a basis.
Sublattice span(const IntMatrix& vecs, const std::string& prefix);

struct XLambdaReport {
  Sublattice ns;
  // det(Z h + Omega_H3) and the ratio to det NS(X_lambda).
  BigInt det_h_plus_omega;
  BigInt det_ratio;
  // v spans the complement of NS(X_lambda) in NS(F).
  std::vector<BigInt> v;
  BigInt v_square;
  bool equals_v_perp = false;
};

XLambdaReport ns_xlambda();
// T(F) + Z v, certified by the discriminant match.
IntegralLattice transcendental_xlambda();
IntegralLattice transcendental_fermat();

struct DiscriminantForm {
  std::vector<BigInt> orders;
  // Generators in the dual, as rational coordinates in the lattice basis.
  std::vector<std::vector<BigRational>> generators;
  // b(beta_i, beta_j) mod 1 off the diagonal, q(beta_i) mod 2 on it.
  std::vector<std::vector<BigRational>> form;
};

DiscriminantForm discriminant_form(const IntegralLattice& l);

bool nikulin_embedding_check(int rank, int length);

struct HalvingResult {
  // b(d_i beta_i, d_j beta_j) in 1/2 Z for all i, j.
  bool half_integral = false;
  // b(d_i beta_i, d_i beta_i) in Z, so the halved lattice is even.
  bool even = false;
  // Both of the above; T = L(2) with L even.
  bool halvable = false;
  std::optional<IntegralLattice> half;
};

HalvingResult twice_lattice_test(const IntegralLattice& t);

}  // namespace dworkgeom

#endif  // DWORKGEOM_K3_H_
