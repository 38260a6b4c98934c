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

#ifndef DWORKGEOM_TESTS_SUPPORT_PROPERTIES_H_
#define DWORKGEOM_TESTS_SUPPORT_PROPERTIES_H_

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "dworkgeom/dwork.h"
#include "dworkgeom/fixed_locus.h"
#include "dworkgeom/group.h"
#include "dworkgeom/int_matrix.h"

// Independent oracles shared by the unit tests and the acceptance runner.
namespace dworkgeom::oracle {

struct PropertyResult {
  long checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty() && checked > 0; }
};

// Period-preserving named groups on the quintic.
const std::vector<std::string>& period_preserving_groups();
Subgroup named(const std::string& name);

// age(g, F) + age(g^-1, F) = codim F for every nontrivial element of every
// period-preserving named group.
PropertyResult age_pairing();

// Fixed-locus multisets of x and h x h^-1 agree, for random x, h in A5 x| H4.
PropertyResult conjugation_invariance(int samples, std::uint64_t seed);

// Invariant factors of U A V equal those of A for random unimodular U, V.
PropertyResult snf_unimodular_invariance(int trials, std::uint64_t seed);

// Jacobian ring dimensions against direct monomial enumeration, d <= max_d.
PropertyResult jacobian_against_enumeration(int max_d);

long brute_monomials(int nvars, int max_exp, long t);

// Singular points of the cubic fiber at lambda = xi_3^r found by scanning
// (x : y : 1) over {0} and the 9th roots of unity; returned as exponents of xi_3.
std::set<std::vector<int>> scan_cubic_nodes(int r);

// (1/|G|) sum of chi(X^<g,h>) over commuting pairs.
BigRational commuting_pairs_euler(const Subgroup& g);

IntMatrix random_matrix(std::uint64_t& state, int rows, int cols, int bound);

}  // namespace dworkgeom::oracle

#endif  // DWORKGEOM_TESTS_SUPPORT_PROPERTIES_H_
