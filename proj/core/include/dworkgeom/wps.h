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

#ifndef DWORKGEOM_WPS_H_
#define DWORKGEOM_WPS_H_

#include <vector>

#include "dworkgeom/rational.h"

namespace dworkgeom {

// Weighted complete intersection X_{d_1..d_c} in W P(a_1, ..., a_N+1).
struct WeightSystem {
  std::vector<long> weights;
  std::vector<long> degrees;

  // W P^n(1, 2, ..., n+1) with one equation of degree n+1.
  static WeightSystem symmetric_quotient(int n);
  // W P^{n+1}(1, 2, ..., n+1, n(n+1)/2) with equations of degree n(n+1) and n+1.
  static WeightSystem double_cover(int n);

  int dimension() const { return static_cast<int>(weights.size()) - 1; }
  int m(long p) const;
  int k(long p) const;
  // dim - c - m(p) + k(p); see the ledger for why this is not dim - c + 1.
  long q(long p) const;
};

struct PrimeCheck {
  long p = 0;
  int m = 0;
  int k = 0;
  long q = 0;
};

struct WellFormedReport {
  std::vector<PrimeCheck> primes;
  bool well_formed = false;
};

WellFormedReport wellformed_check(const WeightSystem& ws);

// gcd of the weights of the nonzero coordinates.
long isotropy_order(const std::vector<long>& weights);

struct AgeQuery {
  int n = 0;
  long k = 2;
  long s = 0;
  long t = 0;
  long a = 0;

  static AgeQuery make(int n, long k);
};

BigRational ageterm(const AgeQuery& q);
// Sum of the b-weights read literally off the weight list: residues of the
// weights other than k, plus [n(n+1)/2]_k, minus [n+1]_k and [n(n+1)]_k.
long agei_sum(const AgeQuery& q);

struct SectorAge {
  long k = 0;
  BigRational age;
};

struct TerminalityWitness {
  int n = 0;
  bool has_crepant_resolution = false;
  // k = 3 sector, present for n >= 5.
  long s = 0;
  long t = 0;
  BigRational age_g;
  long fixed_dim = 0;
  BigRational age_inverse;
  // ageterm for every 2 <= k <= n+1, informational.
  std::vector<SectorAge> sectors;
};

TerminalityWitness terminality_verdict(int n);

}  // namespace dworkgeom

#endif  // DWORKGEOM_WPS_H_
