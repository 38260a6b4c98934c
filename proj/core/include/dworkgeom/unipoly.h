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

#ifndef DWORKGEOM_UNIPOLY_H_
#define DWORKGEOM_UNIPOLY_H_

#include <string>
#include <utility>
#include <vector>

#include "dworkgeom/cyclotomic.h"
#include "dworkgeom/multipoly.h"

namespace dworkgeom {

// Dense univariate polynomial over Q(xi_m); coefficients are stored from the
// constant term upwards with no trailing zeros.
class UniPoly {
 public:
  explicit UniPoly(int conductor);
  UniPoly(int conductor, std::vector<CyclotomicNumber> coeffs);

  // Product of (t - r) over the given roots.
  static UniPoly from_roots(int conductor, const std::vector<CyclotomicNumber>& roots);

  int conductor() const { return conductor_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<CyclotomicNumber>& coefficients() const { return c_; }
  const CyclotomicNumber& leading() const { return c_.back(); }

  UniPoly derivative() const;
  UniPoly monic() const;
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  CyclotomicNumber evaluate(const CyclotomicNumber& x) const;
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  void trim();
  int conductor_;
  std::vector<CyclotomicNumber> c_;
};

UniPoly gcd(UniPoly a, UniPoly b);

// Number of distinct roots over the algebraic closure: the degree of the
// squarefree part. Throws on the zero polynomial.
int univariate_root_count(const UniPoly& f);
// Same, for a MultiPoly in one variable without lambda.
int univariate_root_count(const MultiPoly& f);
// Distinct roots in P^1 of a nonzero binary form in two variables.
int binary_form_root_count(const MultiPoly& f);

}  // namespace dworkgeom

#endif  // DWORKGEOM_UNIPOLY_H_
