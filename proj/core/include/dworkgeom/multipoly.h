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

#ifndef DWORKGEOM_MULTIPOLY_H_
#define DWORKGEOM_MULTIPOLY_H_

#include <map>
#include <string>
#include <vector>

#include "dworkgeom/cyclotomic.h"

namespace dworkgeom {

using CycloVector = std::vector<CyclotomicNumber>;

// Sparse polynomial in nvars variables with coefficients in Q(xi_m). When
// has_lambda() is set, the last exponent slot belongs to the formal parameter.
class MultiPoly {
 public:
  using Exponent = std::vector<int>;

  MultiPoly(int nvars, int conductor, bool has_lambda = false);

  static MultiPoly constant(int nvars, const CyclotomicNumber& c, bool has_lambda = false);
  static MultiPoly variable(int nvars, int index, int conductor, bool has_lambda = false);
  static MultiPoly lambda(int nvars, int conductor);

  int nvars() const { return nvars_; }
  int conductor() const { return conductor_; }
  bool has_lambda() const { return has_lambda_; }
  int arity() const { return nvars_ + (has_lambda_ ? 1 : 0); }
  const std::map<Exponent, CyclotomicNumber>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Total degree in the ordinary variables; -1 for the zero polynomial.
  int degree() const;
  int lambda_degree() const;

  void add_term(const Exponent& e, const CyclotomicNumber& c);
  CyclotomicNumber coefficient(const Exponent& e) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const CyclotomicNumber& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const CyclotomicNumber& c) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  MultiPoly pow(int e) const;

  MultiPoly lift(int M) const;
  // Substitute x_i -> images[i]; images share the target arity and conductor.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  // Coefficient of lambda^k as a lambda-free polynomial.
  MultiPoly lambda_coefficient(int k) const;
  MultiPoly specialize_lambda(const BigRational& value) const;
  MultiPoly derivative(int var) const;
  CyclotomicNumber evaluate(const CycloVector& point) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  int nvars_;
  int conductor_;
  bool has_lambda_;
  std::map<Exponent, CyclotomicNumber> terms_;
};

// Restriction to the span of the given vectors: x = sum_k u_k * basis[k].
// The conductor of the result is the lcm of the inputs.
MultiPoly poly_restrict(const MultiPoly& f, const std::vector<CycloVector>& subspace_basis);

}  // namespace dworkgeom

#endif  // DWORKGEOM_MULTIPOLY_H_
