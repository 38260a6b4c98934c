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

#ifndef DWORKGEOM_CYCLOTOMIC_H_
#define DWORKGEOM_CYCLOTOMIC_H_

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "dworkgeom/rational.h"

namespace dworkgeom {

int euler_phi(int m);
std::vector<BigInt> cyclotomic_polynomial(int m);

// The field Q(xi_m) presented as Q[x]/(Phi_m). Instances are immutable and shared.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(int m);

  int conductor() const { return m_; }
  int degree() const { return phi_; }
  const std::vector<BigInt>& modulus() const { return phi_poly_; }
  // Reduction of x^k modulo Phi_m, for 0 <= k < table_size().
  const std::vector<BigInt>& power(int k) const { return powers_[k]; }
  int table_size() const { return static_cast<int>(powers_.size()); }

  explicit CyclotomicField(int m);

 private:
  int m_;
  int phi_;
  std::vector<BigInt> phi_poly_;
  std::vector<std::vector<BigInt>> powers_;
};

class CyclotomicNumber {
 public:
  // Zero of Q = Q(xi_1).
  CyclotomicNumber();

  static CyclotomicNumber zero(int m);
  static CyclotomicNumber one(int m);
  static CyclotomicNumber rational(int m, const BigRational& q);
  // xi_m^k with xi_m = exp(2 pi i / m).
  static CyclotomicNumber root_of_unity(int m, long k);

  int conductor() const { return field_->conductor(); }
  const std::vector<BigRational>& coefficients() const { return c_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  BigRational rational_part() const { return c_[0]; }

  // Image under Q(xi_m) -> Q(xi_M), xi_m -> xi_M^(M/m). Requires m | M.
  CyclotomicNumber lift(int M) const;

  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);
  CyclotomicNumber& operator/=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const BigRational& q);

  CyclotomicNumber inverse() const;
  CyclotomicNumber pow(long e) const;

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const BigRational& q) { return a *= q; }
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

  // Human readable form in the power basis, e.g. "1 + 2*z8^3".
  std::string to_string() const;
  std::size_t hash() const;

 private:
  CyclotomicNumber(std::shared_ptr<const CyclotomicField> f, std::vector<BigRational> c);
  void check_same_field(const CyclotomicNumber& o) const;

  std::shared_ptr<const CyclotomicField> field_;
  std::vector<BigRational> c_;
};

int lcm_conductor(int a, int b);

}  // namespace dworkgeom

#endif  // DWORKGEOM_CYCLOTOMIC_H_
