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

#include "dworkgeom/cyclotomic.h"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "dworkgeom/errors.h"

namespace dworkgeom {

namespace {

using QPoly = std::vector<BigRational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of a by b over Q; b must be nonzero.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  QPoly q;
  const int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(a.size()) - 1 >= db) q.assign(a.size() - db, 0);
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    BigRational f = a.back() / b.back();
    q[shift] = f;
    for (int i = 0; i <= db; ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

int euler_phi(int m) {
  if (m <= 0) throw InputError("conductor must be positive");
  int result = m;
  int x = m;
  for (int p = 2; p * p <= x; ++p) {
    if (x % p == 0) {
      while (x % p == 0) x /= p;
      result -= result / p;
    }
  }
  if (x > 1) result -= result / x;
  return result;
}

std::vector<BigInt> cyclotomic_polynomial(int m) {
  if (m <= 0) throw InputError("conductor must be positive");
  // x^m - 1 divided by Phi_d for every proper divisor d.
  std::vector<BigInt> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    std::vector<BigInt> den = cyclotomic_polynomial(d);
    const int dd = static_cast<int>(den.size()) - 1;
    const int dn = static_cast<int>(num.size()) - 1;
    std::vector<BigInt> q(dn - dd + 1, 0);
    for (int i = dn - dd; i >= 0; --i) {
      BigInt f = num[i + dd];
      q[i] = f;
      if (f == 0) continue;
      for (int j = 0; j <= dd; ++j) num[i + j] -= f * den[j];
    }
    num = std::move(q);
  }
  return num;
}

CyclotomicField::CyclotomicField(int m) : m_(m), phi_(euler_phi(m)), phi_poly_(cyclotomic_polynomial(m)) {
  const int size = std::max(m_, 2 * phi_ - 1);
  powers_.reserve(size);
  std::vector<BigInt> cur(phi_, 0);
  cur[0] = 1;
  for (int k = 0; k < size; ++k) {
    powers_.push_back(cur);
    // Multiply by x and reduce with the monic modulus.
    BigInt top = cur[phi_ - 1];
    for (int i = phi_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int i = 0; i < phi_; ++i) cur[i] -= top * phi_poly_[i];
    }
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(int m) {
  if (m <= 0) throw InputError("conductor must be positive");
  // Fields are immutable once built, so a guarded memo table is safe to share.
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<const CyclotomicField>(m);
  cache.emplace(m, f);
  return f;
}

CyclotomicNumber::CyclotomicNumber() : CyclotomicNumber(CyclotomicField::get(1), {BigRational(0)}) {}

CyclotomicNumber::CyclotomicNumber(std::shared_ptr<const CyclotomicField> f, std::vector<BigRational> c)
    : field_(std::move(f)), c_(std::move(c)) {}

CyclotomicNumber CyclotomicNumber::zero(int m) {
  auto f = CyclotomicField::get(m);
  return CyclotomicNumber(f, std::vector<BigRational>(f->degree(), 0));
}

CyclotomicNumber CyclotomicNumber::one(int m) { return rational(m, 1); }

CyclotomicNumber CyclotomicNumber::rational(int m, const BigRational& q) {
  CyclotomicNumber r = zero(m);
  r.c_[0] = q;
  return r;
}

CyclotomicNumber CyclotomicNumber::root_of_unity(int m, long k) {
  auto f = CyclotomicField::get(m);
  long e = k % m;
  if (e < 0) e += m;
  const auto& p = f->power(static_cast<int>(e));
  std::vector<BigRational> c(p.begin(), p.end());
  return CyclotomicNumber(f, std::move(c));
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool CyclotomicNumber::is_one() const { return is_rational() && c_[0] == 1; }

void CyclotomicNumber::check_same_field(const CyclotomicNumber& o) const {
  if (field_->conductor() != o.field_->conductor())
    throw InputError("cyclotomic conductor mismatch: " + std::to_string(conductor()) + " vs " +
                     std::to_string(o.conductor()));
}

CyclotomicNumber CyclotomicNumber::lift(int M) const {
  const int m = conductor();
  if (M == m) return *this;
  if (M % m != 0) throw InputError("lift target must be a multiple of the conductor");
  const int step = M / m;
  CyclotomicNumber r = zero(M);
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const auto& p = r.field_->power(static_cast<int>(k) * step);
    for (size_t i = 0; i < p.size(); ++i)
      if (p[i] != 0) r.c_[i] += c_[k] * p[i];
  }
  return r;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  check_same_field(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
  check_same_field(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const BigRational& q) {
  for (auto& x : c_) x *= q;
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
  check_same_field(o);
  const int phi = field_->degree();
  if (phi == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  std::vector<BigRational> raw(2 * phi - 1, 0);
  for (int i = 0; i < phi; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (o.c_[j] == 0) continue;
      raw[i + j] += c_[i] * o.c_[j];
    }
  }
  std::vector<BigRational> out(raw.begin(), raw.begin() + phi);
  for (int k = phi; k < 2 * phi - 1; ++k) {
    if (raw[k] == 0) continue;
    const auto& p = field_->power(k);
    for (int i = 0; i < phi; ++i)
      if (p[i] != 0) out[i] += raw[k] * p[i];
  }
  c_ = std::move(out);
  return *this;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw ComputationError("division by zero in Q(xi_" + std::to_string(conductor()) + ")");
  if (is_rational()) return rational(conductor(), 1 / c_[0]);
  // Extended Euclid: s*a + t*Phi = g with g a nonzero constant.
  QPoly a(c_.begin(), c_.end());
  trim(a);
  QPoly b(field_->modulus().begin(), field_->modulus().end());
  QPoly s0{1}, s1{};
  QPoly r0 = a, r1 = b;
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw ComputationError("cyclotomic inverse failed: modulus not coprime");
  BigRational g = r0[0];
  CyclotomicNumber r = zero(conductor());
  auto [q, rem] = divmod(s0, b);
  (void)q;
  for (size_t i = 0; i < rem.size(); ++i) r.c_[i] = rem[i] / g;
  return r;
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

CyclotomicNumber CyclotomicNumber::pow(long e) const {
  CyclotomicNumber base = e < 0 ? inverse() : *this;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  CyclotomicNumber r = one(conductor());
  while (k) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return r;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  return a.conductor() == b.conductor() && a.c_ == b.c_;
}

std::string CyclotomicNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    BigRational v = c_[k];
    if (!first) {
      os << (v < 0 ? " - " : " + ");
      v = abs(v);
    }
    if (k == 0) {
      os << v.get_str();
    } else {
      if (v != 1) os << (v == -1 ? "-" : v.get_str() + "*");
      os << "z" << conductor();
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::size_t CyclotomicNumber::hash() const {
  std::size_t h = std::hash<int>()(conductor());
  for (const auto& x : c_) {
    std::size_t v = std::hash<long>()(mpz_get_si(x.get_num_mpz_t())) * 31 + mpz_get_si(x.get_den_mpz_t());
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

int lcm_conductor(int a, int b) { return std::lcm(a, b); }

}  // namespace dworkgeom
