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

#include "dworkgeom/unipoly.h"

#include <sstream>

#include "dworkgeom/errors.h"

namespace dworkgeom {

UniPoly::UniPoly(int conductor) : conductor_(conductor) {}

UniPoly::UniPoly(int conductor, std::vector<CyclotomicNumber> coeffs) : conductor_(conductor), c_(std::move(coeffs)) {
  for (auto& x : c_)
    if (x.conductor() != conductor_) x = x.lift(conductor_);
  trim();
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::from_roots(int conductor, const std::vector<CyclotomicNumber>& roots) {
  UniPoly r(conductor, {CyclotomicNumber::one(conductor)});
  for (const auto& x : roots) r = r * UniPoly(conductor, {-x.lift(conductor), CyclotomicNumber::one(conductor)});
  return r;
}

UniPoly UniPoly::derivative() const {
  std::vector<CyclotomicNumber> d;
  for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * BigRational(static_cast<long>(i)));
  return UniPoly(conductor_, std::move(d));
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return *this;
  const CyclotomicNumber inv = c_.back().inverse();
  std::vector<CyclotomicNumber> m;
  for (const auto& x : c_) m.push_back(x * inv);
  return UniPoly(conductor_, std::move(m));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw ComputationError("polynomial division by zero");
  std::vector<CyclotomicNumber> r = c_;
  const int dd = d.degree();
  const int n = degree();
  if (n < dd) return {UniPoly(conductor_), *this};
  std::vector<CyclotomicNumber> q(n - dd + 1, CyclotomicNumber::zero(conductor_));
  const CyclotomicNumber inv = d.leading().inverse();
  for (int i = n - dd; i >= 0; --i) {
    if (r[i + dd].is_zero()) continue;
    CyclotomicNumber f = r[i + dd] * inv;
    for (int j = 0; j <= dd; ++j) r[i + j] -= f * d.c_[j];
    q[i] = f;
  }
  r.resize(dd);
  return {UniPoly(conductor_, std::move(q)), UniPoly(conductor_, std::move(r))};
}

CyclotomicNumber UniPoly::evaluate(const CyclotomicNumber& x) const {
  CyclotomicNumber acc = CyclotomicNumber::zero(conductor_);
  const CyclotomicNumber y = x.lift(conductor_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * y + *it;
  return acc;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly(a.conductor_);
  std::vector<CyclotomicNumber> r(a.c_.size() + b.c_.size() - 1, CyclotomicNumber::zero(a.conductor_));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(a.conductor_, std::move(r));
}

std::string UniPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (i != degree()) os << " + ";
    os << "(" << c_[i].to_string() << ")";
    if (i > 0) os << "*t";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

int univariate_root_count(const UniPoly& f) {
  if (f.is_zero()) throw ComputationError("root count of the zero polynomial");
  if (f.degree() == 0) return 0;
  return f.degree() - gcd(f, f.derivative()).degree();
}

int univariate_root_count(const MultiPoly& f) {
  if (f.nvars() != 1 || f.has_lambda()) throw InputError("expected a lambda-free polynomial in one variable");
  std::vector<CyclotomicNumber> c(std::max(f.degree(), 0) + 1, CyclotomicNumber::zero(f.conductor()));
  for (const auto& [e, x] : f.terms()) c[e[0]] = x;
  return univariate_root_count(UniPoly(f.conductor(), std::move(c)));
}

int binary_form_root_count(const MultiPoly& f) {
  if (f.nvars() != 2 || f.has_lambda()) throw InputError("expected a lambda-free binary form");
  if (f.is_zero()) throw ComputationError("root count of the zero binary form");
  const int d = f.degree();
  std::vector<CyclotomicNumber> c(d + 1, CyclotomicNumber::zero(f.conductor()));
  for (const auto& [e, x] : f.terms()) {
    if (e[0] + e[1] != d) throw InputError("binary form is not homogeneous");
    c[e[0]] = x;
  }
  UniPoly g(f.conductor(), std::move(c));
  // Roots of f(t, 1) plus the point (1:0) when v divides f.
  return univariate_root_count(g) + (g.degree() < d ? 1 : 0);
}

}  // namespace dworkgeom
