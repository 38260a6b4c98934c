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

#include "dworkgeom/multipoly.h"

#include <numeric>
#include <sstream>

#include "dworkgeom/errors.h"

namespace dworkgeom {

MultiPoly::MultiPoly(int nvars, int conductor, bool has_lambda)
    : nvars_(nvars), conductor_(conductor), has_lambda_(has_lambda) {}

MultiPoly MultiPoly::constant(int nvars, const CyclotomicNumber& c, bool has_lambda) {
  MultiPoly p(nvars, c.conductor(), has_lambda);
  p.add_term(Exponent(p.arity(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int index, int conductor, bool has_lambda) {
  MultiPoly p(nvars, conductor, has_lambda);
  Exponent e(p.arity(), 0);
  e.at(index) = 1;
  p.add_term(e, CyclotomicNumber::one(conductor));
  return p;
}

MultiPoly MultiPoly::lambda(int nvars, int conductor) { return variable(nvars, nvars, conductor, true); }

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.begin() + nvars_, 0));
  return d;
}

int MultiPoly::lambda_degree() const {
  if (!has_lambda_) return is_zero() ? -1 : 0;
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[nvars_]);
  return d;
}

void MultiPoly::add_term(const Exponent& e, const CyclotomicNumber& c) {
  if (static_cast<int>(e.size()) != arity()) throw InputError("exponent arity mismatch");
  if (c.is_zero()) return;
  const CyclotomicNumber v = c.conductor() == conductor_ ? c : c.lift(conductor_);
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CyclotomicNumber MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? CyclotomicNumber::zero(conductor_) : it->second;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.arity() != arity() || o.has_lambda_ != has_lambda_) throw InputError("polynomial shape mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const CyclotomicNumber& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  const CyclotomicNumber v = c.conductor() == conductor_ ? c : c.lift(conductor_);
  for (auto& [e, x] : terms_) x *= v;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.arity() != b.arity() || a.has_lambda_ != b.has_lambda_) throw InputError("polynomial shape mismatch");
  if (a.conductor_ != b.conductor_) throw InputError("polynomial conductor mismatch");
  MultiPoly r(a.nvars_, a.conductor_, a.has_lambda_);
  MultiPoly::Exponent e(a.arity());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.nvars_ == b.nvars_ && a.has_lambda_ == b.has_lambda_ && a.conductor_ == b.conductor_ &&
         a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw InputError("negative polynomial power");
  MultiPoly r = constant(nvars_, CyclotomicNumber::one(conductor_), has_lambda_);
  MultiPoly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

MultiPoly MultiPoly::lift(int M) const {
  MultiPoly r(nvars_, M, has_lambda_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.lift(M));
  return r;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (static_cast<int>(images.size()) != nvars_) throw InputError("substitution needs one image per variable");
  const MultiPoly& ref = images.front();
  const int target_vars = ref.nvars();
  int M = ref.conductor();
  for (const auto& im : images) {
    if (im.nvars() != target_vars || im.has_lambda() != has_lambda_) throw InputError("substitution shape mismatch");
    M = std::lcm(M, im.conductor());
  }
  M = std::lcm(M, conductor_);
  std::vector<MultiPoly> lifted;
  lifted.reserve(images.size());
  for (const auto& im : images) lifted.push_back(im.conductor() == M ? im : im.lift(M));
  // Cache powers of each image, since the same powers recur across terms.
  std::vector<std::vector<MultiPoly>> powers(nvars_);
  auto power_of = [&](int var, int k) -> const MultiPoly& {
    auto& pv = powers[var];
    if (pv.empty()) pv.push_back(constant(target_vars, CyclotomicNumber::one(M), has_lambda_));
    while (static_cast<int>(pv.size()) <= k) pv.push_back(pv.back() * lifted[var]);
    return pv[k];
  };
  MultiPoly r(target_vars, M, has_lambda_);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(target_vars, c.lift(M), has_lambda_);
    if (has_lambda_ && e[nvars_] > 0) {
      Exponent le(r.arity(), 0);
      le[target_vars] = e[nvars_];
      MultiPoly lam(target_vars, M, true);
      lam.add_term(le, CyclotomicNumber::one(M));
      term = term * lam;
    }
    for (int i = 0; i < nvars_; ++i)
      if (e[i] > 0) term = term * power_of(i, e[i]);
    r += term;
  }
  return r;
}

MultiPoly MultiPoly::lambda_coefficient(int k) const {
  MultiPoly r(nvars_, conductor_, false);
  for (const auto& [e, c] : terms_) {
    const int le = has_lambda_ ? e[nvars_] : 0;
    if (le != k) continue;
    r.add_term(Exponent(e.begin(), e.begin() + nvars_), c);
  }
  return r;
}

MultiPoly MultiPoly::specialize_lambda(const BigRational& value) const {
  MultiPoly r(nvars_, conductor_, false);
  for (const auto& [e, c] : terms_) {
    const int le = has_lambda_ ? e[nvars_] : 0;
    BigRational f = 1;
    for (int i = 0; i < le; ++i) f *= value;
    r.add_term(Exponent(e.begin(), e.begin() + nvars_), c * f);
  }
  return r;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly r(nvars_, conductor_, has_lambda_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    r.add_term(d, c * BigRational(e[var]));
  }
  return r;
}

CyclotomicNumber MultiPoly::evaluate(const CycloVector& point) const {
  if (has_lambda_) throw InputError("evaluate requires a lambda-free polynomial");
  if (static_cast<int>(point.size()) != nvars_) throw InputError("evaluation point has wrong length");
  int M = conductor_;
  for (const auto& x : point) M = std::lcm(M, x.conductor());
  CycloVector p;
  for (const auto& x : point) p.push_back(x.lift(M));
  CyclotomicNumber total = CyclotomicNumber::zero(M);
  for (const auto& [e, c] : terms_) {
    CyclotomicNumber t = c.lift(M);
    for (int i = 0; i < nvars_ && !t.is_zero(); ++i)
      if (e[i] > 0) t *= p[i].pow(e[i]);
    total += t;
  }
  return total;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  auto name = [&](int i) {
    if (i < static_cast<int>(names.size())) return names[i];
    if (i == nvars_) return std::string("lambda");
    return "x" + std::to_string(i + 1);
  };
  std::ostringstream os;
  bool first = true;
  // Highest exponents first reads closer to hand-written forms.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    std::ostringstream mono;
    bool any = false;
    for (int i = 0; i < arity(); ++i) {
      if (e[i] == 0) continue;
      if (any) mono << "*";
      mono << name(i);
      if (e[i] > 1) mono << "^" << e[i];
      any = true;
    }
    if (!any) {
      os << c.to_string();
    } else if (c.is_one()) {
      os << mono.str();
    } else {
      os << "(" << c.to_string() << ")*" << mono.str();
    }
  }
  return os.str();
}

MultiPoly poly_restrict(const MultiPoly& f, const std::vector<CycloVector>& subspace_basis) {
  const int k = static_cast<int>(subspace_basis.size());
  if (k == 0) throw InputError("restriction to an empty basis");
  int M = f.conductor();
  for (const auto& v : subspace_basis) {
    if (static_cast<int>(v.size()) != f.nvars()) throw InputError("basis vector length differs from variable count");
    for (const auto& x : v) M = std::lcm(M, x.conductor());
  }
  std::vector<MultiPoly> images;
  for (int i = 0; i < f.nvars(); ++i) {
    MultiPoly im(k, M, f.has_lambda());
    for (int j = 0; j < k; ++j) {
      MultiPoly::Exponent e(im.arity(), 0);
      e[j] = 1;
      im.add_term(e, subspace_basis[j][i].lift(M));
    }
    images.push_back(std::move(im));
  }
  return f.lift(M).substitute(images);
}

}  // namespace dworkgeom
