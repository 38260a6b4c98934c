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

#include "dworkgeom/fixed_locus.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "dworkgeom/errors.h"
#include "dworkgeom/plane_curve.h"
#include "dworkgeom/unipoly.h"

namespace dworkgeom {

namespace {

// Integer exponent k with exp(2 pi i angle) = xi_N^k.
long angle_exponent(const BigRational& angle, int conductor) {
  BigRational scaled = reduce_angle(angle) * conductor;
  if (scaled.get_den() != 1) throw ComputationError("angle does not live in the requested conductor");
  return scaled.get_num().get_si();
}

CyclotomicNumber root_at(const BigRational& angle, int conductor) {
  return CyclotomicNumber::root_of_unity(conductor, angle_exponent(angle, conductor));
}

}  // namespace

BigRational reduce_angle(const BigRational& angle) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), angle.get_num_mpz_t(), angle.get_den_mpz_t());
  BigRational r = angle - BigRational(q);
  r.canonicalize();
  return r;
}

int EigenspaceDecomposition::find(const BigRational& angle) const {
  const BigRational a = reduce_angle(angle);
  for (size_t i = 0; i < spaces.size(); ++i)
    if (spaces[i].angle == a) return static_cast<int>(i);
  return -1;
}

std::vector<BigRational> EigenspaceDecomposition::spectrum() const {
  std::vector<BigRational> s;
  for (const auto& e : spaces)
    for (int k = 0; k < e.dim(); ++k) s.push_back(e.angle);
  return s;
}

CycloVector apply(const GroupElement& g, const CycloVector& v) {
  const int size = g.n() + 1;
  if (static_cast<int>(v.size()) != size) throw InputError("vector length differs from n+1");
  int cond = size;
  for (const auto& x : v) cond = std::lcm(cond, x.conductor());
  CycloVector out(size, CyclotomicNumber::zero(cond));
  for (int i = 0; i < size; ++i) {
    out[g.perm()[i]] = v[i].lift(cond) * CyclotomicNumber::root_of_unity(cond, static_cast<long>(g.twist()[i]) * (cond / size));
  }
  return out;
}

EigenspaceDecomposition eigen_decomposition(const GroupElement& g) {
  const int size = g.n() + 1;
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(size, false);
  int l = 1;
  for (int i = 0; i < size; ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (int j = i; !seen[j]; j = g.perm()[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    l = std::lcm(l, static_cast<int>(c.size()));
    cycles.push_back(std::move(c));
  }
  EigenspaceDecomposition dec{g, size * l, {}};
  const int cond = dec.conductor;
  std::map<BigRational, Eigenspace> by_angle;
  for (const auto& c : cycles) {
    const int len = static_cast<int>(c.size());
    long k = 0;
    for (int idx : c) k += g.twist()[idx];
    for (int j = 0; j < len; ++j) {
      BigRational theta = reduce_angle(BigRational(k + static_cast<long>(j) * size, static_cast<long>(size) * len));
      CycloVector v(size, CyclotomicNumber::zero(cond));
      // c_(t+1) = c_t xi^(a_(i_t)) / mu.
      BigRational phi = 0;
      for (int t = 0; t < len; ++t) {
        v[c[t]] = root_at(phi, cond);
        phi += BigRational(g.twist()[c[t]], size) - theta;
        phi.canonicalize();
      }
      auto it = by_angle.find(theta);
      if (it == by_angle.end()) {
        it = by_angle.emplace(theta, Eigenspace{theta, root_at(theta, cond), {}}).first;
      }
      it->second.basis.push_back(std::move(v));
    }
  }
  for (auto& [a, e] : by_angle) dec.spaces.push_back(std::move(e));
  return dec;
}

std::vector<BigRational> draw_lambdas(const LambdaPolicy& policy, int n, int count) {
  std::mt19937_64 rng(policy.seed * 0x9E3779B97F4A7C15ULL + 0x1234567ULL);
  std::uniform_int_distribution<int> num(-policy.bound, policy.bound);
  std::uniform_int_distribution<int> den(1, policy.bound);
  std::vector<BigRational> out;
  while (static_cast<int>(out.size()) < count) {
    BigRational q(num(rng), den(rng));
    q.canonicalize();
    if (q == 0 || q == 1) continue;
    if (q == -1 && (n + 1) % 2 == 0) continue;
    if (std::find(out.begin(), out.end(), q) != out.end()) continue;
    out.push_back(q);
  }
  return out;
}

long lambda_consensus(const LambdaPolicy& policy, int n, const std::function<long(const BigRational&)>& f) {
  std::map<long, int> seen;
  for (const auto& lam : draw_lambdas(policy, n, policy.max_draws)) {
    const long v = f(lam);
    if (++seen[v] >= policy.samples) return v;
  }
  throw ComputationError("no lambda consensus after " + std::to_string(policy.max_draws) + " specializations");
}

std::string to_string(ComponentKind k) {
  switch (k) {
    case ComponentKind::kIsolatedPoints:
      return "points";
    case ComponentKind::kCurve:
      return "curve";
    case ComponentKind::kFullEigenLine:
      return "line";
  }
  return "?";
}

long FixedComponent::euler() const {
  if (kind == ComponentKind::kIsolatedPoints) return count;
  return 2 - 2L * genus;
}

int FixedLocusReport::point_count() const {
  int m = 0;
  for (const auto& c : components)
    if (c.kind == ComponentKind::kIsolatedPoints) m += c.count;
  return m;
}

int FixedLocusReport::curve_count() const {
  int k = 0;
  for (const auto& c : components)
    if (c.kind != ComponentKind::kIsolatedPoints) ++k;
  return k;
}

std::vector<int> FixedLocusReport::genera() const {
  std::vector<int> g;
  for (const auto& c : components)
    if (c.kind != ComponentKind::kIsolatedPoints) g.push_back(c.genus);
  std::sort(g.begin(), g.end());
  return g;
}

std::string FixedLocusReport::signature() const {
  std::vector<std::string> parts;
  for (int g : genera()) parts.push_back("C" + std::to_string(g));
  if (point_count() > 0) parts.push_back("P" + std::to_string(point_count()));
  if (parts.empty()) return "free";
  std::ostringstream os;
  for (size_t i = 0; i < parts.size(); ++i) os << (i ? "+" : "") << parts[i];
  return os.str();
}

bool point_on_pencil(const DworkPencil& pencil, const CycloVector& v) {
  return pencil.fermat_part().evaluate(v).is_zero() && pencil.product_part().evaluate(v).is_zero();
}

int line_point_count(const DworkPencil& pencil, const std::vector<CycloVector>& span, const LambdaPolicy& policy) {
  const MultiPoly f = poly_restrict(pencil.polynomial(), span);
  if (f.is_zero()) return -1;
  if (f.lambda_degree() <= 0) return binary_form_root_count(f.lambda_coefficient(0));
  return static_cast<int>(lambda_consensus(policy, pencil.n(), [&](const BigRational& lam) -> long {
    const MultiPoly s = f.specialize_lambda(lam);
    if (s.is_zero()) return -2;
    return binary_form_root_count(s);
  }));
}

FixedLocusReport fixed_locus(const GroupElement& g, const DworkPencil& pencil, const LambdaPolicy& policy) {
  if (g.n() != pencil.n()) throw InputError("element and pencil disagree on n");
  if (g.is_identity()) throw InputError("fixed_locus needs a nontrivial element");
  FixedLocusReport rep{g, eigen_decomposition(g), {}, 0};
  const int d = pencil.degree();
  for (size_t idx = 0; idx < rep.eigen.spaces.size(); ++idx) {
    const Eigenspace& e = rep.eigen.spaces[idx];
    FixedComponent comp;
    comp.eigenspace = static_cast<int>(idx);
    comp.eigenspace_dim = e.dim();
    if (e.dim() == 1) {
      if (!point_on_pencil(pencil, e.basis[0])) continue;
      comp.kind = ComponentKind::kIsolatedPoints;
      comp.count = 1;
      comp.points.push_back(e.basis[0]);
      comp.restricted = poly_restrict(pencil.polynomial(), e.basis);
    } else if (e.dim() == 2) {
      comp.restricted = poly_restrict(pencil.polynomial(), e.basis);
      const int cnt = line_point_count(pencil, e.basis, policy);
      if (cnt == -1) {
        comp.kind = ComponentKind::kFullEigenLine;
        comp.count = 1;
        comp.genus = 0;
      } else if (cnt > 0) {
        comp.kind = ComponentKind::kIsolatedPoints;
        comp.count = cnt;
      } else {
        continue;
      }
    } else if (e.dim() == 3) {
      comp.restricted = poly_restrict(pencil.polynomial(), e.basis);
      if (comp.restricted.is_zero())
        throw ComputationError("element " + g.to_string() + " fixes a plane inside X; unsupported fixed surface");
      const MultiPoly& f = comp.restricted;
      auto smooth_at = [&](const BigRational& lam) -> long {
        const MultiPoly s = f.specialize_lambda(lam);
        if (s.is_zero()) return 0;
        return certify_smooth_plane_curve(s, policy.seed + static_cast<std::uint64_t>(idx)).smooth ? 1 : 0;
      };
      long smooth;
      if (f.lambda_degree() <= 0) {
        smooth = smooth_at(BigRational(0));
      } else {
        smooth = lambda_consensus(policy, pencil.n(), smooth_at);
      }
      if (!smooth)
        throw ComputationError("genus undetermined: fixed plane curve of " + g.to_string() + " is not certified smooth");
      comp.kind = ComponentKind::kCurve;
      comp.count = 1;
      comp.genus = (d - 1) * (d - 2) / 2;
    } else {
      const MultiPoly f = poly_restrict(pencil.polynomial(), e.basis);
      if (!f.is_zero())
        throw ComputationError("unsupported fixed-surface candidate: eigenspace of dimension " +
                               std::to_string(e.dim()) + " for " + g.to_string());
      throw ComputationError("element " + g.to_string() + " fixes a linear space inside X");
    }
    rep.components.push_back(std::move(comp));
  }
  rep.euler = euler_of_fixed_locus(rep);
  return rep;
}

long euler_of_fixed_locus(const FixedLocusReport& report) {
  long chi = 0;
  for (const auto& c : report.components) chi += c.euler();
  return chi;
}

}  // namespace dworkgeom
