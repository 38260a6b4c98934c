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

#include "dworkgeom/dwork.h"

#include "dworkgeom/errors.h"

namespace dworkgeom {

DworkPencil::DworkPencil(int n)
    : n_(n), f_(n + 1, 1, true), fermat_(n + 1, 1, false), product_(n + 1, 1, false) {
  if (n < 2) throw InputError("the Dwork pencil needs n >= 2");
  const int v = n + 1;
  for (int i = 0; i < v; ++i) {
    MultiPoly::Exponent e(v, 0);
    e[i] = v;
    fermat_.add_term(e, CyclotomicNumber::one(1));
  }
  product_.add_term(MultiPoly::Exponent(v, 1), CyclotomicNumber::rational(1, -v));
  for (const auto& [e, c] : fermat_.terms()) {
    MultiPoly::Exponent le = e;
    le.push_back(0);
    f_.add_term(le, c);
  }
  for (const auto& [e, c] : product_.terms()) {
    MultiPoly::Exponent le = e;
    le.push_back(1);
    f_.add_term(le, c);
  }
}

BigInt HodgeDiamond::betti(int k) const {
  BigInt b = 0;
  for (int p = 0; p <= m; ++p) {
    const int q = k - p;
    if (q >= 0 && q <= m) b += h[p][q];
  }
  return b;
}

SingularFiberReport singular_fibers(int n, bool enumerate) {
  if (n < 2) throw InputError("singular_fibers needs n >= 2");
  SingularFiberReport rep;
  rep.n = n;
  const int d = n + 1;
  BigInt count;
  mpz_ui_pow_ui(count.get_mpz_t(), d, n - 1);
  for (int r = 0; r < d; ++r) {
    SingularFiber f;
    f.r = r;
    f.node_count = count;
    if (enumerate && n <= 4) {
      // Free choice of i_1..i_(n-1); i_n is forced by sum i_j = -r mod d.
      std::vector<int> idx(n, 0);
      for (;;) {
        int s = 0;
        for (int j = 0; j < n - 1; ++j) s += idx[j];
        idx[n - 1] = ((-r - s) % d + d) % d;
        f.nodes.push_back(idx);
        int j = 0;
        while (j < n - 1 && ++idx[j] == d) idx[j++] = 0;
        if (j == n - 1) break;
      }
    }
    rep.fibers.push_back(std::move(f));
  }
  return rep;
}

BigInt euler_characteristic(const HypersurfaceClass& cls) {
  if (cls.m < 1 || cls.d < 1) throw InputError("hypersurface class needs m >= 1 and d >= 1");
  BigInt e = 0;
  for (int k = 0; k <= cls.m; ++k) {
    BigInt dk;
    mpz_ui_pow_ui(dk.get_mpz_t(), cls.d, k + 1);
    BigInt term = dk * binomial(cls.m + 2, cls.m - k);
    if (k % 2) e -= term; else e += term;
  }
  return e;
}

BigInt middle_betti(const HypersurfaceClass& cls) {
  const BigInt e = euler_characteristic(cls);
  if (cls.m % 2) return BigInt(cls.m + 1) - e;
  return e - cls.m;
}

BigInt bounded_monomial_count(int nvars, int max_exp, long t) {
  if (t < 0 || nvars <= 0) return t == 0 && nvars == 0 ? 1 : 0;
  BigInt total = 0;
  for (int j = 0; j <= nvars; ++j) {
    const long rest = t - static_cast<long>(j) * (max_exp + 1);
    if (rest < 0) break;
    BigInt term = binomial(nvars, j) * binomial(rest + nvars - 1, nvars - 1);
    if (j % 2) total -= term; else total += term;
  }
  return total;
}

BigInt jacobian_ring_dimension(const HypersurfaceClass& cls, int p) {
  const long t = static_cast<long>(cls.d) * (p + 1) - (cls.m + 2);
  if (t < 0) return 0;
  return bounded_monomial_count(cls.m + 2, cls.d - 2, t);
}

HodgeDiamond hodge_diamond(const HypersurfaceClass& cls) {
  if (cls.m < 1 || cls.d < 1) throw InputError("hypersurface class needs m >= 1 and d >= 1");
  HodgeDiamond hd;
  hd.m = cls.m;
  hd.h.assign(cls.m + 1, std::vector<BigInt>(cls.m + 1, 0));
  for (int p = 0; p <= cls.m; ++p) {
    for (int q = 0; q <= cls.m; ++q) {
      if (p + q != cls.m) {
        hd.h[p][q] = p == q ? 1 : 0;
        continue;
      }
      // q plays the role of the Griffiths index for H^(p,q) with p = m - q.
      BigInt v = jacobian_ring_dimension(cls, q);
      if (2 * p == cls.m) v += 1;
      hd.h[p][q] = v;
    }
  }
  hd.euler = euler_characteristic(cls);
  return hd;
}

}  // namespace dworkgeom
