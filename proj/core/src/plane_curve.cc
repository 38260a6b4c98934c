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

#include "dworkgeom/plane_curve.h"

#include <array>
#include <map>
#include <random>
#include <vector>

#include "dworkgeom/errors.h"

namespace dworkgeom {

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powmod(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> f;
  for (u64 q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    f.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) f.push_back(n);
  return f;
}

// Element of exact multiplicative order m in F_p, where m | p - 1.
u64 root_of_order(u64 m, u64 p) {
  const auto qs = prime_factors(m);
  for (u64 g = 2; g < p; ++g) {
    u64 r = powmod(g, (p - 1) / m, p);
    bool ok = true;
    for (u64 q : qs)
      if (powmod(r, m / q, p) == 1) ok = false;
    if (ok) return r;
  }
  throw ComputationError("no root of unity of the requested order");
}

bool reduce_rational(const BigRational& q, u64 p, u64& out) {
  BigInt num = q.get_num() % BigInt(static_cast<unsigned long>(p));
  BigInt den = q.get_den() % BigInt(static_cast<unsigned long>(p));
  if (num < 0) num += static_cast<unsigned long>(p);
  if (den == 0) return false;
  out = mulmod(num.get_ui(), invmod(den.get_ui(), p), p);
  return true;
}

using Mono = std::array<int, 3>;
using PolyP = std::map<Mono, u64>;

void add_to(PolyP& f, const Mono& m, u64 c, u64 p) {
  if (c == 0) return;
  u64& slot = f[m];
  slot = (slot + c) % p;
  if (slot == 0) f.erase(m);
}

PolyP mul(const PolyP& a, const PolyP& b, u64 p) {
  PolyP r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) add_to(r, {ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, mulmod(ca, cb, p), p);
  return r;
}

PolyP derivative(const PolyP& f, int var, u64 p) {
  PolyP r;
  for (const auto& [m, c] : f) {
    if (m[var] == 0) continue;
    Mono d = m;
    d[var] -= 1;
    add_to(r, d, mulmod(c, static_cast<u64>(m[var]) % p, p), p);
  }
  return r;
}

// Coefficients in w of f(t, v, w) for fixed numeric t and v.
std::vector<u64> specialize_uv(const PolyP& f, u64 t, u64 v, int deg_w, u64 p) {
  std::vector<u64> c(deg_w + 1, 0);
  for (const auto& [m, x] : f) {
    if (m[2] > deg_w) continue;
    u64 val = mulmod(x, mulmod(powmod(t, m[0], p), powmod(v, m[1], p), p), p);
    c[m[2]] = (c[m[2]] + val) % p;
  }
  return c;
}

u64 det_mod(std::vector<std::vector<u64>> a, u64 p) {
  const size_t n = a.size();
  u64 det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t r = c;
    while (r < n && a[r][c] == 0) ++r;
    if (r == n) return 0;
    if (r != c) {
      std::swap(a[r], a[c]);
      det = (p - det) % p;
    }
    det = mulmod(det, a[c][c], p);
    const u64 inv = invmod(a[c][c], p);
    for (size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      const u64 f = mulmod(a[i][c], inv, p);
      for (size_t j = c; j < n; ++j) a[i][j] = (a[i][j] + p - mulmod(f, a[c][j], p)) % p;
    }
  }
  return det;
}

// Sylvester resultant of two polynomials given by coefficient vectors
// (constant term first) with nonzero leading coefficients.
u64 resultant(const std::vector<u64>& a, const std::vector<u64>& b, u64 p) {
  const int da = static_cast<int>(a.size()) - 1;
  const int db = static_cast<int>(b.size()) - 1;
  const int n = da + db;
  if (n == 0) return 1;
  std::vector<std::vector<u64>> s(n, std::vector<u64>(n, 0));
  for (int i = 0; i < db; ++i)
    for (int j = 0; j <= da; ++j) s[i][i + j] = a[da - j];
  for (int i = 0; i < da; ++i)
    for (int j = 0; j <= db; ++j) s[db + i][i + j] = b[db - j];
  return det_mod(s, p);
}

using UPoly = std::vector<u64>;

void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Lagrange interpolation through (x_i, y_i).
UPoly interpolate(const std::vector<u64>& xs, const std::vector<u64>& ys, u64 p) {
  const size_t n = xs.size();
  UPoly result(n, 0);
  for (size_t i = 0; i < n; ++i) {
    UPoly basis{1};
    u64 denom = 1;
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      UPoly next(basis.size() + 1, 0);
      for (size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] = (next[k + 1] + basis[k]) % p;
        next[k] = (next[k] + p - mulmod(basis[k], xs[j], p)) % p;
      }
      basis = std::move(next);
      denom = mulmod(denom, (xs[i] + p - xs[j]) % p, p);
    }
    const u64 scale = mulmod(ys[i], invmod(denom, p), p);
    for (size_t k = 0; k < basis.size(); ++k) result[k] = (result[k] + mulmod(basis[k], scale, p)) % p;
  }
  trim(result);
  return result;
}

UPoly upoly_gcd(UPoly a, UPoly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const u64 inv = invmod(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
      const u64 f = mulmod(a.back(), inv, p);
      const size_t shift = a.size() - b.size();
      for (size_t k = 0; k < b.size(); ++k) a[shift + k] = (a[shift + k] + p - mulmod(f, b[k], p)) % p;
      trim(a);
    }
    std::swap(a, b);
  }
  return a;
}

}  // namespace

SmoothnessCertificate certify_smooth_plane_curve(const MultiPoly& f, std::uint64_t seed, int max_attempts) {
  if (f.nvars() != 3 || f.has_lambda()) throw InputError("smoothness check needs a lambda-free ternary form");
  if (f.is_zero()) throw InputError("smoothness check of the zero form");
  const int d = f.degree();
  for (const auto& [e, c] : f.terms())
    if (e[0] + e[1] + e[2] != d) throw InputError("plane curve form is not homogeneous");
  const u64 m = static_cast<u64>(f.conductor());
  SmoothnessCertificate cert;
  if (d == 1) {
    cert.smooth = true;
    return cert;
  }
  std::mt19937_64 rng(seed ^ 0x5eed5eedULL);
  u64 k = ((1ULL << 30) / m) + (rng() % 100000);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    cert.attempts = attempt + 1;
    u64 p = 0;
    for (;; ++k) {
      const u64 cand = 1 + k * m;
      if (is_prime(cand)) {
        p = cand;
        ++k;
        break;
      }
    }
    const u64 zeta = root_of_order(m, p);
    // Reduce the form modulo the prime above p sending xi_m to zeta.
    PolyP g;
    bool good = true;
    for (const auto& [e, c] : f.terms()) {
      u64 val = 0;
      const auto& co = c.coefficients();
      for (size_t i = 0; i < co.size() && good; ++i) {
        if (co[i] == 0) continue;
        u64 r;
        if (!reduce_rational(co[i], p, r)) {
          good = false;
          break;
        }
        val = (val + mulmod(r, powmod(zeta, i, p), p)) % p;
      }
      add_to(g, {e[0], e[1], e[2]}, val, p);
    }
    if (!good || g.empty()) continue;
    // Random change of coordinates x = A (u, v, w).
    std::array<std::array<u64, 3>, 3> a;
    for (auto& row : a)
      for (auto& x : row) x = rng() % p;
    std::array<PolyP, 3> lin;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Mono mono{0, 0, 0};
        mono[j] = 1;
        add_to(lin[i], mono, a[i][j], p);
      }
    PolyP h;
    for (const auto& [mono, c] : g) {
      PolyP term{{{0, 0, 0}, c}};
      for (int i = 0; i < 3; ++i)
        for (int e = 0; e < mono[i]; ++e) term = mul(term, lin[i], p);
      for (const auto& [mm, cc] : term) add_to(h, mm, cc, p);
    }
    const PolyP hu = derivative(h, 0, p), hv = derivative(h, 1, p), hw = derivative(h, 2, p);
    auto lead_w = [&](const PolyP& q) {
      auto it = q.find(Mono{0, 0, d - 1});
      return it == q.end() ? 0ULL : it->second;
    };
    if (lead_w(hu) == 0 || lead_w(hv) == 0 || lead_w(hw) == 0) continue;
    // Points with v = 0, u = 1.
    const auto au = specialize_uv(hu, 1, 0, d - 1, p), av = specialize_uv(hv, 1, 0, d - 1, p),
               aw = specialize_uv(hw, 1, 0, d - 1, p);
    if (resultant(au, aw, p) == 0 && resultant(av, aw, p) == 0) continue;
    // Affine chart v = 1 via interpolation of both resultants in t.
    const int npts = (d - 1) * (d - 1) + 1;
    std::vector<u64> xs, r1, r2;
    for (int i = 0; i < npts; ++i) {
      const u64 t = static_cast<u64>(i + 1);
      const auto bu = specialize_uv(hu, t, 1, d - 1, p), bv = specialize_uv(hv, t, 1, d - 1, p),
                 bw = specialize_uv(hw, t, 1, d - 1, p);
      xs.push_back(t);
      r1.push_back(resultant(bu, bw, p));
      r2.push_back(resultant(bv, bw, p));
    }
    UPoly g1 = interpolate(xs, r1, p), g2 = interpolate(xs, r2, p);
    if (g1.empty() || g2.empty()) continue;
    if (upoly_gcd(g1, g2, p).size() == 1) {
      cert.smooth = true;
      cert.prime = p;
      return cert;
    }
  }
  return cert;
}

}  // namespace dworkgeom
