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

#include "dworkgeom/wps.h"

#include <algorithm>
#include <numeric>

#include "dworkgeom/errors.h"

namespace dworkgeom {

namespace {

long residue(long r, long k) { return ((r % k) + k) % k; }

bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

}  // namespace

WeightSystem WeightSystem::symmetric_quotient(int n) {
  if (n < 1) throw InputError("n must be positive");
  WeightSystem ws;
  for (long i = 1; i <= n + 1; ++i) ws.weights.push_back(i);
  ws.degrees = {n + 1L};
  return ws;
}

WeightSystem WeightSystem::double_cover(int n) {
  if (n < 1) throw InputError("n must be positive");
  WeightSystem ws = symmetric_quotient(n);
  ws.weights.push_back(static_cast<long>(n) * (n + 1) / 2);
  ws.degrees = {static_cast<long>(n) * (n + 1), n + 1L};
  return ws;
}

int WeightSystem::m(long p) const {
  return static_cast<int>(std::count_if(weights.begin(), weights.end(), [p](long a) { return a % p == 0; }));
}

int WeightSystem::k(long p) const {
  return static_cast<int>(std::count_if(degrees.begin(), degrees.end(), [p](long d) { return d % p == 0; }));
}

long WeightSystem::q(long p) const {
  return dimension() - static_cast<long>(degrees.size()) - m(p) + k(p);
}

WellFormedReport wellformed_check(const WeightSystem& ws) {
  if (ws.weights.empty()) throw InputError("empty weight system");
  WellFormedReport r;
  r.well_formed = true;
  const long top = *std::max_element(ws.weights.begin(), ws.weights.end());
  for (long p = 2; p <= top; ++p) {
    if (!is_prime(p)) continue;
    PrimeCheck c{p, ws.m(p), ws.k(p), ws.q(p)};
    if (c.q < 2) r.well_formed = false;
    r.primes.push_back(c);
  }
  return r;
}

long isotropy_order(const std::vector<long>& weights) {
  if (weights.empty()) throw InputError("isotropy_order needs at least one coordinate");
  long g = 0;
  for (long w : weights) g = std::gcd(g, w);
  return g;
}

AgeQuery AgeQuery::make(int n, long k) {
  if (k < 2) throw InputError("isotropy order must be at least 2");
  AgeQuery q;
  q.n = n;
  q.k = k;
  q.s = (n + 1) / k;
  q.t = (n + 1) % k;
  q.a = (q.t * (q.t + 1) / 2) / k;
  return q;
}

BigRational ageterm(const AgeQuery& q) {
  if (q.k < 2) throw InputError("isotropy order must be at least 2");
  BigRational r(q.s * q.k * (q.k - 1) / 2 + q.a * q.k, q.k);
  r.canonicalize();
  return r;
}

long agei_sum(const AgeQuery& q) {
  const long n = q.n, k = q.k;
  long sum = 0;
  for (long w = 1; w <= n + 1; ++w)
    if (w != k) sum += residue(w, k);
  sum += residue(n * (n + 1) / 2, k);
  return sum - residue(n + 1, k) - residue(n * (n + 1), k);
}

TerminalityWitness terminality_verdict(int n) {
  if (n < 2) throw InputError("terminality_verdict needs n >= 2");
  TerminalityWitness w;
  w.n = n;
  for (long k = 2; k <= n + 1; ++k) w.sectors.push_back({k, ageterm(AgeQuery::make(n, k))});
  if (n <= 4) {
    w.has_crepant_resolution = true;
    return w;
  }
  const AgeQuery q = AgeQuery::make(n, 3);
  w.s = q.s;
  w.t = q.t;
  w.age_g = ageterm(q);
  w.fixed_dim = q.s - 2;
  w.age_inverse = BigRational(n - 1 - w.fixed_dim) - w.age_g;
  // Terminal as soon as neither g nor g^-1 has age 1.
  w.has_crepant_resolution = (w.age_g == 1 || w.age_inverse == 1);
  return w;
}

}  // namespace dworkgeom
