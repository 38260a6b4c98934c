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

#ifndef DWORKGEOM_DWORK_H_
#define DWORKGEOM_DWORK_H_

#include <vector>

#include "dworkgeom/multipoly.h"
#include "dworkgeom/rational.h"

namespace dworkgeom {

// X_lambda = { sum x_i^(n+1) - (n+1) lambda prod x_i = 0 } in P^n.
class DworkPencil {
 public:
  explicit DworkPencil(int n);

  int n() const { return n_; }
  int degree() const { return n_ + 1; }
  int nvars() const { return n_ + 1; }
  // F_lambda with lambda kept formal.
  const MultiPoly& polynomial() const { return f_; }
  // The two lambda-coefficients: F = fermat + lambda * product.
  const MultiPoly& fermat_part() const { return fermat_; }
  const MultiPoly& product_part() const { return product_; }

 private:
  int n_;
  MultiPoly f_;
  MultiPoly fermat_;
  MultiPoly product_;
};

// A smooth hypersurface of degree d in P^(m+1).
struct HypersurfaceClass {
  int m = 3;
  int d = 5;
};

struct HodgeDiamond {
  int m = 0;
  // h[p][q], 0 <= p, q <= m.
  std::vector<std::vector<BigInt>> h;
  BigInt euler;

  BigInt betti(int k) const;
};

struct SingularFiber {
  // lambda = xi_(n+1)^r.
  int r = 0;
  BigInt node_count;
  // Exponent vectors (i_1..i_n) of the nodes (xi^i_1 : ... : xi^i_n : 1), when enumerated.
  std::vector<std::vector<int>> nodes;
};

struct SingularFiberReport {
  int n = 0;
  std::vector<SingularFiber> fibers;
};

// Node lists are produced only when enumerate is set and n <= 4.
SingularFiberReport singular_fibers(int n, bool enumerate = false);
BigInt euler_characteristic(const HypersurfaceClass& cls);
BigInt middle_betti(const HypersurfaceClass& cls);
// Monomials of total degree t in nvars variables with every exponent <= max_exp.
BigInt bounded_monomial_count(int nvars, int max_exp, long t);
// dim of the Jacobian ring of the Fermat form in the grade attached to H^(m-p,p).
BigInt jacobian_ring_dimension(const HypersurfaceClass& cls, int p);
HodgeDiamond hodge_diamond(const HypersurfaceClass& cls);

}  // namespace dworkgeom

#endif  // DWORKGEOM_DWORK_H_
