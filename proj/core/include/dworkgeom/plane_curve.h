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

#ifndef DWORKGEOM_PLANE_CURVE_H_
#define DWORKGEOM_PLANE_CURVE_H_

#include <cstdint>

#include "dworkgeom/multipoly.h"

namespace dworkgeom {

struct SmoothnessCertificate {
  bool smooth = false;
  // Prime p = 1 mod conductor used for the successful reduction, 0 otherwise.
  std::uint64_t prime = 0;
  int attempts = 0;
};

// Tries to prove that the ternary form f (lambda-free, homogeneous) defines a
// smooth plane curve. The form is reduced modulo a prime splitting in Q(xi_m);
// after a random change of coordinates the resultants Res_w(f_u, f_w) and
// Res_w(f_v, f_w) must have no common root. A smooth reduction implies
// smoothness in characteristic zero. Returns smooth = false when every attempt
// fails, which happens for singular curves and, with tiny probability, for
// unlucky draws.
SmoothnessCertificate certify_smooth_plane_curve(const MultiPoly& f, std::uint64_t seed, int max_attempts = 8);

}  // namespace dworkgeom

#endif  // DWORKGEOM_PLANE_CURVE_H_
