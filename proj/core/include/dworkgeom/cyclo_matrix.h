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

#ifndef DWORKGEOM_CYCLO_MATRIX_H_
#define DWORKGEOM_CYCLO_MATRIX_H_

#include <vector>

#include "dworkgeom/cyclotomic.h"
#include "dworkgeom/multipoly.h"

namespace dworkgeom {

// Row-major dense matrix over a single cyclotomic field.
using CycloMatrix = std::vector<CycloVector>;

CycloMatrix lift_matrix(const CycloMatrix& m, int conductor);
int cyclo_rank(const CycloMatrix& m);
// Basis of the right kernel {x : m x = 0}, one vector per free column.
std::vector<CycloVector> cyclo_kernel(const CycloMatrix& m, int ncols);
// Coordinates c with sum_k c_k basis[k] = v, or empty if v is outside the span.
std::vector<CyclotomicNumber> cyclo_coordinates(const std::vector<CycloVector>& basis, const CycloVector& v);
CyclotomicNumber cyclo_determinant(CycloMatrix m);

}  // namespace dworkgeom

#endif  // DWORKGEOM_CYCLO_MATRIX_H_
