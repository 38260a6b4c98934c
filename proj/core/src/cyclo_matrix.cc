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

#include "dworkgeom/cyclo_matrix.h"

#include <numeric>

#include "dworkgeom/errors.h"

namespace dworkgeom {

namespace {

int common_conductor(const CycloMatrix& m) {
  int c = 1;
  for (const auto& row : m)
    for (const auto& x : row) c = std::lcm(c, x.conductor());
  return c;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(CycloMatrix& m, int ncols) {
  std::vector<int> pivots;
  int r = 0;
  const int rows = static_cast<int>(m.size());
  for (int c = 0; c < ncols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const CyclotomicNumber inv = m[r][c].inverse();
    for (int j = c; j < ncols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const CyclotomicNumber f = m[i][c];
      for (int j = c; j < ncols; ++j)
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

CycloMatrix lift_matrix(const CycloMatrix& m, int conductor) {
  CycloMatrix r = m;
  for (auto& row : r)
    for (auto& x : row)
      if (x.conductor() != conductor) x = x.lift(conductor);
  return r;
}

int cyclo_rank(const CycloMatrix& m) {
  if (m.empty()) return 0;
  CycloMatrix w = lift_matrix(m, common_conductor(m));
  return static_cast<int>(rref(w, static_cast<int>(w[0].size())).size());
}

std::vector<CycloVector> cyclo_kernel(const CycloMatrix& m, int ncols) {
  const int cond = common_conductor(m);
  CycloMatrix w = lift_matrix(m, cond);
  std::vector<int> piv = rref(w, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<CycloVector> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    CycloVector v(ncols, CyclotomicNumber::zero(cond));
    v[f] = CyclotomicNumber::one(cond);
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -w[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<CyclotomicNumber> cyclo_coordinates(const std::vector<CycloVector>& basis, const CycloVector& v) {
  const int k = static_cast<int>(basis.size());
  const int n = static_cast<int>(v.size());
  // Augmented system with the basis vectors as columns.
  CycloMatrix m(n, CycloVector(k + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) m[i][j] = basis[j][i];
    m[i][k] = v[i];
  }
  const int cond = common_conductor(m);
  m = lift_matrix(m, cond);
  std::vector<int> piv = rref(m, k + 1);
  if (!piv.empty() && piv.back() == k) return {};
  if (static_cast<int>(piv.size()) != k) throw ComputationError("coordinates requested in a dependent family");
  std::vector<CyclotomicNumber> c(k, CyclotomicNumber::zero(cond));
  for (int i = 0; i < k; ++i) c[piv[i]] = m[i][k];
  return c;
}

CyclotomicNumber cyclo_determinant(CycloMatrix m) {
  const int n = static_cast<int>(m.size());
  const int cond = common_conductor(m);
  m = lift_matrix(m, cond);
  CyclotomicNumber det = CyclotomicNumber::one(cond);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return CyclotomicNumber::zero(cond);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    const CyclotomicNumber inv = m[c][c].inverse();
    for (int i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      const CyclotomicNumber f = m[i][c] * inv;
      for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

}  // namespace dworkgeom
