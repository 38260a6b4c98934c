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

#ifndef DWORKGEOM_INT_MATRIX_H_
#define DWORKGEOM_INT_MATRIX_H_

#include <optional>
#include <string>
#include <vector>

#include "dworkgeom/rational.h"

namespace dworkgeom {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(int n);
  static IntMatrix from_columns(const std::vector<std::vector<BigInt>>& cols, int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const BigInt& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  std::vector<BigInt> row(int i) const;
  std::vector<BigInt> column(int j) const;
  IntMatrix transpose() const;
  IntMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
  bool is_symmetric() const;
  bool is_square() const { return rows_ == cols_; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> a_;
};

struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  // Nonzero diagonal entries d_1 | d_2 | ..., all positive.
  std::vector<BigInt> invariant_factors;
  int rank = 0;
};

// D = U * A * V with U, V unimodular.
SmithForm smith_normal_form(const IntMatrix& a);

BigInt determinant(const IntMatrix& a);
int rank(const IntMatrix& a);
// Basis of {x in Z^n : A x = 0} as the columns of the result (saturated).
IntMatrix integer_kernel(const IntMatrix& a);
// Unique or any rational solution of A x = b; nullopt if inconsistent.
std::optional<std::vector<BigRational>> solve_rational(const IntMatrix& a, const std::vector<BigInt>& b);
// (positive, negative, zero) counts of the symmetric form.
struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};
Signature signature(const IntMatrix& gram);

}  // namespace dworkgeom

#endif  // DWORKGEOM_INT_MATRIX_H_
