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

#include "dworkgeom/int_matrix.h"

#include <sstream>
#include <utility>

#include "dworkgeom/errors.h"

namespace dworkgeom {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw InputError("ragged matrix literal");
    for (long x : r) a_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<BigInt>>& cols, int rows) {
  IntMatrix m(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols(); ++j) {
    if (static_cast<int>(cols[j].size()) != rows) throw InputError("column length mismatch");
    for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

std::vector<BigInt> IntMatrix::row(int i) const {
  return std::vector<BigInt>(a_.begin() + static_cast<long>(i) * cols_, a_.begin() + static_cast<long>(i + 1) * cols_);
}

std::vector<BigInt> IntMatrix::column(int j) const {
  std::vector<BigInt> c;
  for (int i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  IntMatrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
  return s;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product dimension mismatch");
  IntMatrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const BigInt& x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
    }
  return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix difference dimension mismatch");
  IntMatrix r = a;
  for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
  return r;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << "[";
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

// row_t -= f * row_s
void add_row(IntMatrix& m, int t, int s, const BigInt& f) {
  if (f == 0) return;
  for (int j = 0; j < m.cols(); ++j) m(t, j) -= f * m(s, j);
}

void negate_row(IntMatrix& m, int r) {
  for (int j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

namespace {

// Row Hermite reduction of d; every row operation is mirrored on u.
void hermite_rows(IntMatrix& d, IntMatrix& u) {
  const int m = d.rows();
  const int n = d.cols();
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int best = -1;
    for (int i = r; i < m; ++i)
      if (d(i, c) != 0 && (best < 0 || abs(d(i, c)) < abs(d(best, c)))) best = i;
    if (best < 0) continue;
    swap_rows(d, r, best);
    swap_rows(u, r, best);
    for (int i = r + 1; i < m; ++i) {
      if (d(i, c) == 0) continue;
      const BigInt a = d(r, c);
      const BigInt b = d(i, c);
      BigInt g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      const BigInt p = a / g;
      const BigInt q = b / g;
      for (IntMatrix* t : {&d, &u}) {
        for (int j = 0; j < t->cols(); ++j) {
          const BigInt top = (*t)(r, j);
          const BigInt bot = (*t)(i, j);
          (*t)(r, j) = x * top + y * bot;
          (*t)(i, j) = p * bot - q * top;
        }
      }
    }
    if (d(r, c) < 0) {
      negate_row(d, r);
      negate_row(u, r);
    }
    for (int k = 0; k < r; ++k) {
      BigInt f;
      mpz_fdiv_q(f.get_mpz_t(), d(k, c).get_mpz_t(), d(r, c).get_mpz_t());
      add_row(d, k, r, f);
      add_row(u, k, r, f);
    }
    ++r;
  }
}

bool diagonal_prefix(const IntMatrix& d, int& rank) {
  rank = 0;
  bool seen_zero = false;
  for (int i = 0; i < d.rows(); ++i)
    for (int j = 0; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      if (i != j) return false;
    }
  for (int k = 0; k < std::min(d.rows(), d.cols()); ++k) {
    if (d(k, k) == 0) {
      seen_zero = true;
    } else {
      if (seen_zero) return false;
      ++rank;
    }
  }
  return true;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  int r = 0;
  // Alternate row and column Hermite forms until only a diagonal prefix remains.
  for (int iter = 0;; ++iter) {
    if (iter > 4 * (a.rows() + a.cols()) + 8) throw ComputationError("Smith normal form did not converge");
    hermite_rows(d, u);
    if (diagonal_prefix(d, r)) break;
    IntMatrix dt = d.transpose();
    IntMatrix vt = v.transpose();
    hermite_rows(dt, vt);
    d = dt.transpose();
    v = vt.transpose();
    if (diagonal_prefix(d, r)) break;
  }
  // Divisibility chain: diag(a, b) -> diag(gcd, lcm).
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      const BigInt di = d(i, i);
      const BigInt dj = d(j, j);
      if (dj % di == 0) continue;
      BigInt g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), di.get_mpz_t(), dj.get_mpz_t());
      const BigInt p = di / g;
      const BigInt q = dj / g;
      for (int k = 0; k < u.cols(); ++k) {
        const BigInt ui = u(i, k);
        const BigInt uj = u(j, k);
        u(i, k) = x * ui + y * uj;
        u(j, k) = p * uj - q * ui;
      }
      for (int k = 0; k < v.rows(); ++k) {
        const BigInt vi = v(k, i);
        const BigInt vj = v(k, j);
        v(k, i) = vi + vj;
        v(k, j) = -y * q * vi + x * p * vj;
      }
      d(i, i) = g;
      d(j, j) = p * dj;
    }
  SmithForm s;
  s.rank = r;
  for (int i = 0; i < r; ++i) s.invariant_factors.push_back(d(i, i));
  s.d = std::move(d);
  s.u = std::move(u);
  s.v = std::move(v);
  return s;
}

BigInt determinant(const IntMatrix& a) {
  if (!a.is_square()) throw InputError("determinant of a non-square matrix");
  const int n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix m = a;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      swap_rows(m, k, r);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        BigInt x = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = x;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

int rank(const IntMatrix& a) { return smith_normal_form(a).rank; }

IntMatrix integer_kernel(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  const int n = a.cols();
  IntMatrix k(n, n - s.rank);
  for (int j = s.rank; j < n; ++j)
    for (int i = 0; i < n; ++i) k(i, j - s.rank) = s.v(i, j);
  return k;
}

std::optional<std::vector<BigRational>> solve_rational(const IntMatrix& a, const std::vector<BigInt>& b) {
  const int m = a.rows();
  const int n = a.cols();
  if (static_cast<int>(b.size()) != m) throw InputError("right-hand side length mismatch");
  std::vector<std::vector<BigRational>> aug(m, std::vector<BigRational>(n + 1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = a(i, j);
    aug[i][n] = b[i];
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int p = r;
    while (p < m && aug[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(aug[p], aug[r]);
    const BigRational inv = 1 / aug[r][c];
    for (int j = c; j <= n; ++j) aug[r][j] *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      const BigRational f = aug[i][c];
      for (int j = c; j <= n; ++j) aug[i][j] -= f * aug[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < m; ++i)
    if (aug[i][n] != 0) return std::nullopt;
  std::vector<BigRational> x(n, 0);
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = aug[i][n];
  return x;
}

Signature signature(const IntMatrix& gram) {
  if (!gram.is_symmetric()) throw InputError("signature needs a symmetric matrix");
  const int n = gram.rows();
  std::vector<std::vector<BigRational>> m(n, std::vector<BigRational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = gram(i, j);
  Signature s;
  std::vector<bool> done(n, false);
  // Symmetric elimination by congruence; a zero diagonal is repaired by
  // adding a partner row and column first.
  for (int step = 0; step < n; ++step) {
    int k = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && m[i][i] != 0) {
        k = i;
        break;
      }
    if (k < 0) {
      int pi = -1, pj = -1;
      for (int i = 0; i < n && pi < 0; ++i)
        for (int j = 0; j < n; ++j)
          if (!done[i] && !done[j] && i != j && m[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi < 0) break;
      for (int c = 0; c < n; ++c) m[pi][c] += m[pj][c];
      for (int r = 0; r < n; ++r) m[r][pi] += m[r][pj];
      k = pi;
    }
    done[k] = true;
    const BigRational piv = m[k][k];
    if (piv > 0) ++s.positive; else ++s.negative;
    for (int i = 0; i < n; ++i) {
      if (done[i] || m[i][k] == 0) continue;
      const BigRational f = m[i][k] / piv;
      for (int j = 0; j < n; ++j) m[i][j] -= f * m[k][j];
      for (int j = 0; j < n; ++j) m[j][i] -= f * m[j][k];
    }
  }
  s.zero = n - s.positive - s.negative;
  return s;
}

}  // namespace dworkgeom
