/* Copyright 2026 prymsym contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef PRYMSYM_MATRIX_HPP
#define PRYMSYM_MATRIX_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "prymsym/field.hpp"
#include "prymsym/poly.hpp"

namespace prymsym {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {}

  int rows() const { return r_; }
  int cols() const { return c_; }
  T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

  Matrix transpose() const {
    Matrix t(c_, r_, a_.empty() ? T() : a_[0]);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  Matrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    Matrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()), a_.empty() ? T() : a_[0]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) s(static_cast<int>(i), static_cast<int>(j)) = (*this)(rows[i], cols[j]);
    return s;
  }
  bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

 private:
  int r_ = 0, c_ = 0;
  std::vector<T> a_;
};

// Symmetric n x n matrix; only the upper triangle is stored.
template <class T>
class SymMatrix {
 public:
  SymMatrix() = default;
  SymMatrix(int n, const T& fill) : n_(n), a_(static_cast<std::size_t>(n) * (n + 1) / 2, fill) {}

  int n() const { return n_; }
  T& at(int i, int j) { return a_[index(i, j)]; }
  const T& at(int i, int j) const { return a_[index(i, j)]; }
  const T& operator()(int i, int j) const { return at(i, j); }

  Matrix<T> dense() const {
    Matrix<T> m(n_, n_, a_.empty() ? T() : a_[0]);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) m(i, j) = at(i, j);
    return m;
  }
  static SymMatrix from_dense(const Matrix<T>& m) {
    SymMatrix s(m.rows(), m(0, 0));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = i; j < m.cols(); ++j) s.at(i, j) = m(i, j);
    return s;
  }
  bool operator==(const SymMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

 private:
  int n_ = 0;
  std::vector<T> a_;
  std::size_t index(int i, int j) const {
    if (i > j) std::swap(i, j);
    return static_cast<std::size_t>(i) * n_ - static_cast<std::size_t>(i) * (i - 1) / 2 + (j - i);
  }
};

// Leibniz expansion; entries that are zero are skipped so structurally sparse
// matrices of forms stay cheap. `zero` is returned for an all-zero expansion.
template <class T>
T det_leibniz(const Matrix<T>& m, const T& zero) {
  int n = m.rows();
  if (n == 0) return zero;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  bool have = false;
  T acc = zero;
  do {
    bool skip = false;
    for (int i = 0; i < n; ++i)
      if (m(i, perm[i]).is_zero()) {
        skip = true;
        break;
      }
    if (skip) continue;
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    T prod = m(0, perm[0]);
    for (int i = 1; i < n; ++i) prod = prod * m(i, perm[i]);
    if (inv & 1) prod = -prod;
    if (!have) {
      acc = prod;
      have = true;
    } else {
      acc = acc + prod;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

// Classical adjugate: adj(M)(j,i) = (-1)^{i+j} det(M without row i, column j).
template <class T>
Matrix<T> adjugate_leibniz(const Matrix<T>& m, const T& minor_zero, const T& one) {
  int n = m.rows();
  Matrix<T> adj(n, n, minor_zero);
  if (n == 1) {
    adj(0, 0) = one;
    return adj;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> rows, cols;
      for (int k = 0; k < n; ++k) {
        if (k != i) rows.push_back(k);
        if (k != j) cols.push_back(k);
      }
      T d = det_leibniz(m.submatrix(rows, cols), minor_zero);
      adj(j, i) = ((i + j) & 1) ? -d : d;
    }
  return adj;
}

template <class T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b, const T& zero) {
  if (a.cols() != b.rows()) throw DomainError("matmul: shape mismatch");
  Matrix<T> c(a.rows(), b.cols(), zero);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      T s = zero;
      for (int k = 0; k < a.cols(); ++k)
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) s = s + a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

using ScalarMatrix = Matrix<Scalar>;
using PolyMatrix = Matrix<HomogPoly>;
using ScalarSym = SymMatrix<Scalar>;
using PolySym = SymMatrix<HomogPoly>;

struct DetAdj {
  HomogPoly det;
  PolySym adj;
};

// Determinant and adjugate of a symmetric matrix of forms. Entries must share
// one degree (zero entries are allowed).
DetAdj det_and_adjugate(const PolySym& m);

// Scalar linear algebra --------------------------------------------------

ScalarMatrix identity_matrix(const Field& f, int n);
ScalarMatrix zero_matrix(const Field& f, int rows, int cols);
Scalar determinant(const ScalarMatrix& m);
ScalarMatrix adjugate(const ScalarMatrix& m);
ScalarMatrix inverse(const ScalarMatrix& m);
ScalarMatrix mul(const ScalarMatrix& a, const ScalarMatrix& b);
std::vector<Scalar> mul(const ScalarMatrix& a, const std::vector<Scalar>& v);
int rank(const ScalarMatrix& m);
ScalarMatrix map_to(const ScalarMatrix& m, const Field& f);
ScalarSym map_to(const ScalarSym& m, const Field& f);

struct LinearSolveResult {
  ScalarMatrix rref;
  int rank = 0;
  std::vector<int> pivots;
  std::vector<std::vector<Scalar>> kernel;  // basis of {v : M v = 0}
  std::optional<std::vector<Scalar>> particular;  // for M v = rhs, if consistent
};

// Reduced row echelon form over the field of the entries. `f` is needed for
// the empty cases; entries are mapped into it.
LinearSolveResult linear_solve(const ScalarMatrix& m, const Field& f,
                               const std::optional<std::vector<Scalar>>& rhs = std::nullopt);

// Quadratic form z M z^T of a scalar symmetric matrix.
HomogPoly quadratic_form(const ScalarSym& m, const VarList& vars);
// Inverse of quadratic_form (off-diagonal entries are half the cross terms).
ScalarSym form_matrix(const HomogPoly& q);

// Evaluate a matrix of forms at a point.
ScalarMatrix evaluate(const PolyMatrix& m, const std::vector<Scalar>& pt);
ScalarSym evaluate(const PolySym& m, const std::vector<Scalar>& pt);

// Projective equality of vectors: cross-multiplication, no normalization.
bool proportional(const std::vector<Scalar>& a, const std::vector<Scalar>& b);
// Scale so the first nonzero coordinate is 1.
std::vector<Scalar> normalize_projective(const std::vector<Scalar>& v);

}  // namespace prymsym

#endif
