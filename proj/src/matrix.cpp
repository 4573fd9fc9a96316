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
#include "prymsym/matrix.hpp"

namespace prymsym {

DetAdj det_and_adjugate(const PolySym& m) {
  int n = m.n();
  if (n < 1) throw DomainError("empty matrix");
  int deg = -1;
  const HomogPoly& ref = m.at(0, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const HomogPoly& e = m.at(i, j);
      if (e.vars() != ref.vars()) throw InputError("matrix entries use different variables");
      if (e.is_zero()) continue;
      if (deg < 0)
        deg = e.degree();
      else if (deg != e.degree())
        throw InputError("matrix entries of mixed degree");
    }
  if (deg < 0) deg = ref.degree();
  Field f = ref.field();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) f = join_fields(f, m.at(i, j).field());
  HomogPoly zero_det(f, ref.vars(), n * deg);
  HomogPoly zero_minor(f, ref.vars(), (n - 1) * deg);
  HomogPoly one = HomogPoly::constant(f, ref.vars(), Scalar::one(f));
  PolyMatrix d = m.dense();
  DetAdj out;
  out.det = det_leibniz(d, zero_det);
  out.adj = PolySym::from_dense(adjugate_leibniz(d, zero_minor, one));
  return out;
}

ScalarMatrix identity_matrix(const Field& f, int n) {
  ScalarMatrix m(n, n, Scalar::zero(f));
  for (int i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

ScalarMatrix zero_matrix(const Field& f, int rows, int cols) { return ScalarMatrix(rows, cols, Scalar::zero(f)); }

ScalarMatrix map_to(const ScalarMatrix& m, const Field& f) {
  ScalarMatrix r(m.rows(), m.cols(), Scalar::zero(f));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).map_to(f);
  return r;
}

ScalarSym map_to(const ScalarSym& m, const Field& f) {
  ScalarSym r(m.n(), Scalar::zero(f));
  for (int i = 0; i < m.n(); ++i)
    for (int j = i; j < m.n(); ++j) r.at(i, j) = m.at(i, j).map_to(f);
  return r;
}

namespace {

Field common_field(const ScalarMatrix& m) {
  Field f = m.rows() && m.cols() ? m(0, 0).field() : Field::rationals();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) f = join_fields(f, m(i, j).field());
  return f;
}

}  // namespace

Scalar determinant(const ScalarMatrix& m0) {
  if (m0.rows() != m0.cols()) throw DomainError("determinant of a non-square matrix");
  Field f = common_field(m0);
  ScalarMatrix m = map_to(m0, f);
  int n = m.rows();
  Scalar det = Scalar::one(f);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (!m(r, c).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return Scalar::zero(f);
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det = det * m(c, c);
    Scalar inv = m(c, c).inv();
    for (int r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      Scalar factor = m(r, c) * inv;
      for (int j = c; j < n; ++j) m(r, j) = m(r, j) - factor * m(c, j);
    }
  }
  return det;
}

ScalarMatrix adjugate(const ScalarMatrix& m) {
  Field f = common_field(m);
  int n = m.rows();
  ScalarMatrix adj(n, n, Scalar::zero(f));
  if (n == 1) {
    adj(0, 0) = Scalar::one(f);
    return adj;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> rows, cols;
      for (int k = 0; k < n; ++k) {
        if (k != i) rows.push_back(k);
        if (k != j) cols.push_back(k);
      }
      Scalar d = determinant(m.submatrix(rows, cols));
      adj(j, i) = ((i + j) & 1) ? -d : d;
    }
  return adj;
}

ScalarMatrix mul(const ScalarMatrix& a, const ScalarMatrix& b) {
  Field f = join_fields(common_field(a), common_field(b));
  return matmul(a, b, Scalar::zero(f));
}

std::vector<Scalar> mul(const ScalarMatrix& a, const std::vector<Scalar>& v) {
  if (a.cols() != static_cast<int>(v.size())) throw DomainError("matrix-vector shape mismatch");
  Field f = common_field(a);
  for (const auto& x : v) f = join_fields(f, x.field());
  std::vector<Scalar> out(a.rows(), Scalar::zero(f));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out[i] = out[i] + a(i, j) * v[j];
  return out;
}

LinearSolveResult linear_solve(const ScalarMatrix& m0, const Field& f0, const std::optional<std::vector<Scalar>>& rhs) {
  Field f = f0;
  for (int i = 0; i < m0.rows(); ++i)
    for (int j = 0; j < m0.cols(); ++j) f = join_fields(f, m0(i, j).field());
  if (rhs)
    for (const auto& x : *rhs) f = join_fields(f, x.field());
  int rows = m0.rows(), cols = m0.cols();
  int width = cols + (rhs ? 1 : 0);
  ScalarMatrix m(rows, width, Scalar::zero(f));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = m0(i, j).map_to(f);
    if (rhs) m(i, cols) = (*rhs)[i].map_to(f);
  }
  LinearSolveResult res;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!m(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < width; ++j) std::swap(m(piv, j), m(r, j));
    Scalar inv = m(r, c).inv();
    for (int j = 0; j < width; ++j) m(r, j) = m(r, j) * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar factor = m(i, c);
      for (int j = 0; j < width; ++j) m(i, j) = m(i, j) - factor * m(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  res.rref = ScalarMatrix(rows, cols, Scalar::zero(f));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) res.rref(i, j) = m(i, j);
  std::vector<bool> is_pivot(cols, false);
  for (int c : res.pivots) is_pivot[c] = true;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols, Scalar::zero(f));
    v[free] = Scalar::one(f);
    for (int i = 0; i < r; ++i) v[res.pivots[i]] = -m(i, free);
    res.kernel.push_back(v);
  }
  if (rhs) {
    bool consistent = true;
    for (int i = r; i < rows; ++i)
      if (!m(i, cols).is_zero()) consistent = false;
    if (consistent) {
      std::vector<Scalar> v(cols, Scalar::zero(f));
      for (int i = 0; i < r; ++i) v[res.pivots[i]] = m(i, cols);
      res.particular = v;
    }
  }
  return res;
}

int rank(const ScalarMatrix& m) {
  Field f = common_field(m);
  return linear_solve(m, f).rank;
}

ScalarMatrix inverse(const ScalarMatrix& m) {
  Scalar d = determinant(m);
  if (d.is_zero()) throw DomainError("matrix is singular");
  ScalarMatrix a = adjugate(m);
  Scalar inv = d.inv();
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) a(i, j) = a(i, j) * inv;
  return a;
}

HomogPoly quadratic_form(const ScalarSym& m, const VarList& vars) {
  Field f = m.at(0, 0).field();
  for (int i = 0; i < m.n(); ++i)
    for (int j = i; j < m.n(); ++j) f = join_fields(f, m.at(i, j).field());
  HomogPoly q(f, vars, 2);
  Scalar two = Scalar::from_int(f, 2);
  for (int i = 0; i < m.n(); ++i)
    for (int j = i; j < m.n(); ++j) {
      Exponent e{};
      e[i] += 1;
      e[j] += 1;
      q.add_term(e, i == j ? m.at(i, j) : two * m.at(i, j));
    }
  return q;
}

ScalarSym form_matrix(const HomogPoly& q) {
  if (q.degree() != 2 && !q.is_zero()) throw DomainError("form_matrix: not a quadratic form");
  int n = q.nvars();
  Field f = q.field();
  ScalarSym m(n, Scalar::zero(f));
  Scalar half = Scalar::from_int(f, 2).inv();
  for (const auto& [e, c] : q.terms()) {
    int a = -1, b = -1;
    for (int i = 0; i < n; ++i) {
      if (e[i] == 2) a = b = i;
      if (e[i] == 1) (a < 0 ? a : b) = i;
    }
    m.at(a, b) = a == b ? c : c * half;
  }
  return m;
}

ScalarMatrix evaluate(const PolyMatrix& m, const std::vector<Scalar>& pt) {
  ScalarMatrix r(m.rows(), m.cols(), Scalar());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).evaluate(pt);
  return r;
}

ScalarSym evaluate(const PolySym& m, const std::vector<Scalar>& pt) {
  ScalarSym r(m.n(), Scalar());
  for (int i = 0; i < m.n(); ++i)
    for (int j = i; j < m.n(); ++j) r.at(i, j) = m.at(i, j).evaluate(pt);
  return r;
}

bool proportional(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  if (a.size() != b.size()) return false;
  bool za = true, zb = true;
  for (const auto& x : a) za = za && x.is_zero();
  for (const auto& x : b) zb = zb && x.is_zero();
  if (za || zb) return za && zb;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (!(a[i] * b[j] == a[j] * b[i])) return false;
  return true;
}

std::vector<Scalar> normalize_projective(const std::vector<Scalar>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) {
      Scalar inv = x.inv();
      std::vector<Scalar> out;
      for (const auto& y : v) out.push_back(y * inv);
      return out;
    }
  return v;
}

}  // namespace prymsym
