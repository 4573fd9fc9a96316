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
#include "prymsym/geometry.hpp"

namespace prymsym {

std::pair<Field, Scalar> sqrt_in_tower(const Scalar& a) {
  const Field& f = a.field();
  if (auto r = a.sqrt()) return {f, *r};
  if (f.is_extension()) throw DomainError("square root of " + a.to_string() + " needs a second quadratic extension");
  if (f.is_finite()) {
    Field ext = Field::canonical_extension(f);
    return {ext, *a.map_to(ext).sqrt()};
  }
  // a = n/d = N/d^2 with N = n*d = k^2 * D
  mpz_class n = a.rational().get_num(), d = a.rational().get_den();
  mpz_class N = n * d, k = 1;
  for (mpz_class p = 2; p * p <= abs(N) && p < 100000; ++p)
    while (N % (p * p) == 0) {
      N /= p * p;
      k *= p;
    }
  Field ext = Field::quad_ext(f, Scalar::from_rational(f, mpq_class(N)));
  Scalar r = Scalar::sqrt_d(ext) * Scalar::from_rational(f, mpq_class(k, d));
  return {ext, r};
}

std::vector<Vec> kernel_basis(const ScalarMatrix& m, const Field& f) { return linear_solve(m, f).kernel; }

std::vector<Vec> hyperplane_basis(const Vec& l) {
  Field f = l.at(0).field();
  for (const auto& x : l) f = join_fields(f, x.field());
  ScalarMatrix m(1, static_cast<int>(l.size()), Scalar::zero(f));
  for (std::size_t i = 0; i < l.size(); ++i) m(0, static_cast<int>(i)) = l[i];
  return kernel_basis(m, f);
}

BinaryForm restrict_to_line(const HomogPoly& f, const Vec& P, const Vec& R) {
  auto imgs = subspace_images({P, R}, {"s", "t"});
  Field k = join_fields(f.field(), imgs.at(0).field());
  for (auto& g : imgs) g = g.map_to(k);
  HomogPoly r = f.map_to(k).substitute(imgs);
  if (r.is_zero()) return BinaryForm(k, f.degree());
  return BinaryForm::from_poly(r);
}

std::vector<HomogPoly> subspace_images(const std::vector<Vec>& basis, const VarList& w) {
  std::size_t n = basis.at(0).size();
  Field f = basis[0][0].field();
  for (const auto& b : basis)
    for (const auto& x : b) f = join_fields(f, x.field());
  std::vector<HomogPoly> out;
  for (std::size_t i = 0; i < n; ++i) {
    Vec c;
    for (const auto& b : basis) c.push_back(b[i]);
    out.push_back(HomogPoly::linear(f, w, c));
  }
  return out;
}

HomogPoly restrict_form(const HomogPoly& f, const std::vector<Vec>& basis, const VarList& w) {
  return f.substitute(subspace_images(basis, w));
}

Vec linear_coeffs(const HomogPoly& l) {
  if (l.degree() != 1 && !l.is_zero()) throw DomainError("not a linear form");
  Vec c;
  for (int i = 0; i < l.nvars(); ++i) {
    Exponent e{};
    e[i] = 1;
    c.push_back(l.coeff(e));
  }
  return c;
}

Vec evaluate_all(const std::vector<HomogPoly>& fs, const Vec& pt) {
  Vec out;
  for (const auto& f : fs) out.push_back(f.evaluate(pt));
  return out;
}

LinePair split_rank_two(const ScalarSym& m) {
  int n = m.n();
  Field f = m.at(0, 0).field();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) f = join_fields(f, m.at(i, j).field());
  ScalarMatrix dm = map_to(m.dense(), f);
  int rk = rank(dm);
  if (rk == 0) throw DomainError("zero quadratic form has no line factorization");
  if (rk > 2) throw DomainError("quadratic form of rank " + std::to_string(rk) + " is not a product of linear forms");
  auto row = [&](int i) {
    Vec r;
    for (int j = 0; j < n; ++j) r.push_back(dm(i, j));
    return r;
  };
  LinePair out;
  if (rk == 1) {
    for (int i = 0; i < n; ++i)
      if (!dm(i, i).is_zero()) {
        Vec r = row(i);
        Scalar inv = dm(i, i).inv();
        out.field = f;
        for (const auto& x : r) out.l1.push_back(x * inv);
        out.l2 = r;
        out.double_line = true;
        return out;
      }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Scalar minor = dm(i, i) * dm(j, j) - dm(i, j) * dm(i, j);
      if (minor.is_zero()) continue;
      Scalar inv = minor.inv();
      Scalar alpha = dm(j, j) * inv, beta = -dm(i, j) * inv, gamma = dm(i, i) * inv;
      Vec r1 = row(i), r2 = row(j);
      if (alpha.is_zero()) {
        out.field = f;
        out.l1 = r2;
        for (int k = 0; k < n; ++k) out.l2.push_back(Scalar::from_int(f, 2) * beta * r1[k] + gamma * r2[k]);
        return out;
      }
      auto [ef, s] = sqrt_in_tower(beta * beta - alpha * gamma);
      Scalar a = alpha.map_to(ef), b = beta.map_to(ef);
      Scalar root1 = (-b + s) / a, root2 = (-b - s) / a;
      out.field = ef;
      for (int k = 0; k < n; ++k) {
        out.l1.push_back(a * (r1[k] - root1 * r2[k]));
        out.l2.push_back(r1[k].map_to(ef) - root2 * r2[k]);
      }
      return out;
    }
  throw DomainError("rank-two form without a nonzero principal minor");
}

namespace {

Scalar conic_value(const ScalarSym& m, const Vec& z) {
  Scalar s = Scalar::zero(join_fields(m.at(0, 0).field(), z[0].field()));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s = s + z[i] * m.at(i, j) * z[j];
  return s;
}

}  // namespace

std::optional<Vec> conic_point(const ScalarSym& m) {
  Field f = m.at(0, 0).field();
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) f = join_fields(f, m.at(i, j).field());
  if (f.is_finite()) {
    auto el = field_elements(f);
    Scalar one = Scalar::one(f), zero = Scalar::zero(f);
    if (conic_value(m, {zero, zero, one}).is_zero()) return Vec{zero, zero, one};
    for (const auto& b : el)
      if (conic_value(m, {zero, one, b}).is_zero()) return Vec{zero, one, b};
    for (const auto& a : el)
      for (const auto& b : el)
        if (conic_value(m, {one, a, b}).is_zero()) return Vec{one, a, b};
    return std::nullopt;
  }
  const int B = 6;
  for (int a = 0; a <= B; ++a)
    for (int b = -B; b <= B; ++b)
      for (int c = -B; c <= B; ++c) {
        if (a == 0 && (b < 0 || (b == 0 && c <= 0))) continue;
        Vec z = {Scalar::from_int(f, a), Scalar::from_int(f, b), Scalar::from_int(f, c)};
        if (conic_value(m, z).is_zero()) return z;
      }
  // section by the line z2 = 0
  Scalar a = m.at(0, 0), b = m.at(0, 1), c = m.at(1, 1);
  if (a.is_zero()) return Vec{Scalar::one(f), Scalar::zero(f), Scalar::zero(f)};
  try {
    auto [ef, s] = sqrt_in_tower(b * b - a * c);
    Scalar r = (-b.map_to(ef) + s) / a.map_to(ef);
    return Vec{r, Scalar::one(ef), Scalar::zero(ef)};
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

std::vector<BinaryForm> conic_parametrization(const ScalarSym& m, const Vec& P) {
  Field f = P[0].field();
  for (const auto& x : P) f = join_fields(f, x.field());
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) f = join_fields(f, m.at(i, j).field());
  int c = 0;
  while (P[c].is_zero()) ++c;
  std::vector<int> others;
  for (int k = 0; k < 3; ++k)
    if (k != c) others.push_back(k);
  Scalar zero = Scalar::zero(f), one = Scalar::one(f);
  std::vector<BinaryForm> D(3, BinaryForm(f, 1));
  D[others[0]] = BinaryForm(f, {one, zero});
  D[others[1]] = BinaryForm(f, {zero, one});
  BinaryForm CD(f, 2), BPD(f, 1);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Scalar mij = m.at(i, j).map_to(f);
      if (mij.is_zero()) continue;
      CD = CD + D[i] * D[j] * mij;
      BPD = BPD + D[j] * (P[i].map_to(f) * mij);
    }
  std::vector<BinaryForm> z;
  Scalar two = Scalar::from_int(f, 2);
  for (int k = 0; k < 3; ++k) z.push_back(CD * P[k].map_to(f) - BPD * D[k] * two);
  return z;
}

ScalarMatrix center_frame(const Vec& center) {
  Field f = center[0].field();
  for (const auto& x : center) f = join_fields(f, x.field());
  int c = 0;
  while (center[c].is_zero()) ++c;
  ScalarMatrix T(3, 3, Scalar::zero(f));
  int col = 0;
  for (int k = 0; k < 3; ++k)
    if (k != c) T(k, col++) = Scalar::one(f);
  for (int k = 0; k < 3; ++k) T(k, 2) = center[k].map_to(f);
  return T;
}

HomogPoly change_coordinates(const HomogPoly& f, const ScalarMatrix& T) {
  std::vector<Vec> basis;
  for (int j = 0; j < T.cols(); ++j) {
    Vec col;
    for (int i = 0; i < T.rows(); ++i) col.push_back(T(i, j));
    basis.push_back(col);
  }
  return restrict_form(f, basis, f.vars());
}

std::vector<Vec> projection_centers(const Field& f) {
  static const int raw[][3] = {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1},  {1, 2, 3},  {1, -1, 2},
                               {2, 1, -1}, {1, 3, -2}, {3, -1, 1}, {1, -2, -3}, {2, 3, 5}, {1, 4, 2}};
  std::vector<Vec> out;
  for (const auto& r : raw) {
    Vec v = {Scalar::from_int(f, r[0]), Scalar::from_int(f, r[1]), Scalar::from_int(f, r[2])};
    bool zero = v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
    if (zero) continue;
    bool dup = false;
    for (const auto& w : out) dup = dup || proportional(v, w);
    if (!dup) out.push_back(v);
  }
  return out;
}

PlaneSmoothness plane_curve_smoothness(const HomogPoly& f) {
  PlaneSmoothness res;
  if (f.nvars() != 3) throw DomainError("plane curve expected");
  if (f.is_zero()) {
    res.method = "zero polynomial";
    return res;
  }
  std::vector<HomogPoly> G;
  for (const auto& g : f.gradient())
    if (!g.is_zero()) G.push_back(g);
  std::uint64_t ch = f.field().characteristic();
  if (ch != 0 && f.degree() % static_cast<int>(ch) == 0) G.push_back(f);
  for (const auto& g : G)
    if (g.degree() == 0) {
      res.smooth = true;
      res.method = "constant partial";
      return res;
    }
  int singular_votes = 0;
  if (G.size() >= 3) {
    for (const auto& c : projection_centers(f.field())) {
      ScalarMatrix T = center_frame(c);
      std::vector<HomogPoly> Gt;
      for (const auto& g : G) Gt.push_back(change_coordinates(g, T));
      bool valid = true;
      BinaryForm acc;
      bool first = true;
      for (std::size_t i = 0; i < Gt.size() && valid; ++i)
        for (std::size_t j = i + 1; j < Gt.size() && valid; ++j) {
          BinaryForm r = resultant_last_var(Gt[i], Gt[j]);
          if (r.is_zero()) {
            valid = false;
            break;
          }
          acc = first ? r : gcd(acc, r);
          first = false;
        }
      if (!valid) continue;
      if (acc.degree() == 0) {
        res.smooth = true;
        res.method = "resultant gcd";
        return res;
      }
      if (++singular_votes >= 3) break;
    }
  }
  res.smooth = false;
  res.method = G.size() < 3 ? "fewer than three independent partials" : "resultant gcd nonconstant for every projection";
  if (f.field().is_finite()) {
    std::vector<Field> fields = {f.field()};
    if (!f.field().is_extension() && f.field().characteristic() <= 31)
      fields.push_back(Field::canonical_extension(f.field()));
    for (const Field& F : fields) {
      auto el = field_elements(F);
      Scalar one = Scalar::one(F), zero = Scalar::zero(F);
      auto test = [&](const Vec& z) {
        for (const auto& g : G)
          if (!g.evaluate(z).is_zero()) return false;
        return f.evaluate(z).is_zero();
      };
      std::vector<Vec> cands = {{zero, zero, one}};
      for (const auto& b : el) cands.push_back({zero, one, b});
      for (const auto& a : el)
        for (const auto& b : el) cands.push_back({one, a, b});
      for (const auto& z : cands)
        if (test(z)) {
          res.witness = z;
          return res;
        }
    }
  }
  return res;
}

}  // namespace prymsym
