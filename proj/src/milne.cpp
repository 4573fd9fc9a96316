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
#include "prymsym/milne.hpp"

#include <algorithm>
#include <random>

namespace prymsym {

namespace {

const VarList kST = {"s", "t"};

Field field_of(const ScalarSym& m) {
  Field f = m.at(0, 0).field();
  for (int i = 0; i < m.n(); ++i)
    for (int j = i; j < m.n(); ++j) f = join_fields(f, m.at(i, j).field());
  return f;
}

Field field_of(const Vec& v) {
  Field f = v.at(0).field();
  for (const auto& x : v) f = join_fields(f, x.field());
  return f;
}

Vec map_vec(const Vec& v, const Field& f) {
  Vec r;
  for (const auto& x : v) r.push_back(x.map_to(f));
  return r;
}

BinaryForm to_binary(const HomogPoly& p) {
  if (p.is_zero()) return BinaryForm(p.field(), p.degree());
  return BinaryForm::from_poly(p);
}

std::vector<HomogPoly> line_images(const ProjLine2& L, const Field& f) {
  auto imgs = subspace_images({L.P, L.R}, kST);
  for (auto& g : imgs) g = g.map_to(join_fields(f, g.field()));
  return imgs;
}

std::vector<BinaryForm> along(const std::vector<HomogPoly>& fs, const ProjLine2& L) {
  auto imgs = line_images(L, fs.at(0).field());
  Field k = imgs[0].field();
  std::vector<BinaryForm> out;
  for (const auto& f : fs) out.push_back(to_binary(f.map_to(k).substitute(imgs)));
  return out;
}

int span_rank(const std::vector<BinaryForm>& gs) {
  Field f = gs.at(0).field();
  int d = gs[0].degree();
  ScalarMatrix m(static_cast<int>(gs.size()), d + 1, Scalar::zero(f));
  for (std::size_t i = 0; i < gs.size(); ++i)
    if (!gs[i].is_zero())
      for (int k = 0; k <= d; ++k) m(static_cast<int>(i), k) = gs[i].coeffs()[k];
  return rank(m);
}

Vec cross(const Vec& a, const Vec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Gamma on a line of the plane, with the first point at (1:0): the part of
// the divisor away from that point must be even.
bool even_off_point(const HomogPoly& g, const Vec& O, const Vec& line) {
  Vec R;
  for (const auto& b : hyperplane_basis(line))
    if (!proportional(b, O)) {
      R = b;
      break;
    }
  BinaryForm r = restrict_to_line(g, O, R);
  if (r.is_zero()) return false;
  int m = r.multiplicity_at_infinity();
  std::vector<Scalar> rest(r.coeffs().begin() + m, r.coeffs().end());
  BinaryForm h(r.field(), rest);
  if (h.degree() % 2) return false;
  if (h.degree() == 0) return true;
  return is_perfect_square(h).found;
}

}  // namespace

ProjLine2 make_line(const Vec& coeffs) {
  auto [P, R] = oracle::line_points(coeffs);
  return {normalize_projective(coeffs), P, R};
}

LineKind line_kind(const Symmetrization& a, const ProjLine2& L) {
  auto c = adjugate_map(a);
  auto T = along(c.c, L);
  BinaryForm g(T[0].field(), 3);
  for (const auto& t : T) g = gcd(g, t);
  if (g.is_zero() || g.degree() > 0) return LineKind::BasePoint;
  if (span_rank(along(q_map(a), L)) < 3) return LineKind::DoubleCover;
  return LineKind::Generic;
}

ScalarSym enveloping_cone(const Symmetrization& a, const ProjLine2& L) {
  auto g = along(q_map(a), L);
  if (span_rank(g) < 3) throw DomainError("q maps the line 2:1 onto a line");
  Field f = g[0].field();
  auto co = [&](int j, int k) { return g[j].is_zero() ? Scalar::zero(f) : g[j].coeffs()[k]; };
  ScalarSym lam(4, Scalar::zero(f));
  Scalar two = Scalar::from_int(f, 2);
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) lam.at(i, j) = co(i, 1) * co(j, 1) - two * (co(i, 0) * co(j, 2) + co(j, 0) * co(i, 2));
  return lam;
}

BinaryForm pencil_determinant(const ScalarSym& Lambda, const ScalarSym& Q) {
  Field f = join_fields(field_of(Lambda), field_of(Q));
  VarList lm = {"l", "m"};
  PolyMatrix m(4, 4, HomogPoly(f, lm, 1));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = HomogPoly::linear(f, lm, {Lambda.at(i, j).map_to(f), Q.at(i, j).map_to(f)});
  return to_binary(det_leibniz(m, HomogPoly(f, lm, 4)));
}

std::optional<ReducibleMember> reducible_member(const ScalarSym& Lambda0, const ScalarSym& Q0) {
  Field f = join_fields(field_of(Lambda0), field_of(Q0));
  ScalarSym Lambda = map_to(Lambda0, f), Q = map_to(Q0, f);
  VarList x = make_vars("x", 4);
  HomogPoly lf = quadratic_form(Lambda, x), qf = quadratic_form(Q, x);
  if (lf.is_zero() || qf.is_zero() || lf.proportional(qf)) throw DomainError("degenerate pencil");
  BinaryForm g = pencil_determinant(Lambda, Q);
  if (g.is_zero()) throw DomainError("every member of the pencil is singular");

  std::vector<std::pair<Scalar, Scalar>> cands;
  for (const auto& r : roots(g)) cands.push_back({r.s, r.t});
  if (f.is_finite() && !f.is_extension()) {
    Field e = Field::canonical_extension(f);
    for (const auto& r : roots(g.map_to(e)))
      if (!r.s.im().is_zero() || !r.t.im().is_zero()) cands.push_back({r.s, r.t});
  } else if (!f.is_finite() && !f.is_extension()) {
    // rational roots removed, a quadratic remainder is solved in Q(sqrt)
    UPoly u = g.dehomogenize();
    for (const auto& r : roots(g)) {
      if (r.t.is_zero()) continue;
      UPoly lin(f, {-(r.s / r.t), Scalar::one(f)});
      for (int k = 0; k < r.multiplicity; ++k) u = u / lin;
    }
    if (u.degree() == 2) {
      Scalar A = u.coeff(2), B = u.coeff(1), C = u.coeff(0);
      try {
        auto [ef, s] = sqrt_in_tower(B * B - Scalar::from_int(f, 4) * A * C);
        if (ef != f)
          for (const Scalar& sg : {s, -s})
            cands.push_back({(-B.map_to(ef) + sg) / (Scalar::from_int(ef, 2) * A.map_to(ef)), Scalar::one(ef)});
      } catch (const DomainError&) {
      }
    }
  }
  for (const auto& [l, m] : cands) {
    Field k = join_fields(l.field(), m.field());
    ScalarSym M(4, Scalar::zero(k));
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) M.at(i, j) = l.map_to(k) * Lambda.at(i, j).map_to(k) + m.map_to(k) * Q.at(i, j).map_to(k);
    int rk = rank(M.dense());
    if (rk == 0 || rk > 2) continue;
    try {
      LinePair lp = split_rank_two(M);
      return ReducibleMember{lp.field, l.map_to(lp.field), m.map_to(lp.field), lp.l1, lp.l2, rk == 1};
    } catch (const DomainError&) {
      continue;
    }
  }
  return std::nullopt;
}

TritangentCertificate tritangent_verify(const HomogPoly& Q0, const HomogPoly& gamma0, const Vec& H) {
  Field f = join_fields(join_fields(Q0.field(), gamma0.field()), field_of(H));
  HomogPoly Q = Q0.map_to(f), gamma = gamma0.map_to(f);
  auto basis = hyperplane_basis(map_vec(H, f));
  VarList w = make_vars("w", 3);
  HomogPoly qh = restrict_form(Q, basis, w), gh = restrict_form(gamma, basis, w);
  TritangentCertificate cert;
  if (qh.is_zero() || gh.is_zero()) return cert;
  ScalarSym cm = form_matrix(qh);
  int rk = rank(cm.dense());
  if (rk == 3) {
    cert.method = "conic";
    auto P = conic_point(cm);
    if (!P) throw DomainError("no point on the plane section of Q");
    auto param = conic_parametrization(cm, *P);
    Field k = param[0].field();
    std::vector<HomogPoly> z;
    for (const auto& b : param) z.push_back(b.to_poly(kST).map_to(k));
    BinaryForm sextic = to_binary(gh.map_to(k).substitute(z));
    cert.sextic = sextic;
    if (sextic.is_zero()) return cert;
    auto ps = is_perfect_square(sextic);
    cert.tritangent = ps.found;
    if (ps.found) cert.root = ps.root;
    return cert;
  }
  cert.method = "line pair";
  LinePair lp = split_rank_two(cm);
  if (lp.double_line) {
    cert.tritangent = true;
    return cert;
  }
  HomogPoly g = gh.map_to(lp.field);
  Vec O = cross(lp.l1, lp.l2);
  cert.tritangent = even_off_point(g, O, lp.l1) && even_off_point(g, O, lp.l2);
  return cert;
}

std::array<BinaryForm, 4> twisted_cubic(const Symmetrization& a, const ProjLine2& L) {
  if (line_kind(a, L) == LineKind::BasePoint) throw DomainError("the line meets the base locus of the adjugate map");
  auto T = along(adjugate_map(a).c, L);
  return {T[0], T[1], T[2], T[3]};
}

BinaryForm compose(const HomogPoly& f0, const std::array<BinaryForm, 4>& T) {
  Field k = join_fields(f0.field(), T[0].field());
  std::vector<HomogPoly> imgs;
  for (const auto& t : T) imgs.push_back(t.map_to(k).to_poly(kST));
  return to_binary(f0.map_to(k).substitute(imgs));
}

bool contact_on_twisted_cubic(const HomogPoly& Q, const std::array<BinaryForm, 4>& T0, const Vec& H1, const Vec& H2) {
  Field k = join_fields(join_fields(T0[0].field(), field_of(H1)), field_of(H2));
  std::array<BinaryForm, 4> T;
  for (int i = 0; i < 4; ++i) T[i] = T0[i].map_to(k);
  VarList x = Q.vars();
  BinaryForm qt = compose(Q, T);
  BinaryForm g1 = compose(HomogPoly::linear(k, x, map_vec(H1, k)), T);
  BinaryForm g2 = compose(HomogPoly::linear(k, x, map_vec(H2, k)), T);
  if (qt.is_zero() || g1.is_zero() || g2.is_zero()) return false;
  return qt.map_to(k).proportional(g1 * g2);
}

bool tangent_along(const ScalarSym& Lambda, const HomogPoly& gamma, const std::array<BinaryForm, 4>& T) {
  HomogPoly lf = quadratic_form(map_to(Lambda, gamma.field()), gamma.vars());
  auto gl = lf.gradient(), gg = gamma.gradient();
  std::vector<BinaryForm> a, b;
  for (int i = 0; i < 4; ++i) {
    a.push_back(compose(gl[i], T));
    b.push_back(compose(gg[i], T));
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
  return true;
}

CubicSpace cubics_through(const HomogPoly& Q, const HomogPoly& gamma, const std::vector<Vec>& points) {
  Field f = join_fields(Q.field(), gamma.field());
  for (const auto& p : points) f = join_fields(f, field_of(p));
  std::vector<HomogPoly> gens = {gamma.map_to(f)};
  for (int i = 0; i < 4; ++i) gens.push_back(HomogPoly::variable(f, Q.vars(), i) * Q.map_to(f));
  ScalarMatrix m(static_cast<int>(points.size()), 5, Scalar::zero(f));
  for (std::size_t r = 0; r < points.size(); ++r) {
    Vec p = map_vec(points[r], f);
    for (int c = 0; c < 5; ++c) m(static_cast<int>(r), c) = gens[c].evaluate(p);
  }
  CubicSpace out;
  for (const auto& k : kernel_basis(m, f)) {
    HomogPoly g(f, Q.vars(), 3);
    for (int c = 0; c < 5; ++c)
      if (!k[c].is_zero()) g += gens[c] * k[c];
    out.basis.push_back(g);
  }
  out.dimension = static_cast<int>(out.basis.size());
  out.proportional_to_gamma = out.dimension == 1 && out.basis[0].proportional(gens[0]);
  return out;
}

CubicSpace cubic_through_C_and_T(const HomogPoly& Q, const HomogPoly& gamma, const std::array<BinaryForm, 4>& T,
                                 unsigned seed) {
  Field f = T[0].field();
  std::mt19937 rng(seed);
  long range = f.is_finite() ? static_cast<long>(f.characteristic()) - 1 : 20;
  std::uniform_int_distribution<long> d(f.is_finite() ? 0 : -range, range);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Vec> pts;
    while (pts.size() < 4) {
      Scalar s = Scalar::from_int(f, d(rng)), t = Scalar::from_int(f, d(rng));
      Vec p;
      for (const auto& c : T) p.push_back(c.evaluate(s, t));
      bool zero = std::all_of(p.begin(), p.end(), [](const Scalar& x) { return x.is_zero(); });
      if (!zero) pts.push_back(p);
    }
    CubicSpace cs = cubics_through(Q, gamma, pts);
    if (cs.dimension == 1) return cs;
  }
  throw DomainError("no four points of T impose independent conditions");
}

std::vector<MilneLine> milne_lines(const Symmetrization& a, const ScalarSym& Q, const HomogPoly& X,
                                   const std::vector<Vec>& lines) {
  std::vector<Vec> bit;
  if (X.field().is_finite()) bit = oracle::enumerate_bitangents(X);
  HomogPoly qf = quadratic_form(Q, a.vars());
  HomogPoly gamma = gamma_cubic(a);
  std::vector<MilneLine> out;
  for (const auto& l : lines) {
    MilneLine ml;
    ProjLine2 L = make_line(l);
    ml.line = L.line;
    ml.kind = line_kind(a, L);
    ml.bitangent = std::find(bit.begin(), bit.end(), ml.line) != bit.end();
    if (ml.kind != LineKind::Generic) {
      ml.notes.push_back(ml.kind == LineKind::BasePoint ? "meets a base point" : "2:1 onto a line");
      out.push_back(ml);
      continue;
    }
    try {
      auto mem = reducible_member(enveloping_cone(a, L), Q);
      if (mem && mem->non_reduced) ml.notes.push_back("non-reduced member");
      if (mem && !mem->non_reduced) {
        ml.member = mem;
        ml.tritangents_ok = tritangent_verify(qf, gamma, mem->H1).tritangent &&
                            tritangent_verify(qf, gamma, mem->H2).tritangent && !proportional(mem->H1, mem->H2);
        auto T = twisted_cubic(a, L);
        ml.twisted_cubic_ok = compose(gamma, T).is_zero() && contact_on_twisted_cubic(qf, T, mem->H1, mem->H2);
      }
    } catch (const DomainError& e) {
      ml.notes.push_back(e.what());
    }
    out.push_back(ml);
  }
  return out;
}

}  // namespace prymsym
