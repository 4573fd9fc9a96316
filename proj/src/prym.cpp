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
#include "prymsym/prym.hpp"

#include <gmpxx.h>

namespace prymsym {

namespace {

ScalarSym to_sym(const ScalarMatrix& m) {
  ScalarSym s(m.rows(), m(0, 0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i; j < m.rows(); ++j) s.at(i, j) = m(i, j);
  return s;
}

Field field_of(const ScalarSym& m) {
  Field f = m.at(0, 0).field();
  for (int i = 0; i < m.n(); ++i)
    for (int j = i; j < m.n(); ++j) f = join_fields(f, m.at(i, j).field());
  return f;
}

Scalar bilinear(const ScalarSym& M, const Vec& u, const Vec& v) {
  Scalar s = Scalar::zero(M.at(0, 0).field());
  for (int i = 0; i < M.n(); ++i)
    for (int j = 0; j < M.n(); ++j) s += u[i] * M.at(i, j) * v[j];
  return s;
}

Vec axpy(const Scalar& a, const Vec& x, const Vec& y) {
  Vec r = y;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a * x[i] + y[i];
  return r;
}

Vec scaled(const Scalar& a, const Vec& x) {
  Vec r = x;
  for (auto& v : r) v = a * v;
  return r;
}

Vec map_vec(const Vec& v, const Field& f) {
  Vec r;
  for (const auto& x : v) r.push_back(x.map_to(f));
  return r;
}

Vec unit(const Field& f, int n, int i) {
  Vec v(n, Scalar::zero(f));
  v[i] = Scalar::one(f);
  return v;
}

std::vector<HomogPoly> map_polys(const std::vector<HomogPoly>& ps, const Field& f) {
  std::vector<HomogPoly> out;
  for (const auto& p : ps) out.push_back(p.map_to(f));
  return out;
}

// Number of lines (out of the candidates) on which f restricts squarefree.
int squarefree_lines(const HomogPoly& f, int need) {
  const Field& k = f.field();
  std::vector<Vec> lines;
  if (k.is_finite()) {
    oracle::Options opt;
    lines = oracle::enumerate_points(k, 2, opt);
  } else {
    for (long a = -3; a <= 3; ++a)
      for (long b = -3; b <= 3; ++b)
        for (long c = 1; c <= 3; ++c) lines.push_back({Scalar::from_int(k, a), Scalar::from_int(k, b), Scalar::from_int(k, c)});
  }
  int found = 0;
  for (const auto& l : lines) {
    auto [P, R] = oracle::line_points(l);
    BinaryForm g = restrict_to_line(f, P, R);
    if (g.is_zero()) continue;
    auto sig = squarefree_signature(g);
    if (sig.size() == 1 && sig.count(1)) ++found;
    if (found >= need) break;
  }
  return found;
}

mpz_class squarefree_part(mpz_class n) {
  mpz_class out = n < 0 ? -1 : 1;
  n = abs(n);
  for (unsigned long p = 2; p < 100000 && p * p <= n; ++p) {
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    if (e % 2) out *= p;
  }
  if (!mpz_perfect_square_p(n.get_mpz_t())) out *= n;
  return out;
}

// Scale by a square so the leading coefficient is 1 or a fixed representative
// of its square class.
BinaryForm normalize_octic(const BinaryForm& h) {
  const Field& f = h.field();
  Scalar lead = Scalar::zero(f);
  for (const auto& c : h.coeffs())
    if (!c.is_zero()) {
      lead = c;
      break;
    }
  if (lead.is_zero()) return h;
  if (lead.is_square()) return h * lead.inv();
  if (f.is_extension()) return h;
  if (f.is_finite()) return h * (Scalar::from_int(f, static_cast<long>(smallest_nonresidue(f.characteristic()))) / lead);
  const mpq_class& q = lead.rational();
  mpz_class s = squarefree_part(q.get_num() * q.get_den());
  return h * (Scalar::from_rational(f, mpq_class(s)) / lead);
}

}  // namespace

HomogPoly pullback_quadric(const ScalarSym& M, const std::vector<HomogPoly>& f) {
  Field k = join_fields(field_of(M), f.at(0).field());
  HomogPoly out(k, f[0].vars(), 2 * f[0].degree());
  std::vector<HomogPoly> g = map_polys(f, k);
  for (int i = 0; i < M.n(); ++i)
    for (int j = i; j < M.n(); ++j) {
      Scalar m = M.at(i, j).map_to(k);
      if (m.is_zero()) continue;
      if (i != j) m = m + m;
      out += g[i] * g[j] * m;
    }
  return out;
}

DualQuadric dual_quadric(const ScalarSym& Q) {
  if (Q.n() != 4) throw InputError("dual_quadric needs a 4x4 matrix");
  Field f = field_of(Q);
  ScalarMatrix m = map_to(Q.dense(), f);
  DualQuadric d;
  d.rank = rank(m);
  if (d.rank < 3) throw DomainError("quadric of rank " + std::to_string(d.rank) + " has no dual surface or conic");
  if (d.rank == 4) {
    d.qhat = to_sym(adjugate(m));
    return d;
  }
  Vec v = normalize_projective(kernel_basis(m, f).at(0));
  d.vertex = v;
  int r = 0;
  while (v[r].is_zero()) ++r;
  d.dropped = r;
  std::vector<int> keep;
  for (int i = 0; i < 4; ++i)
    if (i != r) keep.push_back(i);
  d.conic = to_sym(adjugate(m.submatrix(keep, keep)));
  d.qhat = ScalarSym(4, Scalar::zero(f));
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b) d.qhat.at(keep[a], keep[b]) = d.conic.at(a, b);
  return d;
}

std::vector<Certificate> certify(const std::vector<HomogPoly>& eqs, int primes) {
  std::vector<Certificate> out;
  const Field& f = eqs.at(0).field();
  auto run = [&](const std::vector<HomogPoly>& e) {
    auto rep = oracle::smoothness_certificate(e);
    out.push_back({e[0].field().size(), rep.smooth, rep.witness});
  };
  if (f.is_finite()) {
    run(eqs);
    return out;
  }
  if (f.is_extension()) return out;
  int good = 0;
  for (std::uint64_t p : {11, 13, 17, 19, 23, 29, 31, 37}) {
    if (good >= primes) break;
    std::vector<HomogPoly> red;
    try {
      for (const auto& e : eqs) {
        red.push_back(e.map_to(Field::prime(p)));
        if (red.back().is_zero()) throw DomainError("vanishes mod p");
      }
    } catch (const DomainError&) {
      continue;
    }
    run(red);
    good += out.back().smooth;
  }
  return out;
}

ForwardResult forward_general(const Symmetrization& a0, const ScalarSym& Q0) {
  if (Q0.n() != 4) throw InputError("Q must be 4x4");
  Field f = join_fields(a0.field(), field_of(Q0));
  Symmetrization a = a0.map_to(f);
  ScalarSym Q = map_to(Q0, f);
  DualQuadric d = dual_quadric(Q);
  if (d.rank != 4) throw DomainError("forward_general needs a smooth quadric; use the even construction");
  auto t = classify(a).type;
  if (t == SymmetroidType::T7) throw DomainError("symmetrization of type 7: C is not a complete intersection");
  if (t == SymmetroidType::DegenerateSingular) throw DomainError("degenerate symmetrization over a singular cubic");
  ForwardResult r;
  r.qhat = d.qhat;
  r.X = pullback_quadric(d.qhat, q_map(a));
  if (r.X.is_zero()) throw DomainError("the pullback of the dual quadric vanishes identically");
  r.reduced = squarefree_lines(r.X, 3) >= 3;
  if (!r.reduced) r.notes.push_back("no three squarefree line sections found");
  r.certificates = certify({r.X});
  return r;
}

ForwardResult forward_even(const Symmetrization& a0, const ScalarSym& Q0) {
  if (Q0.n() != 4) throw InputError("Q must be 4x4");
  Field f = join_fields(a0.field(), field_of(Q0));
  Symmetrization a = a0.map_to(f);
  ScalarSym Q = map_to(Q0, f);
  DualQuadric d = dual_quadric(Q);
  if (d.rank != 3) throw DomainError("forward_even needs a quadric cone");
  if (gamma_cubic(a).evaluate(*d.vertex).is_zero())
    throw DomainError("the vertex of Q lies on Gamma, so C is singular there");
  auto q = q_map(a);
  ForwardResult r;
  r.hyperelliptic = true;
  r.qhat = d.qhat;
  r.conic = HomogPoly(f, q[0].vars(), 2);
  for (int i = 0; i < 4; ++i)
    if (!(*d.vertex)[i].is_zero()) r.conic += q[i] * (*d.vertex)[i];
  ScalarSym cm = form_matrix(r.conic);
  if (rank(cm.dense()) != 3) throw DomainError("the pulled back conic is singular");
  r.branch = pullback_quadric(d.qhat, q);
  auto P = conic_point(cm);
  if (!P) throw DomainError("no point found on the conic");
  r.conic_point = *P;
  auto param = conic_parametrization(cm, *P);
  Field k = param.at(0).field();
  std::vector<HomogPoly> z;
  for (const auto& b : param) z.push_back(b.to_poly({"s", "t"}).map_to(k));
  BinaryForm h8 = BinaryForm::from_poly(r.branch.map_to(k).substitute(z)) * Scalar::from_int(k, -1);
  auto sig = squarefree_signature(h8);
  r.branch_reduced = h8.degree() == 8 && sig.size() == 1 && sig.count(1);
  if (k == f) {
    r.octic = normalize_octic(h8);
  } else {
    r.notes.push_back("the conic has no point over the input field; octic model needs " + k.to_string());
  }
  if (!f.is_finite())
    r.notes.push_back("over Q the model y^2 = -h is the split-rulings twist; y^2 = h is the other square class");
  // transversality of Xbar and the branch quartic: eight distinct branch points
  r.certificates = certify({r.conic, r.branch});
  return r;
}

ForwardResult forward(const Symmetrization& a, const ScalarSym& Q) {
  int rk = rank(map_to(Q.dense(), field_of(Q)));
  return rk == 3 ? forward_even(a, Q) : forward_general(a, Q);
}

ScalarSym segre_matrix(const Field& f) {
  ScalarSym S(4, Scalar::zero(f));
  Scalar half = Scalar::one(f) / Scalar::from_int(f, 2);
  S.at(0, 3) = half;
  S.at(1, 2) = -half;
  return S;
}

VarList segre_vars() { return {"y00", "y01", "y10", "y11"}; }

RulingSplit split_quadric(const ScalarSym& qhat0) {
  if (qhat0.n() != 4) throw InputError("split_quadric needs a 4x4 matrix");
  Field f = field_of(qhat0);
  ScalarSym M = map_to(qhat0, f);
  if (rank(M.dense()) != 4) throw DomainError("split_quadric needs a rank 4 quadric");
  RulingSplit out;
  out.field = f;

  // permuted Segre form 2a y_i y_j + 2b y_k y_l
  std::vector<std::pair<int, int>> nz;
  bool diag_zero = true;
  for (int i = 0; i < 4; ++i) {
    diag_zero = diag_zero && M.at(i, i).is_zero();
    for (int j = i + 1; j < 4; ++j)
      if (!M.at(i, j).is_zero()) nz.push_back({i, j});
  }
  if (diag_zero && nz.size() == 2) {
    auto [i, j] = nz[0];
    auto [k, l] = nz[1];
    Scalar a = M.at(i, j), b = M.at(k, l);
    out.N = zero_matrix(f, 4, 4);
    out.N(i, 0) = Scalar::one(f);
    out.N(j, 3) = Scalar::one(f);
    out.N(k, 1) = Scalar::one(f);
    out.N(l, 2) = -(a / b);
    out.c = a + a;
    return out;
  }

  Field K = f;
  Vec e1;
  for (int i = 0; i < 4 && e1.empty(); ++i)
    if (M.at(i, i).is_zero()) e1 = unit(f, 4, i);
  if (e1.empty()) {
    ScalarSym M3(3, Scalar::zero(f));
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) M3.at(i, j) = M.at(i, j);
    if (determinant(M3.dense()).is_zero()) {
      e1 = kernel_basis(M3.dense(), f).at(0);
    } else {
      auto P = conic_point(M3);
      if (!P) throw DomainError("no isotropic vector found for the dual quadric");
      e1 = *P;
      K = e1[0].field();
      for (const auto& x : e1) K = join_fields(K, x.field());
    }
    e1.push_back(Scalar::zero(K));
  }
  auto lift = [&](const Field& k) {
    M = map_to(M, k);
    e1 = map_vec(e1, k);
    K = k;
  };
  lift(K);
  Scalar two = Scalar::from_int(K, 2);

  auto partner = [&](const Vec& e, const std::vector<Vec>& cands, const Scalar& target) {
    for (const auto& g : cands) {
      Scalar b = bilinear(M, e, g);
      if (b.is_zero()) continue;
      Vec h = axpy(-(bilinear(M, g, g) / (two * b)), e, g);
      return scaled(target / bilinear(M, e, h), h);
    }
    throw DomainError("degenerate quadric in split_quadric");
  };
  Scalar half = Scalar::one(K) / two;
  Vec f1 = partner(e1, {unit(K, 4, 0), unit(K, 4, 1), unit(K, 4, 2), unit(K, 4, 3)}, half);

  ScalarMatrix perp(2, 4, Scalar::zero(K));
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) {
      perp(0, j) += e1[i] * M.at(i, j);
      perp(1, j) += f1[i] * M.at(i, j);
    }
  auto W = kernel_basis(perp, K);
  Vec wa = W.at(0), wb = W.at(1);
  Scalar al = bilinear(M, wa, wa), be = bilinear(M, wa, wb), ga = bilinear(M, wb, wb);
  Vec e2;
  if (al.is_zero()) {
    e2 = wa;
  } else {
    Scalar disc = be * be - al * ga;
    auto r = disc.sqrt();
    if (!r) {
      if (K.is_extension()) throw DomainError("splitting the rulings needs a second quadratic extension");
      auto [k2, root] = sqrt_in_tower(disc);
      lift(k2);
      f1 = map_vec(f1, k2);
      wa = map_vec(wa, k2);
      wb = map_vec(wb, k2);
      al = al.map_to(k2);
      be = be.map_to(k2);
      r = root;
      two = Scalar::from_int(k2, 2);
      half = Scalar::one(k2) / two;
    }
    e2 = axpy((*r - be) / al, wa, wb);
  }
  Vec f2 = partner(e2, {wa, wb}, -half);
  out.field = K;
  out.extended = K != f;
  out.N = zero_matrix(K, 4, 4);
  std::array<const Vec*, 4> cols = {&e1, &e2, &f2, &f1};
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) out.N(i, j) = (*cols[j])[i];
  out.c = Scalar::one(K);
  return out;
}

KummerPencilData make_pencil(const std::array<HomogPoly, 4>& c0, const HomogPoly& fX0) {
  Field f = fX0.field();
  for (const auto& c : c0) f = join_fields(f, c.field());
  KummerPencilData k;
  for (int i = 0; i < 4; ++i) {
    if (c0[i].degree() != 2 || c0[i].nvars() != 3) throw InputError("pencil conics must be ternary quadratic forms");
    k.c[i] = c0[i].map_to(f);
  }
  k.fX = fX0.map_to(f);
  HomogPoly D = k.c[0] * k.c[3] - k.c[1] * k.c[2];
  auto lam = D.ratio_to(k.fX);
  if (!lam || lam->is_zero()) throw DomainError("c00 c11 - c01 c10 is not a nonzero multiple of the quartic");
  k.lambda = *lam;
  ScalarMatrix span(4, 6, Scalar::zero(f));
  for (int i = 0; i < 4; ++i) {
    ScalarSym m = form_matrix(k.c[i]);
    int e = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = a; b < 3; ++b) span(i, e++) = m.at(a, b);
  }
  k.span_dim = rank(span);
  if (k.span_dim < 3) throw DomainError("pencil conics span less than three dimensions");
  return k;
}

KummerPencilData pencil_conics(const Symmetrization& a, const RulingSplit& split, const HomogPoly& fX) {
  auto q = map_polys(q_map(a), split.field);
  ScalarMatrix Ninv = inverse(split.N);
  std::array<HomogPoly, 4> c;
  for (int k = 0; k < 4; ++k) {
    c[k] = HomogPoly(split.field, q[0].vars(), 2);
    for (int i = 0; i < 4; ++i)
      if (!Ninv(k, i).is_zero()) c[k] += q[i] * Ninv(k, i);
  }
  return make_pencil(c, fX);
}

ReverseResult reverse_construct(const HomogPoly& fX, const KummerPencilData& k0) {
  if (fX.nvars() != 3 || fX.degree() != 4)
    throw InputError("reverse construction needs a plane quartic (hyperelliptic input is unsupported)");
  if (!plane_curve_smoothness(fX).smooth) throw DomainError("the quartic is singular");
  KummerPencilData k = make_pencil(k0.c, fX);
  Field f = k.fX.field();
  std::array<ScalarSym, 4> mats;
  for (int i = 0; i < 4; ++i) mats[i] = form_matrix(k.c[i]);
  ReverseResult r;
  r.A = Symmetrization::from_qmats(f, mats, segre_vars());
  r.gamma = gamma_cubic(r.A);
  r.Q = segre_matrix(f);
  r.span_dim = k.span_dim;
  r.self_residual = k.span_dim == 3;
  return r;
}

RoundtripReport roundtrip_check(const Symmetrization& a, const ScalarSym& Q, const RulingSplit& split,
                                const ReverseResult& rev) {
  const Field& f = split.field;
  VarList x = a.vars();
  std::vector<HomogPoly> y;
  for (int k = 0; k < 4; ++k) {
    Vec col;
    for (int i = 0; i < 4; ++i) col.push_back(split.N(i, k));
    y.push_back(HomogPoly::linear(f, x, col));
  }
  RoundtripReport rep;
  rep.symmetrization_equal = true;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      rep.symmetrization_equal = rep.symmetrization_equal &&
                                 rev.A.matrix().at(i, j).map_to(f).substitute(y) == a.matrix().at(i, j).map_to(f);
  HomogPoly lhs = pullback_quadric(rev.Q, y);
  rep.quadric_proportional = lhs.proportional(quadratic_form(map_to(Q, f), x));
  return rep;
}

PartitionReport partition_check(const Symmetrization& a, const RulingSplit& split, const KummerPencilData& k,
                                const Vec& x0) {
  PartitionReport rep;
  Field f = split.field;
  Vec x = map_vec(x0, f);
  ScalarSym Ax = map_to(a.at(x), f);
  if (rank(Ax.dense()) != 2) return rep;
  rep.rank_two = true;
  LinePair lp = split_rank_two(Ax);
  Field g = join_fields(f, lp.field);
  Vec av(4, Scalar::zero(f));
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) av[j] += split.N(i, j) * x[i];
  // u^T [[a0 a1] [a2 a3]] v vanishes identically in v at u*, in u at v*
  Vec us = (av[0].is_zero() && av[2].is_zero()) ? Vec{av[3], -av[1]} : Vec{av[2], -av[0]};
  Vec vs = (av[0].is_zero() && av[1].is_zero()) ? Vec{av[3], -av[2]} : Vec{av[1], -av[0]};
  const auto& c = k.c;
  HomogPoly Gu = c[0] * us[1] - c[2] * us[0], Hu = c[1] * us[1] - c[3] * us[0];
  HomogPoly Gv = c[0] * vs[1] - c[1] * vs[0], Hv = c[2] * vs[1] - c[3] * vs[0];
  std::array<Vec, 2> lines = {map_vec(lp.l1, g), map_vec(lp.l2, g)};
  for (int i = 0; i < 2; ++i) {
    auto [P, R] = oracle::line_points(lines[i]);
    BinaryForm xf = restrict_to_line(k.fX, P, R);
    auto deg = [&](const HomogPoly& G, const HomogPoly& H) {
      BinaryForm h = gcd(gcd(xf, restrict_to_line(G, P, R)), restrict_to_line(H, P, R));
      return h.is_zero() ? -1 : h.degree();
    };
    rep.u_degrees[i] = deg(Gu, Hu);
    rep.v_degrees[i] = deg(Gv, Hv);
  }
  return rep;
}

std::optional<ScalarSym> reduce_mod(const ScalarSym& m, std::uint64_t p) {
  Field fp = Field::prime(p);
  if (field_of(m).characteristic() == p) return m;
  try {
    return map_to(m, fp);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

std::optional<Symmetrization> reduce_mod(const Symmetrization& a, std::uint64_t p) {
  if (a.field().characteristic() == p) return a;
  try {
    return a.map_to(Field::prime(p));
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

TraceIdentity trace_identity(const Symmetrization& a0, const ScalarSym& Q0, std::uint64_t p,
                             const oracle::Options& opt) {
  auto ap = reduce_mod(a0, p);
  auto Qp = reduce_mod(Q0, p);
  if (!ap || !Qp) throw DomainError("bad reduction at p = " + std::to_string(p));
  Field f = join_fields(ap->field(), field_of(*Qp));
  int rk = rank(map_to(Qp->dense(), f));
  if (rk == 4 && !determinant(map_to(Qp->dense(), f)).is_square()) f = Field::canonical_extension(f);
  Symmetrization a = ap->map_to(f);
  ScalarSym Q = map_to(*Qp, f);
  HomogPoly qf = quadratic_form(Q, a.vars());
  HomogPoly gamma = gamma_cubic(a);
  TraceIdentity t;
  t.q = f.size();
  t.C_smooth = oracle::smoothness_certificate({qf, gamma}, opt).smooth;
  t.C = oracle::count_curve({qf, gamma}, 4, "C", opt);
  auto m = double_cover_minors(a);
  auto cover = oracle::count_double_cover(qf, gamma, {m.m12, m.m13, m.m23}, opt);
  t.Ctilde = cover.report;
  t.Ctilde.curve = "C~";
  t.conflicts = cover.conflicts;
  ForwardResult fw = rk == 4 ? forward_general(a, Q) : forward_even(a, Q);
  if (rk == 4)
    t.X = oracle::count_curve({fw.X}, 3, "X", opt);
  else
    t.X = oracle::count_cover_of_conic(fw.conic, fw.branch, Scalar::from_int(f, -1), 3, "X", opt);
  return t;
}

}  // namespace prymsym
