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
#include <doctest.h>

#include "helpers.hpp"
#include "prymsym/prym.hpp"

using namespace testutil;

namespace {

Symmetrization nf(int n, const Field& f = Field::rationals()) {
  return Symmetrization::from_matrix(polysym(normal_form_rows(n), f));
}

ScalarSym quad(const std::string& s, const Field& f = Field::rationals()) { return form_matrix(px(s, f)); }

bool is_segre(const RulingSplit& s, const ScalarSym& qhat) {
  ScalarMatrix lhs = mul(mul(s.N.transpose(), map_to(qhat.dense(), s.field)), s.N);
  ScalarMatrix S = segre_matrix(s.field).dense();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (lhs(i, j) != s.c * S(i, j)) return false;
  return true;
}

}  // namespace

TEST_CASE("dual quadric") {
  Field Q = Field::rationals();
  auto d = dual_quadric(quad("x0*x1 - x2*x3"));
  CHECK(d.rank == 4);
  CHECK(quadratic_form(d.qhat, make_vars("y", 4)) == parse_poly("1/4*y0*y1 - 1/4*y2*y3", Q, make_vars("y", 4)));
  auto c = dual_quadric(quad("x0^2 + x1^2 + x2^2"));
  CHECK(c.rank == 3);
  CHECK(*c.vertex == Vec{sc(Q, 0), sc(Q, 0), sc(Q, 0), sc(Q, 1)});
  CHECK(c.dropped == 3);
  CHECK(quadratic_form(c.conic, make_vars("y", 3)) == parse_poly("y0^2 + y1^2 + y2^2", Q, make_vars("y", 3)));
  CHECK_THROWS_AS(dual_quadric(quad("x0*x1")), DomainError);
}

TEST_CASE("forward construction on the fixed example") {
  Field Q = Field::rationals();
  auto r = forward_general(nf(1), quad("x0*x1 - x2*x3"));
  HomogPoly fixx = pz("z0^2*z1^2 - 2*z2^2*(z0*z1 + z0*z2 + z1*z2)");
  CHECK(r.X * sc(Q, 4) == fixx);
  CHECK(r.reduced);
  // second path: the contraction evaluated at Qhat-weighted q
  auto q = q_map(nf(1));
  CHECK(r.X == (q[0] * q[1] - q[2] * q[3]) * sq(Q, 1, 4));
  // all four nodes lie on x0 x1 = x2 x3, so C and X are singular
  for (const auto& c : r.certificates) CHECK_FALSE(c.smooth);
  CHECK_FALSE(plane_curve_smoothness(r.X).smooth);
  CHECK_THROWS_AS(forward_general(nf(7), quad("x0*x1 - x2*x3")), DomainError);
  CHECK_THROWS_AS(forward_general(nf(1), quad("x0^2 + x1^2 + x2^2")), DomainError);
}

TEST_CASE("forward even case") {
  Field Q = Field::rationals();
  auto r = forward_even(nf(1), quad("x0^2 + x1^2 + x2^2"));
  CHECK(r.hyperelliptic);
  CHECK(r.conic == pz("2*z0*z1 + 2*z0*z2 + 2*z1*z2"));
  CHECK(r.branch == pz("z0^4 + z1^4 + z2^4"));
  CHECK(r.branch_reduced);
  REQUIRE(r.octic);
  CHECK(r.octic->degree() == 8);
  // vertex on Gamma
  CHECK_THROWS_AS(forward_even(nf(1), quad("x1^2 + x2^2 + x3^2")), DomainError);
  Field F13 = Field::prime(13);
  auto e = forward_even(nf(1, F13), quad("x0^2 + x1^2 + x2^2", F13));
  REQUIRE(e.octic);
  // the octic model and the conic model count the same points
  auto a = oracle::count_binary_cover(*e.octic, "X");
  auto b = oracle::count_cover_of_conic(e.conic, e.branch, sc(F13, -1), 3, "X");
  CHECK(a.points == b.points);
}

TEST_CASE("split_quadric") {
  Field Q = Field::rationals();
  ScalarSym fixq = dual_quadric(quad("x0*x1 - x2*x3")).qhat;
  auto s = split_quadric(fixq);
  CHECK_FALSE(s.extended);
  CHECK(is_segre(s, fixq));
  // a permutation: (w0, w1, w2, w3) = (y0, y2, y3, y1)
  CHECK(s.N(0, 0) == sc(Q, 1));
  CHECK(s.N(2, 1) == sc(Q, 1));
  CHECK(s.N(3, 2) == sc(Q, 1));
  CHECK(s.N(1, 3) == sc(Q, 1));
  ScalarSym d = quad("x0^2 - x1^2 + x2^2 - x3^2");
  auto sd = split_quadric(d);
  CHECK_FALSE(sd.extended);
  CHECK(is_segre(sd, d));
  Field F11 = Field::prime(11);
  ScalarSym id = quad("x0^2 + x1^2 + x2^2 + x3^2", F11);
  auto si = split_quadric(id);
  // determinant 1 is a square, so the rulings are already defined over F_11
  CHECK_FALSE(si.extended);
  CHECK(is_segre(si, id));
  ScalarSym id2 = quad("x0^2 + x1^2 + x2^2 + 2*x3^2", F11);
  auto si2 = split_quadric(id2);
  CHECK(si2.extended);
  CHECK(si2.field.size() == 121);
  CHECK(is_segre(si2, id2));
  // discriminant 2 is not a square: needs Q(sqrt 2)
  ScalarSym e = quad("x0*x1 - x2^2 + 2*x3^2");
  auto se = split_quadric(e);
  CHECK(se.extended);
  CHECK(is_segre(se, e));
  std::mt19937_64 rng(5);
  for (const Field& f : {Field::prime(7), Field::prime(13), Field::prime(31)}) {
    for (int i = 0; i < 10; ++i) {
      ScalarSym m = form_matrix(random_form(rng, f, X(), 2));
      if (rank(m.dense()) != 4) continue;
      auto r = split_quadric(m);
      CHECK(is_segre(r, m));
    }
  }
  CHECK_THROWS_AS(split_quadric(quad("x0*x1 - x2^2")), DomainError);
}

TEST_CASE("pencil conics and the reverse construction") {
  Field Q = Field::rationals();
  ScalarSym fixq = quad("x0*x1 - x2*x3");
  auto fw = forward_general(nf(1), fixq);
  auto split = split_quadric(fw.qhat);
  auto k = pencil_conics(nf(1), split, fw.X);
  auto q = q_map(nf(1));
  CHECK(k.c[0] == q[0]);
  CHECK(k.c[1] == q[2]);
  CHECK(k.c[2] == q[3]);
  CHECK(k.c[3] == q[1]);
  CHECK(k.lambda == sc(Q, 4));
  CHECK(k.span_dim == 4);
  // FIX-X is singular, so reverse refuses it
  CHECK_THROWS_AS(reverse_construct(fw.X, k), DomainError);

  // a smooth instance over F_13
  Field F = Field::prime(13);
  ScalarSym Qs = quad("4*x0^2 + 2*x0*x1 + x0*x3 + 10*x1^2 + 3*x1*x2 + 4*x1*x3 + 4*x2^2 + 8*x2*x3 + 7*x3^2", F);
  auto A = nf(2, F);
  auto f2 = forward_general(A, Qs);
  REQUIRE(plane_curve_smoothness(f2.X).smooth);
  auto sp = split_quadric(f2.qhat);
  auto kp = pencil_conics(A, sp, f2.X);
  auto rev = reverse_construct(f2.X.map_to(sp.field), kp);
  CHECK_FALSE(rev.self_residual);
  CHECK(roundtrip_check(A, Qs, sp, rev).ok());
  // rescaling u0 by l: Gamma' changes by the diagonal substitution y0j -> l y0j
  Scalar l = sc(sp.field, 3);
  auto k2 = make_pencil({kp.c[0] * l, kp.c[1] * l, kp.c[2], kp.c[3]}, kp.fX);
  CHECK(k2.lambda == kp.lambda * l);
  auto rev2 = reverse_construct(kp.fX, k2);
  VarList y = segre_vars();
  Field g = sp.field;
  std::vector<HomogPoly> diag = {HomogPoly::variable(g, y, 0) * l, HomogPoly::variable(g, y, 1) * l,
                                 HomogPoly::variable(g, y, 2), HomogPoly::variable(g, y, 3)};
  CHECK(rev2.gamma == rev.gamma.substitute(diag));
  CHECK(classify(rev2.A).type == classify(rev.A).type);
  // the inverse scaling of c00 and c01 breaks compatibility
  CHECK_THROWS_AS(make_pencil({kp.c[0] * l, kp.c[1] * l.inv(), kp.c[2], kp.c[3]}, kp.fX), DomainError);
  CHECK_THROWS_AS(make_pencil({kp.c[0], kp.c[0], kp.c[2], kp.c[3]}, kp.fX), DomainError);
}

TEST_CASE("partition of ruling fibers by the two lines") {
  Field F = Field::prime(13);
  ScalarSym Qs = quad("4*x0^2 + 2*x0*x1 + x0*x3 + 10*x1^2 + 3*x1*x2 + 4*x1*x3 + 4*x2^2 + 8*x2*x3 + 7*x3^2", F);
  auto A = nf(2, F);
  auto fw = forward_general(A, Qs);
  auto sp = split_quadric(fw.qhat);
  auto k = pencil_conics(A, sp, fw.X);
  auto pts = oracle::variety_points({quadratic_form(Qs, X()), gamma_cubic(A)});
  int checked = 0;
  for (const auto& x : pts) {
    auto rep = partition_check(A, sp, k, x);
    if (!rep.rank_two) continue;
    CHECK(rep.ok());
    if (++checked == 25) break;
  }
  CHECK(checked >= 5);
}

TEST_CASE("trace identity on random fixtures") {
  std::mt19937_64 rng(21);
  int ok = 0;
  for (int type : {1, 2, 3}) {
    for (int trial = 0; trial < 6; ++trial) {
      Field F = Field::prime(11);
      ScalarSym Qs = form_matrix(random_form(rng, F, X(), 2));
      if (rank(Qs.dense()) != 4) continue;
      try {
        auto t = trace_identity(nf(type, F), Qs, 11);
        if (!t.C_smooth) continue;
        CHECK(t.holds());
        CHECK(t.conflicts == 0);
        CHECK(t.C.weil_ok);
        CHECK(t.Ctilde.weil_ok);
        ++ok;
      } catch (const DomainError&) {
        // C meets a rank-one point
      }
    }
  }
  CHECK(ok >= 4);
}
