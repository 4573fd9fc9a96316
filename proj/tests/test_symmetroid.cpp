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
#include "prymsym/symmetroid.hpp"

using namespace testutil;

namespace {

Symmetrization sym(const std::vector<std::vector<std::string>>& rows, const Field& f = Field::rationals()) {
  return Symmetrization::from_matrix(polysym(rows, f));
}

Symmetrization normal_form(int n, const Field& f = Field::rationals()) { return sym(normal_form_rows(n), f); }

Symmetrization random_sym(std::mt19937_64& rng, const Field& f) {
  std::array<ScalarSym, 4> q;
  for (auto& m : q) {
    m = ScalarSym(3, Scalar::zero(f));
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) m.at(i, j) = random_scalar(rng, f);
  }
  return Symmetrization::from_qmats(f, q);
}

Vec vec(const Field& f, std::initializer_list<long> v) {
  Vec out;
  for (long x : v) out.push_back(sc(f, x));
  return out;
}

}  // namespace

TEST_CASE("symmetrization views agree") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    auto a = random_sym(rng, Field::prime(13));
    auto b = Symmetrization::from_matrix(a.matrix());
    CHECK(b.matrix() == a.matrix());
    CHECK(b.qmats() == a.qmats());
  }
  CHECK_THROWS_AS(sym({{"x0^2", "0", "0"}, {"0", "x1^2", "0"}, {"0", "0", "x2^2"}}), InputError);
}

TEST_CASE("gamma_cubic and q_map on known inputs") {
  CHECK(gamma_cubic(normal_form(1)) == px("x0*x1*x2 + 2*x3^3 - (x0 + x1 + x2)*x3^2"));
  CHECK(gamma_cubic(normal_form(7)) == px("x0*(x1*x2 - x3^2)"));
  auto diag = sym({{"x0", "0", "0"}, {"0", "x1", "0"}, {"0", "0", "x2"}});
  CHECK(gamma_cubic(diag) == px("x0*x1*x2"));

  auto q = q_map(normal_form(1));
  CHECK(q[0] == pz("z0^2"));
  CHECK(q[1] == pz("z1^2"));
  CHECK(q[2] == pz("z2^2"));
  CHECK(q[3] == pz("2*(z0*z1 + z0*z2 + z1*z2)"));
  auto qd = q_map(diag);
  CHECK(qd[3].is_zero());
  auto q6 = q_map(normal_form(6));
  CHECK(q6[0] == pz("z2^2"));
  CHECK(q6[1] == pz("2*z0*z1"));
  CHECK(q6[2] == pz("2*z1*z2"));
  CHECK(q6[3] == pz("2*z0*z2"));

  // pulling back a dual linear form gives the conic of A at that point
  std::mt19937_64 rng(2);
  Field F = Field::prime(17);
  for (int i = 0; i < 20; ++i) {
    auto a = random_sym(rng, F);
    Vec v;
    for (int k = 0; k < 4; ++k) v.push_back(random_scalar(rng, F));
    auto qs = q_map(a);
    HomogPoly pull(F, Z(), 2);
    for (int k = 0; k < 4; ++k) pull += qs[k] * v[k];
    CHECK(pull == quadratic_form(a.at(v), Z()));
  }
}

TEST_CASE("contraction kernel") {
  CHECK(contraction_kernel(normal_form(1)).empty());
  auto k = contraction_kernel(sym({{"x0", "0", "0"}, {"0", "x1", "0"}, {"0", "0", "x2"}}));
  REQUIRE(k.size() == 1);
  CHECK(proportional(k[0], vec(Field::rationals(), {0, 0, 0, 1})));
  CHECK(contraction_kernel(sym({{"0", "0", "0"}, {"0", "0", "0"}, {"0", "0", "0"}})).size() == 4);
  CHECK(rank(contraction_matrix(normal_form(1))) == 4);
}

TEST_CASE("adjugate map annihilates and satisfies the Gauss identity") {
  for (int n = 1; n <= 8; ++n) {
    auto a = normal_form(n);
    auto c = adjugate_map(a);
    CHECK(annihilation_holds(a, c));
    if (n <= 6) CHECK_MESSAGE(gauss_identity_holds(a, c), "type " << n);
  }
  std::mt19937_64 rng(3);
  for (const Field& f : {Field::rationals(), Field::prime(11), Field::canonical_extension(Field::prime(7))})
    for (int i = 0; i < 5; ++i) {
      auto a = random_sym(rng, f);
      auto c = adjugate_map(a);
      CHECK(annihilation_holds(a, c));
      CHECK(gauss_identity_holds(a, c));
    }
  // type 7: the image lies on the conic {x0 = 0, x1 x2 = x3^2}
  auto c7 = adjugate_map(normal_form(7));
  CHECK_FALSE(c7.degenerate);
  CHECK(c7.c[0].is_zero());
  CHECK((c7.c[1] * c7.c[2] - c7.c[3] * c7.c[3]).is_zero());
  // a diagonal pencil of forms in three variables is degenerate
  auto cd = adjugate_map(sym({{"x0", "0", "0"}, {"0", "x1", "0"}, {"0", "0", "x2"}}));
  int nonzero = 0;
  for (const auto& p : cd.c) nonzero += !p.is_zero();
  CHECK(nonzero <= 1);
}

TEST_CASE("rank-one scheme partitions") {
  const std::vector<std::vector<int>> expect = {{1, 1, 1, 1}, {2, 1, 1}, {3, 1}, {2, 2}, {4}, {4}};
  for (const Field& f : {Field::rationals(), Field::prime(11), Field::prime(13)}) {
    for (int n = 1; n <= 6; ++n) {
      auto rs = rank_one_scheme(normal_form(n, f));
      CHECK_FALSE(rs.positive_dimensional);
      CHECK_MESSAGE(rs.partition == expect[n - 1], "type " << n << " over " << f.to_string());
    }
    CHECK(rank_one_scheme(normal_form(7, f)).positive_dimensional);
    CHECK(rank_one_scheme(normal_form(8, f)).positive_dimensional);
  }
  CHECK_THROWS_AS(rank_one_scheme(sym({{"x0", "0", "0"}, {"0", "x1", "0"}, {"0", "0", "x2"}})), DomainError);
}

TEST_CASE("classify the eight normal forms") {
  const SymmetroidType t[] = {SymmetroidType::T1, SymmetroidType::T2, SymmetroidType::T3, SymmetroidType::T4,
                              SymmetroidType::T5, SymmetroidType::T6, SymmetroidType::T7, SymmetroidType::T8};
  for (const Field& f : {Field::rationals(), Field::prime(11), Field::prime(13), Field::prime(3)})
    for (int n = 1; n <= 8; ++n) {
      auto c = classify(normal_form(n, f));
      CHECK_MESSAGE(c.type == t[n - 1], "type " << n << " over " << f.to_string() << " got " << to_string(c.type));
    }
  CHECK(classify(sym({{"x0", "0", "0"}, {"0", "x1", "0"}, {"0", "0", "x2"}})).type ==
        SymmetroidType::DegenerateSingular);
  CHECK(classify(sym({{"x0", "0", "0"}, {"0", "x0", "0"}, {"0", "0", "x1"}})).type ==
        SymmetroidType::DegenerateSingular);
  // classification is invariant under a change of coordinates in x
  std::mt19937_64 rng(4);
  Field F = Field::prime(13);
  for (int n = 1; n <= 8; ++n) {
    auto a = normal_form(n, F);
    ScalarMatrix g(4, 4, Scalar::zero(F));
    do
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g(i, j) = random_scalar(rng, F);
    while (determinant(g).is_zero());
    std::array<ScalarSym, 4> q;
    for (int k = 0; k < 4; ++k) {
      q[k] = ScalarSym(3, Scalar::zero(F));
      for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
          for (int l = 0; l < 4; ++l) q[k].at(i, j) += g(l, k) * a.qmats()[l].at(i, j);
    }
    CHECK(classify(Symmetrization::from_qmats(F, q)).type == t[n - 1]);
  }
}

TEST_CASE("random symmetrizations are mostly Cayley cubics") {
  std::mt19937_64 rng(5);
  Field F = Field::prime(101);
  int t1 = 0;
  for (int i = 0; i < 30; ++i) t1 += classify(random_sym(rng, F)).type == SymmetroidType::T1;
  CHECK(t1 >= 25);
}

TEST_CASE("hankel symmetroids follow the factorization shape of the quartic") {
  Field Q = Field::rationals();
  auto quartic = [&](const std::string& s, const Field& f) {
    UPoly u = BinaryForm::from_poly(parse_poly(s, f, ST())).dehomogenize();
    Vec c;
    for (int i = 0; i <= 4; ++i) c.push_back(u.coeff(i));
    return c;
  };
  // dehomogenizing at t = 1 turns s into the polynomial variable
  struct Row {
    const char* f;
    SymmetroidType type;
  };
  const Row rows[] = {{"s^4 - t^4", SymmetroidType::T1},
                      {"s^2*(s^2 + t^2)", SymmetroidType::T2},
                      {"s^3*(s - t)", SymmetroidType::T3},
                      {"(s^2 + t^2)^2", SymmetroidType::T4},
                      {"s^4", SymmetroidType::T5}};
  for (const Field& f : {Q, Field::prime(13), Field::prime(11)})
    for (const auto& r : rows)
      CHECK_MESSAGE(classify(hankel_symmetroid(quartic(r.f, f))).type == r.type, r.f << " over " << f.to_string());

  auto h = hankel_symmetroid(quartic("s^4 - t^4", Q));
  CHECK(h.matrix() == polysym({{"x0", "x1", "x2"}, {"x1", "x2", "x3"}, {"x2", "x3", "x0"}}));

  // the gradient vanishes at (1:t:t^2:t^3) for every root t, over F_p or F_{p^2}
  for (std::uint64_t p : {11, 13, 17}) {
    Field F = Field::prime(p), E = Field::canonical_extension(F);
    std::mt19937_64 rng(p);
    for (int trial = 0; trial < 5; ++trial) {
      Vec c;
      for (int i = 0; i < 4; ++i) c.push_back(random_scalar(rng, F));
      c.push_back(sc(F, 1));
      UPoly u(F, c);
      if (gcd(u, u.derivative()).degree() > 0) continue;
      auto grad = gamma_cubic(hankel_symmetroid(c)).gradient();
      int found = 0;
      for (const auto& t : field_elements(E)) {
        if (!u.map_to(E).evaluate(t).is_zero()) continue;
        ++found;
        Vec pt = {sc(E, 1), t, t * t, t * t * t};
        for (const auto& g : grad) CHECK(g.map_to(E).evaluate(pt).is_zero());
      }
      // a quartic with an irreducible quartic factor keeps its roots in F_{p^4}
      CHECK(found <= 4);
    }
  }
}

TEST_CASE("cayley normal form") {
  Field Q = Field::rationals();
  // f = t (t - 1) (t + 1) (t - 2)
  const long roots[] = {0, 1, -1, 2};
  UPoly f(Q, {sc(Q, 1)});
  for (long r : roots) f = f * UPoly(Q, {sc(Q, -r), sc(Q, 1)});
  std::array<Vec, 4> h;
  for (int j = 0; j < 4; ++j) {
    h[j] = Vec(4, sc(Q, 0));
    h[j][j] = sc(Q, 1);
  }
  HomogPoly cubic = cayley_normal_form(f, h);
  CHECK(cubic.degree() == 3);
  auto grad = cubic.gradient();
  // singular points: coefficient vectors of f / (t - t_i)
  for (long r : roots) {
    UPoly g = f / UPoly(Q, {sc(Q, -r), sc(Q, 1)});
    Vec pt;
    for (int k = 0; k < 4; ++k) pt.push_back(g.coeff(k));
    for (const auto& d : grad) CHECK(d.evaluate(pt).is_zero());
  }
  // and nowhere else over a few small primes
  for (std::uint64_t p : {7, 11}) {
    Field F = Field::prime(p);
    HomogPoly cp = cubic.map_to(F);
    auto gp = cp.gradient();
    int sing = 0;
    for (const auto& x : projective_points(F, 3)) {
      bool all = true;
      for (const auto& d : gp) all = all && d.evaluate(x).is_zero();
      sing += all;
    }
    CHECK(sing == 4);
  }
  // Lagrange basis gives the standard model
  std::array<Vec, 4> lag;
  for (int j = 0; j < 4; ++j) {
    UPoly l(Q, {sc(Q, 1)});
    for (int k = 0; k < 4; ++k)
      if (k != j) l = l * UPoly(Q, {sq(Q, -roots[k], roots[j] - roots[k]), sq(Q, 1, roots[j] - roots[k])});
    for (int k = 0; k < 4; ++k) lag[j].push_back(l.coeff(k));
  }
  CHECK(cayley_normal_form(f, lag).proportional(px("x0*x1*x2 + x0*x1*x3 + x0*x2*x3 + x1*x2*x3")));
  // scaling h by a constant scales the cubic
  std::array<Vec, 4> h3 = h;
  for (auto& v : h3)
    for (auto& c : v) c = c * sc(Q, 3);
  CHECK(cayley_normal_form(f, h3).proportional(cubic));
  UPoly nonsep = UPoly(Q, {sc(Q, 0), sc(Q, 0), sc(Q, 1)}) * UPoly(Q, {sc(Q, 1), sc(Q, 0), sc(Q, 1)});
  CHECK_THROWS_AS(cayley_normal_form(nonsep, h), DomainError);
}

TEST_CASE("degenerate projection") {
  auto d = degenerate_project(sym({{"x0", "0", "0"}, {"0", "x1", "0"}, {"0", "0", "x2"}}));
  CHECK(d.cubic.proportional(parse_poly("w0*w1*w2", Field::rationals(), make_vars("w", 3))));
  CHECK_FALSE(plane_curve_smoothness(d.cubic).smooth);
  CHECK_THROWS_AS(degenerate_project(normal_form(1)), DomainError);

  std::mt19937_64 rng(6);
  Field F = Field::prime(13);
  int cones = 0;
  for (int i = 0; i < 10; ++i) {
    auto r = random_sym(rng, F);
    // make q3 a combination of the others
    std::array<ScalarSym, 4> q = r.qmats();
    Scalar a = random_scalar(rng, F), b = random_scalar(rng, F);
    for (int s = 0; s < 3; ++s)
      for (int t = s; t < 3; ++t) q[3].at(s, t) = a * q[0].at(s, t) + b * q[2].at(s, t);
    auto A = Symmetrization::from_qmats(F, q);
    auto e = degenerate_project(A);
    CHECK(det_leibniz(e.sym.dense(), HomogPoly(F, e.sym.at(0, 0).vars(), 3)) == e.cubic);
    // Gamma is the pullback of E along the projection
    CHECK(e.cubic.substitute(e.projection) == gamma_cubic(A));
    auto c = classify(A);
    bool smooth = plane_curve_smoothness(e.cubic).smooth;
    CHECK(c.type == (smooth ? SymmetroidType::DegenerateCone : SymmetroidType::DegenerateSingular));
    cones += smooth;
  }
  CHECK(cones >= 5);
}

TEST_CASE("double cover minors") {
  auto m = double_cover_minors(normal_form(1));
  CHECK(m.m12 == px("x3^2 - x0*x1"));
  CHECK(m.m13 == px("x3^2 - x0*x2"));
  CHECK(m.m23 == px("x3^2 - x1*x2"));
  CHECK(m.relation_holds);
  auto d = double_cover_minors(sym({{"x0", "0", "0"}, {"0", "x1", "0"}, {"0", "0", "x2"}}));
  CHECK(d.m12 == px("-x0*x1"));
  CHECK(d.m13 == px("-x0*x2"));
  CHECK(d.m23 == px("-x1*x2"));
  auto s = double_cover_minors(sym({{"x0", "0", "0"}, {"0", "x0", "0"}, {"0", "0", "x0"}}));
  for (const auto& p : {s.m12, s.m13, s.m23}) CHECK(p == px("-x0^2"));
  std::mt19937_64 rng(7);
  for (const Field& f : {Field::rationals(), Field::prime(5), Field::canonical_extension(Field::prime(3))})
    for (int i = 0; i < 10; ++i) CHECK(double_cover_minors(random_sym(rng, f)).relation_holds);
}

TEST_CASE("prym canonical point inverts the adjugate map") {
  Field F = Field::prime(11);
  for (int n = 1; n <= 5; ++n) {
    auto a = normal_form(n, F);
    auto gamma = gamma_cubic(a);
    auto c = adjugate_map(a);
    int checked = 0;
    for (const auto& p : projective_points(F, 3)) {
      if (!gamma.evaluate(p).is_zero() || rank(a.at(p).dense()) != 2) continue;
      Vec z = prym_canonical_point(a, p);
      Vec img = evaluate_all(c.c, z);
      // finitely many rank-two points are blown down; they map to zero
      bool zero = std::all_of(img.begin(), img.end(), [](const Scalar& s) { return s.is_zero(); });
      if (!zero) {
        CHECK_MESSAGE(proportional(img, p), "type " << n);
        ++checked;
      }
      if (checked >= 100) break;
    }
    CHECK(checked >= 50);
  }
  auto a = normal_form(1, F);
  CHECK_THROWS_AS(prym_canonical_point(a, vec(F, {1, 0, 0, 0})), DomainError);
  CHECK_THROWS_AS(prym_canonical_point(a, vec(F, {1, 1, 1, 0})), DomainError);
}
