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
#include "doctest.h"
#include "helpers.hpp"

using namespace prymsym;
using namespace testutil;

TEST_CASE("field construction and rejection") {
  CHECK_THROWS_WITH_AS(Field::prime(2), "characteristic two unsupported", InputError);
  CHECK_THROWS_AS(Field::prime(9), InputError);
  Field q = Field::rationals();
  CHECK_THROWS_AS(Field::quad_ext(q, sc(q, 4)), InputError);
  Field f7 = Field::prime(7);
  CHECK_THROWS_AS(Field::quad_ext(f7, sc(f7, 2)), InputError);  // 3^2 = 2 mod 7
  Field e = Field::quad_ext(f7, sc(f7, 3));
  CHECK(e.size() == 49);
  CHECK_THROWS_AS(Field::quad_ext(e, Scalar::sqrt_d(e)), InputError);
  CHECK(Field::prime(11) == Field::prime(11));
}

TEST_CASE("scalar arithmetic is exact") {
  std::mt19937_64 rng(1);
  for (Field f : {Field::rationals(), Field::prime(11), Field::canonical_extension(Field::prime(13)),
                  Field::quad_ext(Field::rationals(), sc(Field::rationals(), -1))}) {
    for (int i = 0; i < 200; ++i) {
      Scalar a = random_scalar(rng, f), b = random_scalar(rng, f);
      if (f.is_extension() && !f.is_finite()) a = a + b * Scalar::sqrt_d(f);
      CHECK((a + b) - b == a);
      if (!b.is_zero()) CHECK((a * b) / b == a);
      CHECK(a * (b + a) == a * b + a * a);
    }
  }
  Field q = Field::rationals();
  CHECK(sq(q, 6, 4).to_string() == "3/2");
}

TEST_CASE("sqrt_scalar") {
  Field q = Field::rationals();
  CHECK(sc(q, 9).sqrt()->to_string() == "3");
  CHECK(!sc(q, 2).sqrt());
  CHECK(sq(q, 4, 9).sqrt()->to_string() == "2/3");
  Field f11 = Field::prime(11);
  // oracle: exhaustive residue table
  auto r3 = residue_roots(3, 11);
  REQUIRE(r3.size() == 2);
  CHECK(sc(f11, 3).sqrt()->residue() == static_cast<std::uint64_t>(std::min(r3[0], r3[1])));
  CHECK(sc(f11, 3).sqrt()->residue() == 5);
  CHECK(residue_roots(2, 11).empty());
  CHECK(!sc(f11, 2).sqrt());
  // every residue class agrees with the table
  for (long a = 0; a < 11; ++a) CHECK(sc(f11, a).sqrt().has_value() == !residue_roots(a, 11).empty());
  // in F_{p^2} every base element is a square
  Field e = Field::canonical_extension(f11);
  for (long a = 1; a < 11; ++a) {
    auto r = sc(e, a).sqrt();
    REQUIRE(r);
    CHECK(*r * *r == sc(e, a));
  }
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    Scalar x = random_scalar(rng, e);
    auto r = (x * x).sqrt();
    REQUIRE(r);
    CHECK((*r == x || *r == -x));
  }
}

TEST_CASE("det_and_adjugate") {
  Field q = Field::rationals();
  PolySym fixa = polysym({{"x0", "x3", "x3"}, {"x3", "x1", "x3"}, {"x3", "x3", "x2"}});
  DetAdj da = det_and_adjugate(fixa);
  CHECK(da.det == sarrus(fixa.dense()));
  CHECK(da.det == px("x0*x1*x2 + 2*x3^3 - (x0+x1+x2)*x3^2"));
  PolyMatrix prod = matmul(da.adj.dense(), fixa.dense(), HomogPoly(q, X(), 3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(prod(i, j) == (i == j ? da.det : HomogPoly(q, X(), 3)));

  PolySym diag = polysym({{"x0", "0", "0"}, {"0", "x1", "0"}, {"0", "0", "x2"}});
  DetAdj dd = det_and_adjugate(diag);
  CHECK(dd.det == px("x0*x1*x2"));
  CHECK(dd.adj.at(0, 0) == px("x1*x2"));
  CHECK(dd.adj.at(1, 1) == px("x0*x2"));
  CHECK(dd.adj.at(2, 2) == px("x0*x1"));
  CHECK(dd.adj.at(0, 1).is_zero());

  // scalar FIX-Q: x0x1 - x2x3 has matrix with halves off the diagonal
  ScalarSym fq = scalarsym({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, -1, 0}}, q, 2);
  CHECK(quadratic_form(fq, X()) == px("x0*x1 - x2*x3"));
  CHECK(determinant(fq.dense()) == sq(q, 1, 16));
  ScalarMatrix adj = adjugate(fq.dense());
  HomogPoly dual = quadratic_form(ScalarSym::from_dense(adj), make_vars("y", 4));
  CHECK(dual.proportional(parse_poly("y0*y1 - y2*y3", q, make_vars("y", 4))));

  PolySym mixed = polysym({{"x0", "x1"}, {"x1", "x2"}}, q);
  mixed.at(0, 1) = px("x1^2");
  CHECK_THROWS_AS(det_and_adjugate(mixed), InputError);
}

TEST_CASE("adj(M) M = det(M) I on random matrices") {
  std::mt19937_64 rng(7);
  for (Field f : {Field::rationals(), Field::prime(11), Field::prime(13)}) {
    for (int n = 2; n <= 4; ++n) {
      PolySym m(n, HomogPoly(f, X(), 1));
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.at(i, j) = random_form(rng, f, X(), 1);
      DetAdj da = det_and_adjugate(m);
      HomogPoly zero(f, X(), n);
      PolyMatrix prod = matmul(da.adj.dense(), m.dense(), zero);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) CHECK(prod(i, j) == (i == j ? da.det : zero));
      CHECK((da.det.is_zero() || da.det.degree() == n));
    }
  }
}

TEST_CASE("substitute") {
  HomogPoly f = px("x0*x1 - x2*x3");
  std::vector<HomogPoly> q = {pz("z0^2"), pz("z1^2"), pz("z2^2"), pz("2*(z0*z1+z0*z2+z1*z2)")};
  HomogPoly fixx = f.substitute(q);
  // oracle: direct expansion written out by hand
  CHECK(fixx == pz("z0^2*z1^2 - 2*z2^2*z0*z1 - 2*z2^2*z0*z2 - 2*z2^2*z1*z2"));
  std::vector<HomogPoly> ident;
  for (int i = 0; i < 4; ++i) ident.push_back(HomogPoly::variable(Field::rationals(), X(), i));
  CHECK(f.substitute(ident) == f);
  CHECK(px("x3").substitute(q) == q[3]);
  std::vector<HomogPoly> bad = {pz("z0"), pz("z1^2"), pz("z2^2"), pz("z0^2")};
  CHECK_THROWS_AS(f.substitute(bad), DomainError);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    Field fld = i % 2 ? Field::prime(11) : Field::rationals();
    HomogPoly a = random_form(rng, fld, X(), 2), b = random_form(rng, fld, X(), 1);
    std::vector<HomogPoly> im;
    for (int k = 0; k < 4; ++k) im.push_back(random_form(rng, fld, Z(), 2));
    CHECK((a * b).substitute(im) == a.substitute(im) * b.substitute(im));
  }
}

TEST_CASE("gradient") {
  HomogPoly g = px("x0*x1*x2 + 2*x3^3 - (x0+x1+x2)*x3^2");
  auto grad = g.gradient();
  CHECK(grad[0] == px("x1*x2 - x3^2"));
  CHECK(grad[1] == px("x0*x2 - x3^2"));
  CHECK(grad[2] == px("x0*x1 - x3^2"));
  CHECK(grad[3] == px("6*x3^2 - 2*x3*(x0+x1+x2)"));
  auto lin = px("3*x0 - x2").gradient();
  CHECK(lin[0] == HomogPoly::constant(Field::rationals(), X(), sc(Field::rationals(), 3)));
  Field f11 = Field::prime(11);
  auto sqg = px("x0^2", f11).gradient();
  CHECK(sqg[0] == px("2*x0", f11));
  CHECK(sqg[1].is_zero());

  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    Field fld = i % 3 == 0 ? Field::prime(7) : Field::rationals();
    int deg = 1 + i % 4;
    HomogPoly p = random_form(rng, fld, X(), deg);
    auto gr = p.gradient();
    HomogPoly euler(fld, X(), deg);
    for (int k = 0; k < 4; ++k) euler = euler + HomogPoly::variable(fld, X(), k) * gr[k];
    CHECK(euler == p * sc(fld, deg));
  }
}

TEST_CASE("linear_solve") {
  Field q = Field::rationals();
  auto id = linear_solve(identity_matrix(q, 4), q);
  CHECK(id.rank == 4);
  CHECK(id.kernel.empty());
  auto z = linear_solve(zero_matrix(q, 3, 3), q);
  CHECK(z.rank == 0);
  CHECK(z.kernel.size() == 3);

  // the q-vector of FIX-A in the conic basis z0^2, z1^2, z2^2, z0z1, z0z2, z1z2
  ScalarMatrix m(6, 4, sc(q, 0));
  m(0, 0) = sc(q, 1);
  m(1, 1) = sc(q, 1);
  m(2, 2) = sc(q, 1);
  m(3, 3) = sc(q, 2);
  m(4, 3) = sc(q, 2);
  m(5, 3) = sc(q, 2);
  auto r = linear_solve(m, q);
  CHECK(r.rank == 4);
  CHECK(r.kernel.empty());

  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    Field f = t % 2 ? Field::prime(5) : q;
    ScalarMatrix a(3, 5, sc(f, 0));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 5; ++j) a(i, j) = random_scalar(rng, f, 2);
    auto res = linear_solve(a, f, std::vector<Scalar>{sc(f, 1), sc(f, 0), sc(f, 2)});
    for (const auto& v : res.kernel)
      for (const auto& x : mul(a, v)) CHECK(x.is_zero());
    CHECK(res.kernel.size() == static_cast<std::size_t>(5 - res.rank));
    if (res.particular) {
      auto y = mul(a, *res.particular);
      CHECK(y[0] == sc(f, 1));
      CHECK(y[2] == sc(f, 2));
    }
  }
}

TEST_CASE("binary_discriminant style identities") {
  HomogPoly a = px("x0"), b = HomogPoly(Field::rationals(), X(), 1), c = px("x1");
  HomogPoly disc = b * b - a * c * sc(Field::rationals(), 4);
  CHECK(disc == px("-4*x0*x1"));
  HomogPoly d2 = px("2*x0") * px("2*x0") - px("x0") * px("x0") * sc(Field::rationals(), 4);
  CHECK(d2.is_zero());
}

TEST_CASE("squarefree_signature") {
  using Sig = std::map<int, int>;
  CHECK(squarefree_signature(bst("(s-t)^2*s*t")) == Sig{{1, 2}, {2, 1}});
  CHECK(squarefree_signature(bst("s^4")) == Sig{{4, 1}});
  CHECK(squarefree_signature(bst("t^4")) == Sig{{4, 1}});
  CHECK(squarefree_signature(bst("s^4 - t^4")) == Sig{{1, 4}});
  // oracle for the last example: gcd(g, g') = 1
  UPoly u = bst("s^4 - t^4").dehomogenize();
  CHECK(gcd(u, u.derivative()).degree() == 0);

  // small characteristic: (s^5 - t^5) = (s - t)^5 over F_5, p-th power handling
  Field f5 = Field::prime(5);
  CHECK(squarefree_signature(bst("s^5 - t^5", f5)) == Sig{{5, 1}});
  CHECK(squarefree_signature(bst("(s^5 - 2*t^5)*(s+t)^2*s", f5)) == Sig{{5, 1}, {2, 1}, {1, 1}});
  Field e3 = Field::canonical_extension(Field::prime(3));
  CHECK(squarefree_signature(bst("(s^3 - sqrtd*t^3)*s", e3)) == Sig{{3, 1}, {1, 1}});

  // property: products of random linear forms
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    Field f = trial % 2 ? Field::prime(13) : Field::rationals();
    // distinct roots r_k with chosen multiplicities
    std::vector<int> mult = {1 + trial % 3, 1 + (trial / 3) % 2, 1};
    std::vector<Scalar> roots_used;
    BinaryForm g(f, {Scalar::one(f)});
    Sig expect;
    int k = 0;
    while (k < static_cast<int>(mult.size())) {
      Scalar r = random_scalar(rng, f, 20);
      bool dup = false;
      for (const auto& x : roots_used) dup = dup || x == r;
      if (dup) continue;
      roots_used.push_back(r);
      BinaryForm lin(f, {Scalar::one(f), -r});
      for (int i = 0; i < mult[k]; ++i) g = g * lin;
      expect[mult[k]] += 1;
      ++k;
    }
    if (trial % 5 == 0) {
      g = g * BinaryForm(f, {Scalar::zero(f), Scalar::one(f)});  // a root at (1:0)
      expect[1] += 1;
    }
    CHECK(squarefree_signature(g) == expect);
  }
  CHECK_THROWS_AS(squarefree_signature(BinaryForm(Field::rationals(), 3)), DomainError);
}

TEST_CASE("is_perfect_square") {
  auto r = is_perfect_square(bst("(s^2+s*t+t^2)^2"));
  REQUIRE(r.found);
  CHECK(r.c_is_square);
  CHECK(r.root.proportional(bst("s^2+s*t+t^2")));
  CHECK(r.root * r.root == bst("(s^2+s*t+t^2)^2"));
  CHECK(!is_perfect_square(bst("s^6 + t^6")).found);
  UPoly u = bst("s^6 + t^6").dehomogenize();
  CHECK(gcd(u, u.derivative()).degree() == 0);

  // 2 is a square mod 7 (3^2 = 9), so 3 (a nonsquare) is used for the scalar class
  Field f7 = Field::prime(7);
  CHECK(!residue_roots(2, 7).empty());
  CHECK(residue_roots(3, 7).empty());
  auto r2 = is_perfect_square(bst("2*(s*t)^2", f7));
  REQUIRE(r2.found);
  CHECK(r2.c_is_square);
  auto r3 = is_perfect_square(bst("3*(s*t)^2", f7));
  REQUIRE(r3.found);
  CHECK(!r3.c_is_square);
  REQUIRE(r3.ext_root);
  BinaryForm g3 = bst("3*(s*t)^2", f7);
  CHECK(*r3.ext_root * *r3.ext_root == g3.map_to(r3.ext_root->field()));
  CHECK(r3.root * r3.root == g3 * r3.c);

  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    Field f = i % 2 ? Field::prime(11) : Field::rationals();
    std::vector<Scalar> c;
    for (int k = 0; k < 4; ++k) c.push_back(random_scalar(rng, f));
    if (c[0].is_zero() && c[1].is_zero()) c[0] = Scalar::one(f);
    BinaryForm h(f, c);
    if (h.is_zero()) continue;
    auto res = is_perfect_square(h * h);
    REQUIRE(res.found);
    CHECK(res.root.proportional(h));
    CHECK(res.root * res.root == h * h * res.c);
  }
  CHECK(!is_perfect_square(bst("s^3*t")).found);
  CHECK(is_perfect_square(bst("s^2*t^2")).found);
}

TEST_CASE("roots and resultants") {
  Field q = Field::rationals();
  auto rs = roots(bst("(2*s-3*t)^2*(s+t)*t"));
  CHECK(rs.size() == 3);
  Field f11 = Field::prime(11);
  auto r11 = roots(bst("s^2 + t^2", f11));  // -1 nonsquare mod 11
  CHECK(r11.empty());
  auto re = roots(bst("s^2 + t^2", Field::canonical_extension(f11)));
  CHECK(re.size() == 2);
  // resultant of two conics meeting in the 4 points (+-1 : +-1 : 1)
  HomogPoly c1 = pz("z0^2 - z2^2"), c2 = pz("z1^2 - z2^2");
  BinaryForm res = resultant_last_var(c1, c2);
  CHECK(res.degree() == 4);
  CHECK(res.proportional(bst("(s^2 - t^2)^2").map_to(q)));
}

TEST_CASE("parser") {
  Field q = Field::rationals();
  CHECK(px("(x0+x1)^2") == px("x0^2 + 2*x0*x1 + x1^2"));
  CHECK(px("3/2*x0").coeff(Exponent{1}) == sq(q, 3, 2));
  CHECK_THROWS_AS(px("x0 + x1^2"), InputError);
  CHECK_THROWS_AS(px("x9"), InputError);
  CHECK(px("x0*x1 - x2*x3").to_string() == "x0*x1 - x2*x3");
}
