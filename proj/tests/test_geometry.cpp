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
#include "prymsym/geometry.hpp"

using namespace testutil;

namespace {

HomogPoly product(const LinePair& lp, const VarList& v) {
  return HomogPoly::linear(lp.field, v, lp.l1) * HomogPoly::linear(lp.field, v, lp.l2);
}

}  // namespace

TEST_CASE("sqrt_in_tower extends only when needed") {
  Field Q = Field::rationals();
  auto [f1, r1] = sqrt_in_tower(sq(Q, 9, 4));
  CHECK(f1 == Q);
  CHECK(r1 == sq(Q, 3, 2));
  auto [f2, r2] = sqrt_in_tower(sq(Q, 12, 5));
  CHECK(f2.is_extension());
  CHECK(r2 * r2 == sq(Q, 12, 5).map_to(f2));
  Field F11 = Field::prime(11);
  auto [f3, r3] = sqrt_in_tower(sc(F11, 2));
  CHECK(f3 == Field::canonical_extension(F11));
  CHECK(r3 * r3 == sc(f3, 2));
  CHECK_THROWS_AS(sqrt_in_tower(Scalar::sqrt_d(f3) + sc(f3, 1)), DomainError);  // norm -1
}

TEST_CASE("split_rank_two factors rank-two forms") {
  Field Q = Field::rationals();
  for (const char* s : {"x0*x1", "x0^2 - 2*x1^2", "(x0 + x2)*(3*x1 - x3)", "x2^2 + x3^2", "x1*x2 + x1^2"}) {
    HomogPoly q = px(s);
    LinePair lp = split_rank_two(form_matrix(q));
    CHECK_FALSE(lp.double_line);
    CHECK(product(lp, X()) == q.map_to(lp.field));
  }
  LinePair dbl = split_rank_two(form_matrix(px("(x0 - 2*x3)^2")));
  CHECK(dbl.double_line);
  CHECK(product(dbl, X()) == px("(x0 - 2*x3)^2"));
  CHECK_THROWS_AS(split_rank_two(form_matrix(px("x0*x1 - x2*x3"))), DomainError);

  Field F7 = Field::prime(7);
  HomogPoly q = px("x0^2 - 3*x1^2", F7);  // 3 is a nonresidue mod 7
  LinePair lp = split_rank_two(form_matrix(q));
  CHECK(lp.field.is_extension());
  CHECK(product(lp, X()) == q.map_to(lp.field));
}

TEST_CASE("conic points and parametrizations") {
  std::mt19937_64 rng(7);
  for (const Field& f : {Field::rationals(), Field::prime(11), Field::canonical_extension(Field::prime(5))}) {
    for (int trial = 0; trial < 10; ++trial) {
      HomogPoly c = random_form(rng, f, Z(), 2);
      ScalarSym m = form_matrix(c);
      if (determinant(m.dense()).is_zero()) continue;
      auto P = conic_point(m);
      if (!P) {
        CHECK_FALSE(f.is_finite());
        continue;
      }
      HomogPoly cc = c.map_to((*P)[0].field());
      CHECK(cc.evaluate(*P).is_zero());
      auto z = conic_parametrization(m, *P);
      REQUIRE(z.size() == 3);
      // c(z(s,t)) vanishes identically
      std::vector<HomogPoly> imgs;
      for (const auto& b : z) imgs.push_back(b.to_poly(ST()));
      CHECK(cc.map_to(imgs[0].field()).substitute(imgs).is_zero());
    }
  }
  // x^2 + y^2 - 3 z^2 has no rational point, a point exists over Q(sqrt 3)... or elsewhere
  ScalarSym m = form_matrix(pz("z0^2 + z1^2 - 3*z2^2"));
  auto P = conic_point(m);
  REQUIRE(P);
  CHECK((*P)[0].field().is_extension());
  CHECK(pz("z0^2 + z1^2 - 3*z2^2").map_to((*P)[0].field()).evaluate(*P).is_zero());
}

TEST_CASE("plane curve smoothness") {
  Field Q = Field::rationals();
  CHECK(plane_curve_smoothness(pz("z0^3 + z1^3 + z2^3")).smooth);
  CHECK_FALSE(plane_curve_smoothness(pz("z1^2*z2 - z0^3 - z0^2*z2")).smooth);
  CHECK_FALSE(plane_curve_smoothness(pz("z0*z1*z2")).smooth);
  CHECK(plane_curve_smoothness(pz("z1^2*z2 - z0^3 - z0*z2^2")).smooth);
  // char 3: Fermat cubic is a triple line
  Field F3 = Field::prime(3);
  CHECK_FALSE(plane_curve_smoothness(pz("z0^3 + z1^3 + z2^3", F3)).smooth);
  Field F7 = Field::prime(7);
  auto node = plane_curve_smoothness(pz("z1^2*z2 - z0^3 - z0^2*z2", F7));
  CHECK_FALSE(node.smooth);
  REQUIRE(node.witness);
  CHECK(proportional(*node.witness, {sc(F7, 0), sc(F7, 0), sc(F7, 1)}));
  // a node at a conjugate pair of points is found over F_{p^2}
  CHECK(plane_curve_smoothness(pz("z0^4 + z1^4 + z2^4", F7)).smooth);
  std::mt19937_64 rng(11);
  int smooth = 0;
  for (int i = 0; i < 20; ++i) smooth += plane_curve_smoothness(random_form(rng, Field::prime(13), Z(), 3)).smooth;
  CHECK(smooth > 10);
  (void)Q;
}
