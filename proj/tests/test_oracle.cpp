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

#include <algorithm>

#include "helpers.hpp"
#include "prymsym/oracle.hpp"

using namespace testutil;
using namespace prymsym::oracle;

namespace {

std::vector<Field> small_fields() {
  return {Field::prime(3), Field::prime(5), Field::prime(7), Field::canonical_extension(Field::prime(3)),
          Field::prime(13)};
}

}  // namespace

TEST_CASE("projective spaces have the right size and order") {
  CHECK(enumerate_points(Field::prime(3), 1).size() == 4);
  CHECK(enumerate_points(Field::prime(5), 2).size() == 31);
  CHECK(projective_size(11, 3) == 1464);
  CHECK(enumerate_points(Field::canonical_extension(Field::prime(3)), 2).size() == 91);
  for (const Field& f : small_fields()) {
    auto pts = enumerate_points(f, 2);
    auto ref = projective_points(f, 2);
    REQUIRE(pts.size() == ref.size());
    Fq fq(f);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      CHECK(pts[i] == ref[i]);
      Fq::E e[3];
      decode_point(fq, 2, i, e);
      for (int k = 0; k < 3; ++k) CHECK(fq.to_scalar(e[k]) == pts[i][k]);
    }
  }
  CHECK_THROWS_AS(enumerate_points(Field::prime(101), 3, Options{1000}), BudgetExceeded);
}

TEST_CASE("packed arithmetic matches Scalar") {
  for (const Field& f : small_fields()) {
    Fq fq(f);
    auto el = field_elements(f);
    for (const auto& x : el)
      for (const auto& y : el) {
        Fq::E a = fq.from_scalar(x), b = fq.from_scalar(y);
        CHECK(fq.to_scalar(fq.add(a, b)) == x + y);
        CHECK(fq.to_scalar(fq.sub(a, b)) == x - y);
        CHECK(fq.to_scalar(fq.mul(a, b)) == x * y);
      }
    for (const auto& x : el) {
      Fq::E a = fq.from_scalar(x);
      int expect = x.is_zero() ? 0 : (x.is_square() ? 1 : -1);
      CHECK(fq.chi(a) == expect);
      auto r = fq.sqrt(a);
      CHECK(r.has_value() == (expect >= 0));
      if (r) CHECK(fq.mul(*r, *r) == a);
      if (!x.is_zero()) CHECK(fq.mul(a, fq.inv(a)) == fq.one());
    }
  }
}

TEST_CASE("point counts: serial and parallel agree") {
  std::mt19937_64 rng(7);
  for (const Field& f : small_fields()) {
    std::uint64_t q = f.size();
    HomogPoly conic = pz("z0*z2 - z1^2", f);
    CHECK(count_points({conic}, {}) == q + 1);
    CHECK(count_points_serial({conic}, {}) == q + 1);
    for (int trial = 0; trial < 3; ++trial) {
      HomogPoly cubic = random_form(rng, f, Z(), 3);
      CHECK(variety_points({cubic}) == variety_points_serial({cubic}));
      HomogPoly Q = random_form(rng, f, X(), 2), G = random_form(rng, f, X(), 3);
      CHECK(variety_points({Q, G}) == variety_points_serial({Q, G}));
      CHECK(variety_points({G, Q}) == variety_points_serial({G, Q}));
      CHECK(count_points({Q, G}) == count_points_serial({Q, G}));
    }
    // quadrics with a vanishing x3^2 coefficient exercise the degenerate fibers
    HomogPoly Q0 = px("x0*x3 - x1*x2", f), G0 = px("x0^3 + x1^3 + x2^3 - x3^3", f);
    CHECK(variety_points({Q0, G0}) == variety_points_serial({Q0, G0}));
    HomogPoly Q1 = px("x0^2 - x1*x2", f);
    CHECK(variety_points({Q1, G0}) == variety_points_serial({Q1, G0}));
  }
}

TEST_CASE("smoothness certificates") {
  Field F7 = Field::prime(7);
  auto cusp = smoothness_certificate({pz("z1^2*z2 - z0^3", F7)});
  CHECK_FALSE(cusp.smooth);
  REQUIRE(cusp.witness);
  CHECK(*cusp.witness == Vec{sc(F7, 0), sc(F7, 0), sc(F7, 1)});
  auto cusp_s = smoothness_certificate_serial({pz("z1^2*z2 - z0^3", F7)});
  CHECK(cusp_s.witness == cusp.witness);
  CHECK(smoothness_certificate({px("x0*x3 - x1*x2", F7)}).smooth);
  CHECK(smoothness_certificate({px("x0*x3 - x1*x2", F7), px("x0^3 + x1^3 + x2^3 + x3^3", F7)}).points > 0);
  // two quadric cones sharing their vertex
  auto cones = smoothness_certificate({px("x0^2 - x1*x2", F7), px("x1^2 - x0*x2 + x2^2", F7)});
  CHECK_FALSE(cones.smooth);
  CHECK(*cones.witness == Vec{sc(F7, 0), sc(F7, 0), sc(F7, 0), sc(F7, 1)});
  std::mt19937_64 rng(3);
  for (int i = 0; i < 5; ++i) {
    HomogPoly c = random_form(rng, Field::prime(11), Z(), 3);
    auto a = smoothness_certificate({c}), b = smoothness_certificate_serial({c});
    CHECK(a.smooth == b.smooth);
    CHECK(a.witness == b.witness);
    CHECK(a.points == b.points);
  }
}

TEST_CASE("curve counts respect the Weil bound") {
  for (long p : {5, 7, 11, 13, 17, 19}) {
    Field f = Field::prime(static_cast<std::uint64_t>(p));
    auto r = count_curve({pz("z1^2*z2 - z0^3 - z0*z2^2 - z2^3", f)}, 1, "E");
    if (!smoothness_certificate({pz("z1^2*z2 - z0^3 - z0*z2^2 - z2^3", f)}).smooth) continue;
    CHECK(r.weil_ok);
    CHECK(r.trace == static_cast<long long>(r.q) + 1 - static_cast<long long>(r.points));
  }
  CHECK_FALSE(make_report(5, "x", 30, 1).weil_ok);
  CHECK(make_report(5, "x", 10, 1).weil_ok);
}

TEST_CASE("double cover counts") {
  Field F7 = Field::prime(7);
  HomogPoly Q = px("x0*x3 - x1*x2 + x3^2", F7), G = px("x0^3 + x1^3 + x2^3 - 2*x3^3", F7);
  std::uint64_t n = count_points({Q, G});
  // (0:0:0:1) is not on Q, so squares of x0, x1, x2 never all vanish
  std::array<HomogPoly, 3> split = {px("x0^2", F7), px("x1^2", F7), px("x2^2", F7)};
  auto rep = count_double_cover(Q, G, split);
  CHECK(rep.report.points == 2 * n);
  CHECK(rep.conflicts == 0);
  auto rep_s = count_double_cover_serial(Q, G, split);
  CHECK(rep_s.report.points == rep.report.points);
  CHECK(rep_s.checked_pairs == rep.checked_pairs);
  std::array<HomogPoly, 3> inert = {px("3*x0^2", F7), px("3*x1^2", F7), px("3*x2^2", F7)};
  CHECK(count_double_cover(Q, G, inert).report.points == 0);
  std::array<HomogPoly, 3> mixed = {px("x0^2", F7), px("3*x1^2", F7), px("x2^2", F7)};
  auto m = count_double_cover(Q, G, mixed);
  CHECK(m.conflicts > 0);
  CHECK(m.conflicts == count_double_cover_serial(Q, G, mixed).conflicts);
  std::array<HomogPoly, 3> vanish = {px("x0^2", F7), px("x1^2", F7), px("x3^2", F7)};
  HomogPoly Qv = px("x0*x3 - x1*x2", F7);  // contains (0:0:1:0)
  HomogPoly Gv = px("x0^3 + x1^3 + x3^3", F7);
  CHECK_THROWS_AS(count_double_cover(Qv, Gv, vanish), DomainError);
  CHECK_THROWS_AS(count_double_cover_serial(Qv, Gv, vanish), DomainError);
}

TEST_CASE("covers of a conic match the parametrized binary cover") {
  for (const Field& f : {Field::prime(7), Field::prime(11), Field::canonical_extension(Field::prime(5))}) {
    HomogPoly conic = pz("z0*z2 - z1^2", f);
    HomogPoly h = pz("z0^4 + 2*z1^4 - z2^4 + z0*z1*z2^2 + 3*z1^2*z2^2", f);
    std::vector<HomogPoly> param = {parse_poly("s^2", f, ST()), parse_poly("s*t", f, ST()), parse_poly("t^2", f, ST())};
    BinaryForm hb = BinaryForm::from_poly(h.substitute(param));
    for (long c : {1, 2, 3}) {
      auto a = count_cover_of_conic(conic, h, sc(f, c), 3, "X");
      auto b = count_binary_cover(hb * sc(f, c), "X");
      CHECK(a.points == b.points);
      CHECK(b.genus == 3);
    }
  }
  // y^2 = s^6 + t^6 by hand over F_5
  Field F5 = Field::prime(5);
  BinaryForm h = bst("s^6 + t^6", F5);
  std::uint64_t n = 0;
  for (const auto& pt : projective_points(F5, 1)) {
    Scalar v = h.evaluate(pt[0], pt[1]);
    n += v.is_zero() ? 1 : (v.is_square() ? 2 : 0);
  }
  CHECK(count_binary_cover(h, "C").points == n);
}

TEST_CASE("bitangent enumeration") {
  std::mt19937_64 rng(11);
  for (const Field& f : {Field::prime(7), Field::prime(11), Field::prime(13), Field::canonical_extension(Field::prime(3))}) {
    for (int i = 0; i < 4; ++i) {
      HomogPoly g = random_form(rng, f, Z(), 4);
      auto a = enumerate_bitangents(g), b = enumerate_bitangents_serial(g);
      CHECK(a == b);
      if (smoothness_certificate({g}).smooth) CHECK(a.size() <= 28);
    }
  }
  // a double conic makes every line even
  Field F5 = Field::prime(5);
  CHECK(enumerate_bitangents(pz("(z0*z2 - z1^2)^2", F5)).size() == 31);
  auto [P, R] = line_points(Vec{sc(F5, 1), sc(F5, 2), sc(F5, 3)});
  CHECK((P[0] + sc(F5, 2) * P[1] + sc(F5, 3) * P[2]).is_zero());
  CHECK((R[0] + sc(F5, 2) * R[1] + sc(F5, 3) * R[2]).is_zero());
}
