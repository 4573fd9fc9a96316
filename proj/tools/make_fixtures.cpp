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
// Regenerates fixtures/: normal-form scenes, the FIX scene, and smooth
// fixtures over Q found by a seeded search.
//   make_fixtures <outdir> [seed]
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "prymsym/milne.hpp"
#include "prymsym/scene.hpp"

using namespace prymsym;
using scene::json;

namespace {

const char* kNormalForms[8][3][3] = {
    {{"x0", "x3", "x3"}, {"x3", "x1", "x3"}, {"x3", "x3", "x2"}},
    {{"x0", "x3", "-x3"}, {"x3", "x1", "0"}, {"-x3", "0", "x2"}},
    {{"x0", "x2", "0"}, {"x2", "x1", "x3"}, {"0", "x3", "-x2"}},
    {{"x0", "-x3", "x2"}, {"-x3", "x1", "x3"}, {"x2", "x3", "0"}},
    {{"0", "x2", "x0"}, {"x2", "-x0", "x3"}, {"x0", "x3", "x1"}},
    {{"0", "x1", "x3"}, {"x1", "0", "x2"}, {"x3", "x2", "x0"}},
    {{"x0", "0", "0"}, {"0", "x1", "x3"}, {"0", "x3", "x2"}},
    {{"0", "0", "x2"}, {"0", "x0", "x3"}, {"x2", "x3", "x1"}},
};

Symmetrization normal_form(int type, const Field& f) {
  VarList x = make_vars("x", 4);
  PolySym m(3, HomogPoly(f, x, 1));
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      HomogPoly e = parse_poly(kNormalForms[type - 1][i][j], f, x);
      m.at(i, j) = e.is_zero() ? HomogPoly(f, x, 1) : e;
    }
  return Symmetrization::from_matrix(m);
}

ScalarSym quadric(const std::string& s) { return form_matrix(parse_poly(s, Field::rationals(), make_vars("x", 4))); }

void write(const std::filesystem::path& p, const scene::Scene& s) {
  std::ofstream(p) << scene::write_scene(s);
  std::cout << "wrote " << p.string() << "\n";
}

long small(std::mt19937_64& rng, int r) { return std::uniform_int_distribution<long>(-r, r)(rng); }

ScalarSym random_quadric(std::mt19937_64& rng, int rank4) {
  Field Q = Field::rationals();
  if (rank4) {
    ScalarMatrix m(4, 4, Scalar::zero(Q));
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) m(i, j) = m(j, i) = Scalar::from_int(Q, small(rng, 3));
    return ScalarSym::from_dense(m);
  }
  // M^T D M with M 3x4: rank three
  ScalarMatrix M(3, 4, Scalar::zero(Q)), D(3, 3, Scalar::zero(Q));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 4; ++j) M(i, j) = Scalar::from_int(Q, small(rng, 1));
    long d = small(rng, 2);
    D(i, i) = Scalar::from_int(Q, d == 0 ? 1 : d);
  }
  return ScalarSym::from_dense(mul(mul(M.transpose(), D), M));
}

Symmetrization random_cone(std::mt19937_64& rng) {
  Field Q = Field::rationals();
  std::array<ScalarSym, 4> q;
  for (int k = 0; k < 3; ++k) {
    q[k] = ScalarSym(3, Scalar::zero(Q));
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) q[k].at(i, j) = Scalar::from_int(Q, small(rng, 2));
  }
  q[3] = ScalarSym(3, Scalar::zero(Q));
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) q[3].at(i, j) = q[0].at(i, j) + q[2].at(i, j);
  return Symmetrization::from_qmats(Q, q);
}

// Smooth over Q, trace identity clean at 11, 13, 17, 19; general case also
// round-trips.
bool good(const Symmetrization& a, const ScalarSym& Q, std::string& why) {
  try {
    ForwardResult fw = forward(a, Q);
    if (fw.certificates.size() < 2) return why = "few certificates", false;
    for (const auto& c : fw.certificates)
      if (!c.smooth) return why = "singular mod " + std::to_string(c.q), false;
    if (!fw.hyperelliptic) {
      if (!fw.reduced || !plane_curve_smoothness(fw.X).smooth) return why = "X singular", false;
      auto sp = split_quadric(fw.qhat);
      auto k = pencil_conics(a, sp, fw.X);
      auto rev = reverse_construct(fw.X.map_to(sp.field), k);
      if (!roundtrip_check(a, Q, sp, rev).ok()) return why = "roundtrip", false;
    } else if (!fw.branch_reduced) {
      return why = "branch", false;
    }
    for (std::uint64_t p : {11, 13, 17, 19}) {
      auto t = trace_identity(a, Q, p);
      if (!t.C_smooth) return why = "C singular mod " + std::to_string(p), false;
      if (!t.holds() || t.conflicts) return why = "trace identity fails mod " + std::to_string(p), false;
    }
    return true;
  } catch (const Error& e) {
    why = e.what();
    return false;
  }
}

scene::Scene fixture_scene(const Symmetrization& a, const ScalarSym& Q, const std::string& type, bool hyper,
                           const std::string& desc) {
  scene::Scene s;
  s.field = Field::rationals();
  s.put("A", a);
  s.put_quadric("Q", Q);
  s.metadata = {{"description", desc},
                {"pair", {{"A", "A"}, {"Q", "Q"}}},
                {"expect", {{"types", {{"A", type}}}, {"smooth", true}, {"hyperelliptic", hyper}}}};
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: make_fixtures <outdir> [seed]\n";
    return 2;
  }
  std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  std::mt19937_64 rng(argc > 2 ? std::stoull(argv[2]) : 1);
  json manifest = json::array();

  const char* names[8] = {"T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8"};
  for (auto [file, f, upto] : {std::tuple{"normal_forms_q.json", Field::rationals(), 5},
                               std::tuple{"normal_forms_f11.json", Field::prime(11), 8},
                               std::tuple{"normal_forms_f13.json", Field::prime(13), 8}}) {
    scene::Scene s;
    s.field = f;
    json types = json::object();
    for (int t = 1; t <= upto; ++t) {
      std::string n = "A" + std::to_string(t);
      s.put(n, normal_form(t, f));
      types[n] = names[t - 1];
    }
    s.metadata = {{"description", "normal forms of the eight symmetroid types"}, {"expect", {{"types", types}}}};
    write(dir / file, s);
    manifest.push_back(file);
  }

  {
    scene::Scene s;
    s.field = Field::rationals();
    s.put("A", normal_form(1, s.field));
    s.put_quadric("Q", quadric("x0*x1 - x2*x3"));
    s.metadata = {{"description", "FIX: type (1) normal form with the Segre quadric; its nodes lie on Q"},
                  {"pair", {{"A", "A"}, {"Q", "Q"}}},
                  {"expect", {{"types", {{"A", "T1"}}}, {"smooth", false}, {"hyperelliptic", false}}}};
    write(dir / "fix.json", s);
    manifest.push_back("fix.json");
  }

  struct Want {
    std::string file, type;
    int kind;  // 1..3 normal form, 0 cone, -1 even (type 1 with a rank-3 quadric)
  };
  for (const Want& w : {Want{"type1.json", "T1", 1}, Want{"type2.json", "T2", 2}, Want{"type3.json", "T3", 3},
                        Want{"cone.json", "DegenerateCone", 0}, Want{"even.json", "T1", -1}}) {
    for (int tries = 1;; ++tries) {
      Symmetrization a = w.kind > 0 ? normal_form(w.kind, Field::rationals())
                         : w.kind == 0 ? random_cone(rng)
                                       : normal_form(1, Field::rationals());
      if (to_string(classify(a).type) != w.type) continue;
      ScalarSym Q = random_quadric(rng, w.kind != -1);
      if (rank(Q.dense()) != (w.kind == -1 ? 3 : 4)) continue;
      std::string why;
      if (!good(a, Q, why)) continue;
      std::string desc = w.kind == -1  ? "even case: type (1) with a quadric cone"
                         : w.kind == 0 ? "bielliptic: cone over a smooth plane cubic"
                                       : "general case, type (" + std::to_string(w.kind) + ")";
      write(dir / w.file, fixture_scene(a, Q, w.type, w.kind == -1, desc));
      manifest.push_back(w.file);
      std::cout << "  after " << tries << " candidates\n";
      break;
    }
  }
  {
    // over F_11 with at least five generic bitangents
    Field F = Field::prime(11);
    Symmetrization a = normal_form(3, F);
    auto lines = oracle::enumerate_points(F, 2);
    for (int tries = 1;; ++tries) {
      ScalarSym Q(4, Scalar::zero(F));
      for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) Q.at(i, j) = Scalar::from_int(F, small(rng, 5));
      if (rank(Q.dense()) != 4) continue;
      try {
        ForwardResult fw = forward_general(a, Q);
        if (!plane_curve_smoothness(fw.X).smooth || !fw.certificates.at(0).smooth) continue;
        if (!oracle::smoothness_certificate({quadratic_form(Q, a.vars()), gamma_cubic(a)}).smooth) continue;
        auto t = trace_identity(a, Q, 11);
        if (!t.holds()) continue;
        int members = 0;
        for (const auto& m : milne_lines(a, Q, fw.X, lines))
          members += m.kind == LineKind::Generic && m.member && m.bitangent;
        if (members < 5) continue;
      } catch (const Error&) {
        continue;
      }
      scene::Scene s;
      s.field = F;
      s.put("A", a);
      s.put_quadric("Q", Q);
      s.metadata = {{"description", "type (3) over F_11 with at least five generic bitangents"},
                    {"pair", {{"A", "A"}, {"Q", "Q"}}},
                    {"expect", {{"types", {{"A", "T3"}}}, {"smooth", true}, {"hyperelliptic", false}}}};
      write(dir / "milne_f11.json", s);
      manifest.push_back("milne_f11.json");
      std::cout << "  after " << tries << " candidates\n";
      break;
    }
  }
  std::ofstream(dir / "manifest.json") << json{{"fixtures", manifest}}.dump(2) << "\n";
  return 0;
}
