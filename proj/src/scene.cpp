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
#include "prymsym/scene.hpp"

#include <fstream>
#include <sstream>

namespace prymsym::scene {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InputError("scene: " + what); }

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) bad("bad rational \"" + s + "\"");
  if (q.get_den() == 0) bad("zero denominator in \"" + s + "\"");
  q.canonicalize();
  return q;
}

VarList vars_from_json(const json& j) {
  if (!j.is_array()) bad("vars must be an array");
  VarList v;
  for (const auto& x : j) v.push_back(as_string(x, "variable"));
  if (v.empty() || static_cast<int>(v.size()) > kMaxVars) bad("bad variable count");
  return v;
}

json terms_to_json(const HomogPoly& p) {
  json t = json::array();
  for (const auto& [e, c] : p.terms()) {
    json ex = json::array();
    for (int i = 0; i < p.nvars(); ++i) ex.push_back(e[i]);
    t.push_back({{"c", scalar_to_json(c)}, {"e", ex}});
  }
  return t;
}

HomogPoly terms_from_json(const json& j, const Field& f, const VarList& vars, int degree) {
  if (!j.is_array()) bad("terms must be an array");
  TermMap tm;
  for (const auto& t : j) {
    const json& ej = member(t, "e");
    if (!ej.is_array() || ej.size() != vars.size()) bad("exponent length does not match vars");
    Exponent e{};
    int sum = 0;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (!ej[i].is_number_unsigned() || ej[i].get<unsigned>() > 255) bad("bad exponent");
      e[i] = static_cast<std::uint8_t>(ej[i].get<unsigned>());
      sum += e[i];
    }
    if (sum != degree) bad("term degree " + std::to_string(sum) + " does not match deg " + std::to_string(degree));
    Scalar c = scalar_from_json(member(t, "c"), f);
    if (tm.count(e)) bad("repeated exponent");
    if (!c.is_zero()) tm.emplace(e, c);
  }
  return HomogPoly::from_terms(f, vars, tm, degree);
}

json sym_to_json(const ScalarSym& m) {
  json rows = json::array();
  for (int i = 0; i < m.n(); ++i) {
    json r = json::array();
    for (int j = 0; j < m.n(); ++j) r.push_back(scalar_to_json(m.at(i, j)));
    rows.push_back(r);
  }
  return rows;
}

ScalarMatrix matrix_from_json(const json& j, const Field& f) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) bad("matrix must be a nonempty array of rows");
  int r = static_cast<int>(j.size()), c = static_cast<int>(j[0].size());
  ScalarMatrix m(r, c, Scalar::zero(f));
  for (int i = 0; i < r; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != c) bad("ragged matrix");
    for (int k = 0; k < c; ++k) m(i, k) = scalar_from_json(j[i][k], f);
  }
  return m;
}

ScalarSym sym_from_json(const json& j, const Field& f) {
  ScalarMatrix m = matrix_from_json(j, f);
  if (m.rows() != m.cols()) bad("quadric matrix must be square");
  for (int i = 0; i < m.rows(); ++i)
    for (int k = i + 1; k < m.cols(); ++k)
      if (m(i, k) != m(k, i)) bad("quadric matrix is not symmetric");
  return ScalarSym::from_dense(m);
}

json object_to_json(const Object& o) {
  json j{{"kind", o.kind}};
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Symmetrization>) {
          j["vars"] = v.vars();
          json rows = json::array();
          for (int i = 0; i < 3; ++i) {
            json r = json::array();
            for (int k = 0; k < 3; ++k) r.push_back(terms_to_json(v.matrix().at(i, k)));
            rows.push_back(r);
          }
          j["matrix"] = rows;
        } else if constexpr (std::is_same_v<T, ScalarSym>) {
          j["matrix"] = sym_to_json(v);
        } else if constexpr (std::is_same_v<T, HomogPoly>) {
          j["poly"] = poly_to_json(v);
        } else if constexpr (std::is_same_v<T, Pencil>) {
          json c = json::array();
          for (const auto& x : v.data.c) c.push_back(poly_to_json(x));
          j["c"] = c;
          j["fX"] = poly_to_json(v.data.fX);
        } else if constexpr (std::is_same_v<T, Line>) {
          json c = json::array();
          for (const auto& x : v.coeffs) c.push_back(scalar_to_json(x));
          j["coeffs"] = c;
        } else {
          json rows = json::array();
          for (int i = 0; i < v.rows(); ++i) {
            json r = json::array();
            for (int k = 0; k < v.cols(); ++k) r.push_back(scalar_to_json(v(i, k)));
            rows.push_back(r);
          }
          j["matrix"] = rows;
        }
      },
      o.value);
  return j;
}

Object object_from_json(const json& j, const Field& f) {
  std::string kind = as_string(member(j, "kind"), "kind");
  if (kind == "symmetrization") {
    VarList vars = vars_from_json(member(j, "vars"));
    if (vars.size() != 4) bad("a symmetrization needs four variables");
    const json& rows = member(j, "matrix");
    if (!rows.is_array() || rows.size() != 3) bad("symmetrization matrix must be 3x3");
    PolySym m(3, HomogPoly(f, vars, 1));
    for (int i = 0; i < 3; ++i) {
      if (!rows[i].is_array() || rows[i].size() != 3) bad("symmetrization matrix must be 3x3");
      for (int k = 0; k < 3; ++k) {
        HomogPoly e = terms_from_json(rows[i][k], f, vars, 1);
        if (k < i && e != m.at(k, i)) bad("symmetrization matrix is not symmetric");
        if (k >= i) m.at(i, k) = e;
      }
    }
    return {kind, Symmetrization::from_matrix(m)};
  }
  if (kind == "quadric") {
    ScalarSym q = sym_from_json(member(j, "matrix"), f);
    if (q.n() != 4) bad("a quadric is a 4x4 matrix");
    return {kind, q};
  }
  if (kind == "quartic" || kind == "form") {
    HomogPoly p = poly_from_json(member(j, "poly"), f);
    if (kind == "quartic" && (p.nvars() != 3 || p.degree() != 4)) bad("a quartic is a degree-4 form in three variables");
    return {kind, p};
  }
  if (kind == "pencil") {
    const json& cj = member(j, "c");
    if (!cj.is_array() || cj.size() != 4) bad("a pencil has four conics");
    std::array<HomogPoly, 4> c;
    for (int i = 0; i < 4; ++i) c[i] = poly_from_json(cj[i], f);
    HomogPoly fX = poly_from_json(member(j, "fX"), f);
    for (const auto& x : c)
      if (x.degree() != 2 || x.vars() != fX.vars()) bad("pencil conics must be ternary conics in the vars of fX");
    try {
      return {kind, Pencil{make_pencil(c, fX)}};
    } catch (const DomainError& e) {
      bad(std::string("invalid pencil: ") + e.what());
    }
  }
  if (kind == "line") {
    const json& cj = member(j, "coeffs");
    if (!cj.is_array() || cj.size() != 3) bad("a line has three coefficients");
    Vec l;
    for (const auto& x : cj) l.push_back(scalar_from_json(x, f));
    if (l[0].is_zero() && l[1].is_zero() && l[2].is_zero()) bad("zero line");
    return {kind, Line{l}};
  }
  if (kind == "matrix") return {kind, matrix_from_json(member(j, "matrix"), f)};
  bad("unknown object kind \"" + kind + "\"");
}

template <class T>
const T& typed(const Scene& s, const std::string& name, std::initializer_list<const char*> kinds) {
  const Object& o = s.get(name);
  for (const char* k : kinds)
    if (o.kind == k) return std::get<T>(o.value);
  bad("object \"" + name + "\" has kind " + o.kind);
}

}  // namespace

json field_to_json(const Field& f) {
  switch (f.kind()) {
    case FieldKind::Rationals:
      return {{"type", "Q"}};
    case FieldKind::PrimeField:
      return {{"type", "Fp"}, {"p", f.characteristic()}};
    case FieldKind::QuadExt:
      return {{"type", "QuadExt"}, {"d", scalar_to_json(f.ext_d())}, {"base", field_to_json(f.base())}};
  }
  return {};
}

Field field_from_json(const json& j) {
  std::string t = as_string(member(j, "type"), "field type");
  if (t == "Q") return Field::rationals();
  if (t == "Fp") {
    const json& p = member(j, "p");
    if (!p.is_number_unsigned()) bad("p must be a positive integer");
    return Field::prime(p.get<std::uint64_t>());
  }
  if (t == "QuadExt") {
    Field base = field_from_json(member(j, "base"));
    if (base.is_extension()) bad("nested quadratic extensions are unsupported");
    return Field::quad_ext(base, scalar_from_json(member(j, "d"), base));
  }
  bad("unknown field type \"" + t + "\"");
}

json scalar_to_json(const Scalar& s) {
  const Field& f = s.field();
  if (f.is_extension()) return json::array({scalar_to_json(s.re()), scalar_to_json(s.im())});
  if (f.is_finite()) return std::to_string(s.residue());
  return s.rational().get_str();
}

Scalar scalar_from_json(const json& j, const Field& f) {
  if (f.is_extension()) {
    if (j.is_string()) return scalar_from_json(j, f.base()).map_to(f);
    if (!j.is_array() || j.size() != 2) bad("extension elements are [a, b] pairs");
    return Scalar::from_pair(f, scalar_from_json(j[0], f.base()), scalar_from_json(j[1], f.base()));
  }
  mpq_class q = parse_rational(as_string(j, "scalar"));
  try {
    return Scalar::from_rational(f, q);
  } catch (const DomainError& e) {
    bad(e.what());
  }
}

json poly_to_json(const HomogPoly& p) {
  return {{"vars", p.vars()}, {"deg", p.degree()}, {"terms", terms_to_json(p)}};
}

HomogPoly poly_from_json(const json& j, const Field& f) {
  VarList vars = vars_from_json(member(j, "vars"));
  const json& d = member(j, "deg");
  if (!d.is_number_unsigned()) bad("deg must be a nonnegative integer");
  return terms_from_json(member(j, "terms"), f, vars, d.get<int>());
}

const Object& Scene::get(const std::string& name) const {
  auto it = objects.find(name);
  if (it == objects.end()) bad("no object named \"" + name + "\"");
  return it->second;
}
const Symmetrization& Scene::symmetrization(const std::string& n) const {
  return typed<Symmetrization>(*this, n, {"symmetrization"});
}
const ScalarSym& Scene::quadric(const std::string& n) const { return typed<ScalarSym>(*this, n, {"quadric"}); }
const HomogPoly& Scene::form(const std::string& n) const { return typed<HomogPoly>(*this, n, {"quartic", "form"}); }
const KummerPencilData& Scene::pencil(const std::string& n) const {
  return typed<Pencil>(*this, n, {"pencil"}).data;
}
const Vec& Scene::line(const std::string& n) const { return typed<Line>(*this, n, {"line"}).coeffs; }
const ScalarMatrix& Scene::matrix(const std::string& n) const { return typed<ScalarMatrix>(*this, n, {"matrix"}); }

void Scene::put(const std::string& n, const Symmetrization& a) { objects[n] = {"symmetrization", a}; }
void Scene::put_quadric(const std::string& n, const ScalarSym& q) { objects[n] = {"quadric", q}; }
void Scene::put(const std::string& n, const HomogPoly& f) {
  objects[n] = {f.nvars() == 3 && f.degree() == 4 ? "quartic" : "form", f};
}
void Scene::put(const std::string& n, const KummerPencilData& k) { objects[n] = {"pencil", Pencil{k}}; }
void Scene::put_line(const std::string& n, const Vec& l) { objects[n] = {"line", Line{l}}; }
void Scene::put(const std::string& n, const ScalarMatrix& m) { objects[n] = {"matrix", m}; }

json scene_to_json(const Scene& s) {
  json objs = json::object();
  for (const auto& [name, o] : s.objects) objs[name] = object_to_json(o);
  return {{"field", field_to_json(s.field)}, {"objects", objs}, {"metadata", s.metadata}};
}

Scene scene_from_json(const json& j) {
  Scene s;
  s.field = field_from_json(member(j, "field"));
  const json& objs = member(j, "objects");
  if (!objs.is_object()) bad("objects must be an object");
  for (const auto& [name, o] : objs.items()) {
    try {
      s.objects[name] = object_from_json(o, s.field);
    } catch (const InputError& e) {
      throw InputError(std::string(e.what()) + " (object \"" + name + "\")");
    }
  }
  if (j.contains("metadata")) s.metadata = j.at("metadata");
  return s;
}

Scene parse_scene(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  try {
    return scene_from_json(j);
  } catch (const json::exception& e) {
    bad(e.what());
  }
}

std::string write_scene(const Scene& s) { return scene_to_json(s).dump(2) + "\n"; }

Scene read_scene_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scene(ss.str());
}

Scene map_scene(const Scene& s, const Field& f) {
  return map_scene(s, f, [&](const Scalar& x) { return x.map_to(f); });
}

Scene map_scene(const Scene& s, const Field& f, const std::function<Scalar(const Scalar&)>& fn) {
  auto poly = [&](const HomogPoly& p) {
    TermMap tm;
    for (const auto& [e, c] : p.terms()) {
      Scalar v = fn(c);
      if (!v.is_zero()) tm.emplace(e, v);
    }
    return HomogPoly::from_terms(f, p.vars(), tm, p.degree());
  };
  auto sym = [&](const ScalarSym& m) {
    ScalarSym r(m.n(), Scalar::zero(f));
    for (int i = 0; i < m.n(); ++i)
      for (int j = i; j < m.n(); ++j) r.at(i, j) = fn(m.at(i, j));
    return r;
  };
  Scene out;
  out.field = f;
  out.metadata = s.metadata;
  for (const auto& [name, o] : s.objects) {
    Object m = o;
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Symmetrization>) {
            std::array<ScalarSym, 4> q;
            for (int i = 0; i < 4; ++i) q[i] = sym(v.qmats()[i]);
            m.value = Symmetrization::from_qmats(f, q, v.vars());
          } else if constexpr (std::is_same_v<T, ScalarSym>) {
            m.value = sym(v);
          } else if constexpr (std::is_same_v<T, HomogPoly>) {
            m.value = poly(v);
          } else if constexpr (std::is_same_v<T, Pencil>) {
            std::array<HomogPoly, 4> c;
            for (int i = 0; i < 4; ++i) c[i] = poly(v.data.c[i]);
            m.value = Pencil{make_pencil(c, poly(v.data.fX))};
          } else if constexpr (std::is_same_v<T, Line>) {
            Vec l;
            for (const auto& x : v.coeffs) l.push_back(fn(x));
            m.value = Line{l};
          } else {
            ScalarMatrix r(v.rows(), v.cols(), Scalar::zero(f));
            for (int i = 0; i < v.rows(); ++i)
              for (int j = 0; j < v.cols(); ++j) r(i, j) = fn(v(i, j));
            m.value = r;
          }
        },
        o.value);
    out.objects[name] = m;
  }
  return out;
}

}  // namespace prymsym::scene
