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
#ifndef PRYMSYM_SCENE_HPP
#define PRYMSYM_SCENE_HPP

#include <functional>
#include <map>
#include <string>
#include <variant>

#include <json.hpp>

#include "prymsym/prym.hpp"

// JSON scene files: one field and a set of named objects over it.
namespace prymsym::scene {

using json = nlohmann::json;

json field_to_json(const Field& f);
Field field_from_json(const json& j);

// "p/q" over Q, the residue over F_p, ["a", "b"] for a + b sqrt(d).
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, const Field& f);

json poly_to_json(const HomogPoly& p);
HomogPoly poly_from_json(const json& j, const Field& f);

// Object kinds. "form" holds any homogeneous polynomial (conics, octics,
// cubic surfaces); "matrix" any scalar matrix (coordinate changes).
struct Pencil {
  KummerPencilData data;
};
struct Line {
  Vec coeffs;
};
using Value = std::variant<Symmetrization, ScalarSym, HomogPoly, Pencil, Line, ScalarMatrix>;

struct Object {
  std::string kind;  // symmetrization, quadric, quartic, form, pencil, line, matrix
  Value value;
};

struct Scene {
  Field field;
  std::map<std::string, Object> objects;
  json metadata = json::object();

  const Object& get(const std::string& name) const;
  const Symmetrization& symmetrization(const std::string& name) const;
  const ScalarSym& quadric(const std::string& name) const;
  const HomogPoly& form(const std::string& name) const;  // quartic or form
  const KummerPencilData& pencil(const std::string& name) const;
  const Vec& line(const std::string& name) const;
  const ScalarMatrix& matrix(const std::string& name) const;

  void put(const std::string& name, const Symmetrization& a);
  void put_quadric(const std::string& name, const ScalarSym& q);
  void put(const std::string& name, const HomogPoly& f);  // quartic when a ternary quartic
  void put(const std::string& name, const KummerPencilData& k);
  void put_line(const std::string& name, const Vec& l);
  void put(const std::string& name, const ScalarMatrix& m);
};

json scene_to_json(const Scene& s);
Scene scene_from_json(const json& j);
// Throws InputError on malformed JSON or objects.
Scene parse_scene(const std::string& text);
std::string write_scene(const Scene& s);
Scene read_scene_file(const std::string& path);

// Every object mapped into f (reduction mod p or field extension).
Scene map_scene(const Scene& s, const Field& f);
// Every scalar sent through fn, a ring map into f.
Scene map_scene(const Scene& s, const Field& f, const std::function<Scalar(const Scalar&)>& fn);

}  // namespace prymsym::scene

#endif
