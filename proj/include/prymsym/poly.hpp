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
#ifndef PRYMSYM_POLY_HPP
#define PRYMSYM_POLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prymsym/field.hpp"

namespace prymsym {

constexpr int kMaxVars = 8;
using Exponent = std::array<std::uint8_t, kMaxVars>;

// Lexicographically descending: x0^2 sorts before x0*x1.
struct ExponentOrder {
  bool operator()(const Exponent& a, const Exponent& b) const { return a > b; }
};

using VarList = std::vector<std::string>;
using TermMap = std::map<Exponent, Scalar, ExponentOrder>;

VarList make_vars(const std::string& stem, int n);

// Homogeneous polynomial over a fixed ordered variable set.
class HomogPoly {
 public:
  HomogPoly();
  HomogPoly(const Field& f, VarList vars, int degree);  // zero polynomial

  static HomogPoly constant(const Field& f, VarList vars, const Scalar& c);
  static HomogPoly variable(const Field& f, VarList vars, int i);
  static HomogPoly linear(const Field& f, VarList vars, const std::vector<Scalar>& coeffs);
  static HomogPoly monomial(const Field& f, VarList vars, const Exponent& e, const Scalar& c);
  // Builds from an arbitrary term map; throws InputError unless homogeneous.
  static HomogPoly from_terms(const Field& f, VarList vars, const TermMap& terms, int degree_if_zero = 0);

  const Field& field() const { return f_; }
  const VarList& vars() const { return *vars_; }
  int nvars() const { return static_cast<int>(vars_->size()); }
  int degree() const { return deg_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Scalar coeff(const Exponent& e) const;

  HomogPoly operator+(const HomogPoly& o) const;
  HomogPoly operator-(const HomogPoly& o) const;
  HomogPoly operator-() const;
  HomogPoly operator*(const HomogPoly& o) const;
  HomogPoly operator*(const Scalar& c) const;
  HomogPoly& operator+=(const HomogPoly& o) { return *this = *this + o; }
  HomogPoly& operator-=(const HomogPoly& o) { return *this = *this - o; }
  HomogPoly pow(int n) const;

  // f(images[0], ..., images[n-1]); images share vars, field and degree.
  HomogPoly substitute(const std::vector<HomogPoly>& images) const;
  HomogPoly derivative(int i) const;
  std::vector<HomogPoly> gradient() const;
  Scalar evaluate(const std::vector<Scalar>& pt) const;

  // lambda with *this == lambda * other, if it exists (zero allowed only for zero).
  std::optional<Scalar> ratio_to(const HomogPoly& other) const;
  bool proportional(const HomogPoly& other) const { return ratio_to(other).has_value(); }

  // Exact quotient by g, or nullopt when g does not divide.
  std::optional<HomogPoly> divide_exact(const HomogPoly& g) const;

  HomogPoly rename(VarList vars) const;
  HomogPoly map_to(const Field& target) const;
  // Embed into a larger variable list by index map: var i -> new var idx[i].
  HomogPoly embed(VarList vars, const std::vector<int>& idx) const;

  bool operator==(const HomogPoly& o) const;
  bool operator!=(const HomogPoly& o) const { return !(*this == o); }
  std::string to_string() const;

  // Mutation used by builders before the value is shared.
  void add_term(const Exponent& e, const Scalar& c);

 private:
  Field f_;
  std::shared_ptr<const VarList> vars_;
  int deg_ = 0;
  TermMap terms_;

  void check_compatible(const HomogPoly& o, const char* op) const;
};

HomogPoly operator*(const Scalar& c, const HomogPoly& p);

// Parses expressions such as "x0*x1 - 3/2*x2^2 + (x0+x3)^2" in the given
// variables. Returns the raw term map (no homogeneity requirement).
TermMap parse_terms(std::string_view text, const Field& f, const VarList& vars);
HomogPoly parse_poly(std::string_view text, const Field& f, const VarList& vars);

}  // namespace prymsym

#endif
