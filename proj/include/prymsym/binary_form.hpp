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
#ifndef PRYMSYM_BINARY_FORM_HPP
#define PRYMSYM_BINARY_FORM_HPP

#include <map>
#include <optional>
#include <vector>

#include "prymsym/field.hpp"
#include "prymsym/poly.hpp"

namespace prymsym {

// Dense univariate polynomial, c[i] is the coefficient of x^i.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(const Field& f) : f_(f) {}
  UPoly(const Field& f, std::vector<Scalar> c);
  static UPoly monomial(const Field& f, int deg, const Scalar& c);

  const Field& field() const { return f_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(int i) const;
  Scalar lead() const;

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator*(const Scalar& s) const;
  UPoly operator-() const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  void divmod(const UPoly& d, UPoly& q, UPoly& r) const;
  UPoly operator/(const UPoly& d) const;
  UPoly operator%(const UPoly& d) const;
  UPoly derivative() const;
  UPoly monic() const;
  Scalar evaluate(const Scalar& x) const;
  UPoly map_to(const Field& f) const;

 private:
  Field f_;
  std::vector<Scalar> c_;
  void trim();
};

UPoly gcd(const UPoly& a, const UPoly& b);  // monic, gcd(0,0) = 0

// Factors with multiplicities: {m -> product of the monic factors of
// multiplicity exactly m}. Exact over Q, F_p and F_{p^2} in any characteristic.
std::map<int, UPoly> squarefree_decomposition(const UPoly& f);

// Binary form sum c[i] s^{d-i} t^i of fixed degree d.
class BinaryForm {
 public:
  BinaryForm() = default;
  BinaryForm(const Field& f, int degree);  // zero form
  BinaryForm(const Field& f, std::vector<Scalar> c);
  static BinaryForm from_poly(const HomogPoly& p);  // p in exactly two variables
  // Homogenize a univariate polynomial in s (t = 1) to the given degree.
  static BinaryForm homogenize(const UPoly& u, int degree);

  const Field& field() const { return f_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  bool is_zero() const;

  BinaryForm operator+(const BinaryForm& o) const;
  BinaryForm operator-(const BinaryForm& o) const;
  BinaryForm operator*(const BinaryForm& o) const;
  BinaryForm operator*(const Scalar& s) const;
  bool operator==(const BinaryForm& o) const { return c_ == o.c_; }

  Scalar evaluate(const Scalar& s, const Scalar& t) const;
  UPoly dehomogenize() const;            // g(s, 1)
  int multiplicity_at_infinity() const;  // order of the root (1:0)
  HomogPoly to_poly(const VarList& vars) const;
  BinaryForm map_to(const Field& f) const;
  std::optional<Scalar> ratio_to(const BinaryForm& o) const;
  bool proportional(const BinaryForm& o) const { return ratio_to(o).has_value(); }

 private:
  Field f_;
  std::vector<Scalar> c_;
};

// gcd of binary forms (up to scalar), degree reflects the common roots on P^1.
BinaryForm gcd(const BinaryForm& a, const BinaryForm& b);

// Multiplicity m -> total degree of the roots of multiplicity exactly m,
// over the algebraic closure.
std::map<int, int> squarefree_signature(const BinaryForm& g);

struct PerfectSquare {
  bool found = false;
  // h with h^2 = c * g.
  BinaryForm root;
  Scalar c;
  bool c_is_square = false;  // then root is rescaled so that c == 1
  // When c is a nonsquare of a base field, the root of g itself over F(sqrt(1/c)).
  std::optional<BinaryForm> ext_root;
};
PerfectSquare is_perfect_square(const BinaryForm& g);

// Roots on P^1 over the field of g (exhaustive over finite fields; rational
// roots over Q). Each root as (s, t) normalized, with multiplicity.
struct BinaryRoot {
  Scalar s, t;
  int multiplicity = 1;
};
std::vector<BinaryRoot> roots(const BinaryForm& g);

// Resultant of two forms in the last variable of a 3-variable ring, as a
// binary form in the first two variables.
BinaryForm resultant_last_var(const HomogPoly& f, const HomogPoly& g);

}  // namespace prymsym

#endif
