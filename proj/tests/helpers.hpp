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
#ifndef PRYMSYM_TESTS_HELPERS_HPP
#define PRYMSYM_TESTS_HELPERS_HPP

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "prymsym/binary_form.hpp"
#include "prymsym/field.hpp"
#include "prymsym/matrix.hpp"
#include "prymsym/poly.hpp"

namespace testutil {

using namespace prymsym;

inline VarList X() { return make_vars("x", 4); }
inline VarList Z() { return make_vars("z", 3); }
inline VarList ST() { return {"s", "t"}; }

inline HomogPoly px(const std::string& s, const Field& f = Field::rationals()) { return parse_poly(s, f, X()); }
inline HomogPoly pz(const std::string& s, const Field& f = Field::rationals()) { return parse_poly(s, f, Z()); }
inline BinaryForm bst(const std::string& s, const Field& f = Field::rationals()) {
  return BinaryForm::from_poly(parse_poly(s, f, ST()));
}
inline Scalar sc(const Field& f, long n) { return Scalar::from_int(f, n); }
inline Scalar sq(const Field& f, long n, long d) {
  mpq_class q{mpz_class(n), mpz_class(d)};
  q.canonicalize();
  return Scalar::from_rational(f, q);
}

// Symmetric matrix of forms from row-major strings (upper triangle read).
inline PolySym polysym(const std::vector<std::vector<std::string>>& rows, const Field& f = Field::rationals(),
                       const VarList& vars = X()) {
  int n = static_cast<int>(rows.size());
  PolySym m(n, HomogPoly(f, vars, 1));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      HomogPoly e = parse_poly(rows[i][j], f, vars);
      if (e.is_zero()) e = HomogPoly(f, vars, 1);
      m.at(i, j) = e;
    }
  return m;
}

inline ScalarSym scalarsym(const std::vector<std::vector<long>>& rows, const Field& f, long den = 1) {
  int n = static_cast<int>(rows.size());
  ScalarSym m(n, Scalar::zero(f));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m.at(i, j) = sq(f, rows[i][j], den);
  return m;
}

// Random element: small integers over Q, uniform residues over F_p.
inline Scalar random_scalar(std::mt19937_64& rng, const Field& f, int range = 5) {
  if (f.is_finite()) {
    std::uniform_int_distribution<long> d(0, static_cast<long>(f.characteristic()) - 1);
    if (f.is_extension()) return Scalar::from_pair(f, sc(f.base(), d(rng)), sc(f.base(), d(rng)));
    return sc(f, d(rng));
  }
  std::uniform_int_distribution<long> d(-range, range);
  return sc(f, d(rng));
}

inline HomogPoly random_form(std::mt19937_64& rng, const Field& f, const VarList& vars, int degree) {
  HomogPoly p(f, vars, degree);
  int n = static_cast<int>(vars.size());
  // enumerate exponent vectors of the given degree
  std::vector<int> e(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      e[i] = left;
      Exponent ex{};
      for (int k = 0; k < n; ++k) ex[k] = static_cast<std::uint8_t>(e[k]);
      p.add_term(ex, random_scalar(rng, f));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, degree);
  return p;
}

// Independent 3x3 determinant by the rule of Sarrus.
template <class T>
T sarrus(const Matrix<T>& m) {
  return m(0, 0) * m(1, 1) * m(2, 2) + m(0, 1) * m(1, 2) * m(2, 0) + m(0, 2) * m(1, 0) * m(2, 1) -
         m(0, 2) * m(1, 1) * m(2, 0) - m(0, 0) * m(1, 2) * m(2, 1) - m(0, 1) * m(1, 0) * m(2, 2);
}

// Exhaustive square root table mod p.
inline std::vector<long> residue_roots(long a, long p) {
  std::vector<long> r;
  for (long x = 0; x < p; ++x)
    if ((x * x) % p == ((a % p) + p) % p) r.push_back(x);
  return r;
}


// The eight normal forms of cubic symmetroids, numbered 1..8.
inline std::vector<std::vector<std::string>> normal_form_rows(int n) {
  switch (n) {
    case 1: return {{"x0", "x3", "x3"}, {"x3", "x1", "x3"}, {"x3", "x3", "x2"}};
    case 2: return {{"x0", "x3", "-x3"}, {"x3", "x1", "0"}, {"-x3", "0", "x2"}};
    case 3: return {{"x0", "x2", "0"}, {"x2", "x1", "x3"}, {"0", "x3", "-x2"}};
    case 4: return {{"x0", "-x3", "x2"}, {"-x3", "x1", "x3"}, {"x2", "x3", "0"}};
    case 5: return {{"0", "x2", "x0"}, {"x2", "-x0", "x3"}, {"x0", "x3", "x1"}};
    case 6: return {{"0", "x1", "x3"}, {"x1", "0", "x2"}, {"x3", "x2", "x0"}};
    case 7: return {{"x0", "0", "0"}, {"0", "x1", "x3"}, {"0", "x3", "x2"}};
    default: return {{"0", "0", "x2"}, {"0", "x0", "x3"}, {"x2", "x3", "x1"}};
  }
}

// All points of P^n(F_q) in a fixed order.
inline std::vector<std::vector<Scalar>> projective_points(const Field& f, int n) {
  auto el = field_elements(f);
  std::vector<std::vector<Scalar>> out;
  for (int lead = 0; lead <= n; ++lead) {
    std::vector<Scalar> base(n + 1, Scalar::zero(f));
    base[lead] = Scalar::one(f);
    std::vector<std::vector<Scalar>> acc = {base};
    for (int k = lead + 1; k <= n; ++k) {
      std::vector<std::vector<Scalar>> next;
      for (const auto& v : acc)
        for (const auto& e : el) {
          auto w = v;
          w[k] = e;
          next.push_back(w);
        }
      acc = std::move(next);
    }
    out.insert(out.end(), acc.begin(), acc.end());
  }
  return out;
}

}  // namespace testutil

#endif
