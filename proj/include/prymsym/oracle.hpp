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
#ifndef PRYMSYM_ORACLE_HPP
#define PRYMSYM_ORACLE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prymsym/binary_form.hpp"
#include "prymsym/geometry.hpp"

// Brute-force ground truth over finite fields. Every counting routine has an
// exact serial version on Scalar (suffix _serial) and an OpenMP version on
// the packed representation below; the tests check they agree.
namespace prymsym::oracle {

struct Options {
  std::uint64_t budget = 10'000'000;  // max points visited by one enumeration
};

// F_p or F_{p^2} with elements packed as a + b*sqrt(d), 0 <= a, b < p.
class Fq {
 public:
  struct E {
    std::uint32_t a = 0, b = 0;
    bool operator==(const E& o) const { return a == o.a && b == o.b; }
    bool operator!=(const E& o) const { return !(*this == o); }
    bool zero() const { return a == 0 && b == 0; }
  };

  explicit Fq(const Field& f);

  const Field& field() const { return f_; }
  std::uint64_t p() const { return p_; }
  std::uint64_t q() const { return q_; }
  bool ext() const { return ext_; }

  E elem(std::uint64_t i) const { return {static_cast<std::uint32_t>(i % p_), static_cast<std::uint32_t>(i / p_)}; }
  std::uint64_t index(E x) const { return x.a + static_cast<std::uint64_t>(x.b) * p_; }
  E one() const { return {1, 0}; }

  E add(E x, E y) const { return {red(x.a + y.a), red(x.b + y.b)}; }
  E sub(E x, E y) const { return {red(x.a + p_ - y.a), red(x.b + p_ - y.b)}; }
  E neg(E x) const { return {x.a ? static_cast<std::uint32_t>(p_ - x.a) : 0u, x.b ? static_cast<std::uint32_t>(p_ - x.b) : 0u}; }
  E mul(E x, E y) const {
    if (!ext_) return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(x.a) * y.a % p_), 0};
    std::uint64_t bb = static_cast<std::uint64_t>(x.b) * y.b % p_;
    std::uint64_t re = (static_cast<std::uint64_t>(x.a) * y.a + bb * d_) % p_;
    std::uint64_t im = (static_cast<std::uint64_t>(x.a) * y.b + static_cast<std::uint64_t>(x.b) * y.a) % p_;
    return {static_cast<std::uint32_t>(re), static_cast<std::uint32_t>(im)};
  }
  E inv(E x) const;
  // Quadratic character: 0, 1 or -1.
  int chi(E x) const;
  // A square root when chi(x) >= 0.
  std::optional<E> sqrt(E x) const;

  E from_scalar(const Scalar& s) const;
  Scalar to_scalar(E x) const;

 private:
  Field f_;
  std::uint64_t p_ = 0, q_ = 0, d_ = 0;
  bool ext_ = false;
  std::vector<std::int8_t> leg_;        // Legendre symbol mod p
  std::vector<std::int64_t> root_;      // index -> index of a square root, or -1
  std::uint32_t red(std::uint64_t v) const { return static_cast<std::uint32_t>(v >= p_ ? v - p_ : v); }
  std::uint64_t norm(E x) const;
};

// A homogeneous form compiled for evaluation over an Fq.
class CompiledPoly {
 public:
  CompiledPoly(const Fq& fq, const HomogPoly& f);
  Fq::E eval(const Fq& fq, const Fq::E* x) const;
  int nvars() const { return nvars_; }
  int degree() const { return deg_; }

 private:
  int nvars_ = 0, deg_ = 0;
  std::vector<std::pair<Fq::E, Exponent>> terms_;
};

std::uint64_t projective_size(std::uint64_t q, int dim);
// Point number i of P^dim(F_q): leading coordinate 1, ordered by the position
// of the leading coordinate, then lexicographically in the element index.
void decode_point(const Fq& fq, int dim, std::uint64_t i, Fq::E* out);

// Normalized points of P^dim(F_q), each exactly once.
std::vector<Vec> enumerate_points(const Field& f, int dim, const Options& opt = {});

// Points of V(eqs) in P^n (n + 1 = number of variables).
std::vector<Vec> variety_points_serial(const std::vector<HomogPoly>& eqs, const Options& opt = {});
std::vector<Vec> variety_points(const std::vector<HomogPoly>& eqs, const Options& opt = {});
std::uint64_t count_points_serial(const std::vector<HomogPoly>& eqs, const Options& opt = {});
std::uint64_t count_points(const std::vector<HomogPoly>& eqs, const Options& opt = {});

// Jacobian criterion at every F_q point of V(eqs).
struct SmoothnessReport {
  bool smooth = true;
  std::optional<Vec> witness;
  std::uint64_t points = 0;
};
SmoothnessReport smoothness_certificate_serial(const std::vector<HomogPoly>& eqs, const Options& opt = {});
SmoothnessReport smoothness_certificate(const std::vector<HomogPoly>& eqs, const Options& opt = {});

struct CountReport {
  std::uint64_t q = 0;
  std::string curve;
  std::uint64_t points = 0;
  int genus = 0;
  long long trace = 0;  // q + 1 - points
  bool weil_ok = true;  // |trace| <= 2 g sqrt(q)
};
CountReport make_report(std::uint64_t q, const std::string& curve, std::uint64_t points, int genus);
CountReport count_curve(const std::vector<HomogPoly>& eqs, int genus, const std::string& id, const Options& opt = {});

// The double cover of C = V(Q, Gamma) given by adjoining the square root of
// a nonvanishing minor. Throws DomainError at a point where all minors vanish.
struct CoverReport {
  CountReport report;
  std::uint64_t checked_pairs = 0;  // points where two minors were compared
  std::uint64_t conflicts = 0;      // pairs with different square classes
};
CoverReport count_double_cover_serial(const HomogPoly& Q, const HomogPoly& Gamma, const std::array<HomogPoly, 3>& minors,
                                      const Options& opt = {});
CoverReport count_double_cover(const HomogPoly& Q, const HomogPoly& Gamma, const std::array<HomogPoly, 3>& minors,
                               const Options& opt = {});

// y^2 = c * h(z) over the points z of a plane conic (h of even degree).
CountReport count_cover_of_conic(const HomogPoly& conic, const HomogPoly& h, const Scalar& c, int genus,
                                 const std::string& id, const Options& opt = {});
// y^2 = h(s, t) for a binary form of even degree 2g + 2.
CountReport count_binary_cover(const BinaryForm& h, const std::string& id);

// Lines (a:b:c) of P^2(F_q) meeting the quartic in an even divisor.
std::vector<Vec> enumerate_bitangents_serial(const HomogPoly& quartic, const Options& opt = {});
std::vector<Vec> enumerate_bitangents(const HomogPoly& quartic, const Options& opt = {});

// Two points spanning the line a z0 + b z1 + c z2 = 0, chosen deterministically.
std::pair<Vec, Vec> line_points(const Vec& line);

}  // namespace prymsym::oracle

#endif
