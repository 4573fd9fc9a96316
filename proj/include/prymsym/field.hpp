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
#ifndef PRYMSYM_FIELD_HPP
#define PRYMSYM_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace prymsym {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or unsupported input. The CLI maps this to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

// Enumeration would exceed the configured budget. CLI exit code 3.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A mathematical precondition does not hold (wrong rank, degenerate input...).
class DomainError : public Error {
 public:
  using Error::Error;
};

enum class FieldKind { Rationals, PrimeField, QuadExt };

class Scalar;
struct FieldData;

// Handle to an interned field descriptor. Two handles compare equal iff they
// describe the same field.
class Field {
 public:
  Field();  // the rationals

  static Field rationals();
  static Field prime(std::uint64_t p);
  static Field quad_ext(const Field& base, const Scalar& d);
  // F_{p^2} built with the smallest quadratic nonresidue mod p.
  static Field canonical_extension(const Field& prime_field);

  FieldKind kind() const;
  std::uint64_t characteristic() const;  // 0 for Q
  Field base() const;                    // the field itself unless QuadExt
  const Scalar& ext_d() const;           // QuadExt only
  bool is_finite() const { return characteristic() != 0; }
  std::uint64_t size() const;            // 0 when infinite
  bool is_extension() const { return kind() == FieldKind::QuadExt; }

  bool operator==(const Field& o) const { return d_ == o.d_; }
  bool operator!=(const Field& o) const { return d_ != o.d_; }
  std::string to_string() const;

 private:
  explicit Field(const FieldData* d) : d_(d) {}
  const FieldData* d_;
  friend class Scalar;
};

// Exact element of Q, F_p or a quadratic extension a + b*sqrt(d).
class Scalar {
 public:
  Scalar();  // rational zero

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(const Field& f, long n);
  static Scalar from_rational(const Field& f, const mpq_class& q);
  // a + b*sqrt(d); a and b live in (or embed into) f.base().
  static Scalar from_pair(const Field& f, const Scalar& a, const Scalar& b);
  static Scalar sqrt_d(const Field& ext);

  const Field& field() const { return f_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inv() const;
  Scalar pow(long long e) const;

  // Components over the base field (QuadExt); for other fields (a, 0).
  Scalar re() const;
  Scalar im() const;
  Scalar conj() const;
  Scalar norm() const;  // a^2 - d b^2 in the base field

  bool is_square() const;
  // Deterministic square root: over F_p the smaller of r, p-r; over Q the
  // positive root; over extensions the root with canonical first component.
  std::optional<Scalar> sqrt() const;

  // Embed or reduce into another field (Q -> F_p, F_p -> F_{p^2}, ...).
  Scalar map_to(const Field& target) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Raw representation accessors.
  const mpq_class& rational() const { return qa_; }
  std::uint64_t residue() const { return ma_; }

  std::string to_string() const;
  // Ordering used only to make outputs deterministic.
  bool canonical_less(const Scalar& o) const;
  bool is_canonical_sign() const;

 private:
  Field f_;
  mpq_class qa_, qb_;
  std::uint64_t ma_ = 0, mb_ = 0;

  friend struct FieldData;
};

// Common field of two operands: equal fields, or one is the base of the other.
Field join_fields(const Field& a, const Field& b);

bool is_prime(std::uint64_t n);
// All elements of a finite field in a fixed order (residue order, then pairs).
std::vector<Scalar> field_elements(const Field& f);
std::uint64_t smallest_nonresidue(std::uint64_t p);
long legendre(std::uint64_t a, std::uint64_t p);

}  // namespace prymsym

#endif
