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
#include "prymsym/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace prymsym {

struct FieldData {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t p = 0;
  const FieldData* base = nullptr;
  std::optional<Scalar> d;  // QuadExt only
  std::string key;
};

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw DomainError("division by zero in F_" + std::to_string(p));
  return powmod(a, p - 2, p);
}

std::optional<std::uint64_t> sqrtmod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  // Tonelli-Shanks
  std::uint64_t q = p - 1, s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = smallest_nonresidue(p);
  std::uint64_t m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return std::min(r, p - r);
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, std::unique_ptr<FieldData>>& registry() {
  static std::map<std::string, std::unique_ptr<FieldData>> r;
  return r;
}

const FieldData* intern(std::unique_ptr<FieldData> fd) {
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& reg = registry();
  auto it = reg.find(fd->key);
  if (it != reg.end()) return it->second.get();
  const FieldData* out = fd.get();
  reg.emplace(fd->key, std::move(fd));
  return out;
}

const FieldData* rationals_data() {
  static const FieldData* q = [] {
    auto fd = std::make_unique<FieldData>();
    fd->kind = FieldKind::Rationals;
    fd->key = "Q";
    return intern(std::move(fd));
  }();
  return q;
}

bool rational_is_square(const mpq_class& v) {
  if (sgn(v) < 0) return false;
  return mpz_perfect_square_p(v.get_num_mpz_t()) && mpz_perfect_square_p(v.get_den_mpz_t());
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<Scalar> field_elements(const Field& f) {
  if (!f.is_finite()) throw DomainError("cannot enumerate an infinite field");
  std::uint64_t p = f.characteristic();
  std::vector<Scalar> out;
  Field base = f.base();
  std::vector<Scalar> b;
  for (std::uint64_t a = 0; a < p; ++a) b.push_back(Scalar::from_int(base, static_cast<long>(a)));
  if (!f.is_extension()) return b;
  for (const auto& y : b)
    for (const auto& x : b) out.push_back(Scalar::from_pair(f, x, y));
  return out;
}

long legendre(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::uint64_t smallest_nonresidue(std::uint64_t p) {
  for (std::uint64_t a = 2; a < p; ++a)
    if (legendre(a, p) == -1) return a;
  throw DomainError("no quadratic nonresidue mod " + std::to_string(p));
}

// ---------------------------------------------------------------- Field

Field::Field() : d_(rationals_data()) {}

Field Field::rationals() { return Field(rationals_data()); }

Field Field::prime(std::uint64_t p) {
  if (p == 2) throw InputError("characteristic two unsupported");
  if (!is_prime(p)) throw InputError("field size " + std::to_string(p) + " is not an odd prime");
  auto fd = std::make_unique<FieldData>();
  fd->kind = FieldKind::PrimeField;
  fd->p = p;
  fd->key = "F" + std::to_string(p);
  return Field(intern(std::move(fd)));
}

Field Field::quad_ext(const Field& base, const Scalar& d) {
  if (base.kind() == FieldKind::QuadExt) throw InputError("quadratic extension of an extension unsupported");
  Scalar dd = d.map_to(base);
  if (dd.is_zero() || dd.is_square())
    throw InputError("extension element " + dd.to_string() + " is a square in " + base.to_string());
  auto fd = std::make_unique<FieldData>();
  fd->kind = FieldKind::QuadExt;
  fd->p = base.characteristic();
  fd->base = base.d_;
  fd->d = dd;
  fd->key = base.d_->key + "(sqrt " + dd.to_string() + ")";
  return Field(intern(std::move(fd)));
}

Field Field::canonical_extension(const Field& prime_field) {
  if (prime_field.kind() != FieldKind::PrimeField) throw DomainError("canonical extension needs a prime field");
  std::uint64_t p = prime_field.characteristic();
  return quad_ext(prime_field, Scalar::from_int(prime_field, static_cast<long>(smallest_nonresidue(p))));
}

FieldKind Field::kind() const { return d_->kind; }
std::uint64_t Field::characteristic() const { return d_->p; }
Field Field::base() const { return d_->base ? Field(d_->base) : *this; }

const Scalar& Field::ext_d() const {
  if (d_->kind != FieldKind::QuadExt) throw DomainError("not a quadratic extension");
  return *d_->d;
}

std::uint64_t Field::size() const {
  if (d_->p == 0) return 0;
  return d_->kind == FieldKind::QuadExt ? d_->p * d_->p : d_->p;
}

std::string Field::to_string() const { return d_->key; }

Field join_fields(const Field& a, const Field& b) {
  if (a == b) return a;
  if (b.is_extension() && b.base() == a) return b;
  if (a.is_extension() && a.base() == b) return a;
  throw DomainError("incompatible fields " + a.to_string() + " and " + b.to_string());
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar() : f_(Field::rationals()) {}

Scalar Scalar::zero(const Field& f) {
  Scalar s;
  s.f_ = f;
  return s;
}

Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, long n) { return from_rational(f, mpq_class(n)); }

Scalar Scalar::from_rational(const Field& f, const mpq_class& q) {
  Scalar s = zero(f);
  if (f.characteristic() == 0) {
    s.qa_ = q;
    s.qa_.canonicalize();
    return s;
  }
  std::uint64_t p = f.characteristic();
  mpz_class pz(std::to_string(p));
  mpz_class num = q.get_num() % pz;
  if (num < 0) num += pz;
  mpz_class den = q.get_den() % pz;
  if (den == 0) throw DomainError("denominator of " + q.get_str() + " vanishes mod " + std::to_string(p));
  std::uint64_t n = std::stoull(num.get_str()), dn = std::stoull(den.get_str());
  s.ma_ = mulmod(n, invmod(dn, p), p);
  return s;
}

Scalar Scalar::from_pair(const Field& f, const Scalar& a, const Scalar& b) {
  if (!f.is_extension()) {
    if (!b.is_zero()) throw DomainError("pair with nonzero second component outside an extension");
    return a.map_to(f);
  }
  Field base = f.base();
  Scalar aa = a.map_to(base), bb = b.map_to(base);
  Scalar s = zero(f);
  if (f.characteristic() == 0) {
    s.qa_ = aa.qa_;
    s.qb_ = bb.qa_;
  } else {
    s.ma_ = aa.ma_;
    s.mb_ = bb.ma_;
  }
  return s;
}

Scalar Scalar::sqrt_d(const Field& ext) {
  return from_pair(ext, zero(ext.base()), one(ext.base()));
}

bool Scalar::is_zero() const {
  if (f_.characteristic() == 0) return sgn(qa_) == 0 && sgn(qb_) == 0;
  return ma_ == 0 && mb_ == 0;
}

bool Scalar::is_one() const {
  if (f_.characteristic() == 0) return qa_ == 1 && sgn(qb_) == 0;
  return ma_ == 1 && mb_ == 0;
}

Scalar Scalar::re() const {
  Field b = f_.base();
  Scalar s = zero(b);
  s.qa_ = qa_;
  s.ma_ = ma_;
  return s;
}

Scalar Scalar::im() const {
  Field b = f_.base();
  Scalar s = zero(b);
  if (!f_.is_extension()) return s;
  s.qa_ = qb_;
  s.ma_ = mb_;
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Field f = join_fields(f_, o.f_);
  Scalar at = f_ == f ? Scalar() : map_to(f);
  Scalar bt = o.f_ == f ? Scalar() : o.map_to(f);
  const Scalar& a = f_ == f ? *this : at;
  const Scalar& b = o.f_ == f ? o : bt;
  Scalar s = zero(f);
  if (f.characteristic() == 0) {
    s.qa_ = a.qa_ + b.qa_;
    s.qb_ = a.qb_ + b.qb_;
  } else {
    std::uint64_t p = f.characteristic();
    s.ma_ = addmod(a.ma_, b.ma_, p);
    s.mb_ = addmod(a.mb_, b.mb_, p);
  }
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = zero(f_);
  if (f_.characteristic() == 0) {
    s.qa_ = -qa_;
    s.qb_ = -qb_;
  } else {
    std::uint64_t p = f_.characteristic();
    s.ma_ = submod(0, ma_, p);
    s.mb_ = submod(0, mb_, p);
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  Field f = join_fields(f_, o.f_);
  Scalar at = f_ == f ? Scalar() : map_to(f);
  Scalar bt = o.f_ == f ? Scalar() : o.map_to(f);
  const Scalar& a = f_ == f ? *this : at;
  const Scalar& b = o.f_ == f ? o : bt;
  Scalar s = zero(f);
  if (f.characteristic() == 0) {
    if (f.is_extension()) {
      const mpq_class& d = f.ext_d().qa_;
      s.qa_ = a.qa_ * b.qa_ + d * a.qb_ * b.qb_;
      s.qb_ = a.qa_ * b.qb_ + a.qb_ * b.qa_;
    } else {
      s.qa_ = a.qa_ * b.qa_;
    }
  } else {
    std::uint64_t p = f.characteristic();
    if (f.is_extension()) {
      std::uint64_t d = f.ext_d().ma_;
      s.ma_ = addmod(mulmod(a.ma_, b.ma_, p), mulmod(d, mulmod(a.mb_, b.mb_, p), p), p);
      s.mb_ = addmod(mulmod(a.ma_, b.mb_, p), mulmod(a.mb_, b.ma_, p), p);
    } else {
      s.ma_ = mulmod(a.ma_, b.ma_, p);
    }
  }
  return s;
}

Scalar Scalar::conj() const {
  Scalar s = *this;
  if (!f_.is_extension()) return s;
  if (f_.characteristic() == 0)
    s.qb_ = -qb_;
  else
    s.mb_ = submod(0, mb_, f_.characteristic());
  return s;
}

Scalar Scalar::norm() const {
  if (!f_.is_extension()) return *this;
  Scalar a = re(), b = im();
  return a * a - f_.ext_d() * b * b;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DomainError("division by zero");
  if (f_.is_extension()) {
    Scalar n = norm().inv();
    return conj() * n.map_to(f_);
  }
  Scalar s = zero(f_);
  if (f_.characteristic() == 0)
    s.qa_ = 1 / qa_;
  else
    s.ma_ = invmod(ma_, f_.characteristic());
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::pow(long long e) const {
  if (e < 0) return inv().pow(-e);
  Scalar r = one(f_), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (f_ != o.f_) {
    try {
      Field f = join_fields(f_, o.f_);
      return map_to(f) == o.map_to(f);
    } catch (const DomainError&) {
      return false;
    }
  }
  if (f_.characteristic() == 0) return qa_ == o.qa_ && qb_ == o.qb_;
  return ma_ == o.ma_ && mb_ == o.mb_;
}

bool Scalar::is_canonical_sign() const {
  Scalar lead = re().is_zero() ? im() : re();
  if (lead.f_.characteristic() == 0) return sgn(lead.qa_) >= 0;
  return lead.ma_ <= (lead.f_.characteristic() - 1) / 2;
}

bool Scalar::canonical_less(const Scalar& o) const {
  Scalar a = re(), b = o.re();
  if (!(a == b)) {
    if (f_.characteristic() == 0) return a.qa_ < b.qa_;
    return a.ma_ < b.ma_;
  }
  Scalar c = im(), d = o.im();
  if (f_.characteristic() == 0) return c.qa_ < d.qa_;
  return c.ma_ < d.ma_;
}

bool Scalar::is_square() const {
  if (is_zero()) return true;
  switch (f_.kind()) {
    case FieldKind::Rationals:
      return rational_is_square(qa_);
    case FieldKind::PrimeField:
      return legendre(ma_, f_.characteristic()) == 1;
    case FieldKind::QuadExt:
      if (f_.characteristic() != 0) return norm().is_square();
      return sqrt().has_value();
  }
  return false;
}

std::optional<Scalar> Scalar::sqrt() const {
  if (is_zero()) return *this;
  switch (f_.kind()) {
    case FieldKind::Rationals: {
      if (!rational_is_square(qa_)) return std::nullopt;
      mpz_class n, d;
      mpz_sqrt(n.get_mpz_t(), qa_.get_num_mpz_t());
      mpz_sqrt(d.get_mpz_t(), qa_.get_den_mpz_t());
      return from_rational(f_, mpq_class(n, d));
    }
    case FieldKind::PrimeField: {
      auto r = sqrtmod(ma_, f_.characteristic());
      if (!r) return std::nullopt;
      Scalar s = zero(f_);
      s.ma_ = *r;
      return s;
    }
    case FieldKind::QuadExt: {
      Field base = f_.base();
      Scalar a = re(), b = im(), d = f_.ext_d();
      std::optional<Scalar> out;
      if (b.is_zero()) {
        if (auto r = a.sqrt())
          out = from_pair(f_, *r, zero(base));
        else if (auto r2 = (a / d).sqrt())
          out = from_pair(f_, zero(base), *r2);
      } else {
        auto sn = (a * a - d * b * b).sqrt();
        if (!sn) return std::nullopt;
        Scalar half = Scalar::from_int(base, 2).inv();
        std::optional<Scalar> x0 = ((a + *sn) * half).sqrt();
        if (!x0 || x0->is_zero()) x0 = ((a - *sn) * half).sqrt();
        if (!x0 || x0->is_zero()) return std::nullopt;
        Scalar y = b / (Scalar::from_int(base, 2) * *x0);
        out = from_pair(f_, *x0, y);
      }
      if (!out) return std::nullopt;
      if (!(*out * *out == *this)) return std::nullopt;
      if (!out->is_canonical_sign()) out = -*out;
      return out;
    }
  }
  return std::nullopt;
}

Scalar Scalar::map_to(const Field& target) const {
  if (target == f_) return *this;
  switch (f_.kind()) {
    case FieldKind::Rationals: {
      Scalar base_val = from_rational(target.base(), qa_);
      if (!target.is_extension()) return base_val;
      Scalar s = zero(target);
      s.qa_ = base_val.qa_;
      s.ma_ = base_val.ma_;
      return s;
    }
    case FieldKind::PrimeField: {
      if (target.characteristic() != f_.characteristic())
        throw DomainError("cannot map " + f_.to_string() + " into " + target.to_string());
      if (!target.is_extension()) return *this;  // unreachable: equal prime fields are interned
      Scalar s = zero(target);
      s.ma_ = ma_;
      return s;
    }
    case FieldKind::QuadExt: {
      Scalar a = re().map_to(target), b = im().map_to(target);
      if (b.is_zero()) return a;
      auto r = f_.ext_d().map_to(target).sqrt();
      if (!r) throw DomainError("sqrt(" + f_.ext_d().to_string() + ") not available in " + target.to_string());
      return a + b * *r;
    }
  }
  return *this;
}

std::string Scalar::to_string() const {
  auto one_str = [&](const mpq_class& q, std::uint64_t m) {
    return f_.characteristic() == 0 ? q.get_str() : std::to_string(m);
  };
  if (!f_.is_extension()) return one_str(qa_, ma_);
  return "[" + one_str(qa_, ma_) + "," + one_str(qb_, mb_) + "]";
}

}  // namespace prymsym
