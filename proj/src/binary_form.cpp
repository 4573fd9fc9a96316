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
#include "prymsym/binary_form.hpp"

#include "prymsym/matrix.hpp"

namespace prymsym {

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(const Field& f, std::vector<Scalar> c) : f_(f), c_(std::move(c)) {
  for (auto& x : c_) x = x.map_to(f_);
  trim();
}

UPoly UPoly::monomial(const Field& f, int deg, const Scalar& c) {
  std::vector<Scalar> v(deg + 1, Scalar::zero(f));
  v[deg] = c;
  return UPoly(f, v);
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar UPoly::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Scalar::zero(f_);
}

Scalar UPoly::lead() const { return c_.empty() ? Scalar::zero(f_) : c_.back(); }

UPoly UPoly::operator+(const UPoly& o) const {
  Field f = join_fields(f_, o.f_);
  std::vector<Scalar> r(std::max(c_.size(), o.c_.size()), Scalar::zero(f));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
  return UPoly(f, r);
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
  Field f = join_fields(f_, o.f_);
  if (is_zero() || o.is_zero()) return UPoly(f);
  std::vector<Scalar> r(c_.size() + o.c_.size() - 1, Scalar::zero(f));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
  return UPoly(f, r);
}

UPoly UPoly::operator*(const Scalar& s) const {
  Field f = join_fields(f_, s.field());
  std::vector<Scalar> r;
  for (const auto& x : c_) r.push_back(x * s);
  return UPoly(f, r);
}

void UPoly::divmod(const UPoly& d, UPoly& q, UPoly& r) const {
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  Field f = join_fields(f_, d.f_);
  r = map_to(f);
  int dq = degree() - d.degree();
  std::vector<Scalar> qc(dq >= 0 ? dq + 1 : 0, Scalar::zero(f));
  Scalar inv = d.lead().inv();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int k = r.degree() - d.degree();
    Scalar c = r.lead() * inv;
    qc[k] = c;
    std::vector<Scalar> nc = r.c_;
    for (int i = 0; i <= d.degree(); ++i) nc[i + k] = nc[i + k] - c * d.c_[i];
    nc.pop_back();
    r = UPoly(f, nc);
  }
  q = UPoly(f, qc);
}

UPoly UPoly::operator/(const UPoly& d) const {
  UPoly q, r;
  divmod(d, q, r);
  return q;
}

UPoly UPoly::operator%(const UPoly& d) const {
  UPoly q, r;
  divmod(d, q, r);
  return r;
}

UPoly UPoly::derivative() const {
  std::vector<Scalar> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * Scalar::from_int(f_, static_cast<long>(i)));
  return UPoly(f_, r);
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * lead().inv();
}

Scalar UPoly::evaluate(const Scalar& x) const {
  Scalar r = Scalar::zero(join_fields(f_, x.field()));
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

UPoly UPoly::map_to(const Field& f) const {
  if (f == f_) return *this;
  std::vector<Scalar> r;
  for (const auto& x : c_) r.push_back(x.map_to(f));
  return UPoly(f, r);
}

UPoly gcd(const UPoly& a0, const UPoly& b0) {
  UPoly a = a0, b = b0;
  while (!b.is_zero()) {
    UPoly r = a % b;
    a = b;
    b = r;
  }
  return a.monic();
}

namespace {

bool is_one(const UPoly& u) { return u.degree() == 0 && u.lead().is_one(); }

// p-th root of a polynomial whose exponents are all divisible by p.
UPoly pth_root(const UPoly& c) {
  std::uint64_t p = c.field().characteristic();
  std::vector<Scalar> r;
  for (int i = 0; i <= c.degree(); i += static_cast<int>(p)) {
    Scalar a = c.coeff(i);
    // Frobenius is the identity on F_p and conjugation on F_{p^2}.
    r.push_back(c.field().is_extension() ? a.conj() : a);
  }
  return UPoly(c.field(), r);
}

void sff(const UPoly& f, int scale, std::map<int, UPoly>& out) {
  UPoly c = gcd(f, f.derivative());
  UPoly w = f / c;
  int i = 1;
  while (!is_one(w) && w.degree() > 0) {
    UPoly y = gcd(w, c);
    UPoly fac = w / y;
    if (fac.degree() > 0) {
      auto it = out.find(i * scale);
      if (it == out.end())
        out.emplace(i * scale, fac.monic());
      else
        it->second = (it->second * fac).monic();
    }
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    std::uint64_t p = f.field().characteristic();
    if (p == 0) throw DomainError("squarefree decomposition did not terminate");
    sff(pth_root(c.monic()), scale * static_cast<int>(p), out);
  }
}

}  // namespace

std::map<int, UPoly> squarefree_decomposition(const UPoly& f) {
  if (f.is_zero()) throw DomainError("squarefree decomposition of zero");
  std::map<int, UPoly> out;
  if (f.degree() == 0) return out;
  sff(f.monic(), 1, out);
  return out;
}

// ---------------------------------------------------------------- BinaryForm

BinaryForm::BinaryForm(const Field& f, int degree) : f_(f), c_(degree + 1, Scalar::zero(f)) {}

BinaryForm::BinaryForm(const Field& f, std::vector<Scalar> c) : f_(f), c_(std::move(c)) {
  for (auto& x : c_) f_ = join_fields(f_, x.field());
  for (auto& x : c_) x = x.map_to(f_);
}

BinaryForm BinaryForm::from_poly(const HomogPoly& p) {
  if (p.nvars() != 2) throw DomainError("binary form needs exactly two variables");
  int d = p.degree();
  BinaryForm b(p.field(), d);
  for (const auto& [e, c] : p.terms()) b.c_[e[1]] = c;
  return b;
}

BinaryForm BinaryForm::homogenize(const UPoly& u, int degree) {
  if (u.degree() > degree) throw DomainError("homogenize: degree too small");
  BinaryForm b(u.field(), degree);
  for (int i = 0; i <= degree; ++i) b.c_[i] = u.coeff(degree - i);
  return b;
}

bool BinaryForm::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
  if (degree() != o.degree()) {
    if (o.is_zero()) return *this;
    if (is_zero()) return o;
    throw DomainError("binary form degree mismatch");
  }
  Field f = join_fields(f_, o.f_);
  BinaryForm r(f, degree());
  for (int i = 0; i <= degree(); ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const { return *this + o * Scalar::from_int(o.f_, -1); }

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
  Field f = join_fields(f_, o.f_);
  BinaryForm r(f, degree() + o.degree());
  for (int i = 0; i <= degree(); ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; j <= o.degree(); ++j) r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
  }
  return r;
}

BinaryForm BinaryForm::operator*(const Scalar& s) const {
  Field f = join_fields(f_, s.field());
  BinaryForm r(f, degree());
  for (int i = 0; i <= degree(); ++i) r.c_[i] = c_[i] * s;
  return r;
}

Scalar BinaryForm::evaluate(const Scalar& s, const Scalar& t) const {
  Field f = join_fields(join_fields(f_, s.field()), t.field());
  int d = degree();
  Scalar r = Scalar::zero(f);
  for (int i = 0; i <= d; ++i) r = r + c_[i] * s.pow(d - i) * t.pow(i);
  return r;
}

UPoly BinaryForm::dehomogenize() const {
  int d = degree();
  std::vector<Scalar> u(d + 1, Scalar::zero(f_));
  for (int i = 0; i <= d; ++i) u[d - i] = c_[i];
  return UPoly(f_, u);
}

int BinaryForm::multiplicity_at_infinity() const {
  for (int i = 0; i <= degree(); ++i)
    if (!c_[i].is_zero()) return i;
  return degree() + 1;
}

HomogPoly BinaryForm::to_poly(const VarList& vars) const {
  HomogPoly p(f_, vars, degree());
  for (int i = 0; i <= degree(); ++i) {
    Exponent e{};
    e[0] = static_cast<std::uint8_t>(degree() - i);
    e[1] = static_cast<std::uint8_t>(i);
    p.add_term(e, c_[i]);
  }
  return p;
}

BinaryForm BinaryForm::map_to(const Field& f) const {
  BinaryForm r(f, degree());
  for (int i = 0; i <= degree(); ++i) r.c_[i] = c_[i].map_to(f);
  return r;
}

std::optional<Scalar> BinaryForm::ratio_to(const BinaryForm& o) const {
  if (degree() != o.degree()) return std::nullopt;
  if (o.is_zero()) return is_zero() ? std::optional<Scalar>(Scalar::one(f_)) : std::nullopt;
  int k = 0;
  while (o.c_[k].is_zero()) ++k;
  Scalar lambda = c_[k] / o.c_[k];
  for (int i = 0; i <= degree(); ++i)
    if (!(c_[i] == lambda * o.c_[i])) return std::nullopt;
  return lambda;
}

BinaryForm gcd(const BinaryForm& a, const BinaryForm& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  UPoly g = gcd(a.dehomogenize(), b.dehomogenize());
  int m = std::min(a.multiplicity_at_infinity(), b.multiplicity_at_infinity());
  return BinaryForm::homogenize(g, g.degree() + m);
}

std::map<int, int> squarefree_signature(const BinaryForm& g) {
  if (g.is_zero()) throw DomainError("squarefree signature of the zero form");
  std::map<int, int> sig;
  for (const auto& [m, fac] : squarefree_decomposition(g.dehomogenize())) sig[m] += fac.degree();
  int mi = g.multiplicity_at_infinity();
  if (mi > 0) sig[mi] += 1;
  return sig;
}

PerfectSquare is_perfect_square(const BinaryForm& g) {
  PerfectSquare res;
  Field f = g.field();
  if (g.is_zero()) {
    res.found = true;
    res.root = BinaryForm(f, g.degree() / 2);
    res.c = Scalar::one(f);
    res.c_is_square = true;
    return res;
  }
  int d = g.degree();
  if (d % 2) return res;
  int mi = g.multiplicity_at_infinity();
  if (mi % 2) return res;
  UPoly u = g.dehomogenize();
  if (u.degree() % 2) return res;
  Scalar lc = u.lead();
  UPoly mon = u.monic();
  int k = u.degree() / 2;
  std::vector<Scalar> r(k + 1, Scalar::zero(f));
  r[k] = Scalar::one(f);
  Scalar half = Scalar::from_int(f, 2).inv();
  for (int j = k - 1; j >= 0; --j) {
    Scalar s = mon.coeff(k + j);
    for (int a = j + 1; a < k; ++a) {
      int b = k + j - a;
      if (b > j && b < k) s = s - r[a] * r[b];
    }
    r[j] = s * half;
  }
  UPoly ru(f, r);
  if (!(ru * ru == mon)) return res;
  BinaryForm h = BinaryForm::homogenize(ru, d / 2);
  res.found = true;
  if (auto sq = lc.sqrt()) {
    res.root = h * *sq;
    res.c = Scalar::one(f);
    res.c_is_square = true;
    return res;
  }
  res.root = h;
  res.c = lc.inv();
  res.c_is_square = false;
  if (!f.is_extension()) {
    Field ext = Field::quad_ext(f, lc);
    res.ext_root = h.map_to(ext) * Scalar::sqrt_d(ext);
  }
  return res;
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  if (n == 0) return {};
  if (n > mpz_class("1000000000000")) throw DomainError("rational root search: coefficient too large");
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

int multiplicity_of(UPoly u, const Scalar& x) {
  int m = 0;
  Field f = u.field();
  UPoly lin(f, {-x, Scalar::one(f)});
  while (!u.is_zero() && u.evaluate(x).is_zero()) {
    u = u / lin;
    ++m;
  }
  return m;
}

}  // namespace

std::vector<BinaryRoot> roots(const BinaryForm& g) {
  if (g.is_zero()) throw DomainError("roots of the zero form");
  Field f = g.field();
  std::vector<BinaryRoot> out;
  int mi = g.multiplicity_at_infinity();
  if (mi > 0) out.push_back({Scalar::one(f), Scalar::zero(f), mi});
  UPoly u = g.dehomogenize();
  if (u.degree() <= 0) return out;
  if (f.is_finite()) {
    for (const auto& x : field_elements(f))
      if (u.evaluate(x).is_zero()) out.push_back({x, Scalar::one(f), multiplicity_of(u, x)});
    return out;
  }
  if (f.is_extension()) throw DomainError("root search over an extension of Q unsupported");
  // rational root theorem on the primitive integer polynomial
  mpz_class den = 1;
  for (const auto& c : u.coeffs()) den = lcm(den, c.rational().get_den());
  std::vector<mpz_class> ic;
  for (const auto& c : u.coeffs()) ic.push_back(mpz_class(c.rational() * den));
  std::size_t low = 0;
  while (ic[low] == 0) ++low;
  if (low > 0) out.push_back({Scalar::zero(f), Scalar::one(f), static_cast<int>(low)});
  std::vector<mpz_class> ps = divisors(ic[low]), qs = divisors(ic.back());
  std::vector<mpq_class> seen;
  for (const auto& p : ps)
    for (const auto& q : qs)
      for (int sign : {1, -1}) {
        mpq_class cand(sign * p, q);
        cand.canonicalize();
        bool dup = false;
        for (const auto& s : seen) dup = dup || s == cand;
        if (dup) continue;
        seen.push_back(cand);
        Scalar x = Scalar::from_rational(f, cand);
        if (u.evaluate(x).is_zero()) out.push_back({x, Scalar::one(f), multiplicity_of(u, x)});
      }
  return out;
}

BinaryForm resultant_last_var(const HomogPoly& f, const HomogPoly& g) {
  if (f.nvars() != 3 || g.nvars() != 3) throw DomainError("resultant_last_var expects ternary forms");
  Field fld = join_fields(f.field(), g.field());
  VarList v2 = {f.vars()[0], f.vars()[1]};
  int m = f.degree(), n = g.degree();
  auto coeffs = [&](const HomogPoly& h) {
    int d = h.degree();
    std::vector<HomogPoly> c;
    for (int k = 0; k <= d; ++k) c.emplace_back(fld, v2, d - k);
    for (const auto& [e, a] : h.terms()) {
      Exponent e2{};
      e2[0] = e[0];
      e2[1] = e[1];
      c[e[2]].add_term(e2, a);
    }
    return c;  // c[k] multiplies w^k
  };
  auto fc = coeffs(f), gc = coeffs(g);
  int N = m + n;
  HomogPoly zero_entry(fld, v2, 0);
  PolyMatrix S(N, N, zero_entry);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) S(r, r + k) = fc[m - k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) S(n + r, r + k) = gc[n - k];
  HomogPoly det = det_leibniz(S, HomogPoly(fld, v2, m * n));
  if (det.is_zero()) return BinaryForm(fld, m * n);
  return BinaryForm::from_poly(det);
}

}  // namespace prymsym
