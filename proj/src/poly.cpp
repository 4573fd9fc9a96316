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
#include "prymsym/poly.hpp"

#include <cctype>
#include <sstream>

namespace prymsym {

VarList make_vars(const std::string& stem, int n) {
  VarList v;
  for (int i = 0; i < n; ++i) v.push_back(stem + std::to_string(i));
  return v;
}

namespace {

int exp_degree(const Exponent& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

Exponent add_exp(const Exponent& a, const Exponent& b) {
  Exponent r{};
  for (int i = 0; i < kMaxVars; ++i) {
    int s = a[i] + b[i];
    if (s > 255) throw DomainError("exponent overflow");
    r[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

void accumulate(TermMap& m, const Exponent& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = m.find(e);
  if (it == m.end()) {
    m.emplace(e, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) m.erase(it);
}

std::shared_ptr<const VarList> share(VarList v) {
  if (static_cast<int>(v.size()) > kMaxVars) throw InputError("too many variables");
  return std::make_shared<const VarList>(std::move(v));
}

}  // namespace

HomogPoly::HomogPoly() : vars_(share({})) {}

HomogPoly::HomogPoly(const Field& f, VarList vars, int degree) : f_(f), vars_(share(std::move(vars))), deg_(degree) {
  if (degree < 0) throw DomainError("negative degree");
}

HomogPoly HomogPoly::constant(const Field& f, VarList vars, const Scalar& c) {
  HomogPoly p(f, std::move(vars), 0);
  p.add_term(Exponent{}, c.map_to(f));
  return p;
}

HomogPoly HomogPoly::variable(const Field& f, VarList vars, int i) {
  HomogPoly p(f, std::move(vars), 1);
  Exponent e{};
  e[i] = 1;
  p.add_term(e, Scalar::one(f));
  return p;
}

HomogPoly HomogPoly::linear(const Field& f, VarList vars, const std::vector<Scalar>& coeffs) {
  HomogPoly p(f, std::move(vars), 1);
  if (static_cast<int>(coeffs.size()) != p.nvars()) throw DomainError("linear form: wrong number of coefficients");
  for (int i = 0; i < p.nvars(); ++i) {
    Exponent e{};
    e[i] = 1;
    p.add_term(e, coeffs[i].map_to(f));
  }
  return p;
}

HomogPoly HomogPoly::monomial(const Field& f, VarList vars, const Exponent& e, const Scalar& c) {
  HomogPoly p(f, std::move(vars), exp_degree(e));
  p.add_term(e, c.map_to(f));
  return p;
}

HomogPoly HomogPoly::from_terms(const Field& f, VarList vars, const TermMap& terms, int degree_if_zero) {
  int deg = degree_if_zero;
  bool first = true;
  for (const auto& [e, c] : terms) {
    if (c.is_zero()) continue;
    int d = exp_degree(e);
    if (first) {
      deg = d;
      first = false;
    } else if (d != deg) {
      throw InputError("polynomial is not homogeneous");
    }
  }
  HomogPoly p(f, std::move(vars), deg);
  for (const auto& [e, c] : terms) {
    for (int i = p.nvars(); i < kMaxVars; ++i)
      if (e[i]) throw InputError("exponent for undeclared variable");
    p.add_term(e, c.map_to(f));
  }
  return p;
}

void HomogPoly::add_term(const Exponent& e, const Scalar& c) {
  if (exp_degree(e) != deg_) throw DomainError("term degree does not match polynomial degree");
  Field f = join_fields(f_, c.field());
  if (f != f_) *this = map_to(f);
  accumulate(terms_, e, c.map_to(f_));
}

Scalar HomogPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar::zero(f_) : it->second;
}

void HomogPoly::check_compatible(const HomogPoly& o, const char* op) const {
  if (vars_ != o.vars_ && *vars_ != *o.vars_)
    throw DomainError(std::string(op) + ": variable sets differ");
}

HomogPoly HomogPoly::operator+(const HomogPoly& o) const {
  check_compatible(o, "add");
  if (o.is_zero() && o.deg_ != deg_ && !is_zero()) return *this;
  if (is_zero() && o.deg_ != deg_) return o;
  if (deg_ != o.deg_ && !o.is_zero()) throw DomainError("add: degree mismatch");
  HomogPoly r = *this;
  r.f_ = join_fields(f_, o.f_);
  if (r.f_ != f_) r = map_to(r.f_);
  for (const auto& [e, c] : o.terms_) accumulate(r.terms_, e, c);
  return r;
}

HomogPoly HomogPoly::operator-() const {
  HomogPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

HomogPoly HomogPoly::operator-(const HomogPoly& o) const { return *this + (-o); }

HomogPoly HomogPoly::operator*(const HomogPoly& o) const {
  check_compatible(o, "mul");
  HomogPoly r(join_fields(f_, o.f_), *vars_, deg_ + o.deg_);
  r.vars_ = vars_;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) accumulate(r.terms_, add_exp(e1, e2), c1 * c2);
  return r;
}

HomogPoly HomogPoly::operator*(const Scalar& c) const {
  Field f = join_fields(f_, c.field());
  HomogPoly r(f, *vars_, deg_);
  r.vars_ = vars_;
  if (c.is_zero()) return r;
  for (const auto& [e, a] : terms_) r.terms_.emplace(e, a * c);
  return r;
}

HomogPoly operator*(const Scalar& c, const HomogPoly& p) { return p * c; }

HomogPoly HomogPoly::pow(int n) const {
  if (n < 0) throw DomainError("negative power");
  HomogPoly r = constant(f_, *vars_, Scalar::one(f_));
  r.vars_ = vars_;
  HomogPoly b = *this;
  while (n) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

HomogPoly HomogPoly::substitute(const std::vector<HomogPoly>& images) const {
  if (static_cast<int>(images.size()) != nvars()) throw DomainError("substitute: need one image per variable");
  if (images.empty()) return *this;
  int e = images[0].degree();
  Field f = f_;
  for (const auto& im : images) {
    if (im.degree() != e && !im.is_zero()) throw DomainError("substitute: images of different degrees");
    images[0].check_compatible(im, "substitute");
    f = join_fields(f, im.field());
  }
  VarList out_vars = images[0].vars();
  HomogPoly result(f, out_vars, deg_ * e);
  result.vars_ = images[0].vars_;
  // cache powers of each image
  std::vector<std::vector<HomogPoly>> powers(images.size());
  auto power = [&](std::size_t i, int k) -> const HomogPoly& {
    auto& pw = powers[i];
    if (pw.empty()) {
      HomogPoly one = constant(f, out_vars, Scalar::one(f));
      one.vars_ = images[0].vars_;
      pw.push_back(one);
    }
    while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * images[i]);
    return pw[k];
  };
  for (const auto& [ex, c] : terms_) {
    HomogPoly t = constant(f, out_vars, c);
    t.vars_ = images[0].vars_;
    for (int i = 0; i < nvars(); ++i)
      if (ex[i]) t = t * power(i, ex[i]);
    result = result + t;
  }
  return result;
}

HomogPoly HomogPoly::derivative(int i) const {
  HomogPoly r(f_, *vars_, deg_ > 0 ? deg_ - 1 : 0);
  r.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    if (!e[i]) continue;
    Exponent e2 = e;
    e2[i] -= 1;
    accumulate(r.terms_, e2, c * Scalar::from_int(f_, e[i]));
  }
  return r;
}

std::vector<HomogPoly> HomogPoly::gradient() const {
  std::vector<HomogPoly> g;
  for (int i = 0; i < nvars(); ++i) g.push_back(derivative(i));
  return g;
}

Scalar HomogPoly::evaluate(const std::vector<Scalar>& pt) const {
  if (static_cast<int>(pt.size()) != nvars()) throw DomainError("evaluate: wrong point dimension");
  Field f = f_;
  for (const auto& x : pt) f = join_fields(f, x.field());
  std::vector<std::vector<Scalar>> pw(pt.size());
  for (std::size_t i = 0; i < pt.size(); ++i) {
    pw[i].push_back(Scalar::one(f));
    for (int k = 1; k <= deg_; ++k) pw[i].push_back(pw[i].back() * pt[i]);
  }
  Scalar s = Scalar::zero(f);
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (int i = 0; i < nvars(); ++i)
      if (e[i]) t = t * pw[i][e[i]];
    s = s + t;
  }
  return s;
}

std::optional<Scalar> HomogPoly::ratio_to(const HomogPoly& other) const {
  if (other.is_zero()) {
    if (is_zero()) return Scalar::one(f_);
    return std::nullopt;
  }
  if (is_zero()) return Scalar::zero(join_fields(f_, other.f_));
  if (terms_.size() != other.terms_.size() || deg_ != other.deg_) return std::nullopt;
  auto it = terms_.begin();
  auto jt = other.terms_.begin();
  Scalar lambda = it->second / jt->second;
  for (; it != terms_.end(); ++it, ++jt) {
    if (it->first != jt->first) return std::nullopt;
    if (!(it->second == lambda * jt->second)) return std::nullopt;
  }
  return lambda;
}

std::optional<HomogPoly> HomogPoly::divide_exact(const HomogPoly& g) const {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  check_compatible(g, "divide");
  if (is_zero()) {
    HomogPoly q(join_fields(f_, g.f_), *vars_, deg_ >= g.deg_ ? deg_ - g.deg_ : 0);
    return q;
  }
  if (g.deg_ > deg_) return std::nullopt;
  Field f = join_fields(f_, g.f_);
  HomogPoly q(f, *vars_, deg_ - g.deg_);
  q.vars_ = vars_;
  HomogPoly r = map_to(f);
  const auto& [ge, gc] = *g.terms_.begin();
  while (!r.is_zero()) {
    const auto& [re, rc] = *r.terms_.begin();
    Exponent qe{};
    for (int i = 0; i < kMaxVars; ++i) {
      if (re[i] < ge[i]) return std::nullopt;
      qe[i] = static_cast<std::uint8_t>(re[i] - ge[i]);
    }
    HomogPoly t = monomial(f, *vars_, qe, rc / gc);
    t.vars_ = vars_;
    q = q + t;
    r = r - t * g;
  }
  return q;
}

HomogPoly HomogPoly::rename(VarList vars) const {
  if (static_cast<int>(vars.size()) != nvars()) throw DomainError("rename: wrong variable count");
  HomogPoly r = *this;
  r.vars_ = share(std::move(vars));
  return r;
}

HomogPoly HomogPoly::map_to(const Field& target) const {
  if (target == f_) return *this;
  HomogPoly r(target, *vars_, deg_);
  r.vars_ = vars_;
  for (const auto& [e, c] : terms_) accumulate(r.terms_, e, c.map_to(target));
  return r;
}

HomogPoly HomogPoly::embed(VarList vars, const std::vector<int>& idx) const {
  HomogPoly r(f_, std::move(vars), deg_);
  for (const auto& [e, c] : terms_) {
    Exponent e2{};
    for (int i = 0; i < nvars(); ++i) e2[idx[i]] = static_cast<std::uint8_t>(e2[idx[i]] + e[i]);
    accumulate(r.terms_, e2, c);
  }
  return r;
}

bool HomogPoly::operator==(const HomogPoly& o) const {
  if (*vars_ != *o.vars_) return false;
  if (is_zero() && o.is_zero()) return true;
  if (deg_ != o.deg_ || terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [e, c] : terms_) {
    if (e != it->first || !(c == it->second)) return false;
    ++it;
  }
  return true;
}

std::string HomogPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (int i = 0; i < nvars(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += (*vars_)[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string cs = c.to_string();
    bool neg = false;
    if (f_.characteristic() == 0 && !f_.is_extension() && sgn(c.rational()) < 0) {
      neg = true;
      cs = (-c).to_string();
    }
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (mono.empty())
      os << cs;
    else if (cs == "1")
      os << mono;
    else
      os << cs << "*" << mono;
  }
  return os.str();
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  Parser(std::string_view s, const Field& f, const VarList& vars) : s_(s), f_(f), vars_(vars) {}

  TermMap parse() {
    TermMap r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  const Field& f_;
  const VarList& vars_;

  [[noreturn]] void fail(const std::string& msg) {
    throw InputError("polynomial parse error at offset " + std::to_string(pos_) + ": " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static TermMap add(TermMap a, const TermMap& b, bool negate) {
    for (const auto& [e, c] : b) accumulate(a, e, negate ? -c : c);
    return a;
  }
  static TermMap mul(const TermMap& a, const TermMap& b) {
    TermMap r;
    for (const auto& [e1, c1] : a)
      for (const auto& [e2, c2] : b) accumulate(r, add_exp(e1, e2), c1 * c2);
    return r;
  }
  TermMap constant(const Scalar& c) {
    TermMap r;
    accumulate(r, Exponent{}, c);
    return r;
  }

  TermMap expr() {
    TermMap r = term();
    while (true) {
      if (eat('+'))
        r = add(r, term(), false);
      else if (eat('-'))
        r = add(r, term(), true);
      else
        return r;
    }
  }
  TermMap term() {
    TermMap r = unary();
    while (true) {
      if (eat('*')) {
        r = mul(r, unary());
      } else if (eat('/')) {
        TermMap d = unary();
        if (d.size() != 1 || d.begin()->first != Exponent{}) fail("division by a non-constant");
        r = mul(r, constant(d.begin()->second.inv()));
      } else {
        return r;
      }
    }
  }
  TermMap unary() {
    if (eat('-')) {
      TermMap r = unary();
      for (auto& [e, c] : r) c = -c;
      return r;
    }
    if (eat('+')) return unary();
    return power();
  }
  TermMap power() {
    TermMap base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int n = std::stoi(std::string(s_.substr(start, pos_ - start)));
      TermMap r = constant(Scalar::one(f_));
      for (int i = 0; i < n; ++i) r = mul(r, base);
      return r;
    }
    return base;
  }
  TermMap atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      TermMap r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpq_class v(mpz_class(std::string(s_.substr(start, pos_ - start))));
      return constant(Scalar::from_rational(f_, v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) {
          Exponent e{};
          e[i] = 1;
          TermMap r;
          accumulate(r, e, Scalar::one(f_));
          return r;
        }
      }
      if (name == "sqrtd" && f_.is_extension()) return constant(Scalar::sqrt_d(f_));
      fail("unknown variable '" + name + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }
};

}  // namespace

TermMap parse_terms(std::string_view text, const Field& f, const VarList& vars) {
  if (static_cast<int>(vars.size()) > kMaxVars) throw InputError("too many variables");
  return Parser(text, f, vars).parse();
}

HomogPoly parse_poly(std::string_view text, const Field& f, const VarList& vars) {
  return HomogPoly::from_terms(f, vars, parse_terms(text, f, vars));
}

}  // namespace prymsym
