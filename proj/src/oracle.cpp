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
#include "prymsym/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>

namespace prymsym::oracle {

namespace {

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t ipow(std::uint64_t q, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r *= q;
  return r;
}

void check_budget(std::uint64_t n, const Options& opt, const std::string& what) {
  if (n > opt.budget)
    throw BudgetExceeded(what + " visits " + std::to_string(n) + " points, budget is " + std::to_string(opt.budget));
}

const Field& common_field(const std::vector<HomogPoly>& eqs) {
  if (eqs.empty()) throw InputError("no equations");
  for (const auto& e : eqs) {
    if (e.field() != eqs[0].field()) throw InputError("equations over different fields");
    if (e.nvars() != eqs[0].nvars()) throw InputError("equations in different ambient spaces");
  }
  if (!eqs[0].field().is_finite()) throw DomainError("point enumeration needs a finite field");
  return eqs[0].field();
}

std::uint64_t encode_point(const Fq& fq, int dim, const Fq::E* x) {
  std::uint64_t q = fq.q(), off = 0;
  int lead = 0;
  while (x[lead].zero()) off += ipow(q, dim - lead++);
  std::uint64_t i = 0;
  for (int k = lead + 1; k <= dim; ++k) i = i * q + fq.index(x[k]);
  return off + i;
}

Vec to_vec(const Fq& fq, const Fq::E* x, int n) {
  Vec v;
  for (int i = 0; i < n; ++i) v.push_back(fq.to_scalar(x[i]));
  return v;
}

// The first equation of degree two, when the ambient space is P^3 and there
// are two equations: points are then found fiberwise over P^2.
int fiber_quadric(const std::vector<HomogPoly>& eqs) {
  if (eqs.size() != 2 || eqs[0].nvars() != 4) return -1;
  for (int i = 0; i < 2; ++i)
    if (eqs[i].degree() == 2) return i;
  return -1;
}

template <class Visit>
void for_each_fiber_point(const Fq& fq, const HomogPoly& quadric, Visit&& visit) {
  ScalarSym m = form_matrix(quadric);
  Fq::E M[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) M[i][j] = fq.from_scalar(m.at(i, j));
  Fq::E two = fq.add(fq.one(), fq.one());
  Fq::E four = fq.add(two, two);
  std::uint64_t n2 = projective_size(fq.q(), 2);
  const Fq::E A = M[3][3];
#pragma omp parallel for schedule(dynamic, 64)
  for (std::uint64_t i = 0; i <= n2; ++i) {
    Fq::E pt[4];
    if (i == n2) {  // (0:0:0:1)
      pt[0] = pt[1] = pt[2] = Fq::E{};
      pt[3] = fq.one();
      if (A.zero()) visit(pt);
      continue;
    }
    decode_point(fq, 2, i, pt);
    Fq::E B{}, C{};
    for (int a = 0; a < 3; ++a) {
      B = fq.add(B, fq.mul(M[a][3], pt[a]));
      for (int b = 0; b < 3; ++b) C = fq.add(C, fq.mul(M[a][b], fq.mul(pt[a], pt[b])));
    }
    B = fq.mul(B, two);
    if (!A.zero()) {
      Fq::E disc = fq.sub(fq.mul(B, B), fq.mul(four, fq.mul(A, C)));
      auto r = fq.sqrt(disc);
      if (!r) continue;
      Fq::E inv2a = fq.inv(fq.mul(two, A));
      pt[3] = fq.mul(fq.sub(*r, B), inv2a);
      visit(pt);
      if (!r->zero()) {
        pt[3] = fq.mul(fq.sub(fq.neg(*r), B), inv2a);
        visit(pt);
      }
    } else if (!B.zero()) {
      pt[3] = fq.neg(fq.mul(C, fq.inv(B)));
      visit(pt);
    } else if (C.zero()) {
      for (std::uint64_t t = 0; t < fq.q(); ++t) {
        pt[3] = fq.elem(t);
        visit(pt);
      }
    }
  }
}

// Calls visit(pt) for every F_q point of V(eqs); visit must be thread safe.
template <class Visit>
void for_each_point(const Fq& fq, const std::vector<HomogPoly>& eqs, const Options& opt, Visit&& visit) {
  int n = eqs[0].nvars();
  std::vector<CompiledPoly> cp;
  for (const auto& e : eqs) cp.emplace_back(fq, e);
  int fq_idx = fiber_quadric(eqs);
  if (fq_idx >= 0) {
    check_budget(projective_size(fq.q(), 2) + 1, opt, "fibered enumeration");
    const CompiledPoly& other = cp[1 - fq_idx];
    for_each_fiber_point(fq, eqs[fq_idx], [&](const Fq::E* pt) {
      if (other.eval(fq, pt).zero()) visit(pt);
    });
    return;
  }
  std::uint64_t total = projective_size(fq.q(), n - 1);
  check_budget(total, opt, "enumeration of P^" + std::to_string(n - 1));
#pragma omp parallel for schedule(dynamic, 256)
  for (std::uint64_t i = 0; i < total; ++i) {
    Fq::E pt[kMaxVars];
    decode_point(fq, n - 1, i, pt);
    bool on = true;
    for (const auto& c : cp)
      if (!c.eval(fq, pt).zero()) {
        on = false;
        break;
      }
    if (on) visit(pt);
  }
}

std::vector<std::uint64_t> collect_indices(const Fq& fq, const std::vector<HomogPoly>& eqs, const Options& opt) {
  int dim = eqs[0].nvars() - 1;
  std::vector<std::uint64_t> idx;
  for_each_point(fq, eqs, opt, [&](const Fq::E* pt) {
    std::uint64_t k = encode_point(fq, dim, pt);
#pragma omp critical(prymsym_collect)
    idx.push_back(k);
  });
  std::sort(idx.begin(), idx.end());
  return idx;
}

// rank of the Jacobian rows at a point is below the number of rows
template <class Row>
bool jacobian_deficient(const std::vector<Row>& rows, int n, const std::function<bool(std::size_t, int)>& is_zero_entry,
                        const std::function<bool(std::size_t, std::size_t, int, int)>& minor_zero) {
  (void)rows;
  if (rows.size() == 1) {
    for (int k = 0; k < n; ++k)
      if (!is_zero_entry(0, k)) return false;
    return true;
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!minor_zero(0, 1, a, b)) return false;
  return true;
}

}  // namespace

// ------------------------------------------------------------------- Fq

Fq::Fq(const Field& f) : f_(f) {
  if (!f.is_finite()) throw DomainError("Fq needs a finite field");
  p_ = f.characteristic();
  ext_ = f.is_extension();
  q_ = ext_ ? p_ * p_ : p_;
  if (q_ > (1ull << 26)) throw InputError("field too large for the enumeration oracle");
  if (ext_) d_ = f.ext_d().residue();
  leg_.assign(p_, -1);
  leg_[0] = 0;
  for (std::uint64_t x = 1; x < p_; ++x) leg_[x * x % p_] = 1;
  root_.assign(q_, -1);
  for (std::uint64_t i = 0; i < q_; ++i) {
    E x = elem(i);
    std::uint64_t s = index(mul(x, x));
    if (root_[s] < 0) root_[s] = static_cast<std::int64_t>(i);
  }
}

std::uint64_t Fq::norm(E x) const {
  std::uint64_t aa = static_cast<std::uint64_t>(x.a) * x.a % p_;
  std::uint64_t bb = static_cast<std::uint64_t>(x.b) * x.b % p_ * d_ % p_;
  return (aa + p_ - bb) % p_;
}

Fq::E Fq::inv(E x) const {
  if (x.zero()) throw DomainError("division by zero in the oracle field");
  if (!ext_) return {static_cast<std::uint32_t>(powmod(x.a, p_ - 2, p_)), 0};
  std::uint64_t ni = powmod(norm(x), p_ - 2, p_);
  return {static_cast<std::uint32_t>(x.a * ni % p_), static_cast<std::uint32_t>((p_ - x.b) % p_ * ni % p_)};
}

int Fq::chi(E x) const { return ext_ ? leg_[norm(x)] : leg_[x.a]; }

std::optional<Fq::E> Fq::sqrt(E x) const {
  std::int64_t r = root_[index(x)];
  if (r < 0) return std::nullopt;
  return elem(static_cast<std::uint64_t>(r));
}

Fq::E Fq::from_scalar(const Scalar& s) const {
  Scalar t = s.map_to(f_);
  if (!ext_) return {static_cast<std::uint32_t>(t.residue()), 0};
  return {static_cast<std::uint32_t>(t.re().residue()), static_cast<std::uint32_t>(t.im().residue())};
}

Scalar Fq::to_scalar(E x) const {
  if (!ext_) return Scalar::from_int(f_, static_cast<long>(x.a));
  Field b = f_.base();
  return Scalar::from_pair(f_, Scalar::from_int(b, static_cast<long>(x.a)), Scalar::from_int(b, static_cast<long>(x.b)));
}

CompiledPoly::CompiledPoly(const Fq& fq, const HomogPoly& f) : nvars_(f.nvars()), deg_(f.degree()) {
  for (const auto& [e, c] : f.terms()) terms_.emplace_back(fq.from_scalar(c), e);
}

Fq::E CompiledPoly::eval(const Fq& fq, const Fq::E* x) const {
  Fq::E pw[kMaxVars][17];
  int maxd = std::min(deg_, 16);
  for (int v = 0; v < nvars_; ++v) {
    pw[v][0] = fq.one();
    for (int k = 1; k <= maxd; ++k) pw[v][k] = fq.mul(pw[v][k - 1], x[v]);
  }
  Fq::E s{};
  for (const auto& [c, e] : terms_) {
    Fq::E t = c;
    for (int v = 0; v < nvars_; ++v)
      if (e[v]) t = fq.mul(t, pw[v][e[v]]);
    s = fq.add(s, t);
  }
  return s;
}

// ------------------------------------------------------------ enumeration

std::uint64_t projective_size(std::uint64_t q, int dim) {
  std::uint64_t s = 0;
  for (int k = 0; k <= dim; ++k) s += ipow(q, k);
  return s;
}

void decode_point(const Fq& fq, int dim, std::uint64_t i, Fq::E* out) {
  std::uint64_t q = fq.q();
  for (int lead = 0; lead <= dim; ++lead) {
    std::uint64_t block = ipow(q, dim - lead);
    if (i >= block) {
      i -= block;
      out[lead] = Fq::E{};
      continue;
    }
    out[lead] = fq.one();
    for (int k = dim; k > lead; --k) {
      out[k] = fq.elem(i % q);
      i /= q;
    }
    return;
  }
}

std::vector<Vec> enumerate_points(const Field& f, int dim, const Options& opt) {
  Fq fq(f);
  std::uint64_t n = projective_size(fq.q(), dim);
  check_budget(n, opt, "enumeration of P^" + std::to_string(dim));
  auto el = field_elements(f);
  std::vector<Vec> out;
  out.reserve(n);
  Scalar zero = Scalar::zero(f), one = Scalar::one(f);
  for (int lead = 0; lead <= dim; ++lead) {
    Vec v(dim + 1, zero);
    v[lead] = one;
    std::vector<std::size_t> digit(dim + 1, 0);
    while (true) {
      out.push_back(v);
      int k = dim;
      while (k > lead && digit[k] + 1 == el.size()) {
        digit[k] = 0;
        v[k] = el[0];
        --k;
      }
      if (k == lead) break;
      v[k] = el[++digit[k]];
    }
  }
  return out;
}

std::vector<Vec> variety_points_serial(const std::vector<HomogPoly>& eqs, const Options& opt) {
  const Field& f = common_field(eqs);
  std::vector<Vec> out;
  for (const auto& pt : enumerate_points(f, eqs[0].nvars() - 1, opt)) {
    bool on = true;
    for (const auto& e : eqs) on = on && e.evaluate(pt).is_zero();
    if (on) out.push_back(pt);
  }
  return out;
}

std::vector<Vec> variety_points(const std::vector<HomogPoly>& eqs, const Options& opt) {
  Fq fq(common_field(eqs));
  int dim = eqs[0].nvars() - 1;
  std::vector<Vec> out;
  Fq::E pt[kMaxVars];
  for (std::uint64_t k : collect_indices(fq, eqs, opt)) {
    decode_point(fq, dim, k, pt);
    out.push_back(to_vec(fq, pt, dim + 1));
  }
  return out;
}

std::uint64_t count_points_serial(const std::vector<HomogPoly>& eqs, const Options& opt) {
  return variety_points_serial(eqs, opt).size();
}

std::uint64_t count_points(const std::vector<HomogPoly>& eqs, const Options& opt) {
  Fq fq(common_field(eqs));
  std::uint64_t count = 0;
  for_each_point(fq, eqs, opt, [&](const Fq::E*) {
#pragma omp atomic
    ++count;
  });
  return count;
}

// ------------------------------------------------------------- smoothness

SmoothnessReport smoothness_certificate_serial(const std::vector<HomogPoly>& eqs, const Options& opt) {
  if (eqs.size() > 2) throw InputError("smoothness certificate supports one or two equations");
  std::vector<std::vector<HomogPoly>> grads;
  for (const auto& e : eqs) grads.push_back(e.gradient());
  int n = eqs[0].nvars();
  SmoothnessReport rep;
  for (const auto& pt : variety_points_serial(eqs, opt)) {
    ++rep.points;
    std::vector<Vec> rows;
    for (const auto& g : grads) rows.push_back(evaluate_all(g, pt));
    bool bad = jacobian_deficient(
        rows, n, [&](std::size_t r, int k) { return rows[r][k].is_zero(); },
        [&](std::size_t r, std::size_t s, int a, int b) {
          return (rows[r][a] * rows[s][b] - rows[r][b] * rows[s][a]).is_zero();
        });
    if (bad && rep.smooth) {
      rep.smooth = false;
      rep.witness = pt;
    }
  }
  return rep;
}

SmoothnessReport smoothness_certificate(const std::vector<HomogPoly>& eqs, const Options& opt) {
  if (eqs.size() > 2) throw InputError("smoothness certificate supports one or two equations");
  Fq fq(common_field(eqs));
  int n = eqs[0].nvars();
  std::vector<std::vector<CompiledPoly>> grads;
  for (const auto& e : eqs) {
    std::vector<CompiledPoly> g;
    for (const auto& d : e.gradient()) g.emplace_back(fq, d);
    grads.push_back(g);
  }
  auto idx = collect_indices(fq, eqs, opt);
  SmoothnessReport rep;
  rep.points = idx.size();
  std::uint64_t first_bad = UINT64_MAX;
#pragma omp parallel for schedule(dynamic, 64) reduction(min : first_bad)
  for (std::size_t i = 0; i < idx.size(); ++i) {
    Fq::E pt[kMaxVars];
    decode_point(fq, n - 1, idx[i], pt);
    std::vector<std::vector<Fq::E>> rows;
    for (const auto& g : grads) {
      std::vector<Fq::E> r;
      for (const auto& d : g) r.push_back(d.eval(fq, pt));
      rows.push_back(r);
    }
    bool bad = jacobian_deficient(
        rows, n, [&](std::size_t r, int k) { return rows[r][k].zero(); },
        [&](std::size_t r, std::size_t s, int a, int b) {
          return fq.sub(fq.mul(rows[r][a], rows[s][b]), fq.mul(rows[r][b], rows[s][a])).zero();
        });
    if (bad) first_bad = std::min<std::uint64_t>(first_bad, idx[i]);
  }
  if (first_bad != UINT64_MAX) {
    rep.smooth = false;
    Fq::E pt[kMaxVars];
    decode_point(fq, n - 1, first_bad, pt);
    rep.witness = to_vec(fq, pt, n);
  }
  return rep;
}

// --------------------------------------------------------------- counting

CountReport make_report(std::uint64_t q, const std::string& curve, std::uint64_t points, int genus) {
  CountReport r;
  r.q = q;
  r.curve = curve;
  r.points = points;
  r.genus = genus;
  r.trace = static_cast<long long>(q) + 1 - static_cast<long long>(points);
  r.weil_ok = static_cast<double>(r.trace) * r.trace <= 4.0 * genus * genus * static_cast<double>(q) + 1e-9;
  return r;
}

CountReport count_curve(const std::vector<HomogPoly>& eqs, int genus, const std::string& id, const Options& opt) {
  return make_report(common_field(eqs).size(), id, count_points(eqs, opt), genus);
}

CoverReport count_double_cover_serial(const HomogPoly& Q, const HomogPoly& Gamma, const std::array<HomogPoly, 3>& minors,
                                      const Options& opt) {
  CoverReport rep;
  std::uint64_t n = 0;
  for (const auto& pt : variety_points_serial({Q, Gamma}, opt)) {
    std::vector<Scalar> vals;
    for (const auto& m : minors) {
      Scalar v = m.evaluate(pt);
      if (!v.is_zero()) vals.push_back(v);
    }
    if (vals.empty()) throw DomainError("all three minors vanish at a point of C (a rank-one point)");
    bool sq = vals[0].is_square();
    n += sq ? 2 : 0;
    for (std::size_t k = 1; k < vals.size(); ++k) {
      ++rep.checked_pairs;
      if (vals[k].is_square() != sq) ++rep.conflicts;
    }
  }
  rep.report = make_report(Q.field().size(), "double cover", n, 7);
  return rep;
}

CoverReport count_double_cover(const HomogPoly& Q, const HomogPoly& Gamma, const std::array<HomogPoly, 3>& minors,
                               const Options& opt) {
  Fq fq(common_field({Q, Gamma, minors[0], minors[1], minors[2]}));
  std::vector<CompiledPoly> cm;
  for (const auto& m : minors) cm.emplace_back(fq, m);
  std::uint64_t n = 0, pairs = 0, conflicts = 0, rank_one = 0;
  for_each_point(fq, {Q, Gamma}, opt, [&](const Fq::E* pt) {
    int chis[3], k = 0;
    for (const auto& m : cm) {
      int c = fq.chi(m.eval(fq, pt));
      if (c != 0) chis[k++] = c;
    }
    std::uint64_t add = 0, pr = 0, cf = 0, r1 = 0;
    if (k == 0) {
      r1 = 1;
    } else {
      add = chis[0] > 0 ? 2 : 0;
      for (int j = 1; j < k; ++j) {
        ++pr;
        cf += chis[j] != chis[0];
      }
    }
#pragma omp atomic
    n += add;
#pragma omp atomic
    pairs += pr;
#pragma omp atomic
    conflicts += cf;
#pragma omp atomic
    rank_one += r1;
  });
  if (rank_one) throw DomainError("all three minors vanish at a point of C (a rank-one point)");
  CoverReport rep;
  rep.report = make_report(fq.q(), "double cover", n, 7);
  rep.checked_pairs = pairs;
  rep.conflicts = conflicts;
  return rep;
}

CountReport count_cover_of_conic(const HomogPoly& conic, const HomogPoly& h, const Scalar& c, int genus,
                                 const std::string& id, const Options& opt) {
  if (h.degree() % 2) throw DomainError("branch form must have even degree");
  Fq fq(common_field({conic, h}));
  CompiledPoly ch(fq, h);
  Fq::E cc = fq.from_scalar(c);
  std::uint64_t n = 0;
  for_each_point(fq, {conic}, opt, [&](const Fq::E* pt) {
    std::uint64_t add = static_cast<std::uint64_t>(1 + fq.chi(fq.mul(cc, ch.eval(fq, pt))));
#pragma omp atomic
    n += add;
  });
  return make_report(fq.q(), id, n, genus);
}

CountReport count_binary_cover(const BinaryForm& h, const std::string& id) {
  if (h.degree() % 2) throw DomainError("branch form must have even degree");
  Fq fq(h.field());
  std::uint64_t n = 0;
  Scalar zero = Scalar::zero(h.field()), one = Scalar::one(h.field());
  n += 1 + fq.chi(fq.from_scalar(h.evaluate(one, zero)));
  for (const auto& t : field_elements(h.field())) n += 1 + fq.chi(fq.from_scalar(h.evaluate(t, one)));
  return make_report(fq.q(), id, n, h.degree() / 2 - 1);
}

// -------------------------------------------------------------- bitangents

std::pair<Vec, Vec> line_points(const Vec& line) {
  auto b = hyperplane_basis(line);
  return {b.at(0), b.at(1)};
}

std::vector<Vec> enumerate_bitangents_serial(const HomogPoly& quartic, const Options& opt) {
  if (quartic.nvars() != 3 || quartic.degree() != 4) throw InputError("bitangents need a plane quartic");
  VarList st = {"s", "t"};
  std::vector<Vec> out;
  for (const auto& line : enumerate_points(quartic.field(), 2, opt)) {
    auto [P, R] = line_points(line);
    std::vector<HomogPoly> imgs;
    for (int i = 0; i < 3; ++i) imgs.push_back(HomogPoly::linear(quartic.field(), st, {P[i], R[i]}));
    HomogPoly g = quartic.substitute(imgs);
    if (g.is_zero()) continue;
    bool even = true;
    for (const auto& [m, deg] : squarefree_signature(BinaryForm::from_poly(g))) even = even && m % 2 == 0;
    if (even) out.push_back(line);
  }
  return out;
}

namespace {

// c[i] multiplies s^(4-i) t^i; true when c is a nonzero square up to scalar
bool quartic_even(const Fq& fq, const Fq::E* c) {
  int k = 0;
  while (k < 5 && c[k].zero()) ++k;
  if (k == 5 || k % 2) return false;
  if (k == 4) return true;
  Fq::E two = fq.add(fq.one(), fq.one()), four = fq.add(two, two);
  if (k == 2) return fq.sub(fq.mul(c[3], c[3]), fq.mul(four, fq.mul(c[2], c[4]))).zero();
  Fq::E i0 = fq.inv(c[0]);
  Fq::E alpha = fq.mul(c[1], fq.inv(fq.mul(two, c[0])));
  Fq::E beta = fq.mul(fq.sub(fq.mul(c[2], i0), fq.mul(alpha, alpha)), fq.inv(two));
  return fq.mul(c[3], i0) == fq.mul(two, fq.mul(alpha, beta)) && fq.mul(c[4], i0) == fq.mul(beta, beta);
}

}  // namespace

std::vector<Vec> enumerate_bitangents(const HomogPoly& quartic, const Options& opt) {
  if (quartic.nvars() != 3 || quartic.degree() != 4) throw InputError("bitangents need a plane quartic");
  Fq fq(quartic.field());
  std::uint64_t nl = projective_size(fq.q(), 2);
  check_budget(nl, opt, "line enumeration");
  std::vector<std::pair<Fq::E, Exponent>> terms;
  for (const auto& [e, c] : quartic.terms()) terms.emplace_back(fq.from_scalar(c), e);
  std::vector<std::uint64_t> hits;
#pragma omp parallel for schedule(dynamic, 64)
  for (std::uint64_t i = 0; i < nl; ++i) {
    Fq::E l[3];
    decode_point(fq, 2, i, l);
    // two points on the line: kernel of (l0 l1 l2) with l normalized
    Fq::E P[3], R[3];
    int lead = 0;
    while (l[lead].zero()) ++lead;
    int o1 = (lead + 1) % 3, o2 = (lead + 2) % 3;
    if (o1 > o2) std::swap(o1, o2);
    P[lead] = fq.neg(l[o1]);
    P[o1] = fq.one();
    P[o2] = Fq::E{};
    R[lead] = fq.neg(l[o2]);
    R[o1] = Fq::E{};
    R[o2] = fq.one();
    Fq::E c[5] = {};
    for (const auto& [coef, e] : terms) {
      // product of (P_v s + R_v t)^e_v as a binary form
      Fq::E acc[5] = {coef};
      int deg = 0;
      for (int v = 0; v < 3; ++v)
        for (int r = 0; r < e[v]; ++r) {
          Fq::E nxt[5] = {};
          for (int j = 0; j <= deg; ++j) {
            nxt[j] = fq.add(nxt[j], fq.mul(acc[j], P[v]));
            nxt[j + 1] = fq.add(nxt[j + 1], fq.mul(acc[j], R[v]));
          }
          ++deg;
          std::copy(nxt, nxt + 5, acc);
        }
      for (int j = 0; j < 5; ++j) c[j] = fq.add(c[j], acc[j]);
    }
    if (quartic_even(fq, c)) {
#pragma omp critical(prymsym_bitangents)
      hits.push_back(i);
    }
  }
  std::sort(hits.begin(), hits.end());
  std::vector<Vec> out;
  for (auto i : hits) {
    Fq::E l[3];
    decode_point(fq, 2, i, l);
    out.push_back(to_vec(fq, l, 3));
  }
  return out;
}

}  // namespace prymsym::oracle
