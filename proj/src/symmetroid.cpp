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
#include "prymsym/symmetroid.hpp"

#include <algorithm>

namespace prymsym {

namespace {

const std::array<std::pair<int, int>, 6> kEntries = {{{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}, {1, 2}}};

Exponent unit(int i) {
  Exponent e{};
  e[i] = 1;
  return e;
}

VarList zvars() { return make_vars("z", 3); }

}  // namespace

std::string to_string(SymmetroidType t) {
  switch (t) {
    case SymmetroidType::T1: return "T1";
    case SymmetroidType::T2: return "T2";
    case SymmetroidType::T3: return "T3";
    case SymmetroidType::T4: return "T4";
    case SymmetroidType::T5: return "T5";
    case SymmetroidType::T6: return "T6";
    case SymmetroidType::T7: return "T7";
    case SymmetroidType::T8: return "T8";
    case SymmetroidType::DegenerateCone: return "DegenerateCone";
    case SymmetroidType::DegenerateSingular: return "DegenerateSingular";
    case SymmetroidType::ReducibleUnclassified: return "ReducibleUnclassified";
  }
  return "?";
}

std::optional<SymmetroidType> symmetroid_type_from_string(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(SymmetroidType::ReducibleUnclassified); ++i) {
    auto t = static_cast<SymmetroidType>(i);
    if (to_string(t) == s) return t;
  }
  return std::nullopt;
}

Symmetrization Symmetrization::from_matrix(const PolySym& m) {
  if (m.n() != 3) throw InputError("symmetrization must be a 3x3 matrix");
  Symmetrization s;
  s.f_ = m.at(0, 0).field();
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      const HomogPoly& e = m.at(i, j);
      if (e.nvars() != 4) throw InputError("symmetrization entries must be forms in four variables");
      if (!e.is_zero() && e.degree() != 1) throw InputError("symmetrization entries must be linear");
      if (e.vars() != m.at(0, 0).vars()) throw InputError("symmetrization entries use different variables");
      s.f_ = join_fields(s.f_, e.field());
    }
  VarList vars = m.at(0, 0).vars();
  s.m_ = PolySym(3, HomogPoly(s.f_, vars, 1));
  for (int k = 0; k < 4; ++k) s.q_[k] = ScalarSym(3, Scalar::zero(s.f_));
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      HomogPoly e = m.at(i, j).is_zero() ? HomogPoly(s.f_, vars, 1) : m.at(i, j).map_to(s.f_);
      s.m_.at(i, j) = e;
      for (int k = 0; k < 4; ++k) s.q_[k].at(i, j) = e.coeff(unit(k));
    }
  return s;
}

Symmetrization Symmetrization::from_qmats(const Field& f, const std::array<ScalarSym, 4>& q, const VarList& vars) {
  PolySym m(3, HomogPoly(f, vars, 1));
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      Vec c;
      for (int k = 0; k < 4; ++k) c.push_back(q[k].at(i, j).map_to(f));
      m.at(i, j) = HomogPoly::linear(f, vars, c);
    }
  return from_matrix(m);
}

ScalarSym Symmetrization::at(const Vec& x) const {
  Field f = f_;
  for (const auto& v : x) f = join_fields(f, v.field());
  ScalarSym out(3, Scalar::zero(f));
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      Scalar s = Scalar::zero(f);
      for (int k = 0; k < 4; ++k) s = s + x[k] * q_[k].at(i, j);
      out.at(i, j) = s;
    }
  return out;
}

Symmetrization Symmetrization::map_to(const Field& f) const {
  PolySym m(3, m_.at(0, 0).map_to(f));
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) m.at(i, j) = m_.at(i, j).map_to(f);
  return from_matrix(m);
}

HomogPoly gamma_cubic(const Symmetrization& a) {
  return det_leibniz(a.matrix().dense(), HomogPoly(a.field(), a.vars(), 3));
}

ScalarMatrix contraction_matrix(const Symmetrization& a) {
  ScalarMatrix m(6, 4, Scalar::zero(a.field()));
  for (int e = 0; e < 6; ++e)
    for (int k = 0; k < 4; ++k) m(e, k) = a.qmats()[k].at(kEntries[e].first, kEntries[e].second);
  return m;
}

std::vector<Vec> contraction_kernel(const Symmetrization& a) { return kernel_basis(contraction_matrix(a), a.field()); }

std::vector<HomogPoly> q_map(const Symmetrization& a) {
  std::vector<HomogPoly> out;
  for (const auto& q : a.qmats()) out.push_back(quadratic_form(q, zvars()));
  return out;
}

PolyMatrix contraction_rows(const Symmetrization& a) {
  PolyMatrix b(3, 4, HomogPoly(a.field(), zvars(), 1));
  for (int r = 0; r < 3; ++r)
    for (int k = 0; k < 4; ++k) {
      Vec c;
      for (int s = 0; s < 3; ++s) c.push_back(a.qmats()[k].at(r, s));
      b(r, k) = HomogPoly::linear(a.field(), zvars(), c);
    }
  return b;
}

AdjugateMap adjugate_map(const Symmetrization& a) {
  PolyMatrix b = contraction_rows(a);
  AdjugateMap out;
  HomogPoly zero(a.field(), zvars(), 3);
  for (int i = 0; i < 4; ++i) {
    std::vector<int> cols;
    for (int k = 0; k < 4; ++k)
      if (k != i) cols.push_back(k);
    HomogPoly d = det_leibniz(b.submatrix({0, 1, 2}, cols), zero);
    out.c.push_back(i % 2 ? -d : d);
  }
  out.degenerate = std::all_of(out.c.begin(), out.c.end(), [](const HomogPoly& p) { return p.is_zero(); });
  return out;
}

bool annihilation_holds(const Symmetrization& a, const AdjugateMap& c) {
  PolyMatrix b = contraction_rows(a);
  for (int r = 0; r < 3; ++r) {
    HomogPoly s(a.field(), zvars(), 4);
    for (int k = 0; k < 4; ++k) s += b(r, k) * c.c[k];
    if (!s.is_zero()) return false;
  }
  return true;
}

bool gauss_identity_holds(const Symmetrization& a, const AdjugateMap& c) {
  if (c.degenerate) return false;
  auto grad = gamma_cubic(a).gradient();
  std::vector<HomogPoly> g;
  for (const auto& d : grad) g.push_back(d.substitute(c.c));
  auto q = q_map(a);
  bool nonzero = false;
  for (int i = 0; i < 4; ++i) {
    nonzero = nonzero || !g[i].is_zero();
    for (int j = i + 1; j < 4; ++j)
      if (!(g[i] * q[j] - g[j] * q[i]).is_zero()) return false;
  }
  return nonzero;
}

RankOneScheme rank_one_scheme(const Symmetrization& a) {
  ScalarMatrix r = contraction_matrix(a).transpose();
  auto phis = kernel_basis(r, a.field());
  if (phis.size() != 2) throw DomainError("rank-one scheme needs a non-degenerate symmetrization");
  VarList w = make_vars("w", 3);
  RankOneScheme out;
  for (const auto& phi : phis) {
    HomogPoly g(a.field(), w, 2);
    for (int e = 0; e < 6; ++e) {
      Exponent ex{};
      ex[kEntries[e].first] += 1;
      ex[kEntries[e].second] += 1;
      if (!phi[e].is_zero()) g.add_term(ex, phi[e]);
    }
    out.conics.push_back(g);
  }
  // true when the scheme is positive-dimensional
  auto try_center = [&](const HomogPoly& g0, const HomogPoly& g1, const Vec& c) {
    if (g0.evaluate(c).is_zero() && g1.evaluate(c).is_zero()) return false;
    ScalarMatrix t = center_frame(c);
    BinaryForm res = resultant_last_var(change_coordinates(g0, t), change_coordinates(g1, t));
    if (res.is_zero()) {
      out.positive_dimensional = true;
      out.partition.clear();
      out.resultant = res;
      return true;
    }
    std::vector<int> part;
    for (const auto& [m, deg] : squarefree_signature(res))
      for (int k = 0; k < deg; ++k) part.push_back(m);
    std::sort(part.rbegin(), part.rend());
    if (part.size() > out.partition.size()) {
      out.partition = part;
      out.resultant = res;
    }
    return false;
  };
  for (const auto& c : projection_centers(a.field())) {
    if (try_center(out.conics[0], out.conics[1], c)) return out;
    if (out.partition.size() == 4) return out;
  }
  // over tiny fields every rational center may be collinear with two points
  const Field& f = a.field();
  if (f.is_finite() && !f.is_extension() && f.size() <= 13) {
    Field e = Field::canonical_extension(f);
    HomogPoly g0 = out.conics[0].map_to(e), g1 = out.conics[1].map_to(e);
    std::vector<Scalar> el;
    for (const auto& x : field_elements(e))
      if (!x.im().is_zero()) el.push_back(x);
    int budget = 64;
    for (std::size_t i = 0; i < el.size() && out.partition.size() < 4 && budget > 0; ++i)
      for (std::size_t j = i + 1; j < el.size() && out.partition.size() < 4 && budget > 0; j += 3, --budget)
        if (try_center(g0, g1, {Scalar::one(e), el[i], el[j]})) return out;
  }
  if (!out.resultant) throw DomainError("no usable projection center for the rank-one scheme");
  return out;
}

namespace {

bool divides(const HomogPoly& g, const Vec& l) {
  return g.divide_exact(HomogPoly::linear(g.field(), g.vars(), l)).has_value();
}

}  // namespace

std::optional<Vec> find_plane_factor(const HomogPoly& gamma) {
  const Field& f = gamma.field();
  if (gamma.is_zero()) return std::nullopt;
  static const int P[6][4] = {{1, 2, -1, 3}, {2, -1, 1, 1}, {1, 1, 3, -2}, {3, 1, -2, 1}, {1, -3, 2, 2}, {2, 3, 1, -1}};
  static const int Q[6][4] = {{0, 1, 1, -1}, {1, 0, -2, 1}, {-1, 2, 0, 1}, {1, 1, 1, 4}, {2, -1, 3, 0}, {1, -2, -1, 3}};
  std::vector<std::vector<Vec>> hits;  // points of gamma on each usable line
  for (int i = 0; i < 6; ++i) {
    Vec p, q;
    for (int k = 0; k < 4; ++k) {
      p.push_back(Scalar::from_int(f, P[i][k]));
      q.push_back(Scalar::from_int(f, Q[i][k]));
    }
    if (proportional(p, q)) continue;
    BinaryForm b = restrict_to_line(gamma, p, q);
    if (b.is_zero()) continue;
    std::vector<Vec> pts;
    for (const auto& r : roots(b)) {
      Vec x;
      for (int k = 0; k < 4; ++k) x.push_back(r.s * p[k] + r.t * q[k]);
      pts.push_back(x);
    }
    hits.push_back(pts);
  }
  std::vector<Vec> tried;
  for (std::size_t i = 0; i < hits.size(); ++i)
    for (std::size_t j = i + 1; j < hits.size(); ++j)
      for (std::size_t k = j + 1; k < hits.size(); ++k)
        for (const auto& a : hits[i])
          for (const auto& b : hits[j])
            for (const auto& c : hits[k]) {
              ScalarMatrix m(3, 4, Scalar::zero(f));
              for (int col = 0; col < 4; ++col) {
                m(0, col) = a[col];
                m(1, col) = b[col];
                m(2, col) = c[col];
              }
              auto ker = kernel_basis(m, f);
              if (ker.size() != 1) continue;
              Vec l = normalize_projective(ker[0]);
              if (std::find(tried.begin(), tried.end(), l) != tried.end()) continue;
              tried.push_back(l);
              if (divides(gamma, l)) return l;
            }
  // tiny fields: the fixed lines may all be special, so search every plane
  if (f.is_finite() && f.size() <= 13) {
    auto el = field_elements(f);
    Scalar one = Scalar::one(f), zero = Scalar::zero(f);
    std::vector<Vec> planes = {{zero, zero, zero, one}};
    for (const auto& c : el) planes.push_back({zero, zero, one, c});
    for (const auto& b : el)
      for (const auto& c : el) planes.push_back({zero, one, b, c});
    for (const auto& a : el)
      for (const auto& b : el)
        for (const auto& c : el) planes.push_back({one, a, b, c});
    for (const auto& l : planes)
      if (divides(gamma, l)) return l;
  }
  return std::nullopt;
}

Classification classify(const Symmetrization& a) {
  Classification out;
  auto ker = contraction_kernel(a);
  HomogPoly gamma = gamma_cubic(a);
  if (ker.size() >= 2 || gamma.is_zero()) {
    out.type = SymmetroidType::DegenerateSingular;
    out.notes.push_back(gamma.is_zero() ? "determinant vanishes identically"
                                        : "contraction kernel of dimension " + std::to_string(ker.size()));
    return out;
  }
  if (ker.size() == 1) {
    PlaneCubicWithSym e = degenerate_project(a);
    PlaneSmoothness sm = plane_curve_smoothness(e.cubic);
    out.type = sm.smooth ? SymmetroidType::DegenerateCone : SymmetroidType::DegenerateSingular;
    out.notes.push_back(std::string("cone over a plane cubic, ") + (sm.smooth ? "smooth" : "singular") + " (" +
                        sm.method + ")");
    return out;
  }
  RankOneScheme rs = rank_one_scheme(a);
  out.partition = rs.partition;
  try {
    out.plane = find_plane_factor(gamma);
  } catch (const DomainError& e) {
    out.notes.push_back(std::string("plane factor search unavailable: ") + e.what());
    const auto& p = rs.partition;
    out.type = rs.positive_dimensional || p.size() < 2 ? SymmetroidType::ReducibleUnclassified
               : p.size() == 4                         ? SymmetroidType::T1
               : p.size() == 3                         ? SymmetroidType::T2
               : p[0] == 3                             ? SymmetroidType::T3
                                                       : SymmetroidType::T4;
    return out;
  }
  auto unclassified = [&](const std::string& why) {
    out.type = SymmetroidType::ReducibleUnclassified;
    out.notes.push_back(why);
    return out;
  };
  if (!rs.positive_dimensional) {
    const auto& p = rs.partition;
    if (p.size() >= 2) {
      if (out.plane) return unclassified("rank-one scheme of an irreducible type but the determinant has a plane factor");
      out.type = p.size() == 4 ? SymmetroidType::T1
                 : p.size() == 3 ? SymmetroidType::T2
                 : p[0] == 3     ? SymmetroidType::T3
                                 : SymmetroidType::T4;
      return out;
    }
    if (!out.plane) {
      out.type = SymmetroidType::T5;
      return out;
    }
    HomogPoly q2 = *gamma.divide_exact(HomogPoly::linear(a.field(), a.vars(), *out.plane));
    ScalarSym qm = form_matrix(q2);
    if (rank(qm.dense()) != 4) return unclassified("plane factor with a singular residual quadric");
    HomogPoly sec = restrict_form(q2, hyperplane_basis(*out.plane), make_vars("w", 3));
    if (rank(form_matrix(sec).dense()) > 2) return unclassified("plane factor not tangent to the residual quadric");
    out.type = SymmetroidType::T6;
    return out;
  }
  if (!out.plane) return unclassified("positive-dimensional rank-one scheme without a plane factor");
  HomogPoly l = HomogPoly::linear(a.field(), a.vars(), *out.plane);
  HomogPoly q2 = *gamma.divide_exact(l);
  int r = rank(form_matrix(q2).dense());
  if (auto m = q2.divide_exact(l)) {
    if (m->proportional(l)) return unclassified("triple plane");
    out.type = SymmetroidType::T8;
    return out;
  }
  if (r == 1) {
    out.type = SymmetroidType::T8;
    return out;
  }
  if (r == 3) {
    Vec v = kernel_basis(form_matrix(q2).dense(), a.field()).at(0);
    if (!l.evaluate(v).is_zero()) {
      out.type = SymmetroidType::T7;
      return out;
    }
    return unclassified("plane through the vertex of the quadric cone");
  }
  return unclassified("residual quadric of rank " + std::to_string(r));
}

Symmetrization hankel_symmetroid(const Vec& quartic) {
  if (quartic.size() != 5 || quartic[4].is_zero()) throw InputError("hankel_symmetroid needs a quartic a0..a4 with a4 != 0");
  Field f = quartic[0].field();
  for (const auto& c : quartic) f = join_fields(f, c.field());
  VarList x = make_vars("x", 4);
  std::vector<HomogPoly> u;
  for (int i = 0; i < 4; ++i) u.push_back(HomogPoly::variable(f, x, i));
  Vec c;
  for (int i = 0; i < 4; ++i) c.push_back(-quartic[i] / quartic[4]);
  u.push_back(HomogPoly::linear(f, x, c));
  PolySym m(3, HomogPoly(f, x, 1));
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) m.at(i, j) = u[i + j];
  return Symmetrization::from_matrix(m);
}

HomogPoly cayley_normal_form(const UPoly& f, const std::array<Vec, 4>& h) {
  if (f.degree() != 4) throw InputError("cayley_normal_form needs a quartic");
  const Field& fld = f.field();
  if (gcd(f, f.derivative()).degree() > 0) throw DomainError("quartic is not separable");
  UPoly fm = f.monic();
  VarList x = make_vars("x", 4);
  bool nonzero = false;
  for (const auto& hj : h)
    for (const auto& c : hj) nonzero = nonzero || !c.is_zero();
  if (!nonzero) throw DomainError("h is zero");
  // column k of Mult(h_j) holds h_j * t^k mod f
  PolyMatrix m(4, 4, HomogPoly(fld, x, 1));
  std::array<ScalarMatrix, 4> mult;
  for (int j = 0; j < 4; ++j) {
    mult[j] = ScalarMatrix(4, 4, Scalar::zero(fld));
    UPoly hj(fld, h[j]);
    for (int k = 0; k < 4; ++k) {
      UPoly col = (hj * UPoly::monomial(fld, k, Scalar::one(fld))) % fm;
      for (int a = 0; a < 4; ++a) mult[j](a, k) = col.coeff(a);
    }
  }
  for (int a = 0; a < 4; ++a)
    for (int k = 0; k < 4; ++k) {
      Vec c;
      for (int j = 0; j < 4; ++j) c.push_back(mult[j](a, k));
      m(a, k) = HomogPoly::linear(fld, x, c);
    }
  HomogPoly tr(fld, x, 3);
  for (int skip = 0; skip < 4; ++skip) {
    std::vector<int> idx;
    for (int k = 0; k < 4; ++k)
      if (k != skip) idx.push_back(k);
    tr += det_leibniz(m.submatrix(idx, idx), HomogPoly(fld, x, 3));
  }
  return tr;
}

PlaneCubicWithSym degenerate_project(const Symmetrization& a) {
  auto ker = contraction_kernel(a);
  if (ker.size() != 1)
    throw DomainError("degenerate_project needs a one-dimensional contraction kernel, found " + std::to_string(ker.size()));
  PlaneCubicWithSym out;
  out.kernel = ker[0];
  int r = 3;
  while (out.kernel[r].is_zero()) --r;
  out.dropped = r;
  const Field& f = a.field();
  VarList w = make_vars("w", 3);
  std::vector<int> kept;
  for (int j = 0; j < 4; ++j)
    if (j != r) kept.push_back(j);
  for (int j : kept) {
    Vec c(4, Scalar::zero(f));
    c[j] = Scalar::one(f);
    c[r] = -out.kernel[j] / out.kernel[r];
    out.projection.push_back(HomogPoly::linear(f, a.vars(), c));
  }
  out.sym = PolySym(3, HomogPoly(f, w, 1));
  for (int i = 0; i < 3; ++i)
    for (int k = i; k < 3; ++k) {
      Vec c;
      for (int j : kept) c.push_back(a.qmats()[j].at(i, k));
      out.sym.at(i, k) = HomogPoly::linear(f, w, c);
    }
  out.cubic = det_leibniz(out.sym.dense(), HomogPoly(f, w, 3));
  return out;
}

DoubleCoverMinors double_cover_minors(const Symmetrization& a) {
  const PolySym& m = a.matrix();
  auto e = [&](int i, int j) { return m.at(i - 1, j - 1); };
  DoubleCoverMinors out;
  out.m12 = e(1, 2) * e(1, 2) - e(1, 1) * e(2, 2);
  out.m13 = e(1, 3) * e(1, 3) - e(1, 1) * e(3, 3);
  out.m23 = e(2, 3) * e(2, 3) - e(2, 2) * e(3, 3);
  HomogPoly lhs = (e(1, 1) * e(2, 2) - e(1, 2) * e(1, 2)) * (e(2, 2) * e(3, 3) - e(2, 3) * e(2, 3)) -
                  (e(1, 2) * e(2, 3) - e(1, 3) * e(2, 2)).pow(2);
  out.relation_holds = lhs == e(2, 2) * gamma_cubic(a);
  return out;
}

Vec prym_canonical_point(const Symmetrization& a, const Vec& p) {
  ScalarSym m = a.at(p);
  ScalarMatrix d = m.dense();
  int rk = rank(d);
  if (rk == 3) throw DomainError("point is not on the symmetroid");
  if (rk < 2) throw DomainError("conic has rank " + std::to_string(rk) + " (singular point of the symmetroid)");
  return normalize_projective(kernel_basis(d, m.at(0, 0).field()).at(0));
}

}  // namespace prymsym
