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
#ifndef PRYMSYM_SYMMETROID_HPP
#define PRYMSYM_SYMMETROID_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "prymsym/binary_form.hpp"
#include "prymsym/geometry.hpp"
#include "prymsym/matrix.hpp"

namespace prymsym {

enum class SymmetroidType { T1, T2, T3, T4, T5, T6, T7, T8, DegenerateCone, DegenerateSingular, ReducibleUnclassified };

std::string to_string(SymmetroidType t);
std::optional<SymmetroidType> symmetroid_type_from_string(const std::string& s);

// A 3x3 symmetric matrix of linear forms in four variables, stored together
// with the four constant matrices q_i (the coefficient of x_i).
class Symmetrization {
 public:
  Symmetrization() = default;
  // Throws InputError unless 3x3 with linear entries in exactly four variables.
  static Symmetrization from_matrix(const PolySym& m);
  static Symmetrization from_qmats(const Field& f, const std::array<ScalarSym, 4>& q,
                                   const VarList& vars = make_vars("x", 4));

  const Field& field() const { return f_; }
  const VarList& vars() const { return m_.at(0, 0).vars(); }
  const PolySym& matrix() const { return m_; }
  const std::array<ScalarSym, 4>& qmats() const { return q_; }
  // The scalar conic matrix sum x_i q_i at a point of P^3.
  ScalarSym at(const Vec& x) const;
  Symmetrization map_to(const Field& f) const;

 private:
  Field f_;
  PolySym m_;
  std::array<ScalarSym, 4> q_;
};

HomogPoly gamma_cubic(const Symmetrization& a);

// 6x4 matrix: column i lists the entries (00,11,22,01,02,12) of q_i.
ScalarMatrix contraction_matrix(const Symmetrization& a);
std::vector<Vec> contraction_kernel(const Symmetrization& a);

// Conics z q_i z^T in z0,z1,z2.
std::vector<HomogPoly> q_map(const Symmetrization& a);

// B(z): row a, column i holds (q_i z)_a.
PolyMatrix contraction_rows(const Symmetrization& a);
struct AdjugateMap {
  std::vector<HomogPoly> c;  // four cubics in z
  bool degenerate = false;   // every minor vanishes identically
};
AdjugateMap adjugate_map(const Symmetrization& a);
bool annihilation_holds(const Symmetrization& a, const AdjugateMap& c);
// grad(Gamma) o c and the q-vector are proportional rows.
bool gauss_identity_holds(const Symmetrization& a, const AdjugateMap& c);

struct RankOneScheme {
  std::vector<HomogPoly> conics;  // in w0,w1,w2
  std::optional<BinaryForm> resultant;
  std::vector<int> partition;  // descending multiplicities, empty when positive-dimensional
  bool positive_dimensional = false;
};
RankOneScheme rank_one_scheme(const Symmetrization& a);

struct Classification {
  SymmetroidType type = SymmetroidType::ReducibleUnclassified;
  std::vector<int> partition;
  std::optional<Vec> plane;  // linear factor of Gamma, when one was found
  std::vector<std::string> notes;
};
Classification classify(const Symmetrization& a);

// A linear factor of a cubic surface over its own field, if one exists.
std::optional<Vec> find_plane_factor(const HomogPoly& gamma);

// Hankel matrix [[u0,u1,u2],[u1,u2,u3],[u2,u3,u4]] on the hyperplane
// a0 u0 + a1 u1 + a2 u2 + a3 u3 + u4 = 0; coeffs are a0..a4 of the quartic.
Symmetrization hankel_symmetroid(const Vec& quartic);

// trace(adj(sum x_j Mult(h_j))) over R = k[t]/f. h holds four elements of R,
// each as a coefficient vector in 1, t, t^2, t^3.
HomogPoly cayley_normal_form(const UPoly& f, const std::array<Vec, 4>& h);

struct PlaneCubicWithSym {
  Vec kernel;                           // generator of the contraction kernel
  int dropped = 0;                      // coordinate eliminated
  std::vector<HomogPoly> projection;    // w_j as linear forms in x
  HomogPoly cubic;                      // E in w0,w1,w2
  PolySym sym;                          // det(sym) == cubic
};
PlaneCubicWithSym degenerate_project(const Symmetrization& a);

struct DoubleCoverMinors {
  HomogPoly m12, m13, m23;
  bool relation_holds = false;
};
DoubleCoverMinors double_cover_minors(const Symmetrization& a);

// Kernel of the rank-two conic A(p), normalized projectively.
Vec prym_canonical_point(const Symmetrization& a, const Vec& p);

}  // namespace prymsym

#endif
