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
#ifndef PRYMSYM_GEOMETRY_HPP
#define PRYMSYM_GEOMETRY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "prymsym/binary_form.hpp"
#include "prymsym/matrix.hpp"

namespace prymsym {

using Vec = std::vector<Scalar>;

// sqrt(a) in a's field, or in a quadratic extension of it when a is a
// nonsquare of a prime field or of Q. Throws DomainError past one extension.
std::pair<Field, Scalar> sqrt_in_tower(const Scalar& a);

std::vector<Vec> kernel_basis(const ScalarMatrix& m, const Field& f);
// Basis of the hyperplane {x : sum l_i x_i = 0}.
std::vector<Vec> hyperplane_basis(const Vec& l);

// Linear forms x_i = sum_k basis[k][i] * w_k in the variables w.
std::vector<HomogPoly> subspace_images(const std::vector<Vec>& basis, const VarList& w);
HomogPoly restrict_form(const HomogPoly& f, const std::vector<Vec>& basis, const VarList& w);

Vec linear_coeffs(const HomogPoly& l);
// f(s P + t R) as a binary form.
BinaryForm restrict_to_line(const HomogPoly& f, const Vec& P, const Vec& R);
Vec evaluate_all(const std::vector<HomogPoly>& fs, const Vec& pt);

// A symmetric matrix of rank <= 2 written as a product of two linear forms
// l1 * l2 (coefficient vectors). `field` may be a quadratic extension.
struct LinePair {
  Field field;
  Vec l1, l2;
  bool double_line = false;  // rank one: l1 == l2
};
LinePair split_rank_two(const ScalarSym& m);

// A point on a plane conic (3x3 symmetric), over its field or a quadratic
// extension; exhaustive over finite fields, small-height search then a line
// section over Q.
std::optional<Vec> conic_point(const ScalarSym& conic);
// Degree-2 parametrization z(s,t) of a smooth conic through the point P.
std::vector<BinaryForm> conic_parametrization(const ScalarSym& conic, const Vec& P);

// Coordinates moving `center` to (0:0:1): columns e_a, e_b, center.
ScalarMatrix center_frame(const Vec& center);
// Substitute w = T w' into a ternary form.
HomogPoly change_coordinates(const HomogPoly& f, const ScalarMatrix& T);

// Deterministic list of projection centers in P^2.
std::vector<Vec> projection_centers(const Field& f);

// Exact smoothness of a plane curve via pairwise resultants of the partials
// over several projections. Finite fields also look for a witness point.
struct PlaneSmoothness {
  bool smooth = false;
  std::optional<Vec> witness;
  std::string method;
};
PlaneSmoothness plane_curve_smoothness(const HomogPoly& f);

}  // namespace prymsym

#endif
