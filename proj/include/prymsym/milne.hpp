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
#ifndef PRYMSYM_MILNE_HPP
#define PRYMSYM_MILNE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "prymsym/prym.hpp"

namespace prymsym {

// A line of P^2 with the parametrization z(s, t) = s P + t R.
struct ProjLine2 {
  Vec line;  // a z0 + b z1 + c z2
  Vec P, R;
};
ProjLine2 make_line(const Vec& coeffs);

// The quadric b^2 - 4ac where sum_j q_j(z(s,t)) x_j = a s^2 + b st + c t^2.
// Throws DomainError when q restricted to L maps 2:1 onto a line. Lines
// through base points of the adjugate map are accepted here; twisted_cubic
// rejects them.
ScalarSym enveloping_cone(const Symmetrization& a, const ProjLine2& L);

struct ReducibleMember {
  Field field;
  Scalar lambda, mu;  // member lambda * Lambda + mu * Q
  Vec H1, H2;         // its two planes
  bool non_reduced = false;
};
// The member of rank <= 2 of the pencil spanned by Lambda and Q, searched
// over the field and one quadratic extension. nullopt when there is none.
std::optional<ReducibleMember> reducible_member(const ScalarSym& Lambda, const ScalarSym& Q);
// det(lambda * Lambda + mu * Q) as a binary quartic in (lambda, mu).
BinaryForm pencil_determinant(const ScalarSym& Lambda, const ScalarSym& Q);

struct TritangentCertificate {
  bool tritangent = false;
  std::string method;                // "conic" or "line pair"
  std::optional<BinaryForm> sextic;  // Gamma on the parametrized conic
  std::optional<BinaryForm> root;    // cubic with root^2 proportional to sextic
};
TritangentCertificate tritangent_verify(const HomogPoly& Q, const HomogPoly& gamma, const Vec& H);

// The adjugate map along L: four binary cubics.
std::array<BinaryForm, 4> twisted_cubic(const Symmetrization& a, const ProjLine2& L);
// f(T(s, t)) for a form f in x.
BinaryForm compose(const HomogPoly& f, const std::array<BinaryForm, 4>& T);
// Q o T is proportional to (H1 o T)(H2 o T): the six contact points are the
// intersection of T with C.
bool contact_on_twisted_cubic(const HomogPoly& Q, const std::array<BinaryForm, 4>& T, const Vec& H1, const Vec& H2);
// Every 2x2 minor of [grad Lambda; grad Gamma] vanishes along T.
bool tangent_along(const ScalarSym& Lambda, const HomogPoly& gamma, const std::array<BinaryForm, 4>& T);

// Cubics alpha * Gamma + l * Q (l linear) vanishing at the given points.
struct CubicSpace {
  int dimension = 0;
  std::vector<HomogPoly> basis;
  bool proportional_to_gamma = false;  // dimension 1 and the basis is a multiple of Gamma
};
CubicSpace cubics_through(const HomogPoly& Q, const HomogPoly& gamma, const std::vector<Vec>& points);
// Four points of T chosen deterministically from `seed`, resampled until the
// four conditions are independent.
CubicSpace cubic_through_C_and_T(const HomogPoly& Q, const HomogPoly& gamma, const std::array<BinaryForm, 4>& T,
                                 unsigned seed = 0);

// Classification of a line for the bijection test.
enum class LineKind { Generic, BasePoint, DoubleCover };
LineKind line_kind(const Symmetrization& a, const ProjLine2& L);

struct MilneLine {
  Vec line;
  LineKind kind = LineKind::Generic;
  bool bitangent = false;                  // oracle
  std::optional<ReducibleMember> member;   // reduced pencil member
  bool tritangents_ok = false;
  bool twisted_cubic_ok = false;
  std::vector<std::string> notes;
};
// The given lines with the oracle bitangent flag (finite fields only; false
// otherwise) and the pencil member, both planes verified as tritangents.
std::vector<MilneLine> milne_lines(const Symmetrization& a, const ScalarSym& Q, const HomogPoly& X,
                                   const std::vector<Vec>& lines);

}  // namespace prymsym

#endif
