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
#ifndef PRYMSYM_PRYM_HPP
#define PRYMSYM_PRYM_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "prymsym/oracle.hpp"
#include "prymsym/symmetroid.hpp"

namespace prymsym {

// Dual of a quadric surface. For rank 4 `qhat` is the adjugate. For rank 3
// it is the dual conic adj(Q_W) (row and column `dropped` removed) padded
// with zeros, a form on the plane of planes through the vertex.
struct DualQuadric {
  int rank = 0;
  ScalarSym qhat;
  std::optional<Vec> vertex;
  int dropped = -1;
  ScalarSym conic;  // 3x3, coordinates y_j with j != dropped
};
DualQuadric dual_quadric(const ScalarSym& Q);

// sum M_ij f_i f_j
HomogPoly pullback_quadric(const ScalarSym& M, const std::vector<HomogPoly>& f);

// Certificates attached to constructed curves.
struct Certificate {
  std::uint64_t q = 0;
  bool smooth = false;
  std::optional<Vec> witness;
};
// Oracle smoothness over the curve's own finite field, or over a few primes
// of good reduction when the curve is defined over Q.
std::vector<Certificate> certify(const std::vector<HomogPoly>& eqs, int primes = 2);

struct ForwardResult {
  bool hyperelliptic = false;
  ScalarSym qhat;
  // general case
  HomogPoly X;  // Qhat(q_0(z), ..., q_3(z))
  bool reduced = false;
  // even case: X is the double cover y^2 = -h(z) of the conic Xbar
  HomogPoly conic;
  HomogPoly branch;
  bool branch_reduced = false;
  std::optional<Vec> conic_point;
  std::optional<BinaryForm> octic;  // y^2 = octic(s, t), normalized
  std::vector<Certificate> certificates;  // X, or Xbar meeting the branch curve (even case)
  std::vector<std::string> notes;
};
ForwardResult forward_general(const Symmetrization& a, const ScalarSym& Q);
ForwardResult forward_even(const Symmetrization& a, const ScalarSym& Q);
// Picks the general or even construction by the rank of Q.
ForwardResult forward(const Symmetrization& a, const ScalarSym& Q);

// N with N^T Qhat N = c * S, S the matrix of w0 w3 - w1 w2. `field` is the
// field of N, possibly a quadratic extension of the input field.
struct RulingSplit {
  Field field;
  ScalarMatrix N;
  Scalar c;
  bool extended = false;
};
RulingSplit split_quadric(const ScalarSym& qhat);
ScalarSym segre_matrix(const Field& f);

// Four conics (c00, c01, c10, c11) with c00 c11 - c01 c10 = lambda * fX.
struct KummerPencilData {
  std::array<HomogPoly, 4> c;
  HomogPoly fX;
  Scalar lambda;
  int span_dim = 0;  // 3 in the self-residual case
};
KummerPencilData pencil_conics(const Symmetrization& a, const RulingSplit& split, const HomogPoly& fX);
// Checks the compatibility identity and the span, filling lambda/span_dim.
KummerPencilData make_pencil(const std::array<HomogPoly, 4>& c, const HomogPoly& fX);

VarList segre_vars();  // y00, y01, y10, y11

struct ReverseResult {
  Symmetrization A;
  HomogPoly gamma;
  ScalarSym Q;
  int span_dim = 0;
  bool self_residual = false;
};
ReverseResult reverse_construct(const HomogPoly& fX, const KummerPencilData& k);

// A'(N^T x) == A(x) and Q'(N^T x) proportional to Q(x).
struct RoundtripReport {
  bool symmetrization_equal = false;
  bool quadric_proportional = false;
  bool ok() const { return symmetrization_equal && quadric_proportional; }
};
RoundtripReport roundtrip_check(const Symmetrization& a, const ScalarSym& Q, const RulingSplit& split,
                                const ReverseResult& rev);

// For a point x of C with A(x) of rank two: the two lines of the conic A(x)
// each carry two points of the u-fiber and two of the v-fiber through x.
struct PartitionReport {
  bool rank_two = false;
  std::array<int, 2> u_degrees{}, v_degrees{};
  bool ok() const {
    return rank_two && u_degrees[0] == 2 && u_degrees[1] == 2 && v_degrees[0] == 2 && v_degrees[1] == 2;
  }
};
PartitionReport partition_check(const Symmetrization& a, const RulingSplit& split, const KummerPencilData& k,
                                const Vec& x);

// a(C~) = a(C) + a(X) over F_p, or over F_{p^2} when the rulings of the dual
// quadric do not split over F_p.
struct TraceIdentity {
  std::uint64_t q = 0;
  oracle::CountReport C, Ctilde, X;
  std::uint64_t conflicts = 0;
  bool C_smooth = false;
  bool holds() const { return Ctilde.trace == C.trace + X.trace; }
};
TraceIdentity trace_identity(const Symmetrization& a, const ScalarSym& Q, std::uint64_t p,
                             const oracle::Options& opt = {});

// Reduce into F_p; nullopt when a denominator vanishes mod p.
std::optional<Symmetrization> reduce_mod(const Symmetrization& a, std::uint64_t p);
std::optional<ScalarSym> reduce_mod(const ScalarSym& m, std::uint64_t p);

}  // namespace prymsym

#endif
