// Copyright 2026 The idrec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IDREC_PROTOCOL_HPP
#define IDREC_PROTOCOL_HPP

#include <Eigen/Dense>

#include "idrec/nolabel.hpp"

namespace idrec {

// Spatial wave functions after the deformation:
//   psi1 = l |L> + r |R>,   psi2 = lp |L> + rp |R>.
struct DeformationSpec {
  Complex l;
  Complex r;
  Complex lp;
  Complex rp;
  Statistics stats;

  // Throws DomainError unless |l|^2+|r|^2 = |lp|^2+|rp|^2 = 1 within 1e-12.
  static DeformationSpec make(Complex l, Complex r, Complex lp, Complex rp, Statistics stats);
  // l = rp = 1, r = lp = 0: no overlap, the deformation is a relabeling A->L, B->R.
  static DeformationSpec separated(Statistics stats);

  int eta() const { return eta_of(stats); }
  // <psi1|psi2>
  Complex overlap() const { return std::conj(l) * lp + std::conj(r) * rp; }
  // lr' - eta l'r and lr' + eta l'r: amplitudes surviving the sLOCC projection
  // for the antisymmetric and symmetric spin sectors respectively.
  Complex singlet_amplitude() const { return l * rp - static_cast<double>(eta()) * lp * r; }
  Complex symmetric_amplitude() const { return l * rp + static_cast<double>(eta()) * lp * r; }
  // C1^2 = 1 - eta |<psi1|psi2>|^2 and C2^2 = 1 + eta |<psi1|psi2>|^2.
  // Evaluated through 1 - |<psi1|psi2>|^2 = |l r' - l' r|^2 (unit norms), which
  // stays exact when the overlap is 1.
  double c1_squared() const { return eta() < 0 ? 2.0 - gram() : gram(); }
  double c2_squared() const { return eta() < 0 ? gram() : 2.0 - gram(); }
  double gram() const { return std::norm(l * rp - lp * r); }
  bool is_real(double tol = 1e-12) const;
};

// One-particle map A -> psi1, B -> psi2 (spin preserved), identity on L and R.
SingleParticleMap deformation_map(const DeformationSpec& spec);

// Deforms an ensemble with one particle in A and one in B. Each component is
// mapped and renormalized; weights become w_i |D psi_i|^2 / sum_j w_j |D psi_j|^2.
// Components annihilated by the map drop out. Throws ContractError on wrong
// support and ZeroNormState if the whole ensemble is annihilated.
EnsembleState deform(const EnsembleState& state, const DeformationSpec& spec);

struct SloccOutcome {
  // Over B_LR = {|L up,R up>, |L up,R down>, |L down,R up>, |L down,R down>}.
  Eigen::Matrix4cd rho_lr;
  double probability;
};

// Projects onto one particle in L and one in R and renormalizes. Throws
// PostSelectionImpossible when the success probability is below 1e-14.
SloccOutcome slocc(const EnsembleState& state);

// Entropic spatial indistinguishability in [0,1]. Throws DomainError when
// both one-particle-per-region configurations have zero probability.
double indistinguishability(const DeformationSpec& spec);

// Real positive family l = rp = sqrt(a), r = lp = sqrt(1-a), a in [1/2, 1],
// with a chosen by bisection so that indistinguishability == target.
// Throws DomainError when target is outside [0,1].
DeformationSpec spec_for_target_i(double target, Statistics stats);
// The parameter a of the family above.
double family_parameter_for_target_i(double target);

}  // namespace idrec

#endif  // IDREC_PROTOCOL_HPP
