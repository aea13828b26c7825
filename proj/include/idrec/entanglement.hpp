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

#ifndef IDREC_ENTANGLEMENT_HPP
#define IDREC_ENTANGLEMENT_HPP

#include <Eigen/Dense>

#include "idrec/channels.hpp"
#include "idrec/protocol.hpp"

namespace idrec {

// Wootters concurrence max{0, s1 - s2 - s3 - s4}, s_i the decreasing square
// roots of the spectrum of rho (sy x sy) rho* (sy x sy). Throws ContractError
// for inputs that are not Hermitian, unit-trace and PSD (eigenvalues >= -1e-10).
double wootters(const Eigen::Matrix4cd& rho);

// Closed-form concurrence of rho_LR after noise + deformation + sLOCC.
//
// With a- = lr' - eta l'r and a+ = lr' + eta l'r, the post-selected state is
// diagonal in the Bell basis (PDC, DEP) or a mixture of the singlet with
// |L up, R up> (ADC):
//   ADC  C = (1-p)|a-|^2 / ((1-p)|a-|^2 + p|a+|^2)
//   PDC  C = |w- - w+|,            w- ~ (1-p/2)|a-|^2, w+ ~ (p/2)|a+|^2
//   DEP  C = max{0, w- - 3 w+},    w- ~ (1-3p/4)|a-|^2, w+ ~ (p/4)|a+|^2
// Throws DomainError when p is outside [0,1] or a- = a+ = 0, and
// PostSelectionImpossible when the post-selected weight vanishes.
double concurrence_closed(ChannelKind kind, const DeformationSpec& spec, double p);

// Closed-form sLOCC success probability: post-selected weight divided by the
// deformed norm, e.g. for ADC
//   P = ((1-p)|a-|^2 + p|a+|^2) / ((1-p) C1^2 + p C2^2).
// Throws DomainError when p is outside [0,1] and ZeroNormState when the
// deformation annihilates the noisy state.
double success_probability_closed(ChannelKind kind, const DeformationSpec& spec, double p);

// Stationary concurrence (p -> 1). PDC and DEP reduce on real positive
// coefficients to
//   PDC  2 l l' r r' / ((lr')^2 + (l'r)^2)
//   DEP  max{0, -((lr')^2 + (l'r)^2 - 4 l l' r r') / (2 [(lr')^2 + (l'r)^2 - l l' r r'])}
// ADC gives 1 when a+ = 0 (maximal indistinguishability) and 0 otherwise.
// Throws DomainError for non-real specs.
double c_infinity(ChannelKind kind, const DeformationSpec& spec);

// Recovery gain: closed-form concurrence minus that of the undeformed state.
double delta_c(ChannelKind kind, const DeformationSpec& spec, double p);

// Flips eta and negates r. Leaves a-, a+ and the indistinguishability unchanged.
DeformationSpec statistics_dual(const DeformationSpec& spec);

struct PipelineResult {
  double concurrence;
  double probability;
  Eigen::Matrix4cd rho_lr;
};

// Full state-level route: singlet -> evolve_ab -> deform -> slocc -> wootters.
PipelineResult run_pipeline(ChannelKind kind, const DeformationSpec& spec, double p);

}  // namespace idrec

#endif  // IDREC_ENTANGLEMENT_HPP
