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

#include "idrec/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "idrec/errors.hpp"

namespace idrec {

namespace {

// Weight left on the singlet by each channel; the remainder sits on spin
// states that are symmetric under exchange (|up up> for ADC, |1+> for PDC,
// the three triplet-like Bell states for DEP).
double singlet_weight(ChannelKind kind, double p) {
  switch (kind) {
    case ChannelKind::ADC: return 1.0 - p;
    case ChannelKind::PDC: return 1.0 - 0.5 * p;
    case ChannelKind::DEP: return 1.0 - 0.75 * p;
  }
  return 0.0;
}

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("disturbance probability must lie in [0,1]");
}

struct Sectors {
  double singlet;    // s |a-|^2
  double symmetric;  // (1-s) |a+|^2
  double deformed;   // s C1^2 + (1-s) C2^2
};

Sectors sectors(ChannelKind kind, const DeformationSpec& spec, double p) {
  require_probability(p);
  const double am = std::norm(spec.singlet_amplitude());
  const double ap = std::norm(spec.symmetric_amplitude());
  if (am < 1e-14 && ap < 1e-14)
    throw DomainError("lr' = l'r = 0: no amplitude reaches the one-per-region sector");
  const double s = singlet_weight(kind, p);
  const double c1 = spec.c1_squared();
  const double c2 = spec.c2_squared();
  Sectors sec{s * am, (1.0 - s) * ap, s * c1 + (1.0 - s) * c2};
  // s = 0 or 1 with the surviving sector annihilated by the deformation:
  // 0/0, continued by the limit from inside (0,1), i.e. keep only the
  // sector whose deformed norm is nonzero.
  if (sec.deformed < 1e-14) {
    if (c1 >= 1e-14 && s < 0.5) sec = {am, 0.0, c1};
    if (c2 >= 1e-14 && s > 0.5) sec = {0.0, ap, c2};
  }
  return sec;
}

const Eigen::Matrix4cd& sigma_yy() {
  static const Eigen::Matrix4cd m = [] {
    Eigen::Matrix4cd y = Eigen::Matrix4cd::Zero();
    // sy x sy in the {uu, ud, du, dd} basis
    y(0, 3) = -1.0;
    y(1, 2) = 1.0;
    y(2, 1) = 1.0;
    y(3, 0) = -1.0;
    return y;
  }();
  return m;
}

}  // namespace

double wootters(const Eigen::Matrix4cd& rho) {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw ContractError("wootters: matrix is not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > 1e-10)
    throw ContractError("wootters: matrix does not have unit trace");
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(rho);
  if (eig.eigenvalues().minCoeff() < -1e-10)
    throw ContractError("wootters: matrix is not positive semidefinite");

  // rho = W W^dagger; the square roots of the spectrum of rho rho~ are the
  // singular values of the complex symmetric matrix W^T (sy x sy) W.
  // eigenvalues at round-off level are exact zeros; their square roots
  // would otherwise leak ~1e-8 into C for rank-deficient rho
  const double floor = 8.0 * std::numeric_limits<double>::epsilon() * eig.eigenvalues().maxCoeff();
  Eigen::Matrix4cd w = eig.eigenvectors();
  for (int i = 0; i < 4; ++i) {
    const double ev = eig.eigenvalues()(i);
    w.col(i) *= ev > floor ? std::sqrt(ev) : 0.0;
  }
  const Eigen::Matrix4cd tau = w.transpose() * sigma_yy() * w;
  const Eigen::JacobiSVD<Eigen::Matrix4cd> svd(tau);
  const Eigen::Vector4d s = svd.singularValues();  // decreasing
  return std::clamp(s(0) - s(1) - s(2) - s(3), 0.0, 1.0);
}

double concurrence_closed(ChannelKind kind, const DeformationSpec& spec, double p) {
  const Sectors sec = sectors(kind, spec, p);
  const double kept = sec.singlet + sec.symmetric;
  if (kept < 1e-14) throw PostSelectionImpossible("sLOCC projection has zero success probability");
  double c = 0.0;
  switch (kind) {
    case ChannelKind::ADC: c = sec.singlet / kept; break;
    case ChannelKind::PDC: c = std::abs(sec.singlet - sec.symmetric) / kept; break;
    case ChannelKind::DEP: c = (sec.singlet - sec.symmetric) / kept; break;
  }
  return std::clamp(c, 0.0, 1.0);
}

double success_probability_closed(ChannelKind kind, const DeformationSpec& spec, double p) {
  const Sectors sec = sectors(kind, spec, p);
  if (sec.deformed < 1e-14) throw ZeroNormState("deformation annihilates the noisy state");
  return std::clamp((sec.singlet + sec.symmetric) / sec.deformed, 0.0, 1.0);
}

double c_infinity(ChannelKind kind, const DeformationSpec& spec) {
  if (!spec.is_real()) throw DomainError("stationary concurrence requires real coefficients");
  if (kind == ChannelKind::ADC) {
    const double am = std::norm(spec.singlet_amplitude());
    const double ap = std::norm(spec.symmetric_amplitude());
    if (am < 1e-14 && ap < 1e-14)
      throw DomainError("lr' = l'r = 0: no amplitude reaches the one-per-region sector");
    return ap < 1e-14 ? 1.0 : 0.0;
  }
  return concurrence_closed(kind, spec, 1.0);
}

double delta_c(ChannelKind kind, const DeformationSpec& spec, double p) {
  return concurrence_closed(kind, spec, p) -
         concurrence_closed(kind, DeformationSpec::separated(spec.stats), p);
}

DeformationSpec statistics_dual(const DeformationSpec& spec) {
  return DeformationSpec{spec.l, -spec.r, spec.lp, spec.rp, flipped(spec.stats)};
}

PipelineResult run_pipeline(ChannelKind kind, const DeformationSpec& spec, double p) {
  const EnsembleState initial = EnsembleState::pure(singlet_ab(spec.stats));
  const EnsembleState noisy = evolve_ab(initial, kind, p);
  const EnsembleState deformed = deform(noisy, spec);
  const SloccOutcome out = slocc(deformed);
  return {wootters(out.rho_lr), out.probability, out.rho_lr};
}

}  // namespace idrec
