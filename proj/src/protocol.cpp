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

#include "idrec/protocol.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "idrec/channels.hpp"
#include "idrec/errors.hpp"

namespace idrec {

namespace {

constexpr std::array<Spin, 2> kSpins = {Spin::Up, Spin::Down};

double entropy_term(double u) { return u > 0.0 ? -u * std::log2(u) : 0.0; }

double family_indistinguishability(double a) {
  const double x = a * a;
  const double y = (1.0 - a) * (1.0 - a);
  const double z = x + y;
  return entropy_term(x / z) + entropy_term(y / z);
}

}  // namespace

DeformationSpec DeformationSpec::make(Complex l, Complex r, Complex lp, Complex rp,
                                      Statistics stats) {
  if (std::abs(std::norm(l) + std::norm(r) - 1.0) > 1e-12)
    throw DomainError("psi1 coefficients must satisfy |l|^2 + |r|^2 = 1");
  if (std::abs(std::norm(lp) + std::norm(rp) - 1.0) > 1e-12)
    throw DomainError("psi2 coefficients must satisfy |l'|^2 + |r'|^2 = 1");
  return DeformationSpec{l, r, lp, rp, stats};
}

DeformationSpec DeformationSpec::separated(Statistics stats) {
  return DeformationSpec{1.0, 0.0, 0.0, 1.0, stats};
}

bool DeformationSpec::is_real(double tol) const {
  return std::abs(l.imag()) <= tol && std::abs(r.imag()) <= tol && std::abs(lp.imag()) <= tol &&
         std::abs(rp.imag()) <= tol;
}

SingleParticleMap deformation_map(const DeformationSpec& spec) {
  SingleParticleMap m = SingleParticleMap::Identity();
  for (Spin s : kSpins) {
    const int a = basis_index(Mode::A, s);
    const int b = basis_index(Mode::B, s);
    m.col(a).setZero();
    m.col(b).setZero();
    m(basis_index(Mode::L, s), a) = spec.l;
    m(basis_index(Mode::R, s), a) = spec.r;
    m(basis_index(Mode::L, s), b) = spec.lp;
    m(basis_index(Mode::R, s), b) = spec.rp;
  }
  return m;
}

EnsembleState deform(const EnsembleState& state, const DeformationSpec& spec) {
  if (state.statistics() != spec.stats)
    throw ContractError("deformation statistics differ from the state's");
  const SingleParticleMap map = deformation_map(spec);

  std::vector<Component> out;
  double total = 0.0;
  for (const auto& c : state.components()) {
    ab_spin_vector(c.ket);  // support check
    const TwoParticleKet mapped = apply_sp_map(c.ket, map);
    const double n2 = tp_inner(mapped, mapped).real();
    if (n2 < kZeroNorm2 || c.weight == 0.0) continue;  // annihilated: zero weight
    out.push_back(Component{c.weight * n2, mapped.scaled(1.0 / std::sqrt(n2))});
    total += c.weight * n2;
  }
  if (out.empty() || total < kZeroNorm2)
    throw ZeroNormState("deformation annihilates the whole state");
  for (auto& c : out) c.weight /= total;
  return EnsembleState(state.statistics(), std::move(out));
}

SloccOutcome slocc(const EnsembleState& state) {
  std::array<TwoParticleKet, 4> basis = {
      TwoParticleKet(state.statistics()), TwoParticleKet(state.statistics()),
      TwoParticleKet(state.statistics()), TwoParticleKet(state.statistics())};
  int k = 0;
  for (Spin a : kSpins)
    for (Spin b : kSpins)
      basis[k++] = TwoParticleKet::product(state.statistics(), SingleParticleKet::basis(Mode::L, a),
                                           SingleParticleKet::basis(Mode::R, b));

  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  for (const auto& c : state.components()) {
    Eigen::Vector4cd v;
    for (int i = 0; i < 4; ++i) v(i) = tp_inner(basis[i], c.ket);
    rho += c.weight * v * v.adjoint();
  }
  const double probability = rho.trace().real();
  if (!(probability >= 1e-14))
    throw PostSelectionImpossible("sLOCC projection has zero success probability");
  Eigen::Matrix4cd rho_lr = rho / probability;
  rho_lr = 0.5 * (rho_lr + rho_lr.adjoint()).eval();
  return {rho_lr, std::min(probability, 1.0)};
}

double indistinguishability(const DeformationSpec& spec) {
  const double x = std::norm(spec.l) * std::norm(spec.rp);   // P_{L psi1} P_{R psi2}
  const double y = std::norm(spec.lp) * std::norm(spec.r);   // P_{L psi2} P_{R psi1}
  const double z = x + y;
  if (z < 1e-14) throw DomainError("indistinguishability undefined: no one-per-region configuration");
  return entropy_term(x / z) + entropy_term(y / z);
}

double family_parameter_for_target_i(double target) {
  if (!(target >= 0.0 && target <= 1.0)) throw DomainError("target indistinguishability must lie in [0,1]");
  if (target == 1.0) return 0.5;
  if (target == 0.0) return 1.0;
  double lo = 0.5;  // I = 1
  double hi = 1.0;  // I = 0
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (family_indistinguishability(mid) > target)
      lo = mid;
    else
      hi = mid;
  }
  const double a_lo = lo, a_hi = hi;
  return std::abs(family_indistinguishability(a_lo) - target) <=
                 std::abs(family_indistinguishability(a_hi) - target)
             ? a_lo
             : a_hi;
}

DeformationSpec spec_for_target_i(double target, Statistics stats) {
  const double a = family_parameter_for_target_i(target);
  const double big = std::sqrt(a);
  const double small = std::sqrt(1.0 - a);
  return DeformationSpec{big, small, small, big, stats};
}

}  // namespace idrec
