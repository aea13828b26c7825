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

#ifndef IDREC_CHANNELS_HPP
#define IDREC_CHANNELS_HPP

#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "idrec/nolabel.hpp"

namespace idrec {

// Single-excitation Lorentzian reservoir
//   J(w) = gamma/(2 pi) * lambda^2 / ((w - w0)^2 + lambda^2).
// omega0 only shifts the spectrum and never enters the dynamics.
class LorentzianBath {
 public:
  // Throws DomainError unless gamma > 0 and lambda > 0.
  LorentzianBath(double gamma, double lambda, double omega0 = 0.0);

  static LorentzianBath markovian(double gamma = 1.0) { return {gamma, 5.0 * gamma}; }
  static LorentzianBath non_markovian(double gamma = 1.0) { return {gamma, 0.01 * gamma}; }

  double gamma() const { return gamma_; }
  double lambda() const { return lambda_; }
  double omega0() const { return omega0_; }

  // d^2 = 2 gamma lambda - lambda^2; negative in the Markovian regime.
  double d_squared() const { return 2.0 * gamma_ * lambda_ - lambda_ * lambda_; }
  double relaxation_time() const { return 1.0 / gamma_; }
  double correlation_time() const { return 1.0 / lambda_; }
  bool is_markovian() const { return lambda_ > 2.0 * gamma_; }

 private:
  double gamma_;
  double lambda_;
  double omega0_;
};

// Reservoir correlation function f(tau) = (gamma lambda / 2) exp(-lambda tau),
// the Fourier transform of the Lorentzian spectral density.
double memory_kernel(double tau, const LorentzianBath& bath);

// Decoherence function p(t) = 1 - q(t)^2 where q is the closed-form solution of
// q' = -int_0^t f(t - s) q(s) ds, q(0) = 1. Throws DomainError for t < 0.
double p_analytic(double t, const LorentzianBath& bath);

// Same quantity from a numerical solve of the memory-kernel equation.
// Throws DomainError for t < 0 and NumericalError if the integrator fails.
double p_numeric(double t, const LorentzianBath& bath);

// Batched p_numeric on an ascending time grid (single integration pass).
std::vector<double> p_numeric_grid(std::span<const double> times, const LorentzianBath& bath);

enum class ChannelKind { ADC, PDC, DEP };

const char* to_string(ChannelKind kind);
std::optional<ChannelKind> parse_channel(std::string_view name);

enum class KrausArity { SingleQubit, TwoQubit };

// Spin-space Kraus operators, basis order {up, down} for one qubit and
// {up up, up down, down up, down down} for two.
struct KrausSet {
  KrausArity arity;
  std::vector<Eigen::MatrixXcd> operators;

  // sum_i E_i^dagger E_i
  Eigen::MatrixXcd completeness() const;
};

// ADC/PDC: single-qubit sets; DEP: two-qubit set realizing
// rho -> (1 - p) rho + p I/4. Throws DomainError when p is outside [0,1].
KrausSet kraus_set(ChannelKind kind, double p);

// |A s1, B s2> for s1, s2 in spin basis order.
TwoParticleKet ab_basis_ket(Statistics stats, Spin a, Spin b);

// Bell states over regions A and B:
//   singlet  |1-> = (|A up,B down> - |A down,B up>)/sqrt2
//   triplet  |1+> = (|A up,B down> + |A down,B up>)/sqrt2
//            |2+-> = (|A up,B up> +- |A down,B down>)/sqrt2
TwoParticleKet bell_ab(Statistics stats, int family, int sign);
inline TwoParticleKet singlet_ab(Statistics stats) { return bell_ab(stats, 1, -1); }

// Amplitudes <A s1, B s2 | x> of a ket with one particle in A and one in B.
// Throws ContractError when x has weight outside that sector.
Eigen::Vector4cd ab_spin_vector(const TwoParticleKet& x);
TwoParticleKet ket_from_ab_spin_vector(Statistics stats, const Eigen::Vector4cd& v);

// 4x4 spin density matrix of an ensemble supported on one particle in A, one in B.
Eigen::Matrix4cd ab_density(const EnsembleState& rho);

// Applies the local noise of the given kind with disturbance probability p and
// returns the spectral decomposition of the resulting rho_AB. ADC and PDC act
// as E_i^A (x) E_j^B through one-particle maps localized on A and B; DEP is
// the two-qubit white-noise map.
EnsembleState evolve_ab(const EnsembleState& rho0, ChannelKind kind, double p);

}  // namespace idrec

#endif  // IDREC_CHANNELS_HPP
