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

#include "idrec/channels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cctype>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "idrec/errors.hpp"

namespace idrec {

namespace {

constexpr std::array<Spin, 2> kSpins = {Spin::Up, Spin::Down};

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t))
    throw DomainError("time must be finite and non-negative, got " + std::to_string(t));
}

// Amplitude envelope q(t) = e^{-lambda t/2} [cos(dt/2) + (lambda/d) sin(dt/2)],
// continued to cosh/sinh with |d| when d^2 < 0.
double envelope(double t, const LorentzianBath& bath) {
  const double lambda = bath.lambda();
  const double d2 = bath.d_squared();
  const double half_lt = 0.5 * lambda * t;
  if (d2 >= 0.0) {
    const double x = 0.5 * std::sqrt(d2) * t;
    const double sinc = x < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x;
    return std::exp(-half_lt) * (std::cos(x) + half_lt * sinc);
  }
  const double k = std::sqrt(-d2);
  const double y = 0.5 * k * t;
  if (y < 0.5) {
    const double sinhc = y < 1e-8 ? 1.0 + y * y / 6.0 : std::sinh(y) / y;
    return std::exp(-half_lt) * (std::cosh(y) + half_lt * sinhc);
  }
  // Overdamped: two decaying exponentials, no overflow for large lambda t.
  const double slow = std::exp(0.5 * (k - lambda) * t);
  const double fast = std::exp(-0.5 * (k + lambda) * t);
  return 0.5 * ((1.0 + lambda / k) * slow + (1.0 - lambda / k) * fast);
}

double clamp_probability(double p) { return std::clamp(p, 0.0, 1.0); }

// Exact embedding of the exponential memory kernel:
//   q' = -(gamma lambda / 2) z,  z' = q - lambda z,  z(t) = int_0^t e^{-lambda(t-s)} q(s) ds.
struct KernelSystem {
  double gamma;
  double lambda;
  void operator()(const std::array<double, 2>& x, std::array<double, 2>& dxdt, double) const {
    dxdt[0] = -0.5 * gamma * lambda * x[1];
    dxdt[1] = x[0] - lambda * x[1];
  }
};

Eigen::Matrix2cd spin_op(Complex uu, Complex ud, Complex du, Complex dd) {
  Eigen::Matrix2cd m;
  m << uu, ud, du, dd;
  return m;
}

const std::array<Eigen::Matrix2cd, 4>& paulis() {
  static const std::array<Eigen::Matrix2cd, 4> p = {
      spin_op(1, 0, 0, 1), spin_op(0, 1, 1, 0),
      spin_op(0, Complex(0, -1), Complex(0, 1), 0), spin_op(1, 0, 0, -1)};
  return p;
}

Eigen::Matrix4cd kron(const Eigen::Matrix2cd& x, const Eigen::Matrix2cd& y) {
  Eigen::Matrix4cd k;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) k.block<2, 2>(2 * i, 2 * j) = x(i, j) * y;
  return k;
}

// One-particle map acting as ea on the spin of mode A, eb on mode B, identity elsewhere.
SingleParticleMap localized(const Eigen::Matrix2cd& ea, const Eigen::Matrix2cd& eb) {
  SingleParticleMap m = SingleParticleMap::Identity();
  const int a = basis_index(Mode::A, Spin::Up);
  const int b = basis_index(Mode::B, Spin::Up);
  m.block<2, 2>(a, a) = ea;
  m.block<2, 2>(b, b) = eb;
  return m;
}

}  // namespace

LorentzianBath::LorentzianBath(double gamma, double lambda, double omega0)
    : gamma_(gamma), lambda_(lambda), omega0_(omega0) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw DomainError("bath gamma must be > 0");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("bath lambda must be > 0");
}

double memory_kernel(double tau, const LorentzianBath& bath) {
  return 0.5 * bath.gamma() * bath.lambda() * std::exp(-bath.lambda() * std::abs(tau));
}

double p_analytic(double t, const LorentzianBath& bath) {
  require_time(t);
  const double q = envelope(t, bath);
  return clamp_probability(1.0 - q * q);
}

std::vector<double> p_numeric_grid(std::span<const double> times, const LorentzianBath& bath) {
  namespace odeint = boost::numeric::odeint;
  for (double t : times) require_time(t);
  if (!std::is_sorted(times.begin(), times.end()))
    throw DomainError("p_numeric_grid: times must be ascending");

  std::vector<double> out;
  out.reserve(times.size());
  if (times.empty()) return out;

  // integrate_times needs the integration to start at the first grid point.
  std::vector<double> grid;
  grid.reserve(times.size() + 1);
  if (times.front() > 0.0) grid.push_back(0.0);
  grid.insert(grid.end(), times.begin(), times.end());
  const bool skip_origin = times.front() > 0.0;

  std::array<double, 2> state = {1.0, 0.0};
  const KernelSystem system{bath.gamma(), bath.lambda()};
  auto stepper = odeint::make_controlled(1e-9, 1e-9, odeint::runge_kutta_dopri5<std::array<double, 2>>());
  const double dt0 = std::min(1e-3, 0.01 / (bath.lambda() + bath.gamma()));
  std::vector<double> q_values;
  q_values.reserve(grid.size());
  try {
    odeint::integrate_times(stepper, system, state, grid.begin(), grid.end(), dt0,
                            [&](const std::array<double, 2>& x, double) { q_values.push_back(x[0]); },
                            odeint::max_step_checker(1000000));
  } catch (const std::exception& e) {
    throw NumericalError(std::string("memory-kernel integration failed: ") + e.what());
  }
  if (q_values.size() != grid.size()) throw NumericalError("memory-kernel integration stopped early");
  for (std::size_t i = skip_origin ? 1 : 0; i < q_values.size(); ++i) {
    const double q = q_values[i];
    if (!std::isfinite(q)) throw NumericalError("memory-kernel integration diverged");
    out.push_back(clamp_probability(1.0 - q * q));
  }
  return out;
}

double p_numeric(double t, const LorentzianBath& bath) {
  require_time(t);
  if (t == 0.0) return 0.0;
  const double times[] = {t};
  return p_numeric_grid(times, bath).front();
}

const char* to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::ADC: return "ADC";
    case ChannelKind::PDC: return "PDC";
    case ChannelKind::DEP: return "DEP";
  }
  return "?";
}

std::optional<ChannelKind> parse_channel(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
  if (s == "ADC" || s == "AMPLITUDE") return ChannelKind::ADC;
  if (s == "PDC" || s == "PHASE") return ChannelKind::PDC;
  if (s == "DEP" || s == "DEPOLARIZING") return ChannelKind::DEP;
  return std::nullopt;
}

Eigen::MatrixXcd KrausSet::completeness() const {
  const Eigen::Index n = operators.empty() ? 0 : operators.front().cols();
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& e : operators) sum += e.adjoint() * e;
  return sum;
}

KrausSet kraus_set(ChannelKind kind, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("disturbance probability must lie in [0,1]");
  const double keep = std::sqrt(1.0 - p);
  const double flip = std::sqrt(p);
  switch (kind) {
    case ChannelKind::ADC:
      return {KrausArity::SingleQubit, {spin_op(1, 0, 0, keep), spin_op(0, flip, 0, 0)}};
    case ChannelKind::PDC:
      return {KrausArity::SingleQubit, {spin_op(1, 0, 0, keep), spin_op(0, 0, 0, flip)}};
    case ChannelKind::DEP: {
      // (1-p) rho + p I/4 = (1-p) rho + (p/16) sum_{a,b} (s_a x s_b) rho (s_a x s_b)
      KrausSet set{KrausArity::TwoQubit, {}};
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
          const double w = (a == 0 && b == 0) ? 1.0 - 15.0 * p / 16.0 : p / 16.0;
          set.operators.emplace_back(std::sqrt(w) * kron(paulis()[a], paulis()[b]));
        }
      }
      return set;
    }
  }
  throw DomainError("unknown channel kind");
}

TwoParticleKet ab_basis_ket(Statistics stats, Spin a, Spin b) {
  return TwoParticleKet::product(stats, SingleParticleKet::basis(Mode::A, a),
                                 SingleParticleKet::basis(Mode::B, b));
}

TwoParticleKet bell_ab(Statistics stats, int family, int sign) {
  const double h = 1.0 / std::sqrt(2.0);
  const double s = sign >= 0 ? 1.0 : -1.0;
  if (family == 1)
    return ab_basis_ket(stats, Spin::Up, Spin::Down).scaled(h) +
           ab_basis_ket(stats, Spin::Down, Spin::Up).scaled(s * h);
  if (family == 2)
    return ab_basis_ket(stats, Spin::Up, Spin::Up).scaled(h) +
           ab_basis_ket(stats, Spin::Down, Spin::Down).scaled(s * h);
  throw DomainError("Bell family must be 1 or 2");
}

Eigen::Vector4cd ab_spin_vector(const TwoParticleKet& x) {
  Eigen::Vector4cd v;
  int k = 0;
  for (Spin a : kSpins)
    for (Spin b : kSpins) v(k++) = tp_inner(ab_basis_ket(x.statistics(), a, b), x);
  const double norm2 = tp_inner(x, x).real();
  if (norm2 - v.squaredNorm() > 1e-12 * std::max(1.0, norm2))
    throw ContractError("state is not supported on one particle in A and one in B");
  return v;
}

TwoParticleKet ket_from_ab_spin_vector(Statistics stats, const Eigen::Vector4cd& v) {
  std::vector<Term> terms;
  int k = 0;
  for (Spin a : kSpins) {
    for (Spin b : kSpins) {
      const Complex c = v(k++);
      if (std::abs(c) < kAmplitudeCutoff) continue;
      terms.push_back(Term{c, SingleParticleKet::basis(Mode::A, a), SingleParticleKet::basis(Mode::B, b)});
    }
  }
  return TwoParticleKet(stats, std::move(terms));
}

Eigen::Matrix4cd ab_density(const EnsembleState& rho) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  for (const auto& c : rho.components()) {
    const Eigen::Vector4cd v = ab_spin_vector(c.ket);
    m += c.weight * v * v.adjoint();
  }
  return m;
}

EnsembleState evolve_ab(const EnsembleState& rho0, ChannelKind kind, double p) {
  const KrausSet set = kraus_set(kind, p);
  const Statistics stats = rho0.statistics();

  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  if (set.arity == KrausArity::SingleQubit) {
    for (const auto& ea : set.operators) {
      for (const auto& eb : set.operators) {
        const SingleParticleMap m = localized(ea, eb);
        for (const auto& c : rho0.components()) {
          const Eigen::Vector4cd v = ab_spin_vector(apply_sp_map(c.ket, m));
          rho += c.weight * v * v.adjoint();
        }
      }
    }
  } else {
    const Eigen::Matrix4cd rho_in = ab_density(rho0);
    for (const auto& k : set.operators) rho += k * rho_in * k.adjoint();
  }

  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(rho);
  const double trace = rho.trace().real();
  std::vector<Component> components;
  for (int i = 3; i >= 0; --i) {
    const double w = eig.eigenvalues()(i) / trace;
    if (w < kZeroNorm2) continue;
    Eigen::Vector4cd v = eig.eigenvectors().col(i);
    Eigen::Index big = 0;
    v.cwiseAbs().maxCoeff(&big);
    v *= std::abs(v(big)) / v(big);  // fix the global phase
    components.push_back(Component{w, ket_from_ab_spin_vector(stats, v.normalized())});
  }
  double total = 0.0;
  for (const auto& c : components) total += c.weight;
  for (auto& c : components) c.weight /= total;
  return EnsembleState(stats, std::move(components));
}

}  // namespace idrec
