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

#include "idrec/nolabel.hpp"

#include <cmath>
#include <map>
#include <utility>

#include "idrec/errors.hpp"

namespace idrec {

const char* to_string(Statistics s) { return s == Statistics::Boson ? "boson" : "fermion"; }

SingleParticleKet SingleParticleKet::basis(Mode m, Spin s) {
  SingleVector v = SingleVector::Zero();
  v(basis_index(m, s)) = 1.0;
  return SingleParticleKet(v);
}

SingleParticleKet SingleParticleKet::spatial(const std::array<Complex, kNumModes>& spatial,
                                             Spin s) {
  SingleVector v = SingleVector::Zero();
  for (int m = 0; m < kNumModes; ++m) v(basis_index(static_cast<Mode>(m), s)) = spatial[m];
  return SingleParticleKet(v);
}

Complex sp_inner(const SingleParticleKet& a, const SingleParticleKet& b) {
  return a.amplitudes().dot(b.amplitudes());  // Eigen's dot conjugates the left operand
}

TwoParticleKet TwoParticleKet::product(Statistics stats, const SingleParticleKet& a,
                                       const SingleParticleKet& b, Complex coeff) {
  return TwoParticleKet(stats, {Term{coeff, a, b}});
}

TwoParticleKet TwoParticleKet::scaled(Complex c) const {
  std::vector<Term> out(terms_.begin(), terms_.end());
  for (auto& t : out) t.coeff *= c;
  return TwoParticleKet(stats_, std::move(out));
}

TwoParticleKet TwoParticleKet::swapped() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(Term{t.coeff, t.second, t.first});
  return TwoParticleKet(stats_, std::move(out));
}

TwoParticleKet TwoParticleKet::coalesced() const {
  std::map<std::pair<int, int>, Complex> merged;
  for (const auto& t : terms_) {
    const auto& a = t.first.amplitudes();
    const auto& b = t.second.amplitudes();
    for (int i = 0; i < kSingleDim; ++i) {
      if (a(i) == 0.0) continue;
      for (int j = 0; j < kSingleDim; ++j) {
        if (b(j) == 0.0) continue;
        if (i == j && stats_ == Statistics::Fermion) continue;  // Pauli
        // |e_j; e_i> = eta |e_i; e_j>
        const Complex c = t.coeff * a(i) * b(j);
        if (i <= j)
          merged[{i, j}] += c;
        else
          merged[{j, i}] += static_cast<double>(eta_of(stats_)) * c;
      }
    }
  }
  std::vector<Term> out;
  for (const auto& [ij, c] : merged) {
    if (std::abs(c) < kAmplitudeCutoff) continue;
    SingleVector ei = SingleVector::Zero();
    SingleVector ej = SingleVector::Zero();
    ei(ij.first) = 1.0;
    ej(ij.second) = 1.0;
    out.push_back(Term{c, SingleParticleKet(ei), SingleParticleKet(ej)});
  }
  return TwoParticleKet(stats_, std::move(out));
}

TwoParticleKet operator+(const TwoParticleKet& x, const TwoParticleKet& y) {
  if (x.stats_ != y.stats_) throw ContractError("cannot add kets with different statistics");
  std::vector<Term> out(x.terms_.begin(), x.terms_.end());
  out.insert(out.end(), y.terms_.begin(), y.terms_.end());
  return TwoParticleKet(x.stats_, std::move(out));
}

Complex tp_inner(const TwoParticleKet& x, const TwoParticleKet& y) {
  if (x.statistics() != y.statistics())
    throw ContractError("tp_inner: kets have different statistics");
  const double eta = x.eta();
  Complex sum = 0.0;
  for (const auto& s : x.terms()) {
    for (const auto& t : y.terms()) {
      const Complex direct = sp_inner(s.first, t.first) * sp_inner(s.second, t.second);
      const Complex exchange = sp_inner(s.first, t.second) * sp_inner(s.second, t.first);
      sum += std::conj(s.coeff) * t.coeff * (direct + eta * exchange);
    }
  }
  return sum;
}

NormalizedKet normalize_ket(const TwoParticleKet& x) {
  const double n2 = tp_inner(x, x).real();
  if (!(n2 >= kZeroNorm2)) throw ZeroNormState("two-particle ket has zero norm");
  return {x.scaled(1.0 / std::sqrt(n2)), n2};
}

TwoParticleKet apply_sp_map(const TwoParticleKet& x, const SingleParticleMap& map, Slot slot) {
  std::vector<Term> out;
  out.reserve(x.terms().size());
  for (const auto& t : x.terms()) {
    Term u = t;
    if (slot != Slot::Second) u.first = SingleParticleKet(map * t.first.amplitudes());
    if (slot != Slot::First) u.second = SingleParticleKet(map * t.second.amplitudes());
    out.push_back(std::move(u));
  }
  return TwoParticleKet(x.statistics(), std::move(out)).coalesced();
}

EnsembleState::EnsembleState(Statistics stats, std::vector<Component> components)
    : stats_(stats), components_(std::move(components)) {
  double total = 0.0;
  for (const auto& c : components_) {
    if (c.ket.statistics() != stats_)
      throw ContractError("ensemble component has different statistics");
    if (!(c.weight >= 0.0 && c.weight <= 1.0 + 1e-12))
      throw ContractError("ensemble weight outside [0,1]");
    if (std::abs(tp_inner(c.ket, c.ket).real() - 1.0) > 1e-12)
      throw ContractError("ensemble component is not normalized");
    total += c.weight;
  }
  if (std::abs(total - 1.0) > 1e-12) throw ContractError("ensemble weights do not sum to 1");
}

EnsembleState EnsembleState::pure(const TwoParticleKet& ket) {
  return EnsembleState(ket.statistics(), {Component{1.0, normalize_ket(ket).ket}});
}

double EnsembleState::total_weight() const {
  double total = 0.0;
  for (const auto& c : components_) total += c.weight;
  return total;
}

}  // namespace idrec
