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

#ifndef IDREC_NOLABEL_HPP
#define IDREC_NOLABEL_HPP

// Two identical particles without particle labels.
//
// A two-particle ket |phi1;phi2> is an indivisible object: it is not the
// tensor product of its one-particle components, and its inner product
// carries an exchange term weighted by the statistics parameter eta
// (+1 bosons, -1 fermions):
//
//   <a;b|c;d> = <a|c><b|d> + eta <a|d><b|c>
//
// One-particle states live in a fixed 8-dimensional space: four orthonormal
// spatial modes {A, B, L, R} times a pseudo-spin {up, down}.

#include <array>
#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace idrec {

using Complex = std::complex<double>;

enum class Mode : int { A = 0, B = 1, L = 2, R = 3 };
enum class Spin : int { Up = 0, Down = 1 };

// Statistics parameter eta.
enum class Statistics : int { Fermion = -1, Boson = 1 };

constexpr int eta_of(Statistics s) { return static_cast<int>(s); }
constexpr Statistics flipped(Statistics s) {
  return s == Statistics::Boson ? Statistics::Fermion : Statistics::Boson;
}
const char* to_string(Statistics s);

inline constexpr int kNumModes = 4;
inline constexpr int kSingleDim = 2 * kNumModes;

constexpr int basis_index(Mode m, Spin s) {
  return 2 * static_cast<int>(m) + static_cast<int>(s);
}

// Amplitudes below this are dropped when terms are coalesced.
inline constexpr double kAmplitudeCutoff = 1e-14;
// Squared norms below this make a ket unnormalizable.
inline constexpr double kZeroNorm2 = 1e-14;

using SingleVector = Eigen::Matrix<Complex, kSingleDim, 1>;
using SingleParticleMap = Eigen::Matrix<Complex, kSingleDim, kSingleDim>;

class SingleParticleKet {
 public:
  SingleParticleKet() : amp_(SingleVector::Zero()) {}
  explicit SingleParticleKet(const SingleVector& amp) : amp_(amp) {}

  static SingleParticleKet basis(Mode m, Spin s);
  // sum_X spatial[X] |X, s>, with spatial indexed by Mode.
  static SingleParticleKet spatial(const std::array<Complex, kNumModes>& spatial, Spin s);

  Complex amplitude(Mode m, Spin s) const { return amp_(basis_index(m, s)); }
  const SingleVector& amplitudes() const { return amp_; }
  double norm2() const { return amp_.squaredNorm(); }

  friend SingleParticleKet operator+(const SingleParticleKet& a, const SingleParticleKet& b) {
    return SingleParticleKet(a.amp_ + b.amp_);
  }
  friend SingleParticleKet operator*(Complex c, const SingleParticleKet& a) {
    return SingleParticleKet(c * a.amp_);
  }

 private:
  SingleVector amp_;
};

// <a|b>, conjugate-linear in a.
Complex sp_inner(const SingleParticleKet& a, const SingleParticleKet& b);

struct Term {
  Complex coeff;
  SingleParticleKet first;
  SingleParticleKet second;
};

class TwoParticleKet {
 public:
  explicit TwoParticleKet(Statistics stats) : stats_(stats) {}
  TwoParticleKet(Statistics stats, std::vector<Term> terms)
      : stats_(stats), terms_(std::move(terms)) {}

  static TwoParticleKet product(Statistics stats, const SingleParticleKet& a,
                                const SingleParticleKet& b, Complex coeff = 1.0);

  Statistics statistics() const { return stats_; }
  int eta() const { return eta_of(stats_); }
  std::span<const Term> terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  TwoParticleKet scaled(Complex c) const;
  // Same terms with the two slots exchanged; as a vector this equals eta * (*this).
  TwoParticleKet swapped() const;
  // Expands every term in the one-particle basis and merges terms onto
  // canonically ordered basis pairs (i <= j, exchange sign applied).
  // Fermionic doubly occupied basis terms vanish identically and are removed.
  TwoParticleKet coalesced() const;

  friend TwoParticleKet operator+(const TwoParticleKet& x, const TwoParticleKet& y);

 private:
  Statistics stats_;
  std::vector<Term> terms_;
};

// No-label inner product <x|y>. Throws ContractError when eta differs.
Complex tp_inner(const TwoParticleKet& x, const TwoParticleKet& y);

struct NormalizedKet {
  TwoParticleKet ket;
  double norm2;
};

// Throws ZeroNormState when the squared norm is below kZeroNorm2.
NormalizedKet normalize_ket(const TwoParticleKet& x);

enum class Slot { Both, First, Second };

// Applies a one-particle linear map term by term. Only Slot::Both is a
// representation-independent operation on the no-label state; First and
// Second act on the stored term order.
TwoParticleKet apply_sp_map(const TwoParticleKet& x, const SingleParticleMap& map,
                            Slot slot = Slot::Both);

struct Component {
  double weight;
  TwoParticleKet ket;
};

// Probabilistic mixture of normalized two-particle kets.
class EnsembleState {
 public:
  // Validates: weights in [0,1] summing to 1, every ket normalized, common eta.
  EnsembleState(Statistics stats, std::vector<Component> components);

  static EnsembleState pure(const TwoParticleKet& ket);

  Statistics statistics() const { return stats_; }
  std::span<const Component> components() const { return components_; }
  double total_weight() const;

 private:
  Statistics stats_;
  std::vector<Component> components_;
};

}  // namespace idrec

#endif  // IDREC_NOLABEL_HPP
