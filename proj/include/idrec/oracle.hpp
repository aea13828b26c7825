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

#ifndef IDREC_ORACLE_HPP
#define IDREC_ORACLE_HPP

// Brute-force reference implementation in first quantization.
//
// Two identical particles are represented by (anti)symmetrized vectors in the
// labeled 64-dimensional space (8 one-particle states)^(x)2 and every step of
// the protocol is carried out with dense matrices. Nothing here calls the
// no-label algebra, the closed forms, or Eigen: the point is to disagree with
// the main path whenever the main path is wrong.

#include <complex>
#include <cstddef>
#include <vector>

#include "idrec/channels.hpp"
#include "idrec/nolabel.hpp"
#include "idrec/protocol.hpp"

namespace idrec::oracle {

inline constexpr int kLabeledDim = kSingleDim * kSingleDim;

// Row-major dense complex matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}
  static DenseMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Complex& operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  Complex operator()(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

  DenseMatrix adjoint() const;
  DenseMatrix transpose() const;
  Complex trace() const;
  double max_abs() const;

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator*(Complex c, const DenseMatrix& a);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> data_;
};

using LabeledVector = std::vector<Complex>;  // size kLabeledDim
using LabeledDensity = DenseMatrix;          // kLabeledDim x kLabeledDim

// |phi1> (x) |phi2> + eta |phi2> (x) |phi1>, unnormalized. Its inner products
// are exactly twice the no-label ones.
LabeledVector symmetrize(const SingleParticleKet& phi1, const SingleParticleKet& phi2, int eta);

Complex labeled_inner(const LabeledVector& a, const LabeledVector& b);

// Kronecker square M (x) M of a one-particle operator given as 8x8.
DenseMatrix lift(const DenseMatrix& one_particle);

// || P_eta rho P_eta - rho ||_max with P_eta = (1 + eta SWAP)/2.
double sector_residual(const LabeledDensity& rho, int eta);

// Labeled rho_AB(t) for the singlet initial state under the given noise.
LabeledDensity evolved_density(ChannelKind kind, double p, int eta);

// 4x4 spin density (basis uu, ud, du, dd) of a labeled state with one particle
// in region x and one in region y (projected, not renormalized).
DenseMatrix region_pair_density(const LabeledDensity& rho, Mode x, Mode y, int eta);

// Squared norms of the deformed singlet and of the deformed |A up, B up>,
// relative to their undeformed norms (C1^2 and C2^2).
struct DeformedNorms {
  double singlet;
  double symmetric;
};
DeformedNorms deformed_norms(const DeformationSpec& spec);

// Concurrence from an independent Jacobi-based routine.
double concurrence(const DenseMatrix& rho4);

struct Result {
  double concurrence;
  double probability;
  DenseMatrix rho_lr;
};

// Throws PostSelectionImpossible / ZeroNormState like the main path.
Result pipeline_at_p(ChannelKind kind, double p, const DeformationSpec& spec);
Result pipeline(ChannelKind kind, const LorentzianBath& bath, double t, const DeformationSpec& spec);

// p(t) evaluated with complex arithmetic directly from the printed closed form.
double decoherence(const LorentzianBath& bath, double t);

}  // namespace idrec::oracle

#endif  // IDREC_ORACLE_HPP
