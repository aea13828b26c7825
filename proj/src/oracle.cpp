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

#include "idrec/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>

#include "idrec/errors.hpp"

namespace idrec::oracle {

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Complex DenseMatrix::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double DenseMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& x : data_) m = std::max(m, std::abs(x));
  return m;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const Complex aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

DenseMatrix operator*(Complex s, const DenseMatrix& a) {
  DenseMatrix c = a;
  for (auto& x : c.data_) x *= s;
  return c;
}

namespace {

constexpr int kUp = 0;
constexpr int kDown = 1;

int one_particle_index(Mode m, int spin) { return 2 * static_cast<int>(m) + spin; }

std::vector<Complex> unit(Mode m, int spin) {
  std::vector<Complex> v(kSingleDim);
  v[one_particle_index(m, spin)] = 1.0;
  return v;
}

LabeledVector sym_raw(const std::vector<Complex>& a, const std::vector<Complex>& b, int eta) {
  LabeledVector v(kLabeledDim);
  for (int i = 0; i < kSingleDim; ++i)
    for (int j = 0; j < kSingleDim; ++j)
      v[i * kSingleDim + j] = a[i] * b[j] + static_cast<double>(eta) * b[i] * a[j];
  return v;
}

LabeledVector act(const DenseMatrix& m, const LabeledVector& v) {
  LabeledVector out(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

void add_projector(DenseMatrix& rho, const LabeledVector& v, double w = 1.0) {
  for (int i = 0; i < kLabeledDim; ++i) {
    if (v[i] == 0.0) continue;
    for (int j = 0; j < kLabeledDim; ++j) rho(i, j) += w * v[i] * std::conj(v[j]);
  }
}

LabeledVector normalized(LabeledVector v) {
  const double n = std::sqrt(labeled_inner(v, v).real());
  for (auto& x : v) x /= n;
  return v;
}

// Normalized one-particle-in-x, one-in-y basis state for spins (s, t).
LabeledVector pair_state(Mode x, int s, Mode y, int t, int eta) {
  LabeledVector v = sym_raw(unit(x, s), unit(y, t), eta);
  for (auto& c : v) c /= std::sqrt(2.0);
  return v;
}

LabeledVector singlet(int eta) {
  LabeledVector a = sym_raw(unit(Mode::A, kUp), unit(Mode::B, kDown), eta);
  const LabeledVector b = sym_raw(unit(Mode::A, kDown), unit(Mode::B, kUp), eta);
  for (int i = 0; i < kLabeledDim; ++i) a[i] -= b[i];
  return normalized(a);
}

using Spin2 = std::array<std::array<Complex, 2>, 2>;

// 8x8 one-particle operator: ea on the spin of A, eb on the spin of B, identity on L, R.
DenseMatrix local_pair(const Spin2& ea, const Spin2& eb) {
  DenseMatrix m = DenseMatrix::identity(kSingleDim);
  for (int s = 0; s < 2; ++s) {
    for (int t = 0; t < 2; ++t) {
      m(one_particle_index(Mode::A, s), one_particle_index(Mode::A, t)) = ea[s][t];
      m(one_particle_index(Mode::B, s), one_particle_index(Mode::B, t)) = eb[s][t];
    }
  }
  return m;
}

struct WeightedOp {
  double weight;
  DenseMatrix one_particle;
};

std::vector<WeightedOp> noise_operators(ChannelKind kind, double p) {
  std::vector<WeightedOp> ops;
  if (kind == ChannelKind::DEP) {
    const Complex i(0.0, 1.0);
    const std::array<Spin2, 4> pauli = {Spin2{{{1.0, 0.0}, {0.0, 1.0}}},
                                        Spin2{{{0.0, 1.0}, {1.0, 0.0}}},
                                        Spin2{{{0.0, -i}, {i, 0.0}}},
                                        Spin2{{{1.0, 0.0}, {0.0, -1.0}}}};
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        ops.push_back({a == 0 && b == 0 ? 1.0 - 15.0 * p / 16.0 : p / 16.0,
                       local_pair(pauli[a], pauli[b])});
    return ops;
  }
  std::array<Spin2, 2> k;
  if (kind == ChannelKind::ADC) {
    k[0] = Spin2{{{1.0, 0.0}, {0.0, std::sqrt(1.0 - p)}}};
    k[1] = Spin2{{{0.0, std::sqrt(p)}, {0.0, 0.0}}};
  } else {
    k[0] = Spin2{{{1.0, 0.0}, {0.0, std::sqrt(1.0 - p)}}};
    k[1] = Spin2{{{0.0, 0.0}, {0.0, std::sqrt(p)}}};
  }
  for (const auto& ea : k)
    for (const auto& eb : k) ops.push_back({1.0, local_pair(ea, eb)});
  return ops;
}

DenseMatrix deformation(const DeformationSpec& spec) {
  DenseMatrix d = DenseMatrix::identity(kSingleDim);
  for (int s = 0; s < 2; ++s) {
    const int a = one_particle_index(Mode::A, s);
    const int b = one_particle_index(Mode::B, s);
    d(a, a) = 0.0;
    d(b, b) = 0.0;
    d(one_particle_index(Mode::L, s), a) = spec.l;
    d(one_particle_index(Mode::R, s), a) = spec.r;
    d(one_particle_index(Mode::L, s), b) = spec.lp;
    d(one_particle_index(Mode::R, s), b) = spec.rp;
  }
  return d;
}

// ---- real symmetric eigen / SVD by Jacobi rotations -------------------------

using RealMatrix = std::vector<std::vector<double>>;

RealMatrix real_zero(int n, int m) { return RealMatrix(n, std::vector<double>(m, 0.0)); }

// Hermitian n x n -> real symmetric 2n x 2n [[Re, -Im], [Im, Re]].
RealMatrix embed(const DenseMatrix& h) {
  const int n = h.rows();
  RealMatrix r = real_zero(2 * n, h.cols() * 2);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < h.cols(); ++j) {
      r[i][j] = h(i, j).real();
      r[i][j + h.cols()] = -h(i, j).imag();
      r[i + n][j] = h(i, j).imag();
      r[i + n][j + h.cols()] = h(i, j).real();
    }
  }
  return r;
}

DenseMatrix unembed(const RealMatrix& r, int n, int m) {
  DenseMatrix h(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) h(i, j) = Complex(r[i][j], r[i + n][j]);
  return h;
}

// Cyclic Jacobi: a = v diag(w) v^T.
void jacobi_eigen(RealMatrix a, std::vector<double>& w, RealMatrix& v) {
  const int n = static_cast<int>(a.size());
  v = real_zero(n, n);
  for (int i = 0; i < n; ++i) v[i][i] = 1.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0, diag = 0.0;
    for (int p = 0; p < n; ++p) {
      diag += a[p][p] * a[p][p];
      for (int q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    }
    if (off <= 1e-36 * diag || off < 1e-300) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  w.resize(n);
  for (int i = 0; i < n; ++i) w[i] = a[i][i];
}

// One-sided (Hestenes) Jacobi: singular values of a general real matrix.
std::vector<double> jacobi_singular_values(RealMatrix a) {
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(a[0].size());
  for (int sweep = 0; sweep < 100; ++sweep) {
    bool rotated = false;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        double alpha = 0, beta = 0, gamma = 0;
        for (int k = 0; k < m; ++k) {
          alpha += a[k][i] * a[k][i];
          beta += a[k][j] * a[k][j];
          gamma += a[k][i] * a[k][j];
        }
        if (gamma == 0.0 || std::abs(gamma) <= 1e-15 * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (int k = 0; k < m; ++k) {
          const double x = a[k][i], y = a[k][j];
          a[k][i] = c * x - s * y;
          a[k][j] = s * x + c * y;
        }
      }
    }
    if (!rotated) break;
  }
  std::vector<double> sv(n);
  for (int j = 0; j < n; ++j) {
    double s = 0;
    for (int k = 0; k < m; ++k) s += a[k][j] * a[k][j];
    sv[j] = std::sqrt(s);
  }
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

}  // namespace

LabeledVector symmetrize(const SingleParticleKet& phi1, const SingleParticleKet& phi2, int eta) {
  std::vector<Complex> a(kSingleDim), b(kSingleDim);
  for (int i = 0; i < kSingleDim; ++i) {
    a[i] = phi1.amplitudes()(i);
    b[i] = phi2.amplitudes()(i);
  }
  return sym_raw(a, b, eta);
}

Complex labeled_inner(const LabeledVector& a, const LabeledVector& b) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

DenseMatrix lift(const DenseMatrix& m) {
  DenseMatrix k(kLabeledDim, kLabeledDim);
  for (int i1 = 0; i1 < kSingleDim; ++i1)
    for (int i2 = 0; i2 < kSingleDim; ++i2)
      for (int j1 = 0; j1 < kSingleDim; ++j1) {
        const Complex a = m(i1, j1);
        if (a == 0.0) continue;
        for (int j2 = 0; j2 < kSingleDim; ++j2)
          k(i1 * kSingleDim + i2, j1 * kSingleDim + j2) = a * m(i2, j2);
      }
  return k;
}

double sector_residual(const LabeledDensity& rho, int eta) {
  DenseMatrix proj(kLabeledDim, kLabeledDim);
  for (int i = 0; i < kSingleDim; ++i)
    for (int j = 0; j < kSingleDim; ++j) {
      proj(i * kSingleDim + j, i * kSingleDim + j) += 0.5;
      proj(i * kSingleDim + j, j * kSingleDim + i) += 0.5 * eta;
    }
  return (proj * rho * proj - rho).max_abs();
}

LabeledDensity evolved_density(ChannelKind kind, double p, int eta) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("disturbance probability must lie in [0,1]");
  const LabeledVector psi0 = singlet(eta);
  LabeledDensity rho(kLabeledDim, kLabeledDim);
  for (const auto& op : noise_operators(kind, p)) {
    if (op.weight == 0.0) continue;
    add_projector(rho, act(lift(op.one_particle), psi0), op.weight);
  }
  return rho;
}

DenseMatrix region_pair_density(const LabeledDensity& rho, Mode x, Mode y, int eta) {
  std::array<LabeledVector, 4> u;
  int k = 0;
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t) u[k++] = pair_state(x, s, y, t, eta);
  DenseMatrix out(4, 4);
  for (int b = 0; b < 4; ++b) {
    const LabeledVector rub = act(rho, u[b]);
    for (int a = 0; a < 4; ++a) out(a, b) = labeled_inner(u[a], rub);
  }
  return out;
}

DeformedNorms deformed_norms(const DeformationSpec& spec) {
  const int eta = spec.eta();
  const DenseMatrix big_d = lift(deformation(spec));
  const LabeledVector s = singlet(eta);
  const LabeledVector up = normalized(sym_raw(unit(Mode::A, kUp), unit(Mode::B, kUp), eta));
  const LabeledVector ds = act(big_d, s);
  const LabeledVector du = act(big_d, up);
  return {labeled_inner(ds, ds).real(), labeled_inner(du, du).real()};
}

double concurrence(const DenseMatrix& rho4) {
  // sqrt(rho) through the real embedding: embed(sqrt(rho)) = sqrt(embed(rho)).
  std::vector<double> w;
  RealMatrix v;
  jacobi_eigen(embed(rho4), w, v);
  const int n2 = static_cast<int>(w.size());
  const double floor = 8.0 * std::numeric_limits<double>::epsilon() * *std::max_element(w.begin(), w.end());
  std::vector<double> rw(n2);
  for (int k = 0; k < n2; ++k) rw[k] = w[k] > floor ? std::sqrt(w[k]) : 0.0;
  RealMatrix root = real_zero(n2, n2);
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < n2; ++j) {
      double s = 0.0;
      for (int k = 0; k < n2; ++k) s += v[i][k] * rw[k] * v[j][k];
      root[i][j] = s;
    }
  const DenseMatrix sqrt_rho = unembed(root, 4, 4);

  DenseMatrix yy(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  // tau = sqrt(rho)^T (sy x sy) sqrt(rho); its singular values are the
  // square roots of the spectrum of rho rho~.
  const DenseMatrix tau = sqrt_rho.transpose() * yy * sqrt_rho;
  const std::vector<double> sv2 = jacobi_singular_values(embed(tau));
  // every singular value of tau appears twice in the embedding
  const double c = sv2[0] - sv2[2] - sv2[4] - sv2[6];
  return std::max(0.0, c);
}

Result pipeline_at_p(ChannelKind kind, double p, const DeformationSpec& spec) {
  const int eta = spec.eta();
  const LabeledDensity rho_ab = evolved_density(kind, p, eta);
  const DenseMatrix big_d = lift(deformation(spec));
  const LabeledDensity raw = big_d * rho_ab * big_d.adjoint();
  const double norm = raw.trace().real();
  if (norm < 1e-14) throw ZeroNormState("oracle: deformation annihilates the state");
  const LabeledDensity rho_d = (1.0 / norm) * raw;

  const DenseMatrix proj = region_pair_density(rho_d, Mode::L, Mode::R, eta);
  const double prob = proj.trace().real();
  if (prob < 1e-14) throw PostSelectionImpossible("oracle: zero post-selection probability");
  DenseMatrix rho_lr = (1.0 / prob) * proj;
  return {concurrence(rho_lr), prob, rho_lr};
}

double decoherence(const LorentzianBath& bath, double t) {
  const double g = bath.gamma();
  const double l = bath.lambda();
  const Complex d = std::sqrt(Complex(2.0 * g * l - l * l, 0.0));
  if (std::abs(d) < 1e-12) {
    const double env = std::exp(-0.5 * l * t) * (1.0 + 0.5 * l * t);
    return 1.0 - env * env;
  }
  const Complex bracket = std::cos(0.5 * d * t) + (l / d) * std::sin(0.5 * d * t);
  const Complex value = std::exp(-l * t) * bracket * bracket;
  return std::clamp(1.0 - value.real(), 0.0, 1.0);
}

Result pipeline(ChannelKind kind, const LorentzianBath& bath, double t, const DeformationSpec& spec) {
  if (!(t >= 0.0)) throw DomainError("time must be non-negative");
  return pipeline_at_p(kind, decoherence(bath, t), spec);
}

}  // namespace idrec::oracle
