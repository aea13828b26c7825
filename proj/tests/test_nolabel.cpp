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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "idrec/errors.hpp"
#include "idrec/nolabel.hpp"
#include "test_util.hpp"

using namespace idrec;
using idrec::testing::random_sp;
using idrec::testing::random_tp;

namespace {

SingleParticleKet psi(Complex l, Complex r, Spin s) {
  return SingleParticleKet::spatial({0.0, 0.0, l, r}, s);
}

const Statistics kBoth[] = {Statistics::Fermion, Statistics::Boson};

}  // namespace

TEST_CASE("sp_inner basics") {
  const auto au = SingleParticleKet::basis(Mode::A, Spin::Up);
  const auto bu = SingleParticleKet::basis(Mode::B, Spin::Up);
  CHECK(sp_inner(au, au) == Complex(1.0));
  CHECK(sp_inner(au, bu) == Complex(0.0));

  const Complex l(0.6, 0.2), r(0.3, -0.5), lp(-0.1, 0.4), rp(0.7, 0.1);
  const Complex got = sp_inner(psi(l, r, Spin::Up), psi(lp, rp, Spin::Up));
  CHECK(std::abs(got - (std::conj(l) * lp + std::conj(r) * rp)) < 1e-15);
  CHECK(sp_inner(psi(l, r, Spin::Up), psi(lp, rp, Spin::Down)) == Complex(0.0));
}

TEST_CASE("sp_inner is conjugate-linear on the left and positive") {
  PortableRng rng(1);
  for (int k = 0; k < 100; ++k) {
    const auto a = random_sp(rng), b = random_sp(rng);
    const Complex c = rng.complex_normal();
    CHECK(std::abs(sp_inner(c * a, b) - std::conj(c) * sp_inner(a, b)) < 1e-12);
    CHECK(std::abs(sp_inner(a, c * b) - c * sp_inner(a, b)) < 1e-12);
    CHECK(std::abs(sp_inner(a, a).imag()) < 1e-14);
    CHECK(sp_inner(a, a).real() >= 0.0);
  }
}

TEST_CASE("tp_inner examples") {
  const auto au = SingleParticleKet::basis(Mode::A, Spin::Up);
  const auto bd = SingleParticleKet::basis(Mode::B, Spin::Down);
  for (Statistics st : kBoth) {
    const auto x = TwoParticleKet::product(st, au, bd);
    CHECK(std::abs(tp_inner(x, x) - 1.0) < 1e-15);
  }

  const Complex l(0.8, 0.0), r(0.6, 0.0), lp(0.6, 0.0), rp(0.8, 0.0);
  const double ov2 = std::norm(std::conj(l) * lp + std::conj(r) * rp);
  for (Statistics st : kBoth) {
    const int eta = eta_of(st);
    // |psi1 up, psi2 up>: 1 + eta |<psi1|psi2>|^2
    const auto up = TwoParticleKet::product(st, psi(l, r, Spin::Up), psi(lp, rp, Spin::Up));
    CHECK(std::abs(tp_inner(up, up).real() - (1.0 + eta * ov2)) < 1e-14);
    // deformed singlet (|psi1 up, psi2 down> - |psi1 down, psi2 up>)/sqrt2: 1 - eta |<psi1|psi2>|^2
    const auto s = (TwoParticleKet::product(st, psi(l, r, Spin::Up), psi(lp, rp, Spin::Down)) +
                    TwoParticleKet::product(st, psi(l, r, Spin::Down), psi(lp, rp, Spin::Up), -1.0))
                       .scaled(1.0 / std::sqrt(2.0));
    CHECK(std::abs(tp_inner(s, s).real() - (1.0 - eta * ov2)) < 1e-14);
  }
}

TEST_CASE("tp_inner rejects mismatched statistics") {
  const auto au = SingleParticleKet::basis(Mode::A, Spin::Up);
  const auto bd = SingleParticleKet::basis(Mode::B, Spin::Down);
  const auto f = TwoParticleKet::product(Statistics::Fermion, au, bd);
  const auto b = TwoParticleKet::product(Statistics::Boson, au, bd);
  CHECK_THROWS_AS(tp_inner(f, b), ContractError);
}

TEST_CASE("exchange statistics and positivity on random kets") {
  PortableRng rng(2);
  for (int k = 0; k < 500; ++k) {
    const Statistics st = rng.statistics();
    const auto x = random_tp(rng, st), y = random_tp(rng, st);
    const Complex xy = tp_inner(x, y);
    CHECK(std::abs(tp_inner(x.swapped(), y) - static_cast<double>(eta_of(st)) * xy) <=
          1e-12 * (1.0 + std::abs(xy)));
    const Complex xx = tp_inner(x, x);
    CHECK(std::abs(xx.imag()) <= 1e-12 * (1.0 + xx.real()));
    CHECK(xx.real() >= -1e-12);
    // Hermitian symmetry
    CHECK(std::abs(tp_inner(y, x) - std::conj(xy)) <= 1e-12 * (1.0 + std::abs(xy)));
  }
}

TEST_CASE("coalescing preserves the vector") {
  PortableRng rng(3);
  for (int k = 0; k < 100; ++k) {
    const Statistics st = rng.statistics();
    const auto x = random_tp(rng, st), y = random_tp(rng, st);
    const auto xc = x.coalesced();
    const Complex a = tp_inner(x, y), b = tp_inner(xc, y);
    CHECK(std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a)));
  }
}

TEST_CASE("Pauli exclusion") {
  PortableRng rng(4);
  for (int k = 0; k < 50; ++k) {
    const auto phi = random_sp(rng);
    const auto x = TwoParticleKet::product(Statistics::Fermion, phi, phi);
    CHECK(std::abs(tp_inner(x, x)) < 1e-12);
    CHECK(x.coalesced().empty());
    CHECK_THROWS_AS(normalize_ket(x), ZeroNormState);
    // bosons may doubly occupy
    const auto b = TwoParticleKet::product(Statistics::Boson, phi, phi);
    CHECK(tp_inner(b, b).real() > 0.0);
  }
}

TEST_CASE("normalize_ket") {
  const auto au = SingleParticleKet::basis(Mode::A, Spin::Up);
  const auto bd = SingleParticleKet::basis(Mode::B, Spin::Down);
  const auto x = TwoParticleKet::product(Statistics::Fermion, au, bd);
  const NormalizedKet n = normalize_ket(x);
  CHECK(std::abs(n.norm2 - 1.0) < 1e-15);
  CHECK(std::abs(tp_inner(n.ket, x) - 1.0) < 1e-15);

  PortableRng rng(5);
  for (int k = 0; k < 50; ++k) {
    const auto y = random_tp(rng, rng.statistics());
    const NormalizedKet m = normalize_ket(y);
    CHECK(std::abs(tp_inner(m.ket, m.ket) - 1.0) < 1e-12);
    CHECK(std::abs(m.norm2 - tp_inner(y, y).real()) < 1e-12 * m.norm2);
  }

  // deformed singlet: norm^2 = C1^2
  for (Statistics st : kBoth) {
    const double l = std::sqrt(0.8), r = std::sqrt(0.2);
    const auto s = TwoParticleKet::product(st, psi(l, r, Spin::Up), psi(r, l, Spin::Down)) +
                   TwoParticleKet::product(st, psi(l, r, Spin::Down), psi(r, l, Spin::Up), -1.0);
    const double ov = 2 * l * r;
    CHECK(std::abs(normalize_ket(s.scaled(1 / std::sqrt(2.0))).norm2 - (1.0 - eta_of(st) * ov * ov)) <
          1e-14);
  }
}

TEST_CASE("apply_sp_map examples") {
  const auto au = SingleParticleKet::basis(Mode::A, Spin::Up);
  const auto bd = SingleParticleKet::basis(Mode::B, Spin::Down);
  for (Statistics st : kBoth) {
    const auto x = TwoParticleKet::product(st, au, bd);
    const auto same = apply_sp_map(x, SingleParticleMap::Identity());
    CHECK(std::abs(tp_inner(same, x) - 1.0) < 1e-15);
    CHECK(std::abs(tp_inner(same, same) - 1.0) < 1e-15);

    SingleParticleMap relabel = SingleParticleMap::Zero();
    for (Spin s : {Spin::Up, Spin::Down}) {
      relabel(basis_index(Mode::L, s), basis_index(Mode::A, s)) = 1.0;
      relabel(basis_index(Mode::R, s), basis_index(Mode::B, s)) = 1.0;
    }
    const auto lr = apply_sp_map(x, relabel);
    const auto expect = TwoParticleKet::product(st, SingleParticleKet::basis(Mode::L, Spin::Up),
                                                SingleParticleKet::basis(Mode::R, Spin::Down));
    CHECK(std::abs(tp_inner(expect, lr) - 1.0) < 1e-15);
    CHECK(std::abs(tp_inner(lr, lr) - 1.0) < 1e-15);

    // A -> psi1, B -> psi2
    const Complex l(0.6, 0.0), r(0.0, 0.8), lp(0.28, 0.0), rp(0.96, 0.0);
    SingleParticleMap d = SingleParticleMap::Zero();
    for (Spin s : {Spin::Up, Spin::Down}) {
      d(basis_index(Mode::L, s), basis_index(Mode::A, s)) = l;
      d(basis_index(Mode::R, s), basis_index(Mode::A, s)) = r;
      d(basis_index(Mode::L, s), basis_index(Mode::B, s)) = lp;
      d(basis_index(Mode::R, s), basis_index(Mode::B, s)) = rp;
    }
    const auto deformed = apply_sp_map(x, d);
    const auto target = TwoParticleKet::product(st, psi(l, r, Spin::Up), psi(lp, rp, Spin::Down));
    const Complex tt = tp_inner(target, target);
    CHECK(std::abs(tp_inner(target, deformed) - tt) < 1e-14);
    CHECK(std::abs(tp_inner(deformed, deformed) - tt) < 1e-14);
  }
}

TEST_CASE("apply_sp_map is linear") {
  PortableRng rng(6);
  for (int k = 0; k < 50; ++k) {
    const Statistics st = rng.statistics();
    SingleParticleMap m;
    for (int i = 0; i < kSingleDim; ++i)
      for (int j = 0; j < kSingleDim; ++j) m(i, j) = rng.complex_normal();
    const auto x = random_tp(rng, st), y = random_tp(rng, st), z = random_tp(rng, st);
    const Complex c = rng.complex_normal();
    const auto lhs = apply_sp_map(x + y.scaled(c), m);
    const auto rhs = apply_sp_map(x, m) + apply_sp_map(y, m).scaled(c);
    const Complex a = tp_inner(z, lhs), b = tp_inner(z, rhs);
    CHECK(std::abs(a - b) <= 1e-10 * (1.0 + std::abs(a)));
  }
}

TEST_CASE("EnsembleState validation") {
  const auto au = SingleParticleKet::basis(Mode::A, Spin::Up);
  const auto bd = SingleParticleKet::basis(Mode::B, Spin::Down);
  const auto bu = SingleParticleKet::basis(Mode::B, Spin::Up);
  const auto x = TwoParticleKet::product(Statistics::Fermion, au, bd);
  const auto y = TwoParticleKet::product(Statistics::Fermion, au, bu);
  CHECK_NOTHROW(EnsembleState(Statistics::Fermion, {{0.25, x}, {0.75, y}}));
  CHECK(std::abs(EnsembleState(Statistics::Fermion, {{0.25, x}, {0.75, y}}).total_weight() - 1.0) < 1e-15);
  CHECK_THROWS_AS(EnsembleState(Statistics::Fermion, {{0.5, x}, {0.75, y}}), ContractError);
  CHECK_THROWS_AS(EnsembleState(Statistics::Fermion, {{1.0, x.scaled(2.0)}}), ContractError);
  CHECK_THROWS_AS(EnsembleState(Statistics::Fermion, {{-0.5, x}, {1.5, y}}), ContractError);
  CHECK_THROWS_AS(EnsembleState(Statistics::Boson, {{1.0, x}}), ContractError);
}
