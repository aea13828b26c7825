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

#include "idrec/entanglement.hpp"
#include "idrec/errors.hpp"
#include "test_util.hpp"

using namespace idrec;
using idrec::testing::kron2;
using idrec::testing::random_density4;
using idrec::testing::random_unitary2;

namespace {

const ChannelKind kKinds[] = {ChannelKind::ADC, ChannelKind::PDC, ChannelKind::DEP};

DeformationSpec family(double a, Statistics st = Statistics::Fermion) {
  return DeformationSpec::make(std::sqrt(a), std::sqrt(1 - a), std::sqrt(1 - a), std::sqrt(a), st);
}

Eigen::Matrix4cd werner(double p) {
  const double h = std::sqrt(0.5);
  const Eigen::Vector4cd s(0, h, -h, 0);
  return (1 - p) * s * s.adjoint() + p * Eigen::Matrix4cd::Identity() / 4.0;
}

}  // namespace

TEST_CASE("wootters examples") {
  CHECK(wootters(werner(0.0)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(wootters(Eigen::Matrix4cd::Identity() / 4.0) == 0.0);
  for (int i = 0; i <= 30; ++i) {
    const double p = i / 30.0;
    CHECK(std::abs(wootters(werner(p)) - std::max(0.0, 1 - 1.5 * p)) <= 1e-12);
  }
  CHECK(wootters(werner(2.0 / 3.0)) <= 1e-12);
  Eigen::Matrix4cd prod = Eigen::Matrix4cd::Zero();
  prod(1, 1) = 1.0;  // |up down>
  CHECK(wootters(prod) == 0.0);
}

TEST_CASE("wootters contract checks") {
  Eigen::Matrix4cd m = werner(0.2);
  m(0, 1) = 0.3;
  CHECK_THROWS_AS(wootters(m), ContractError);
  CHECK_THROWS_AS(wootters(2.0 * werner(0.2)), ContractError);
  Eigen::Matrix4cd neg = Eigen::Matrix4cd::Zero();
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK_THROWS_AS(wootters(neg), ContractError);
}

TEST_CASE("wootters is invariant under local unitaries") {
  PortableRng rng(21);
  for (int k = 0; k < 300; ++k) {
    const Eigen::Matrix4cd rho = random_density4(rng, 1 + rng.below(4));
    const Eigen::Matrix4cd u = kron2(random_unitary2(rng), random_unitary2(rng));
    Eigen::Matrix4cd r2 = u * rho * u.adjoint();
    r2 = 0.5 * (r2 + r2.adjoint()).eval();
    CHECK(std::abs(wootters(rho) - wootters(r2)) <= 1e-10);
  }
}

TEST_CASE("wootters on pure states equals 2|ad - bc|") {
  PortableRng rng(22);
  for (int k = 0; k < 200; ++k) {
    Eigen::Vector4cd v;
    for (int i = 0; i < 4; ++i) v(i) = rng.complex_normal();
    v.normalize();
    const double expect = 2.0 * std::abs(v(0) * v(3) - v(1) * v(2));
    CHECK(std::abs(wootters(v * v.adjoint()) - expect) <= 1e-10);
  }
}

TEST_CASE("closed forms: I=0 baselines") {
  for (Statistics st : {Statistics::Fermion, Statistics::Boson}) {
    const DeformationSpec s0 = DeformationSpec::separated(st);
    for (int i = 0; i <= 50; ++i) {
      const double p = i / 50.0;
      CHECK(std::abs(concurrence_closed(ChannelKind::ADC, s0, p) - (1 - p)) <= 1e-14);
      CHECK(std::abs(concurrence_closed(ChannelKind::PDC, s0, p) - (1 - p)) <= 1e-14);
      CHECK(std::abs(concurrence_closed(ChannelKind::DEP, s0, p) - std::max(0.0, 1 - 1.5 * p)) <= 1e-14);
      for (ChannelKind k : kKinds) {
        CHECK(delta_c(k, s0, p) == 0.0);
        CHECK(success_probability_closed(k, s0, p) == doctest::Approx(1.0).epsilon(1e-15));
      }
    }
  }
}

TEST_CASE("closed forms: I=1 fermions are immune, success probability 1/2") {
  const DeformationSpec s1 = family(0.5);
  for (ChannelKind k : kKinds)
    for (int i = 0; i <= 100; ++i) {
      const double p = i / 100.0;
      CHECK(std::abs(concurrence_closed(k, s1, p) - 1.0) <= 1e-12);
      CHECK(std::abs(success_probability_closed(k, s1, p) - 0.5) <= 1e-12);
    }
  CHECK(delta_c(ChannelKind::ADC, s1, 0.5) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("closed forms: I=1 bosons success probability") {
  const double h = std::sqrt(0.5);
  const DeformationSpec b = DeformationSpec::make(h, -h, h, h, Statistics::Boson);
  for (int i = 0; i <= 100; ++i) {
    const double p = i / 100.0;
    CHECK(std::abs(success_probability_closed(ChannelKind::ADC, b, p) - (1 - p)) <= 1e-12);
    CHECK(std::abs(success_probability_closed(ChannelKind::PDC, b, p) - (1 - p / 2)) <= 1e-12);
    CHECK(std::abs(success_probability_closed(ChannelKind::DEP, b, p) - (1 - 0.75 * p)) <= 1e-12);
  }
}

TEST_CASE("closed forms match the printed real fermion expressions") {
  for (int ia = 0; ia <= 20; ++ia) {
    const double a = 0.5 + 0.5 * ia / 20.0;
    const double l = std::sqrt(a), r = std::sqrt(1 - a), lp = r, rp = l;
    const DeformationSpec s = family(a);
    const double base = (l * rp) * (l * rp) + (lp * r) * (lp * r);
    const double x = 2 * l * lp * r * rp;
    for (int i = 0; i <= 20; ++i) {
      const double p = i / 20.0;
      const double adc_den = base + x * (1 - 2 * p);  // 0/0 at I=1, p=1
      const double adc = (base + x) * (1 - p) / adc_den;
      const double pdc = ((1 - p) * base + x) / (base + (1 - p) * x);
      const double dep = std::max(0.0, ((1 - 1.5 * p) * base + x) / (base + (1 - 1.5 * p) * x));
      if (adc_den > 1e-12) CHECK(std::abs(concurrence_closed(ChannelKind::ADC, s, p) - adc) <= 1e-12);
      CHECK(std::abs(concurrence_closed(ChannelKind::PDC, s, p) - pdc) <= 1e-12);
      CHECK(std::abs(concurrence_closed(ChannelKind::DEP, s, p) - dep) <= 1e-12);
    }
  }
}

TEST_CASE("PDC concurrence equals the max-minus-min eigenvalue construction") {
  PortableRng rng(23);
  for (int k = 0; k < 200; ++k) {
    const DeformationSpec s = rng.spec(rng.statistics());
    const double p = rng.uniform();
    const double am = (1 - p / 2) * std::norm(s.singlet_amplitude());
    const double ap = (p / 2) * std::norm(s.symmetric_amplitude());
    const double la = am / (am + ap), lb = ap / (am + ap);
    CHECK(std::abs(concurrence_closed(ChannelKind::PDC, s, p) - std::max(0.0, std::max(la, lb) - std::min(la, lb))) <=
          1e-12);
  }
}

TEST_CASE("closed forms agree with the state-level pipeline") {
  PortableRng rng(24);
  for (int k = 0; k < 1000; ++k) {
    const Statistics st = rng.statistics();
    const DeformationSpec s = rng.spec(st);
    const ChannelKind kind = rng.channel();
    const double p = rng.uniform();
    const PipelineResult pr = run_pipeline(kind, s, p);
    CHECK(std::abs(pr.concurrence - concurrence_closed(kind, s, p)) <= 1e-9);
    CHECK(std::abs(pr.probability - success_probability_closed(kind, s, p)) <= 1e-9);
  }
}

TEST_CASE("c_infinity") {
  CHECK(c_infinity(ChannelKind::PDC, family(0.5)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(c_infinity(ChannelKind::DEP, family(1.0)) == 0.0);
  CHECK(c_infinity(ChannelKind::PDC, family(0.7)) == doctest::Approx(0.42 / 0.58).epsilon(1e-12));
  CHECK(c_infinity(ChannelKind::PDC, family(0.7)) == doctest::Approx(0.7241).epsilon(1e-4));
  CHECK(c_infinity(ChannelKind::ADC, family(0.5)) == 1.0);
  CHECK(c_infinity(ChannelKind::ADC, family(0.7)) == 0.0);
  CHECK_THROWS_AS(c_infinity(ChannelKind::PDC, DeformationSpec::make(Complex(0, 1), 0, 0, 1, Statistics::Fermion)),
                  DomainError);
  for (int ia = 0; ia <= 20; ++ia) {
    const double a = 0.5 + 0.5 * ia / 20.0;
    const double l = std::sqrt(a), r = std::sqrt(1 - a), lp = r, rp = l;
    const double base = (l * rp) * (l * rp) + (lp * r) * (lp * r);
    const double x = l * lp * r * rp;
    CHECK(std::abs(c_infinity(ChannelKind::PDC, family(a)) - 2 * x / base) <= 1e-12);
    CHECK(std::abs(c_infinity(ChannelKind::DEP, family(a)) - std::max(0.0, -(base - 4 * x) / (2 * (base - x)))) <=
          1e-12);
    // ADC limit of the closed form
    CHECK(std::abs(c_infinity(ChannelKind::ADC, family(a)) - concurrence_closed(ChannelKind::ADC, family(a), 1.0)) <=
          1e-12);
  }
}

TEST_CASE("delta_c") {
  CHECK(delta_c(ChannelKind::ADC, family(0.5), 0.5) == doctest::Approx(0.5).epsilon(1e-14));
  for (double a : {0.55, 0.7, 0.9})
    for (double p : {0.7, 0.8, 0.95})
      CHECK(delta_c(ChannelKind::DEP, family(a), p) == concurrence_closed(ChannelKind::DEP, family(a), p));
}

TEST_CASE("statistics_dual") {
  const DeformationSpec f = family(0.8);
  const DeformationSpec b = statistics_dual(f);
  CHECK(b.stats == Statistics::Boson);
  CHECK(b.r == -f.r);
  CHECK(b.l == f.l);
  const DeformationSpec back = statistics_dual(b);
  CHECK(back.stats == f.stats);
  CHECK(back.r == f.r);
  CHECK(indistinguishability(b) == indistinguishability(f));
  for (ChannelKind k : kKinds) CHECK(concurrence_closed(k, b, 0.3) == doctest::Approx(concurrence_closed(k, f, 0.3)));
  PortableRng rng(25);
  for (int k = 0; k < 200; ++k) {
    const DeformationSpec s = rng.spec(rng.statistics());
    const ChannelKind kind = rng.channel();
    const double p = rng.uniform();
    CHECK(std::abs(concurrence_closed(kind, s, p) - concurrence_closed(kind, statistics_dual(s), p)) <= 1e-10);
  }
}

TEST_CASE("monotone in I, nonnegative gain, ranges") {
  for (ChannelKind k : kKinds)
    for (int ip = 1; ip <= 9; ++ip) {
      const double p = ip / 10.0;
      double prev = -1.0;
      for (int ii = 0; ii <= 20; ++ii) {
        const DeformationSpec s = spec_for_target_i(ii / 20.0, Statistics::Fermion);
        const double c = concurrence_closed(k, s, p);
        CHECK(c >= prev - 1e-12);
        prev = c;
        CHECK(delta_c(k, s, p) >= -1e-12);
        const double pr = success_probability_closed(k, s, p);
        CHECK(c >= -1e-12);
        CHECK(c <= 1 + 1e-12);
        CHECK(pr >= -1e-12);
        CHECK(pr <= 1 + 1e-12);
      }
    }
}

TEST_CASE("degenerate endpoints use the continuous limit") {
  // ADC at p = 1 with I = 1 fermions: the symmetric sector is annihilated.
  const DeformationSpec s1 = family(0.5);
  CHECK(concurrence_closed(ChannelKind::ADC, s1, 1.0) == 1.0);
  CHECK(success_probability_closed(ChannelKind::ADC, s1, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(success_probability_closed(ChannelKind::ADC, s1, 1.0 - 1e-9) == doctest::Approx(0.5).epsilon(1e-12));
  // the state itself is annihilated there
  CHECK_THROWS_AS(run_pipeline(ChannelKind::ADC, s1, 1.0), ZeroNormState);
  // bosons at I = 1 and p = 1: nothing survives post-selection
  const DeformationSpec b1 = statistics_dual(s1);
  CHECK(success_probability_closed(ChannelKind::ADC, b1, 1.0) == 0.0);
  CHECK_THROWS_AS(concurrence_closed(ChannelKind::ADC, b1, 1.0), PostSelectionImpossible);
  // lr' = l'r = 0
  const DeformationSpec dead = DeformationSpec::make(1.0, 0.0, 1.0, 0.0, Statistics::Boson);
  CHECK_THROWS_AS(concurrence_closed(ChannelKind::PDC, dead, 0.3), DomainError);
  CHECK_THROWS_AS(concurrence_closed(ChannelKind::PDC, family(0.7), 1.5), DomainError);
}
