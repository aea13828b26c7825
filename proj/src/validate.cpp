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

#include <cmath>
#include <cstdio>
#include <string>

#include "idrec/entanglement.hpp"
#include "idrec/errors.hpp"
#include "idrec/oracle.hpp"
#include "idrec/random.hpp"
#include "idrec/sweep.hpp"

namespace idrec {

namespace {

enum class Outcome { Ok, PostSelection, ZeroNorm, Other };

template <class F>
Outcome guarded(F&& f) {
  try {
    f();
    return Outcome::Ok;
  } catch (const PostSelectionImpossible&) {
    return Outcome::PostSelection;
  } catch (const ZeroNormState&) {
    return Outcome::ZeroNorm;
  } catch (const Error&) {
    return Outcome::Other;
  }
}

}  // namespace

std::string ValidationReport::text() const {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "validate seed=%llu cases=%d threshold=%.1e\n"
                "max|dC|=%.6e\nmax|dP|=%.6e\nworst_case=%d\nfailures=%d\nstatus=%s\n",
                static_cast<unsigned long long>(seed), cases, threshold, max_abs_dc, max_abs_dp,
                worst_case, failures, passed() ? "PASS" : "FAIL");
  return buf;
}

ValidationReport run_validate(std::uint64_t seed, int cases, double threshold) {
  if (cases < 1) throw DomainError("validate needs at least one case");
  ValidationReport rep;
  rep.seed = seed;
  rep.cases = cases;
  rep.threshold = threshold;
  PortableRng rng(seed);
  double worst = -1.0;
  for (int k = 0; k < cases; ++k) {
    const ChannelKind kind = rng.channel();
    const bool markov = rng.below(2) == 0;
    const LorentzianBath bath = markov ? LorentzianBath::markovian() : LorentzianBath::non_markovian();
    const double gamma_t = rng.uniform(0.0, 10.0);
    const DeformationSpec spec = rng.spec(rng.statistics());

    double c = 0, pr = 0;
    oracle::Result ref{};
    const Outcome main = guarded([&] {
      const double p = p_analytic(gamma_t / bath.gamma(), bath);
      c = concurrence_closed(kind, spec, p);
      pr = success_probability_closed(kind, spec, p);
    });
    const Outcome other = guarded([&] { ref = oracle::pipeline(kind, bath, gamma_t / bath.gamma(), spec); });
    if (main != other) {
      ++rep.failures;
      continue;
    }
    if (main != Outcome::Ok) continue;
    const double dc = std::abs(c - ref.concurrence);
    const double dp = std::abs(pr - ref.probability);
    rep.max_abs_dc = std::max(rep.max_abs_dc, dc);
    rep.max_abs_dp = std::max(rep.max_abs_dp, dp);
    if (std::max(dc, dp) > worst) {
      worst = std::max(dc, dp);
      rep.worst_case = k;
    }
    if (!(dc <= threshold && dp <= threshold)) ++rep.failures;
  }
  return rep;
}

}  // namespace idrec
