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

#ifndef IDREC_RANDOM_HPP
#define IDREC_RANDOM_HPP

// Seeded draws that are bit-identical across standard libraries:
// std::mt19937_64 is fully specified, the std distributions are not.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "idrec/channels.hpp"
#include "idrec/protocol.hpp"

namespace idrec {

class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : eng_(seed) {}

  // [0, 1)
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // [0, n)
  int below(int n) { return static_cast<int>(uniform() * n); }
  double normal() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }
  Complex complex_normal() {
    const double re = normal();
    return {re, normal()};
  }

  ChannelKind channel() { return static_cast<ChannelKind>(below(3)); }
  Statistics statistics() { return below(2) ? Statistics::Boson : Statistics::Fermion; }

  // Haar-like pair of normalized complex (l, r) and (l', r').
  DeformationSpec spec(Statistics stats) {
    Complex c[4];
    for (auto& x : c) x = complex_normal();
    const double n1 = std::sqrt(std::norm(c[0]) + std::norm(c[1]));
    const double n2 = std::sqrt(std::norm(c[2]) + std::norm(c[3]));
    return DeformationSpec{c[0] / n1, c[1] / n1, c[2] / n2, c[3] / n2, stats};
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace idrec

#endif  // IDREC_RANDOM_HPP
