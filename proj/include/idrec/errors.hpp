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

#ifndef IDREC_ERRORS_HPP
#define IDREC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace idrec {

// Base of every exception thrown by the library. The C API maps each
// subclass onto one idrec_status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the mathematical domain of the operation
// (negative time, probability outside [0,1], unnormalized coefficients...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A structural precondition on a state was violated (wrong support,
// mismatched statistics, non-PSD input).
class ContractError : public Error {
 public:
  using Error::Error;
};

// The state has (numerically) zero norm and cannot be normalized.
class ZeroNormState : public Error {
 public:
  using Error::Error;
};

// The sLOCC projection has zero success probability.
class PostSelectionImpossible : public Error {
 public:
  using Error::Error;
};

// An iterative numerical method failed to converge.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Reading or writing a file failed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace idrec

#endif  // IDREC_ERRORS_HPP
