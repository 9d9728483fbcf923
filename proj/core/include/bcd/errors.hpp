// Copyright 2026 The Authors.
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

#ifndef BCD_ERRORS_HPP_
#define BCD_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace bcd {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: out-of-range agents, bad shapes, negative prices.
class InputError : public Error {
 public:
  using Error::Error;
};

// A documented precondition does not hold (e.g. non-submodular reward on the
// submodular path, infeasible seed team).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Exhaustive operation requested above its enumeration cap.
class SizeError : public Error {
 public:
  using Error::Error;
};

// The requested team cannot be incentivized with finite payment.
class InfeasibleSetError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A caller-supplied solver returned something that breaks its contract.
class ContractViolationError : public Error {
 public:
  using Error::Error;
};

}  // namespace bcd

#endif  // BCD_ERRORS_HPP_
