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

#ifndef BCD_NUMERIC_HPP_
#define BCD_NUMERIC_HPP_

#include <cmath>

#include "bcd/subset.hpp"

namespace bcd {

// ceil / floor that absorb representation error within kTolerance, so that
// ceil(2 * 1.0 / 0.2) is 10 rather than 11.
inline long long CeilTol(double x) {
  return static_cast<long long>(std::ceil(x - kTolerance));
}
inline long long FloorTol(double x) {
  return static_cast<long long>(std::floor(x + kTolerance));
}

inline bool NearlyEqual(double a, double b, double tol = kTolerance) {
  return std::abs(a - b) <= tol;
}

}  // namespace bcd

#endif  // BCD_NUMERIC_HPP_
