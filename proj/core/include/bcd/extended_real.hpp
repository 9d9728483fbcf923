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

#ifndef BCD_EXTENDED_REAL_HPP_
#define BCD_EXTENDED_REAL_HPP_

#include <compare>
#include <limits>
#include <ostream>

namespace bcd {

// Non-negative real or +infinity. Payments for teams whose members have zero
// marginal but positive cost are infinite; arithmetic propagates infinity.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  constexpr explicit ExtendedReal(double v) : value_(v) {}

  static constexpr ExtendedReal Infinity() {
    return ExtendedReal(std::numeric_limits<double>::infinity());
  }

  constexpr bool is_infinite() const {
    return value_ == std::numeric_limits<double>::infinity();
  }
  constexpr bool is_finite() const { return !is_infinite(); }

  // Raw double; +inf when infinite.
  constexpr double value() const { return value_; }

  constexpr ExtendedReal& operator+=(ExtendedReal other) {
    value_ += other.value_;
    return *this;
  }
  friend constexpr ExtendedReal operator+(ExtendedReal a, ExtendedReal b) {
    return a += b;
  }
  friend constexpr ExtendedReal operator*(double k, ExtendedReal a) {
    return a.is_infinite() ? a : ExtendedReal(k * a.value_);
  }

  friend constexpr auto operator<=>(ExtendedReal a, ExtendedReal b) {
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator==(ExtendedReal a, ExtendedReal b) = default;

  // Budget test with the shared absolute tolerance.
  constexpr bool FitsWithin(double budget, double tol) const {
    return is_finite() && value_ <= budget + tol;
  }

 private:
  double value_ = 0.0;
};

inline std::ostream& operator<<(std::ostream& os, ExtendedReal x) {
  if (x.is_infinite()) return os << "inf";
  return os << x.value();
}

}  // namespace bcd

#endif  // BCD_EXTENDED_REAL_HPP_
