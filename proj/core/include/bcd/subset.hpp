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

#ifndef BCD_SUBSET_HPP_
#define BCD_SUBSET_HPP_

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bcd {

// A team of agents encoded as a bitmask; bit i set <=> agent i is in the team.
using Subset = std::uint64_t;

inline constexpr int kMaxAgents = 63;
inline constexpr int kEnumerationCap = 20;
inline constexpr int kClassifyCap = 16;

// Absolute tolerance used by every checker and budget comparison.
inline constexpr double kTolerance = 1e-9;

inline constexpr Subset kEmptySet = 0;

constexpr Subset FullSet(int n) {
  return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1;
}
constexpr Subset Singleton(int i) { return Subset{1} << i; }
constexpr bool Contains(Subset s, int i) { return ((s >> i) & 1U) != 0; }
constexpr Subset With(Subset s, int i) { return s | Singleton(i); }
constexpr Subset Without(Subset s, int i) { return s & ~Singleton(i); }
constexpr bool IsSubsetOf(Subset a, Subset b) { return (a & ~b) == 0; }
constexpr int Cardinality(Subset s) { return std::popcount(s); }

// Ascending agent indices in `s`.
std::vector<int> ToIndices(Subset s);

// Throws InputError on duplicate or out-of-range indices.
Subset FromIndices(std::span<const int> indices, int n);

// "{0,2,5}"
std::string FormatSubset(Subset s);

// Parses "0,1,2" (whitespace tolerated, empty string -> empty set).
Subset ParseSubset(const std::string& text, int n);

}  // namespace bcd

#endif  // BCD_SUBSET_HPP_
