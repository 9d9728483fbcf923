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

// Small hand-built instances shared by the unit tests.

#ifndef BCD_TESTS_FIXTURES_HPP_
#define BCD_TESTS_FIXTURES_HPP_

#include <bit>
#include <vector>

#include "bcd/model.hpp"
#include "bcd/set_function.hpp"

namespace fixtures {

// f(S) = |S ∩ {0..m-1}| / m over n agents, agents below m cost `cost`.
inline bcd::Instance CountingTable(int m, int n, double cost) {
  std::vector<double> table(std::size_t{1} << n);
  const std::uint64_t counted = (std::uint64_t{1} << m) - 1;
  for (std::uint64_t s = 0; s < table.size(); ++s) {
    table[s] = static_cast<double>(std::popcount(s & counted)) / m;
  }
  std::vector<double> costs(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < m; ++i) costs[static_cast<std::size_t>(i)] = cost;
  return bcd::Instance(costs, bcd::SetFunction::FromTable(table));
}

// M = 4, B = 1: c_i = B / M^2.
inline bcd::Instance FourCounting() { return CountingTable(4, 4, 1.0 / 16); }

// Three agents, f = max(a1, a2) with a1 = (2/5, 2/5, 1/5), a2 = (0, 0, 2/5)
// and costs (1/5, 1/5, 0).
inline bcd::Instance ThreeAgentXos() {
  return bcd::Instance({0.2, 0.2, 0.0},
                       bcd::SetFunction::FromXos({{0.4, 0.4, 0.2}, {0.0, 0.0, 0.4}}, 3));
}

// One agent with c = 1/2 and f({0}) = 1.
inline bcd::Instance SingleAgent() {
  return bcd::Instance({0.5}, bcd::SetFunction::FromAdditive({1.0}));
}

}  // namespace fixtures

#endif  // BCD_TESTS_FIXTURES_HPP_
