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

#ifndef BCD_SOLVERS_HPP_
#define BCD_SOLVERS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bcd/extended_real.hpp"
#include "bcd/model.hpp"
#include "bcd/objective.hpp"
#include "bcd/subset.hpp"

namespace bcd {

struct SolveResult {
  Subset optimum = kEmptySet;
  double value = 0.0;
  ExtendedReal payment;
  std::uint64_t enumerated = 0;  // subsets or table cells examined
};

// Exhaustive Max-phi(B): the best team with p(S) <= B (restricted to light
// agents when `light_only`). Ties go to the smaller bitmask. A negative best
// value is replaced by the empty team.
SolveResult BruteForceMax(const Objective& obj, const Instance& inst,
                          double budget, bool light_only = false,
                          int cap = kEnumerationCap);

// Number of reward levels minus one in a rounded table: ceil(n / delta) with
// delta = epsilon / n.
std::int64_t RoundedTableTopLevel(int n, double epsilon);

// T(k) for k = 0..top: the cheapest team (by sum c_i / f({i})) whose rounded
// reward reaches k * delta * anchor. Additive rewards only.
struct RoundedTable {
  double epsilon = 0.0;
  double anchor = 0.0;
  double delta = 0.0;
  double unit = 0.0;                   // delta * anchor
  std::vector<double> min_payment;     // +inf where level unreachable
  std::vector<Subset> teams;

  std::size_t size() const { return min_payment.size(); }
};

RoundedTable BuildRoundedTable(const Instance& inst, double epsilon,
                               double anchor);

// Budgeted profit FPTAS for additive rewards: g(out) >= (1 - eps) Max-Profit(B).
// `enumerated` counts table cells across all anchors.
SolveResult FptasAdditiveProfit(const Instance& inst, double budget,
                                double epsilon);

// Value-rounding knapsack FPTAS with weights c_i / f({i}) and values
// phi({i}); phi must be Reward or Welfare and the reward additive.
SolveResult KnapsackFptas(const Instance& inst, double budget, double epsilon,
                          const Objective& obj);

}  // namespace bcd

#endif  // BCD_SOLVERS_HPP_
