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

#ifndef BCD_MODEL_HPP_
#define BCD_MODEL_HPP_

#include <vector>

#include "bcd/extended_real.hpp"
#include "bcd/set_function.hpp"
#include "bcd/subset.hpp"

namespace bcd {

// n binary-action agents with effort costs and a success-probability reward
// function. Costs are expressed as fractions of the unit reward.
class Instance {
 public:
  // Throws InputError on size mismatch, negative costs, or reward values
  // outside [0, 1] (checked against the encoding's maximum).
  Instance(std::vector<double> costs, SetFunction reward);

  int num_agents() const { return static_cast<int>(costs_.size()); }
  const std::vector<double>& costs() const { return costs_; }
  double cost(int i) const { return costs_[static_cast<std::size_t>(i)]; }
  const SetFunction& reward() const { return reward_; }

  double TotalCost(Subset s) const;

 private:
  std::vector<double> costs_;
  SetFunction reward_;
};

// Success-contingent linear contract; alpha[i] is agent i's share.
struct Contract {
  std::vector<double> alpha;

  double total() const;
};

// c_i / f_S(i) with 0/0 -> 0 and x/0 -> +inf.
ExtendedReal PaymentRatio(double cost, double marginal);

// Minimum total payment incentivizing exactly S: sum_{i in S} c_i / f_S(i).
ExtendedReal Payment(const Instance& inst, Subset s);

// Principal's utility (1 - p(S)) f(S). Returns -infinity when p(S) is
// infinite and f(S) > 0, and 0 whenever f(S) = 0.
double Profit(const Instance& inst, Subset s);

// alpha_i = c_i / f_S(i) on S, zero elsewhere. Throws InfeasibleSetError when
// p(S) is infinite.
Contract OptimalContractFor(const Instance& inst, Subset s);

// Pure Nash equilibrium test for the effort profile S under `contract`.
bool IsNashEquilibrium(const Instance& inst, const Contract& contract,
                       Subset s);

// Every equilibrium in ascending bitmask order. Throws SizeError above cap.
std::vector<Subset> EnumerateEquilibria(const Instance& inst,
                                        const Contract& contract,
                                        int cap = kEnumerationCap);

// Agents with p({i}) <= 1/2.
Subset LightAgents(const Instance& inst);

}  // namespace bcd

#endif  // BCD_MODEL_HPP_
