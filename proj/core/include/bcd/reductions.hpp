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

#ifndef BCD_REDUCTIONS_HPP_
#define BCD_REDUCTIONS_HPP_

#include <functional>
#include <string_view>
#include <vector>

#include "bcd/extended_real.hpp"
#include "bcd/model.hpp"
#include "bcd/objective.hpp"
#include "bcd/subset.hpp"

namespace bcd {

// Which downsizing routine and constants a reduction uses.
enum class ReductionPath { kXos, kSubmodular };

std::string_view PathName(ReductionPath path);

struct ReductionOutcome {
  Subset candidate = kEmptySet;
  double candidate_value = 0.0;
  double guarantee_factor = 1.0;
  ExtendedReal budget_used;
  ReductionPath path = ReductionPath::kXos;
};

// Guarantee constants: to-light is 40g+1 (XOS) / 6g+1 (submodular);
// from-light is 20g / 6g.
double ToLightFactor(ReductionPath path, double gamma);
double FromLightFactor(ReductionPath path, double gamma);

// Light agents only, costs multiplied by budget_prime / budget.
struct ScaledInstance {
  Instance instance;
  std::vector<int> original_index;  // scaled agent k -> original agent
  double scale = 1.0;

  Subset Lift(Subset scaled) const;
};

ScaledInstance ScaleInstance(const Instance& inst, double budget,
                             double budget_prime);

// Approximate Max-phi(B) oracle: returns a budget-feasible team.
using MaxSolver =
    std::function<Subset(const Instance&, const Objective&, double budget)>;

MaxSolver BruteForceSolver();

// Turns a gamma-approximate Max-Reward-Light(B) team into a candidate for
// Max-phi(B): downsize (m = 5 on the XOS path, m = 3 on the submodular path)
// and keep the best of that team and every budget-feasible singleton.
ReductionOutcome ReduceToLight(const Instance& inst, double budget,
                               const Objective& obj, Subset light_team,
                               double gamma, ReductionPath path);

// Solves Max-phi(B') on the scaled light instance with `solver` and keeps the
// reward-best of its answer and the light singletons feasible at B.
ReductionOutcome ReduceFromLight(const Instance& inst, double budget,
                                 double budget_prime, const Objective& obj,
                                 const MaxSolver& solver, double gamma,
                                 ReductionPath path);

// Max-phi_from(B_from) through Max-phi_to(B_to): the from-light reduction
// feeds the to-light reduction. The reported factor is the product of the two
// path constants.
ReductionOutcome EquivalencePipeline(const Instance& inst,
                                     const Objective& obj_from,
                                     double budget_from,
                                     const Objective& obj_to, double budget_to,
                                     const MaxSolver& solver_to,
                                     double gamma = 1.0,
                                     ReductionPath path = ReductionPath::kXos);

}  // namespace bcd

#endif  // BCD_REDUCTIONS_HPP_
