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

#include "bcd/reductions.hpp"

#include <cmath>
#include <string>

#include "bcd/downsizing.hpp"
#include "bcd/errors.hpp"
#include "bcd/solvers.hpp"

namespace bcd {
namespace {

void CheckBudgetRange(double budget, const char* what) {
  if (!(budget > 0.0 && budget <= 1.0)) {
    throw InputError(std::string(what) + " must lie in (0, 1]");
  }
}

void CheckGamma(double gamma) {
  if (!(gamma >= 1.0) || !std::isfinite(gamma)) {
    throw InputError("approximation factor gamma must be >= 1");
  }
}

struct Pick {
  Subset team = kEmptySet;
  double score = 0.0;
};

// Best pool member by `score`, first-come on ties; never worse than empty.
template <typename Score>
Pick BestOf(const std::vector<Subset>& pool, Score score) {
  Pick best{kEmptySet, score(kEmptySet)};
  for (Subset s : pool) {
    const double v = score(s);
    if (v > best.score) best = {s, v};
  }
  return best;
}

}  // namespace

std::string_view PathName(ReductionPath path) {
  return path == ReductionPath::kXos ? "xos" : "submodular";
}

double ToLightFactor(ReductionPath path, double gamma) {
  return path == ReductionPath::kXos ? 40.0 * gamma + 1.0 : 6.0 * gamma + 1.0;
}

double FromLightFactor(ReductionPath path, double gamma) {
  return path == ReductionPath::kXos ? 20.0 * gamma : 6.0 * gamma;
}

Subset ScaledInstance::Lift(Subset scaled) const {
  Subset out = kEmptySet;
  for (int k : ToIndices(scaled)) {
    out = With(out, original_index.at(static_cast<std::size_t>(k)));
  }
  return out;
}

ScaledInstance ScaleInstance(const Instance& inst, double budget,
                             double budget_prime) {
  CheckBudgetRange(budget, "budget");
  CheckBudgetRange(budget_prime, "target budget");
  const Subset light = LightAgents(inst);
  const double scale = budget_prime / budget;
  std::vector<double> costs;
  std::vector<int> index;
  for (int i : ToIndices(light)) {
    costs.push_back(inst.cost(i) * scale);
    index.push_back(i);
  }
  return ScaledInstance{Instance(std::move(costs), inst.reward().Restrict(light)),
                        std::move(index), scale};
}

MaxSolver BruteForceSolver() {
  return [](const Instance& inst, const Objective& obj, double budget) {
    return BruteForceMax(obj, inst, budget).optimum;
  };
}

ReductionOutcome ReduceToLight(const Instance& inst, double budget,
                               const Objective& obj, Subset light_team,
                               double gamma, ReductionPath path) {
  CheckBudgetRange(budget, "budget");
  CheckGamma(gamma);
  if (!IsSubsetOf(light_team, FullSet(inst.num_agents()))) {
    throw InputError("light team names unknown agents");
  }
  if (!Payment(inst, light_team).FitsWithin(budget, kTolerance)) {
    throw PreconditionError("light team " + FormatSubset(light_team) +
                            " is not budget-feasible");
  }

  std::vector<Subset> pool;
  if (light_team != kEmptySet) {
    Subset shrunk = kEmptySet;
    if (path == ReductionPath::kXos) {
      shrunk = DownsizeXos(inst, light_team, 5).subset;
    } else {
      DownsizeParams params;
      params.m = 3;
      params.verify_submodular = inst.num_agents() <= kClassifyCap;
      shrunk = DownsizeSubmodular(inst, light_team, params).subset;
    }
    if (Payment(inst, shrunk).FitsWithin(budget, kTolerance)) {
      pool.push_back(shrunk);
    }
  }
  for (int i = 0; i < inst.num_agents(); ++i) {
    if (Payment(inst, Singleton(i)).FitsWithin(budget, kTolerance)) {
      pool.push_back(Singleton(i));
    }
  }

  const Pick best =
      BestOf(pool, [&](Subset s) { return obj.Evaluate(inst, s); });
  return ReductionOutcome{best.team, best.score, ToLightFactor(path, gamma),
                          Payment(inst, best.team), path};
}

ReductionOutcome ReduceFromLight(const Instance& inst, double budget,
                                 double budget_prime, const Objective& obj,
                                 const MaxSolver& solver, double gamma,
                                 ReductionPath path) {
  CheckBudgetRange(budget, "budget");
  CheckBudgetRange(budget_prime, "target budget");
  CheckGamma(gamma);

  const ScaledInstance scaled = ScaleInstance(inst, budget, budget_prime);
  std::vector<Subset> pool;
  if (scaled.instance.num_agents() > 0) {
    const Subset answer = solver(scaled.instance, obj, budget_prime);
    if (!IsSubsetOf(answer, FullSet(scaled.instance.num_agents()))) {
      throw ContractViolationError("solver returned unknown agents");
    }
    if (!Payment(scaled.instance, answer).FitsWithin(budget_prime, kTolerance)) {
      throw ContractViolationError("solver answer " + FormatSubset(answer) +
                                   " exceeds the target budget");
    }
    pool.push_back(scaled.Lift(answer));
  }
  for (int i : scaled.original_index) pool.push_back(Singleton(i));

  // Everything is re-checked in the original instance at the original budget.
  std::erase_if(pool, [&](Subset s) {
    return !Payment(inst, s).FitsWithin(budget, kTolerance);
  });
  const Pick best =
      BestOf(pool, [&](Subset s) { return inst.reward().Value(s); });
  return ReductionOutcome{best.team, best.score, FromLightFactor(path, gamma),
                          Payment(inst, best.team), path};
}

ReductionOutcome EquivalencePipeline(const Instance& inst,
                                     const Objective& obj_from,
                                     double budget_from,
                                     const Objective& obj_to, double budget_to,
                                     const MaxSolver& solver_to, double gamma,
                                     ReductionPath path) {
  const ReductionOutcome light = ReduceFromLight(
      inst, budget_from, budget_to, obj_to, solver_to, gamma, path);
  ReductionOutcome out = ReduceToLight(inst, budget_from, obj_from,
                                       light.candidate,
                                       light.guarantee_factor, path);
  out.guarantee_factor =
      FromLightFactor(path, gamma) * ToLightFactor(path, 1.0);
  return out;
}

}  // namespace bcd
