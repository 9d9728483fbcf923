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

#include "bcd/objective.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "bcd/errors.hpp"
#include "bcd/solvers.hpp"

namespace bcd {
namespace {

constexpr double kWeightSumTolerance = 1e-12;

}  // namespace

TeamTerms ComputeTerms(const Instance& inst, Subset s) {
  return TeamTerms{inst.reward().Value(s), Payment(inst, s), inst.TotalCost(s)};
}

Objective Objective::Reward() { return Objective(Kind::kReward); }
Objective Objective::Profit() { return Objective(Kind::kProfit); }
Objective Objective::Welfare() { return Objective(Kind::kWelfare); }

Objective Objective::Convex(std::vector<std::pair<double, Objective>> terms) {
  if (terms.empty()) throw InputError("convex objective needs components");
  double sum = 0.0;
  for (const auto& [weight, component] : terms) {
    if (!(weight > 0.0) || !std::isfinite(weight)) {
      throw InputError("convex weights must be strictly positive");
    }
    sum += weight;
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    throw InputError("convex weights must sum to 1");
  }
  Objective obj(Kind::kConvex);
  obj.components_ = std::move(terms);
  return obj;
}

std::string Objective::name() const {
  switch (kind_) {
    case Kind::kReward:
      return "reward";
    case Kind::kProfit:
      return "profit";
    case Kind::kWelfare:
      return "welfare";
    case Kind::kConvex:
      break;
  }
  std::ostringstream os;
  os << "convex(";
  for (std::size_t j = 0; j < components_.size(); ++j) {
    if (j > 0) os << ',';
    os << components_[j].first << '*' << components_[j].second.name();
  }
  os << ')';
  return os.str();
}

double Objective::EvaluateTerms(const TeamTerms& terms) const {
  switch (kind_) {
    case Kind::kReward:
      return terms.reward;
    case Kind::kProfit:
      if (terms.reward == 0.0) return 0.0;
      if (terms.payment.is_infinite()) {
        return -std::numeric_limits<double>::infinity();
      }
      return (1.0 - terms.payment.value()) * terms.reward;
    case Kind::kWelfare:
      return terms.reward - terms.cost;
    case Kind::kConvex:
      break;
  }
  double total = 0.0;
  for (const auto& [weight, component] : components_) {
    total += weight * component.EvaluateTerms(terms);
  }
  return total;
}

double Objective::Evaluate(const Instance& inst, Subset s) const {
  if (kind_ == Kind::kReward) return inst.reward().Value(s);
  if (kind_ == Kind::kWelfare) return inst.reward().Value(s) - inst.TotalCost(s);
  return EvaluateTerms(ComputeTerms(inst, s));
}

bool CheckBestConditions(const Objective& obj, const Instance& inst, int cap) {
  const int n = inst.num_agents();
  if (n > cap) {
    throw SizeError("BEST check needs n <= " + std::to_string(cap));
  }
  const Objective profit = Objective::Profit();
  const std::vector<double> f = inst.reward().Materialize();
  std::vector<double> phi(f.size());
  for (Subset s = 0; s < f.size(); ++s) phi[s] = obj.Evaluate(inst, s);

  for (Subset s = 0; s < f.size(); ++s) {
    const double g = profit.Evaluate(inst, s);
    if (g > phi[s] + kTolerance || phi[s] > f[s] + kTolerance) return false;
    for (int i : ToIndices(s)) {
      if (phi[s] > f[Without(s, i)] + phi[Singleton(i)] + kTolerance) {
        return false;
      }
    }
  }
  return true;
}

KeyPropertyGap ComputeKeyPropertyGap(const Objective& obj, const Instance& inst,
                                     double budget, bool submodular) {
  if (!(budget > 0.0 && budget <= 1.0)) {
    throw InputError("budget must lie in (0, 1]");
  }
  KeyPropertyGap gap;
  gap.coefficient = submodular ? 1.0 : 2.0;
  gap.lhs = BruteForceMax(obj, inst, budget).value;
  const double light =
      BruteForceMax(Objective::Reward(), inst, budget, /*light_only=*/true).value;
  double best_single = 0.0;
  for (int i = 0; i < inst.num_agents(); ++i) {
    best_single = std::max(best_single, obj.Evaluate(inst, Singleton(i)));
  }
  gap.rhs = gap.coefficient * light + best_single;
  return gap;
}

}  // namespace bcd
