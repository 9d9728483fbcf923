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

#include "bcd/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "bcd/errors.hpp"
#include "bcd/numeric.hpp"

namespace bcd {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPaymentTieTolerance = 1e-12;

const SetFunction::Additive& RequireAdditive(const Instance& inst,
                                             const char* who) {
  const auto* a = inst.reward().additive();
  if (a == nullptr) {
    throw PreconditionError(std::string(who) + " requires an additive reward");
  }
  return *a;
}

void CheckEpsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw InputError("epsilon must lie in (0, 1)");
  }
}

void CheckBudget(double budget) {
  if (!(budget >= 0.0) || !std::isfinite(budget)) {
    throw InputError("budget must be finite and non-negative");
  }
}

}  // namespace

SolveResult BruteForceMax(const Objective& obj, const Instance& inst,
                          double budget, bool light_only, int cap) {
  CheckBudget(budget);
  const int n = inst.num_agents();
  if (n > cap) {
    throw SizeError("brute force needs n <= " + std::to_string(cap) +
                    ", got " + std::to_string(n));
  }
  const std::vector<double> f = inst.reward().Materialize();
  const Subset pool = light_only ? LightAgents(inst) : FullSet(n);

  SolveResult best;
  best.optimum = kEmptySet;
  best.payment = ExtendedReal(0.0);
  best.value = obj.EvaluateTerms(TeamTerms{f[0], ExtendedReal(0.0), 0.0});
  best.enumerated = 1;

  // Ascending walk over the submasks of `pool`, skipping the empty team.
  for (Subset s = (kEmptySet - pool) & pool; s != kEmptySet;
       s = (s - pool) & pool) {
    ++best.enumerated;
    ExtendedReal pay(0.0);
    double cost = 0.0;
    for (Subset rest = s; rest != 0 && pay.FitsWithin(budget, kTolerance);
         rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      pay += PaymentRatio(inst.cost(i), f[s] - f[Without(s, i)]);
      cost += inst.cost(i);
    }
    if (!pay.FitsWithin(budget, kTolerance)) continue;
    const double value = obj.EvaluateTerms(TeamTerms{f[s], pay, cost});
    if (value > best.value + kPaymentTieTolerance) {
      best.optimum = s;
      best.value = value;
      best.payment = pay;
    }
  }
  return best;
}

std::int64_t RoundedTableTopLevel(int n, double epsilon) {
  CheckEpsilon(epsilon);
  const double delta = epsilon / n;
  return CeilTol(n / delta);
}

RoundedTable BuildRoundedTable(const Instance& inst, double epsilon,
                               double anchor) {
  const auto& additive = RequireAdditive(inst, "rounded table");
  CheckEpsilon(epsilon);
  if (!(anchor > 0.0)) throw InputError("anchor must be positive");
  const int n = inst.num_agents();
  if (n == 0) throw InputError("rounded table needs at least one agent");

  RoundedTable table;
  table.epsilon = epsilon;
  table.anchor = anchor;
  table.delta = epsilon / n;
  table.unit = table.delta * anchor;
  const std::int64_t top = RoundedTableTopLevel(n, epsilon);
  const auto size = static_cast<std::size_t>(top + 1);

  // dp[l]: cheapest team whose capped rounded level is exactly l.
  std::vector<double> dp(size, kInf);
  std::vector<Subset> dp_team(size, kEmptySet);
  dp[0] = 0.0;
  for (int i = 0; i < n; ++i) {
    const double value = additive.values[static_cast<std::size_t>(i)];
    const ExtendedReal weight = PaymentRatio(inst.cost(i), value);
    if (weight.is_infinite() || value <= 0.0) continue;
    const std::int64_t level = std::min<std::int64_t>(top, FloorTol(value / table.unit));
    if (level == 0) continue;
    for (std::int64_t l = top; l >= 0; --l) {
      const auto from = static_cast<std::size_t>(l);
      if (dp[from] == kInf) continue;
      const auto to = static_cast<std::size_t>(std::min(top, l + level));
      const double candidate = dp[from] + weight.value();
      if (candidate < dp[to] - kPaymentTieTolerance) {
        dp[to] = candidate;
        dp_team[to] = With(dp_team[from], i);
      }
    }
  }

  // T(k) is the cheapest team reaching at least level k.
  table.min_payment.assign(size, kInf);
  table.teams.assign(size, kEmptySet);
  double running = kInf;
  Subset running_team = kEmptySet;
  for (std::int64_t l = top; l >= 0; --l) {
    const auto k = static_cast<std::size_t>(l);
    if (dp[k] < running - kPaymentTieTolerance) {
      running = dp[k];
      running_team = dp_team[k];
    }
    table.min_payment[k] = running;
    table.teams[k] = running_team;
  }
  return table;
}

SolveResult FptasAdditiveProfit(const Instance& inst, double budget,
                                double epsilon) {
  const auto& additive = RequireAdditive(inst, "profit FPTAS");
  CheckEpsilon(epsilon);
  CheckBudget(budget);

  SolveResult best;
  best.payment = ExtendedReal(0.0);
  best.value = 0.0;
  for (int a = 0; a < inst.num_agents(); ++a) {
    const double anchor = additive.values[static_cast<std::size_t>(a)];
    if (anchor <= 0.0) continue;
    const RoundedTable table = BuildRoundedTable(inst, epsilon, anchor);
    best.enumerated += table.size();

    std::size_t chosen = 0;
    double chosen_proxy = -kInf;
    for (std::size_t k = 0; k < table.size(); ++k) {
      if (!(table.min_payment[k] <= budget + kTolerance)) continue;
      const double proxy = (1.0 - table.min_payment[k]) *
                           static_cast<double>(k) * table.unit;
      if (proxy > chosen_proxy) {
        chosen_proxy = proxy;
        chosen = k;
      }
    }
    const Subset team = table.teams[chosen];
    const double profit = Profit(inst, team);
    if (profit > best.value) {
      best.optimum = team;
      best.value = profit;
      best.payment = Payment(inst, team);
    }
  }
  return best;
}

SolveResult KnapsackFptas(const Instance& inst, double budget, double epsilon,
                          const Objective& obj) {
  const auto& additive = RequireAdditive(inst, "knapsack FPTAS");
  CheckEpsilon(epsilon);
  CheckBudget(budget);
  if (obj.kind() != Objective::Kind::kReward &&
      obj.kind() != Objective::Kind::kWelfare) {
    throw PreconditionError("knapsack FPTAS supports reward and welfare only");
  }

  struct Item {
    int agent;
    double weight;
    double value;
  };
  std::vector<Item> items;
  double max_value = 0.0;
  for (int i = 0; i < inst.num_agents(); ++i) {
    const double f = additive.values[static_cast<std::size_t>(i)];
    const ExtendedReal w = PaymentRatio(inst.cost(i), f);
    const double v = obj.Evaluate(inst, Singleton(i));
    if (!w.FitsWithin(budget, kTolerance) || v <= 0.0) continue;
    items.push_back({i, w.value(), v});
    max_value = std::max(max_value, v);
  }

  SolveResult out;
  out.payment = ExtendedReal(0.0);
  if (items.empty()) return out;

  const double scale = epsilon * max_value / static_cast<double>(items.size());
  std::vector<std::int64_t> scaled;
  std::int64_t total = 0;
  for (const Item& item : items) {
    scaled.push_back(FloorTol(item.value / scale));
    total += scaled.back();
  }

  // min_weight[v]: lightest team with scaled value exactly v.
  const auto size = static_cast<std::size_t>(total + 1);
  std::vector<double> min_weight(size, kInf);
  std::vector<Subset> team(size, kEmptySet);
  min_weight[0] = 0.0;
  for (std::size_t j = 0; j < items.size(); ++j) {
    const auto gain = static_cast<std::size_t>(scaled[j]);
    for (std::size_t v = size; v-- > gain;) {
      const std::size_t from = v - gain;
      if (min_weight[from] == kInf) continue;
      const double candidate = min_weight[from] + items[j].weight;
      if (candidate < min_weight[v] - kPaymentTieTolerance) {
        min_weight[v] = candidate;
        team[v] = With(team[from], items[j].agent);
      }
    }
    out.enumerated += size;
  }
  for (std::size_t v = size; v-- > 0;) {
    if (min_weight[v] <= budget + kTolerance) {
      out.optimum = team[v];
      break;
    }
  }
  out.value = obj.Evaluate(inst, out.optimum);
  out.payment = Payment(inst, out.optimum);
  return out;
}

}  // namespace bcd
