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

#include "bcd/frugality.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "bcd/errors.hpp"
#include "bcd/solvers.hpp"

namespace bcd {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void CheckBudgets(double b, double big_b) {
  if (!(b > 0.0 && b <= big_b && big_b <= 1.0)) {
    throw InputError("budgets must satisfy 0 < b <= B <= 1, got b=" +
                     std::to_string(b) + " B=" + std::to_string(big_b));
  }
}

bool SameBudget(double b, double big_b) {
  return std::abs(big_b - b) <= 1e-12;
}

}  // namespace

std::string_view BoundKindName(BoundKind kind) {
  switch (kind) {
    case BoundKind::kSubmodularExact: return "submodular-exact";
    case BoundKind::kXosAsymptotic: return "xos-asymptotic";
    case BoundKind::kProfitUpper: return "profit-upper";
    case BoundKind::kProfitLower: return "profit-lower";
    case BoundKind::kNone: return "none";
  }
  return "none";
}

int ProfitLowerK(double b, double big_b, int n) {
  CheckBudgets(b, big_b);
  const double by_b = FloorTol(1.0 / b + 0.5);
  const double by_budget = CeilTol(2.0 * big_b / b) - 1.0;
  return static_cast<int>(
      std::min({by_b, by_budget, static_cast<double>(n)}));
}

double PofBound(double b, double big_b, int n, BoundKind kind) {
  CheckBudgets(b, big_b);
  if (n < 1) throw InputError("bound needs n >= 1");
  if (SameBudget(b, big_b)) return 1.0;
  const double nn = static_cast<double>(n);
  switch (kind) {
    case BoundKind::kSubmodularExact:
    case BoundKind::kProfitUpper:
      return std::min(CeilTol(2.0 * big_b / b) - 1.0, nn);
    case BoundKind::kXosAsymptotic:
      return std::min(big_b / b, nn);
    case BoundKind::kProfitLower: {
      const double k = ProfitLowerK(b, big_b, n);
      return std::max(2.0 - b, k * (2.0 - k * b) / (2.0 - b));
    }
    case BoundKind::kNone:
      return kInf;
  }
  return kInf;
}

BoundKind ApplicableBound(Objective::Kind objective, FunctionClass cls) {
  if (cls == FunctionClass::kSubadditive) return BoundKind::kNone;
  if (cls == FunctionClass::kXos) return BoundKind::kXosAsymptotic;
  switch (objective) {
    case Objective::Kind::kReward:
    case Objective::Kind::kWelfare:
      return BoundKind::kSubmodularExact;
    case Objective::Kind::kProfit:
      return BoundKind::kProfitUpper;
    case Objective::Kind::kConvex:
      return BoundKind::kXosAsymptotic;
  }
  return BoundKind::kNone;
}

PofReport ComputePof(const Instance& inst, const PofQuery& query,
                     FunctionClass cls) {
  CheckBudgets(query.b, query.big_b);
  if (query.singletons_feasible_at_b) {
    for (int i = 0; i < inst.num_agents(); ++i) {
      if (!Payment(inst, Singleton(i)).FitsWithin(query.b, kTolerance)) {
        throw PreconditionError("singleton {" + std::to_string(i) +
                                "} is not feasible at b");
      }
    }
  }
  PofReport report;
  report.max_at_big_b =
      BruteForceMax(query.objective, inst, query.big_b).value;
  report.max_at_b = BruteForceMax(query.objective, inst, query.b).value;
  if (report.max_at_b > 0.0) {
    report.ratio = report.max_at_big_b / report.max_at_b;
  } else if (query.singletons_feasible_at_b) {
    throw PreconditionError("Max-phi(b) is zero; ratio undefined");
  }
  report.bound_kind = ApplicableBound(query.objective.kind(), cls);
  report.theoretical_bound =
      inst.num_agents() >= 1
          ? PofBound(query.b, query.big_b, inst.num_agents(), report.bound_kind)
          : 1.0;
  return report;
}

PofReport ComputePof(const Instance& inst, const PofQuery& query) {
  const SetFunction& f = inst.reward();
  FunctionClass cls = FunctionClass::kSubadditive;
  if (f.additive() != nullptr) {
    cls = FunctionClass::kAdditive;
  } else if (f.num_agents() <= kClassifyCap) {
    const FunctionClasses c = Classify(f);
    if (c.is_monotone && c.is_submodular) {
      cls = FunctionClass::kSubmodular;
    } else if (f.xos() != nullptr) {
      cls = FunctionClass::kXos;
    }
  } else if (f.xos() != nullptr) {
    cls = FunctionClass::kXos;
  }
  return ComputePof(inst, query, cls);
}

// --- generators -----------------------------------------------------------

Instance GenAdditiveLowerBound(int n, double b, double big_b) {
  CheckBudgets(b, big_b);
  if (n < 1 || n > kMaxAgents) throw InputError("n must lie in [1, 63]");
  const int m = static_cast<int>(
      std::min(CeilTol(2.0 * big_b / b) - 1.0, static_cast<double>(n)));
  const double cost = std::min(big_b / m, b) / m;
  std::vector<double> costs(static_cast<std::size_t>(n), 0.0);
  std::fill_n(costs.begin(), m, cost);
  if (n > kEnumerationCap) {
    std::vector<double> values(static_cast<std::size_t>(n), 0.0);
    std::fill_n(values.begin(), m, 1.0 / m);
    return Instance(std::move(costs), SetFunction::FromAdditive(values));
  }
  const Subset counted = FullSet(m);
  std::vector<double> table(std::size_t{1} << n);
  for (Subset s = 0; s < table.size(); ++s) {
    table[s] = static_cast<double>(std::popcount(s & counted)) / m;
  }
  return Instance(std::move(costs), SetFunction::FromTable(std::move(table)));
}

Instance GenXosSeparation(double b, double big_b) {
  CheckBudgets(b, big_b);
  if (SameBudget(b, big_b)) throw InputError("separation needs b < B");
  const double eff = std::min(big_b, 2.0 * b);
  std::vector<std::vector<double>> clauses = {{0.4, 0.4, 0.2},
                                              {0.0, 0.0, 0.4}};
  return Instance({eff / 5.0, eff / 5.0, 0.0},
                  SetFunction::FromXos(std::move(clauses), 3));
}

Instance GenSubadditiveLowerBound(int n, double b, double big_b) {
  CheckBudgets(b, big_b);
  if (n < 4 || n % 2 != 0) throw InputError("n must be even and >= 4");
  if (n > kEnumerationCap) {
    throw SizeError("subadditive construction is tabulated; n <= " +
                    std::to_string(kEnumerationCap));
  }
  if (big_b > n * b / 2.0 + kTolerance) {
    throw InputError("construction requires B <= n b / 2");
  }
  const double root = std::sqrt(static_cast<double>(n));
  const double peak = 2.0 / root + 0.5;
  const double scale = peak > 1.0 ? 1.0 / peak : 1.0;
  const int half = n / 2;
  std::vector<double> table(std::size_t{1} << n);
  for (Subset s = 1; s < table.size(); ++s) {
    const int size = std::popcount(s);
    const double v = size <= half ? 1.0 / root + static_cast<double>(size) / n
                                  : peak;
    table[s] = v * scale;
  }
  const double cost = big_b / ((half + 1) * root) * scale;
  return Instance(std::vector<double>(static_cast<std::size_t>(n), cost),
                  SetFunction::FromTable(std::move(table)));
}

Instance GenProfitLowerBoundTwo(double b, double big_b, double eps) {
  CheckBudgets(b, big_b);
  if (!(eps > 0.0 && eps < big_b - b)) {
    throw InputError("eps must lie in (0, B - b)");
  }
  const double second = 0.5 - b / 2.0;
  return Instance({b / 2.0, eps * second * second},
                  SetFunction::FromAdditive({0.5, second}));
}

Instance GenProfitLowerBoundK(double b, double big_b, int k, double eps) {
  CheckBudgets(b, big_b);
  if (k < 1 || !(k < 2.0 * big_b / b) || k > kMaxAgents) {
    throw InputError("k must satisfy 1 <= k < 2B/b");
  }
  if (!(eps > 0.0 && eps < 2.0 * big_b / k - b)) {
    throw InputError("eps must lie in (0, 2B/k - b)");
  }
  const auto size = static_cast<std::size_t>(k);
  return Instance(std::vector<double>(size, (b + eps) / (2.0 * k)),
                  SetFunction::FromAdditive(std::vector<double>(size, 1.0 / k)));
}

double DefaultEpsTwo(double b, double big_b) {
  return std::min(0.01, (big_b - b) / 2.0);
}

double DefaultEpsK(double b, double big_b, int k) {
  return std::min(0.01, (2.0 * big_b / k - b) / 2.0);
}

std::string_view FamilyName(Family family) {
  switch (family) {
    case Family::kAdditiveLb: return "additive-lb";
    case Family::kXosSeparation: return "xos-sep";
    case Family::kSubadditiveLb: return "subadd-lb";
    case Family::kProfitTwo: return "profit-2";
    case Family::kProfitK: return "profit-k";
  }
  return "";
}

std::optional<Family> ParseFamily(std::string_view name) {
  for (Family f : {Family::kAdditiveLb, Family::kXosSeparation,
                   Family::kSubadditiveLb, Family::kProfitTwo,
                   Family::kProfitK}) {
    if (FamilyName(f) == name) return f;
  }
  return std::nullopt;
}

namespace {

int ResolvedK(const FamilyParams& p) {
  return p.k.value_or(ProfitLowerK(p.b, p.big_b, p.n));
}

double ResolvedEps(Family family, const FamilyParams& p) {
  if (p.eps) return *p.eps;
  return family == Family::kProfitTwo ? DefaultEpsTwo(p.b, p.big_b)
                                      : DefaultEpsK(p.b, p.big_b, ResolvedK(p));
}

}  // namespace

Instance GenerateFamily(Family family, const FamilyParams& params) {
  switch (family) {
    case Family::kAdditiveLb:
      return GenAdditiveLowerBound(params.n, params.b, params.big_b);
    case Family::kXosSeparation:
      return GenXosSeparation(params.b, params.big_b);
    case Family::kSubadditiveLb:
      return GenSubadditiveLowerBound(params.n, params.b, params.big_b);
    case Family::kProfitTwo:
      return GenProfitLowerBoundTwo(params.b, params.big_b,
                                    ResolvedEps(family, params));
    case Family::kProfitK:
      return GenProfitLowerBoundK(params.b, params.big_b, ResolvedK(params),
                                  ResolvedEps(family, params));
  }
  throw InputError("unknown family");
}

double FamilyTarget(Family family, const FamilyParams& params,
                    Objective::Kind /*objective*/) {
  switch (family) {
    case Family::kAdditiveLb:
      return PofBound(params.b, params.big_b, params.n,
                      BoundKind::kSubmodularExact);
    case Family::kXosSeparation:
      return 2.5;
    case Family::kSubadditiveLb: {
      const double root = std::sqrt(static_cast<double>(params.n));
      return (2.0 / root + 0.5) / (2.0 / root);
    }
    case Family::kProfitTwo: {
      const double eps = ResolvedEps(family, params);
      return (1.0 - eps / 2.0) * (2.0 - params.b);
    }
    case Family::kProfitK: {
      const double eps = ResolvedEps(family, params);
      const double k = ResolvedK(params);
      return (2.0 - k * (params.b + eps)) * k / (2.0 - params.b - eps);
    }
  }
  throw InputError("unknown family");
}

bool FamilyTargetIsExact(Family family, Objective::Kind objective) {
  switch (family) {
    case Family::kAdditiveLb:
      return objective == Objective::Kind::kReward ||
             objective == Objective::Kind::kWelfare;
    case Family::kXosSeparation:
      return objective == Objective::Kind::kReward;
    default:
      return false;
  }
}

std::vector<CurvePoint> BudgetCurve(const Instance& inst, int cap) {
  const int n = inst.num_agents();
  if (n > cap) {
    throw SizeError("budget curve enumerates 2^n teams; n <= " +
                    std::to_string(cap));
  }
  struct Team {
    double payment, reward, welfare, profit;
  };
  const std::vector<double> f = inst.reward().Materialize();
  std::vector<Team> teams;
  teams.reserve(f.size());
  for (Subset s = 0; s < f.size(); ++s) {
    ExtendedReal pay;
    for (Subset rest = s; rest != 0 && pay.is_finite(); rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      pay += PaymentRatio(inst.cost(i), f[s] - f[Without(s, i)]);
    }
    if (pay.is_infinite()) continue;
    teams.push_back({pay.value(), f[s], f[s] - inst.TotalCost(s),
                     (1.0 - pay.value()) * f[s]});
  }
  std::sort(teams.begin(), teams.end(), [](const Team& a, const Team& b) {
    return a.payment < b.payment;
  });
  std::vector<CurvePoint> curve;
  CurvePoint run{0.0, 0.0, 0.0, 0.0, 0.0};
  for (std::size_t k = 0; k < teams.size(); ++k) {
    const Team& t = teams[k];
    run.payment = t.payment;
    run.max_reward = std::max(run.max_reward, t.reward);
    run.max_welfare = std::max(run.max_welfare, t.welfare);
    run.max_profit = std::max(run.max_profit, t.profit);
    const bool last_at_level =
        k + 1 == teams.size() || teams[k + 1].payment > t.payment + 1e-12;
    if (last_at_level) {
      run.discounted_reward = (1.0 - run.payment) * run.max_reward;
      curve.push_back(run);
    }
  }
  return curve;
}

}  // namespace bcd
