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

#ifndef BCD_FRUGALITY_HPP_
#define BCD_FRUGALITY_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "bcd/model.hpp"
#include "bcd/numeric.hpp"
#include "bcd/objective.hpp"

namespace bcd {

// Price of frugality: Max-phi(B) / Max-phi(b) for b < B.

enum class FunctionClass { kAdditive, kSubmodular, kXos, kSubadditive };

enum class BoundKind {
  kSubmodularExact,  // min(ceil(2B/b) - 1, n), reward and welfare
  kXosAsymptotic,    // min(B/b, n), constant-free envelope
  kProfitUpper,      // min(ceil(2B/b) - 1, n)
  kProfitLower,      // max(2 - b, k (2 - k b) / (2 - b))
  kNone,             // no bound known for this class/objective
};

std::string_view BoundKindName(BoundKind kind);

// k = min(floor(1/b + 1/2), ceil(2B/b) - 1, n).
int ProfitLowerK(double b, double big_b, int n);

// Theoretical bound of the given kind. b == B yields 1 for every kind.
// Throws InputError unless 0 < b <= B <= 1 and n >= 1.
double PofBound(double b, double big_b, int n, BoundKind kind);

// Bound applicable to an objective on a function class.
BoundKind ApplicableBound(Objective::Kind objective, FunctionClass cls);

// Constant factor the XOS upper-bound argument actually delivers:
// Max-phi(B) <= 32 (B/b) Max-phi(b) plus singleton slack.
inline constexpr double kXosProofConstant = 32.0;

struct PofQuery {
  double b = 0.0;
  double big_b = 1.0;
  Objective objective = Objective::Reward();
  // Enforce max_i p({i}) <= b and treat Max-phi(b) = 0 as an error.
  bool singletons_feasible_at_b = true;
};

struct PofReport {
  double max_at_big_b = 0.0;
  double max_at_b = 0.0;
  std::optional<double> ratio;  // empty when Max-phi(b) = 0
  double theoretical_bound = 0.0;
  BoundKind bound_kind = BoundKind::kNone;
};

// Both optima by brute force. `cls` selects the attached bound.
PofReport ComputePof(const Instance& inst, const PofQuery& query,
                     FunctionClass cls);

// Classifies the reward (n <= kClassifyCap) to pick the bound.
PofReport ComputePof(const Instance& inst, const PofQuery& query);

// --- lower-bound instance families (0-based agents) -----------------------

// f(S) = |S ∩ {0..M-1}| / M with M = min(ceil(2B/b) - 1, n). Agents 0..M-1
// cost min(B/M, b)/M, the rest cost nothing. Table encoding up to
// kEnumerationCap agents, additive above. Accepts b == B.
Instance GenAdditiveLowerBound(int n, double b, double big_b);

// Three agents, f = max(a1, a2), a1 = (2/5, 2/5, 1/5), a2 = (0, 0, 2/5),
// costs (B/5, B/5, 0) with B clamped to 2b.
Instance GenXosSeparation(double b, double big_b);

// Cardinality construction on an even n >= 4: f jumps from 1/sqrt(n) + n/2n
// to 2/sqrt(n) + 1/2 at size n/2 + 1. Requires B <= n b / 2. Rewards are
// scaled into [0, 1] (costs scaled alike) when 2/sqrt(n) + 1/2 > 1.
Instance GenSubadditiveLowerBound(int n, double b, double big_b);

// Two additive agents f = (1/2, 1/2 - b/2), c = (b/2, eps (1/2 - b/2)^2).
// Requires 0 < eps < B - b.
Instance GenProfitLowerBoundTwo(double b, double big_b, double eps);

// k additive agents of value 1/k and cost (b + eps)/(2k).
// Requires 1 <= k < min(2B/b, n + 1) and 0 < eps < 2B/k - b.
Instance GenProfitLowerBoundK(double b, double big_b, int k, double eps);

double DefaultEpsTwo(double b, double big_b);
double DefaultEpsK(double b, double big_b, int k);

enum class Family { kAdditiveLb, kXosSeparation, kSubadditiveLb, kProfitTwo,
                    kProfitK };

std::string_view FamilyName(Family family);
std::optional<Family> ParseFamily(std::string_view name);

struct FamilyParams {
  int n = 4;
  double b = 0.5;
  double big_b = 1.0;
  std::optional<int> k;        // profit-k; defaults to ProfitLowerK
  std::optional<double> eps;   // profit families; defaults per family
};

Instance GenerateFamily(Family family, const FamilyParams& params);

// The value the construction is built to hit: the exact PoF for additive-lb,
// 5/2 for the XOS separation, the stated lower bounds otherwise.
double FamilyTarget(Family family, const FamilyParams& params,
                    Objective::Kind objective);

// Whether the family's target is met with equality (true) or is a lower
// bound the realized ratio must reach (false).
bool FamilyTargetIsExact(Family family, Objective::Kind objective);

// Step data for budget curves: for every distinct finite team payment p,
// the best reward/welfare/profit over teams paying at most p.
struct CurvePoint {
  double payment = 0.0;
  double max_reward = 0.0;
  double max_welfare = 0.0;
  double max_profit = 0.0;
  double discounted_reward = 0.0;  // (1 - p) * max_reward
};

std::vector<CurvePoint> BudgetCurve(const Instance& inst,
                                    int cap = kEnumerationCap);

}  // namespace bcd

#endif  // BCD_FRUGALITY_HPP_
