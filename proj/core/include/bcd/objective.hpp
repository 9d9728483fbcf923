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

#ifndef BCD_OBJECTIVE_HPP_
#define BCD_OBJECTIVE_HPP_

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bcd/model.hpp"
#include "bcd/subset.hpp"

namespace bcd {

// The per-team quantities every named objective is a function of.
struct TeamTerms {
  double reward = 0.0;     // f(S)
  ExtendedReal payment;    // p(S)
  double cost = 0.0;       // sum_{i in S} c_i
};

TeamTerms ComputeTerms(const Instance& inst, Subset s);

// Reward f(S), profit g(S), welfare f(S) - c(S), or a convex combination.
class Objective {
 public:
  enum class Kind { kReward, kProfit, kWelfare, kConvex };

  static Objective Reward();
  static Objective Profit();
  static Objective Welfare();
  // Weights must be strictly positive and sum to 1 within 1e-12.
  static Objective Convex(std::vector<std::pair<double, Objective>> terms);

  Kind kind() const { return kind_; }
  std::string name() const;
  const std::vector<std::pair<double, Objective>>& components() const {
    return components_;
  }

  double Evaluate(const Instance& inst, Subset s) const;
  double EvaluateTerms(const TeamTerms& terms) const;

 private:
  explicit Objective(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::vector<std::pair<double, Objective>> components_;
};

// Exhaustively verifies g(S) <= phi(S) <= f(S) and
// phi(S) <= f(S \ {i}) + phi({i}) for every S and i in S.
bool CheckBestConditions(const Objective& obj, const Instance& inst,
                         int cap = kEnumerationCap);

struct KeyPropertyGap {
  double lhs = 0.0;          // Max-phi(B)
  double rhs = 0.0;          // coefficient * Max-Reward-Light(B) + max_i phi({i})
  double coefficient = 2.0;  // 2 for XOS rewards, 1 for submodular
};

// Both sides of the light-agent upper bound on Max-phi(B), computed by brute
// force. Pass `submodular = true` for the coefficient-1 variant.
KeyPropertyGap ComputeKeyPropertyGap(const Objective& obj, const Instance& inst,
                                     double budget, bool submodular = false);

}  // namespace bcd

#endif  // BCD_OBJECTIVE_HPP_
