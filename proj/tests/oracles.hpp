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

// Reference implementations used as test oracles. They work on explicit index
// lists and re-derive every quantity from the raw encodings, sharing no code
// with the library beyond the data types.

#ifndef BCD_TESTS_ORACLES_HPP_
#define BCD_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "bcd/model.hpp"
#include "bcd/set_function.hpp"

namespace oracle {

using Team = std::vector<int>;

inline constexpr double kTol = 1e-9;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Every subset of {0..n-1} as a sorted index list, in bitmask order.
inline std::vector<Team> AllTeams(int n) {
  std::vector<Team> out(std::size_t{1} << n);
  for (std::size_t s = 0; s < out.size(); ++s) {
    for (int i = 0; i < n; ++i) {
      if ((s >> i) & 1U) out[s].push_back(i);
    }
  }
  return out;
}

inline std::uint64_t Mask(const Team& t) {
  std::uint64_t m = 0;
  for (int i : t) m += std::uint64_t{1} << i;
  return m;
}

inline Team Drop(const Team& t, int i) {
  Team out;
  for (int j : t) {
    if (j != i) out.push_back(j);
  }
  return out;
}

inline Team Add(Team t, int i) {
  t.push_back(i);
  std::sort(t.begin(), t.end());
  return t;
}

inline bool Has(const Team& t, int i) {
  return std::find(t.begin(), t.end(), i) != t.end();
}

inline double Value(const bcd::SetFunction& f, const Team& t) {
  if (const auto* a = f.additive()) {
    double s = 0.0;
    for (int i : t) s += a->values[static_cast<std::size_t>(i)];
    return s;
  }
  if (const auto* x = f.xos()) {
    double best = 0.0;
    for (const auto& clause : x->clauses) {
      double s = 0.0;
      for (int i : t) s += clause[static_cast<std::size_t>(i)];
      best = std::max(best, s);
    }
    return best;
  }
  return f.table()->values[Mask(t)];
}

inline double Payment(const bcd::Instance& inst, const Team& t) {
  const double ft = Value(inst.reward(), t);
  double total = 0.0;
  for (int i : t) {
    const double c = inst.costs()[static_cast<std::size_t>(i)];
    const double m = ft - Value(inst.reward(), Drop(t, i));
    if (m <= 0.0) {
      if (c > 0.0) return kInf;
      continue;
    }
    total += c / m;
  }
  return total;
}

enum class Goal { kReward, kProfit, kWelfare };

inline double Evaluate(Goal goal, const bcd::Instance& inst, const Team& t) {
  const double f = Value(inst.reward(), t);
  switch (goal) {
    case Goal::kReward:
      return f;
    case Goal::kWelfare: {
      double c = 0.0;
      for (int i : t) c += inst.costs()[static_cast<std::size_t>(i)];
      return f - c;
    }
    case Goal::kProfit: {
      if (f == 0.0) return 0.0;
      const double p = Payment(inst, t);
      return std::isinf(p) ? -kInf : (1.0 - p) * f;
    }
  }
  return 0.0;
}

inline bool IsLight(const bcd::Instance& inst, int i) {
  const double m = Value(inst.reward(), {i}) - Value(inst.reward(), {});
  const double c = inst.costs()[static_cast<std::size_t>(i)];
  if (m <= 0.0) return c == 0.0;
  return c / m <= 0.5 + kTol;
}

struct Best {
  double value = 0.0;
  Team team;
};

// Max-phi(B) over teams paying at most B (+tolerance); empty team baseline.
inline Best BruteMax(Goal goal, const bcd::Instance& inst, double budget,
                     bool light_only = false) {
  Best best;
  for (const Team& t : AllTeams(inst.num_agents())) {
    if (light_only) {
      bool ok = true;
      for (int i : t) ok = ok && IsLight(inst, i);
      if (!ok) continue;
    }
    if (!(Payment(inst, t) <= budget + kTol)) continue;
    const double v = Evaluate(goal, inst, t);
    if (v > best.value + 1e-12) best = {v, t};
  }
  return best;
}

struct Classes {
  bool monotone = true;
  bool submodular = true;
  bool subadditive = true;
};

// Definitions checked over all pairs of teams.
inline Classes Classify(const bcd::SetFunction& f) {
  const int n = f.num_agents();
  const auto teams = AllTeams(n);
  std::vector<double> v(teams.size());
  for (std::size_t s = 0; s < teams.size(); ++s) v[s] = Value(f, teams[s]);
  Classes c;
  for (std::size_t s = 0; s < teams.size(); ++s) {
    for (std::size_t t = 0; t < teams.size(); ++t) {
      if ((s & ~t) == 0) {  // S subset of T
        if (v[s] > v[t] + kTol) c.monotone = false;
        for (int i = 0; i < n; ++i) {
          if ((t >> i) & 1U) continue;
          const double gs = v[s | (std::size_t{1} << i)] - v[s];
          const double gt = v[t | (std::size_t{1} << i)] - v[t];
          if (gs < gt - kTol) c.submodular = false;
        }
      }
      if (v[s | t] > v[s] + v[t] + kTol) c.subadditive = false;
    }
  }
  return c;
}

// argmax f(S) - q(S), smallest bitmask among maximizers within 1e-12.
inline std::uint64_t Demand(const bcd::SetFunction& f,
                            const std::vector<double>& q) {
  double best = -kInf;
  std::uint64_t arg = 0;
  for (const Team& t : AllTeams(f.num_agents())) {
    double s = Value(f, t);
    for (int i : t) s -= q[static_cast<std::size_t>(i)];
    if (s > best + 1e-12) {
      best = s;
      arg = Mask(t);
    }
  }
  return arg;
}

// Eq. (1) checked from the raw definition.
inline bool IsEquilibrium(const bcd::Instance& inst,
                          const std::vector<double>& alpha, const Team& t) {
  const double ft = Value(inst.reward(), t);
  for (int i = 0; i < inst.num_agents(); ++i) {
    const double a = alpha[static_cast<std::size_t>(i)];
    const double c = inst.costs()[static_cast<std::size_t>(i)];
    if (Has(t, i)) {
      if (a * ft - c < a * Value(inst.reward(), Drop(t, i)) - kTol) return false;
    } else {
      if (a * ft < a * Value(inst.reward(), Add(t, i)) - c - kTol) return false;
    }
  }
  return true;
}

}  // namespace oracle

#endif  // BCD_TESTS_ORACLES_HPP_
