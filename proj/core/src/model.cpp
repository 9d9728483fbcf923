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

#include "bcd/model.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "bcd/errors.hpp"

namespace bcd {

Instance::Instance(std::vector<double> costs, SetFunction reward)
    : costs_(std::move(costs)), reward_(std::move(reward)) {
  if (static_cast<int>(costs_.size()) != reward_.num_agents()) {
    throw InputError("cost vector has " + std::to_string(costs_.size()) +
                     " entries but reward is over " +
                     std::to_string(reward_.num_agents()) + " agents");
  }
  for (double c : costs_) {
    if (!std::isfinite(c) || c < 0.0) {
      throw InputError("costs must be finite and non-negative");
    }
  }
  if (reward_.Value(kEmptySet) < 0.0) throw InputError("f(empty) must be >= 0");
  if (const auto* t = reward_.table()) {
    for (double v : t->values) {
      if (v < -kTolerance) throw InputError("reward values must lie in [0, 1]");
    }
  }
  if (reward_.MaxValue() > 1.0 + kTolerance) {
    throw InputError("reward values must lie in [0, 1]");
  }
}

double Instance::TotalCost(Subset s) const {
  double total = 0.0;
  for (int i : ToIndices(s)) total += cost(i);
  return total;
}

double Contract::total() const {
  return std::accumulate(alpha.begin(), alpha.end(), 0.0);
}

ExtendedReal PaymentRatio(double cost, double marginal) {
  if (marginal <= 0.0) {
    return cost == 0.0 ? ExtendedReal(0.0) : ExtendedReal::Infinity();
  }
  return ExtendedReal(cost / marginal);
}

ExtendedReal Payment(const Instance& inst, Subset s) {
  const SetFunction& f = inst.reward();
  const double fs = f.Value(s);
  ExtendedReal total(0.0);
  for (int i : ToIndices(s)) {
    total += PaymentRatio(inst.cost(i), fs - f.Value(Without(s, i)));
  }
  return total;
}

double Profit(const Instance& inst, Subset s) {
  const double fs = inst.reward().Value(s);
  if (fs == 0.0) return 0.0;
  const ExtendedReal p = Payment(inst, s);
  if (p.is_infinite()) return -std::numeric_limits<double>::infinity();
  return (1.0 - p.value()) * fs;
}

Contract OptimalContractFor(const Instance& inst, Subset s) {
  const SetFunction& f = inst.reward();
  Contract contract{std::vector<double>(static_cast<std::size_t>(inst.num_agents()), 0.0)};
  const double fs = f.Value(s);
  for (int i : ToIndices(s)) {
    const ExtendedReal ratio =
        PaymentRatio(inst.cost(i), fs - f.Value(Without(s, i)));
    if (ratio.is_infinite()) {
      throw InfeasibleSetError("team " + FormatSubset(s) +
                               " needs infinite payment for agent " +
                               std::to_string(i));
    }
    contract.alpha[static_cast<std::size_t>(i)] = ratio.value();
  }
  return contract;
}

bool IsNashEquilibrium(const Instance& inst, const Contract& contract,
                       Subset s) {
  const int n = inst.num_agents();
  if (static_cast<int>(contract.alpha.size()) != n) {
    throw InputError("contract length does not match agent count");
  }
  const SetFunction& f = inst.reward();
  const double fs = f.Value(s);
  for (int i = 0; i < n; ++i) {
    const double a = contract.alpha[static_cast<std::size_t>(i)];
    const double c = inst.cost(i);
    if (Contains(s, i)) {
      // Working must beat shirking.
      if (a * fs - c < a * f.Value(Without(s, i)) - kTolerance) return false;
    } else {
      // Shirking must beat joining.
      if (a * fs < a * f.Value(With(s, i)) - c - kTolerance) return false;
    }
  }
  return true;
}

std::vector<Subset> EnumerateEquilibria(const Instance& inst,
                                        const Contract& contract, int cap) {
  const int n = inst.num_agents();
  if (n > cap) {
    throw SizeError("equilibrium enumeration needs n <= " +
                    std::to_string(cap) + ", got " + std::to_string(n));
  }
  std::vector<Subset> out;
  const Subset full = FullSet(n);
  for (Subset s = 0;; ++s) {
    if (IsNashEquilibrium(inst, contract, s)) out.push_back(s);
    if (s == full) break;
  }
  return out;
}

Subset LightAgents(const Instance& inst) {
  Subset light = kEmptySet;
  for (int i = 0; i < inst.num_agents(); ++i) {
    const ExtendedReal p = PaymentRatio(inst.cost(i), inst.reward().Value(Singleton(i)) -
                                                          inst.reward().Value(kEmptySet));
    if (p.FitsWithin(0.5, kTolerance)) light = With(light, i);
  }
  return light;
}

}  // namespace bcd
