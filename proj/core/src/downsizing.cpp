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

#include "bcd/downsizing.hpp"

#include <limits>
#include <string>
#include <vector>

#include "bcd/errors.hpp"

namespace bcd {
namespace {

// c_i / f_S(i) for every agent of S (zero elsewhere).
std::vector<double> PaymentRatios(const Instance& inst, Subset s) {
  const SetFunction& f = inst.reward();
  const double fs = f.Value(s);
  std::vector<double> ratios(static_cast<std::size_t>(inst.num_agents()), 0.0);
  for (int i : ToIndices(s)) {
    const ExtendedReal r = PaymentRatio(inst.cost(i), fs - f.Value(Without(s, i)));
    if (r.is_infinite()) {
      throw PreconditionError("team " + FormatSubset(s) +
                              " has infinite payment; cannot downsize");
    }
    ratios[static_cast<std::size_t>(i)] = r.value();
  }
  return ratios;
}

void CheckTeam(const Instance& inst, Subset s) {
  if (s == kEmptySet) throw InputError("cannot downsize the empty team");
  if (!IsSubsetOf(s, FullSet(inst.num_agents()))) {
    throw InputError("team " + FormatSubset(s) + " names unknown agents");
  }
}

DownsizeResult Finish(const Instance& inst, Subset s, Subset t,
                      const Objective& psi, bool singleton_exit) {
  DownsizeResult out;
  out.subset = t;
  out.payment_before = Payment(inst, s);
  out.payment_after = Payment(inst, t);
  out.objective_before = psi.Evaluate(inst, s);
  out.objective_after = psi.Evaluate(inst, t);
  out.singleton_exit = singleton_exit;
  return out;
}

}  // namespace

DownsizeResult DownsizeSubmodular(const Instance& inst, Subset s,
                                  const DownsizeParams& params) {
  CheckTeam(inst, s);
  if (params.m < 3) {
    throw InputError("downsizing parameter m must be >= 3, got " +
                     std::to_string(params.m));
  }
  if (params.verify_submodular && !Classify(inst.reward()).is_submodular) {
    throw PreconditionError("reward is not submodular");
  }

  const std::vector<double> ratio = PaymentRatios(inst, s);
  double total = 0.0;
  for (int i : ToIndices(s)) total += ratio[static_cast<std::size_t>(i)];
  const double share = total / params.m;
  const double target = params.psi.Evaluate(inst, s) / (params.m - 1);

  // Z: agents that each cost more than a 1/m share of p(S).
  Subset heavy = kEmptySet;
  for (int i : ToIndices(s)) {
    if (ratio[static_cast<std::size_t>(i)] > share + kTolerance) heavy = With(heavy, i);
  }
  for (int i : ToIndices(heavy)) {
    if (params.psi.Evaluate(inst, Singleton(i)) >= target) {
      return Finish(inst, s, Singleton(i), params.psi, true);
    }
  }

  Subset remaining = s & ~heavy;
  const int bags = params.m - Cardinality(heavy) - 2;
  if (bags < 0) {
    // |Z| = m - 1 leaves no bags and the remainder alone can fall short. Each
    // remainder-plus-one-heavy team keeps sum c/f_S below 2 p(S)/m, and these
    // m - 1 teams cover S, so subadditivity makes one of them reach the target.
    Subset best = remaining;
    double best_value = params.psi.Evaluate(inst, remaining);
    for (int i : ToIndices(heavy)) {
      const Subset cand = With(remaining, i);
      const double v = params.psi.Evaluate(inst, cand);
      if (v >= target) return Finish(inst, s, cand, params.psi, false);
      if (v > best_value) {
        best = cand;
        best_value = v;
      }
    }
    return Finish(inst, s, best, params.psi, false);
  }
  for (int r = 1; r <= bags; ++r) {
    Subset bag = kEmptySet;
    double bag_total = 0.0;
    while (remaining != kEmptySet && bag_total <= share + kTolerance) {
      const int i = std::countr_zero(remaining);
      remaining = Without(remaining, i);
      bag = With(bag, i);
      bag_total += ratio[static_cast<std::size_t>(i)];
    }
    if (params.psi.Evaluate(inst, bag) >= target) {
      return Finish(inst, s, bag, params.psi, false);
    }
  }
  return Finish(inst, s, remaining, params.psi, false);
}

Subset RecoverMarginalsXos(const Instance& inst, Subset t, Subset s) {
  const Subset all = FullSet(inst.num_agents());
  if (!IsSubsetOf(s, all) || !IsSubsetOf(t, all)) {
    throw InputError("teams name unknown agents");
  }
  if (!IsSubsetOf(t, s)) {
    throw InputError(FormatSubset(t) + " is not a subset of " + FormatSubset(s));
  }
  const SetFunction& f = inst.reward();
  std::vector<double> in_s(static_cast<std::size_t>(inst.num_agents()), 0.0);
  for (int i : ToIndices(t)) in_s[static_cast<std::size_t>(i)] = Marginal(f, s, i);

  Subset u = t;
  while (true) {
    bool violated = false;
    int worst = -1;
    double worst_ratio = std::numeric_limits<double>::infinity();
    for (int i : ToIndices(u)) {
      const double full = in_s[static_cast<std::size_t>(i)];
      const double here = Marginal(f, u, i);
      if (here < 0.5 * full - kTolerance) violated = true;
      // Zero marginal in S never triggers removal (ratio treated as +inf).
      if (full > 0.0 && here / full < worst_ratio) {
        worst_ratio = here / full;
        worst = i;
      }
    }
    if (!violated || worst < 0) return u;
    u = Without(u, worst);
  }
}

DownsizeResult DownsizeXos(const Instance& inst, Subset s, int m) {
  DownsizeParams params;
  params.m = m;
  const DownsizeResult shrunk = DownsizeSubmodular(inst, s, params);
  const Subset u = RecoverMarginalsXos(inst, shrunk.subset, s);
  return Finish(inst, s, u, params.psi, shrunk.singleton_exit);
}

}  // namespace bcd
