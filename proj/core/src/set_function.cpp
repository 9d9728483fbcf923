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

#include "bcd/set_function.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "bcd/errors.hpp"

namespace bcd {
namespace {

constexpr double kDemandTieTolerance = 1e-12;

void CheckFinite(double v, const char* what) {
  if (!std::isfinite(v)) throw InputError(std::string(what) + " must be finite");
}

void CheckNonNegative(const std::vector<double>& values, const char* what) {
  for (double v : values) {
    CheckFinite(v, what);
    if (v < 0.0) throw InputError(std::string(what) + " must be non-negative");
  }
}

double SumOver(const std::vector<double>& weights, Subset s) {
  double total = 0.0;
  while (s != 0) {
    total += weights[static_cast<std::size_t>(std::countr_zero(s))];
    s &= s - 1;
  }
  return total;
}

// Sum of weights for every mask, built incrementally from the lowest bit.
std::vector<double> AllSums(const std::vector<double>& weights, int n) {
  std::vector<double> sums(std::size_t{1} << n, 0.0);
  for (Subset s = 1; s < sums.size(); ++s) {
    const int low = std::countr_zero(s);
    sums[s] = sums[s & (s - 1)] + weights[static_cast<std::size_t>(low)];
  }
  return sums;
}

// Scatters the bits of `packed` onto the positions set in `agents`.
Subset Deposit(Subset packed, Subset agents) {
  Subset out = kEmptySet;
  int k = 0;
  while (agents != 0) {
    const int pos = std::countr_zero(agents);
    if (Contains(packed, k)) out = With(out, pos);
    agents &= agents - 1;
    ++k;
  }
  return out;
}

template <typename T>
std::vector<T> Select(const std::vector<T>& v, Subset agents) {
  std::vector<T> out;
  for (int i : ToIndices(agents)) out.push_back(v[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace

SetFunction SetFunction::FromAdditive(std::vector<double> values) {
  if (values.size() > kMaxAgents) throw InputError("too many agents");
  CheckNonNegative(values, "additive values");
  const int n = static_cast<int>(values.size());
  return SetFunction(Additive{std::move(values)}, n);
}

SetFunction SetFunction::FromXos(std::vector<std::vector<double>> clauses,
                                 int n) {
  if (n < 0 || n > kMaxAgents) throw InputError("agent count out of range");
  for (const auto& clause : clauses) {
    if (static_cast<int>(clause.size()) != n) {
      throw InputError("XOS clause length " + std::to_string(clause.size()) +
                       " != n=" + std::to_string(n));
    }
    CheckNonNegative(clause, "XOS clause entries");
  }
  return SetFunction(XosClauses{std::move(clauses)}, n);
}

SetFunction SetFunction::FromTable(std::vector<double> values) {
  const std::size_t size = values.size();
  if (size == 0 || !std::has_single_bit(size)) {
    throw InputError("table size must be a power of two, got " +
                     std::to_string(size));
  }
  const int n = std::countr_zero(size);
  if (n > kEnumerationCap) {
    throw SizeError("table over " + std::to_string(n) +
                    " agents exceeds cap " + std::to_string(kEnumerationCap));
  }
  for (double v : values) CheckFinite(v, "table values");
  return SetFunction(Table{std::move(values)}, n);
}

SetFunction::Kind SetFunction::kind() const {
  return static_cast<Kind>(rep_.index());
}

std::string_view SetFunction::kind_name() const {
  switch (kind()) {
    case Kind::kAdditive:
      return "additive";
    case Kind::kXos:
      return "xos";
    case Kind::kTable:
      return "table";
  }
  return "unknown";
}

double SetFunction::Value(Subset s) const {
  if (!IsSubsetOf(s, FullSet(n_))) {
    throw InputError("subset " + FormatSubset(s) + " names agents >= n=" +
                     std::to_string(n_));
  }
  if (const auto* a = additive()) return SumOver(a->values, s);
  if (const auto* x = xos()) {
    double best = 0.0;
    for (const auto& clause : x->clauses) best = std::max(best, SumOver(clause, s));
    return best;
  }
  return table()->values[s];
}

Subset SetFunction::Demand(std::span<const double> prices) const {
  if (static_cast<int>(prices.size()) != n_) {
    throw InputError("price vector length mismatch");
  }
  for (double q : prices) {
    if (!(q >= 0.0)) throw InputError("prices must be non-negative");
  }
  if (table() != nullptr) return DemandByScan(prices);

  // The optimum of max_j (a_j(S) - q(S)) is attained clause by clause at
  // S_j = {i : a_j[i] > q_i}.
  std::vector<Subset> candidates{kEmptySet};
  auto clause_candidate = [&](const std::vector<double>& clause) {
    Subset s = kEmptySet;
    for (int i = 0; i < n_; ++i) {
      if (clause[static_cast<std::size_t>(i)] > prices[static_cast<std::size_t>(i)]) {
        s = With(s, i);
      }
    }
    candidates.push_back(s);
  };
  if (const auto* a = additive()) {
    clause_candidate(a->values);
  } else {
    for (const auto& clause : xos()->clauses) clause_candidate(clause);
  }

  const std::vector<double> q(prices.begin(), prices.end());
  std::vector<double> surplus;
  surplus.reserve(candidates.size());
  double best = -std::numeric_limits<double>::infinity();
  for (Subset s : candidates) {
    surplus.push_back(Value(s) - SumOver(q, s));
    best = std::max(best, surplus.back());
  }
  Subset winner = ~Subset{0};
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    if (surplus[j] >= best - kDemandTieTolerance) {
      winner = std::min(winner, candidates[j]);
    }
  }
  return winner;
}

Subset SetFunction::DemandByScan(std::span<const double> prices) const {
  if (static_cast<int>(prices.size()) != n_) {
    throw InputError("price vector length mismatch");
  }
  for (double q : prices) {
    if (!(q >= 0.0)) throw InputError("prices must be non-negative");
  }
  const std::vector<double> values = Materialize();
  const std::vector<double> price_sums =
      AllSums(std::vector<double>(prices.begin(), prices.end()), n_);
  double best = -std::numeric_limits<double>::infinity();
  for (Subset s = 0; s < values.size(); ++s) {
    best = std::max(best, values[s] - price_sums[s]);
  }
  for (Subset s = 0; s < values.size(); ++s) {
    if (values[s] - price_sums[s] >= best - kDemandTieTolerance) return s;
  }
  return kEmptySet;
}

std::vector<double> SetFunction::Materialize() const {
  if (n_ > kEnumerationCap) {
    throw SizeError("cannot materialize " + std::to_string(n_) +
                    " agents (cap " + std::to_string(kEnumerationCap) + ")");
  }
  if (const auto* t = table()) return t->values;
  if (const auto* a = additive()) return AllSums(a->values, n_);
  std::vector<double> out(std::size_t{1} << n_, 0.0);
  for (const auto& clause : xos()->clauses) {
    const std::vector<double> sums = AllSums(clause, n_);
    for (std::size_t s = 0; s < out.size(); ++s) out[s] = std::max(out[s], sums[s]);
  }
  return out;
}

SetFunction SetFunction::Restrict(Subset agents) const {
  if (!IsSubsetOf(agents, FullSet(n_))) {
    throw InputError("restriction names agents outside the function domain");
  }
  const int k = Cardinality(agents);
  if (const auto* a = additive()) return FromAdditive(Select(a->values, agents));
  if (const auto* x = xos()) {
    std::vector<std::vector<double>> clauses;
    clauses.reserve(x->clauses.size());
    for (const auto& clause : x->clauses) clauses.push_back(Select(clause, agents));
    return FromXos(std::move(clauses), k);
  }
  const auto& full = table()->values;
  std::vector<double> values(std::size_t{1} << k);
  for (Subset s = 0; s < values.size(); ++s) values[s] = full[Deposit(s, agents)];
  return FromTable(std::move(values));
}

SetFunction SetFunction::Scaled(double factor) const {
  if (!(factor >= 0.0) || !std::isfinite(factor)) {
    throw InputError("scale factor must be finite and non-negative");
  }
  auto scale = [factor](std::vector<double> v) {
    for (double& x : v) x *= factor;
    return v;
  };
  if (const auto* a = additive()) return FromAdditive(scale(a->values));
  if (const auto* x = xos()) {
    std::vector<std::vector<double>> clauses;
    for (const auto& clause : x->clauses) clauses.push_back(scale(clause));
    return FromXos(std::move(clauses), n_);
  }
  return FromTable(scale(table()->values));
}

double SetFunction::MaxValue() const {
  if (const auto* a = additive()) return SumOver(a->values, FullSet(n_));
  if (xos() != nullptr) return Value(FullSet(n_));
  const auto& v = table()->values;
  return *std::max_element(v.begin(), v.end());
}

double Marginal(const SetFunction& f, Subset s, int i) {
  if (i < 0 || i >= f.num_agents() || !Contains(s, i)) {
    throw InputError("agent " + std::to_string(i) + " is not in " +
                     FormatSubset(s));
  }
  return f.Value(s) - f.Value(Without(s, i));
}

FunctionClasses Classify(const SetFunction& f, int cap) {
  const int n = f.num_agents();
  if (f.additive() != nullptr) return {true, true, true};
  if (n > cap) {
    throw SizeError("classify needs n <= " + std::to_string(cap) + ", got " +
                    std::to_string(n));
  }
  const std::vector<double> v = f.Materialize();
  const Subset full = FullSet(n);
  FunctionClasses out{true, true, true};

  for (Subset s = 0; s <= full && out.is_monotone; ++s) {
    for (int i = 0; i < n; ++i) {
      if (!Contains(s, i) && v[With(s, i)] < v[s] - kTolerance) {
        out.is_monotone = false;
        break;
      }
    }
  }

  // f(S+i) - f(S) >= f(S+i+j) - f(S+j) for all S and i, j outside S.
  for (Subset s = 0; s <= full && out.is_submodular; ++s) {
    for (int i = 0; i < n && out.is_submodular; ++i) {
      if (Contains(s, i)) continue;
      const double gain = v[With(s, i)] - v[s];
      for (int j = 0; j < n; ++j) {
        if (j == i || Contains(s, j)) continue;
        const Subset sj = With(s, j);
        if (gain < v[With(sj, i)] - v[sj] - kTolerance) {
          out.is_submodular = false;
          break;
        }
      }
    }
  }

  if (out.is_monotone) {
    // Monotone functions only need disjoint pairs:
    // f(S ∪ T) = f(S ∪ (T \ S)) <= f(S) + f(T \ S) <= f(S) + f(T).
    for (Subset s = 0; s <= full && out.is_subadditive; ++s) {
      const Subset rest = full & ~s;
      for (Subset t = rest;; t = (t - 1) & rest) {
        if (v[s | t] > v[s] + v[t] + kTolerance) {
          out.is_subadditive = false;
          break;
        }
        if (t == 0) break;
      }
    }
  } else {
    constexpr int kPairCap = 12;
    if (n > kPairCap) {
      throw SizeError("subadditivity of a non-monotone function needs n <= " +
                      std::to_string(kPairCap));
    }
    for (Subset s = 0; s <= full && out.is_subadditive; ++s) {
      for (Subset t = 0; t <= full; ++t) {
        if (v[s | t] > v[s] + v[t] + kTolerance) {
          out.is_subadditive = false;
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace bcd
