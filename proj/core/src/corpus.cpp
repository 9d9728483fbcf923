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

#include "bcd/corpus.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

#include "bcd/errors.hpp"

namespace bcd {
namespace {

void CheckSize(int n, int cap) {
  if (n < 1 || n > cap) {
    throw InputError("corpus size must lie in [1, " + std::to_string(cap) +
                     "], got " + std::to_string(n));
  }
}

void Normalize(std::vector<double>& v, double total) {
  const double sum = std::accumulate(v.begin(), v.end(), 0.0);
  if (sum <= 0.0) return;
  for (double& x : v) x *= total / sum;
}

// Singleton payments c_i / f({i}) drawn from [0.02, 0.6].
std::vector<double> CostsFromSingletons(CorpusRng& rng,
                                        const std::vector<double>& single) {
  std::vector<double> costs(single.size());
  for (std::size_t i = 0; i < single.size(); ++i) {
    costs[i] = single[i] * rng.Uniform(0.02, 0.6);
  }
  return costs;
}

}  // namespace

double CorpusRng::Uniform(double lo, double hi) {
  const double unit =
      static_cast<double>(engine_() >> 11) * 0x1.0p-53;  // [0, 1)
  return lo + (hi - lo) * unit;
}

int CorpusRng::UniformInt(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

bool CorpusRng::Bernoulli(double p) { return Uniform(0.0, 1.0) < p; }

Instance RandomSubmodularInstance(CorpusRng& rng, int n) {
  CheckSize(n, kEnumerationCap);
  const int universe = 2 * n;
  std::vector<double> weight(static_cast<std::size_t>(universe));
  for (double& w : weight) w = rng.Uniform(0.1, 1.0);
  Normalize(weight, 1.0);

  std::vector<Subset> covers(static_cast<std::size_t>(n), 0);
  std::vector<double> additive(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Subset& c = covers[static_cast<std::size_t>(i)];
    for (int u = 0; u < universe; ++u) {
      if (rng.Bernoulli(0.35)) c = With(c, u);
    }
    if (c == 0) c = Singleton(rng.UniformInt(0, universe - 1));
    additive[static_cast<std::size_t>(i)] = rng.Uniform(0.1, 1.0);
  }
  Normalize(additive, 1.0);

  std::vector<double> table(std::size_t{1} << n, 0.0);
  for (Subset s = 1; s < table.size(); ++s) {
    Subset covered = 0;
    double add = 0.0;
    for (Subset r = s; r != 0; r &= r - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(r));
      covered |= covers[i];
      add += additive[i];
    }
    double cov = 0.0;
    for (Subset r = covered; r != 0; r &= r - 1) {
      cov += weight[static_cast<std::size_t>(std::countr_zero(r))];
    }
    table[s] = std::min(1.0, 0.8 * cov + 0.2 * add);
  }

  std::vector<double> single(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    single[static_cast<std::size_t>(i)] = table[Singleton(i)];
  }
  return Instance(CostsFromSingletons(rng, single),
                  SetFunction::FromTable(std::move(table)));
}

Instance RandomXosInstance(CorpusRng& rng, int n, int clauses) {
  CheckSize(n, kMaxAgents);
  if (clauses < 1) throw InputError("need at least one clause");
  const auto nn = static_cast<std::size_t>(n);
  std::vector<std::vector<double>> a(static_cast<std::size_t>(clauses),
                                     std::vector<double>(nn, 0.0));
  for (auto& clause : a) {
    for (double& x : clause) x = rng.Bernoulli(0.7) ? rng.Uniform(0.0, 1.0) : 0.0;
  }
  for (std::size_t i = 0; i < nn; ++i) {
    const bool seen = std::any_of(a.begin(), a.end(),
                                  [&](const auto& c) { return c[i] > 0.0; });
    if (!seen) {
      a[static_cast<std::size_t>(rng.UniformInt(0, clauses - 1))][i] =
          rng.Uniform(0.05, 1.0);
    }
  }
  double top = 0.0;
  for (const auto& clause : a) {
    top = std::max(top, std::accumulate(clause.begin(), clause.end(), 0.0));
  }
  for (auto& clause : a) {
    for (double& x : clause) x /= top;
  }
  std::vector<double> single(nn, 0.0);
  for (const auto& clause : a) {
    for (std::size_t i = 0; i < nn; ++i) single[i] = std::max(single[i], clause[i]);
  }
  std::vector<double> costs = CostsFromSingletons(rng, single);
  return Instance(std::move(costs), SetFunction::FromXos(std::move(a), n));
}

Instance RandomAdditiveInstance(CorpusRng& rng, int n) {
  CheckSize(n, kMaxAgents);
  std::vector<double> values(static_cast<std::size_t>(n));
  for (double& v : values) v = rng.Uniform(0.05, 1.0);
  Normalize(values, rng.Uniform(0.5, 1.0));
  std::vector<double> costs(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    costs[i] = values[i] * rng.Uniform(0.01, 1.0);
  }
  return Instance(std::move(costs), SetFunction::FromAdditive(std::move(values)));
}

std::string_view CorpusKindName(CorpusKind kind) {
  switch (kind) {
    case CorpusKind::kSubmodular: return "submodular";
    case CorpusKind::kXos: return "xos";
    case CorpusKind::kAdditive: return "additive";
  }
  return "";
}

}  // namespace bcd
