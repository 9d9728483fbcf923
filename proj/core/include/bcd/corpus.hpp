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

#ifndef BCD_CORPUS_HPP_
#define BCD_CORPUS_HPP_

#include <cstdint>
#include <random>
#include <string_view>

#include "bcd/model.hpp"

namespace bcd {

// Seeded random instance recipes used by the property suites and `bcd gen`.
// Bump kCorpusVersion whenever a recipe changes its output for a given seed.
inline constexpr int kCorpusVersion = 1;

// Platform-independent uniform draws (std distributions are not).
class CorpusRng {
 public:
  explicit CorpusRng(std::uint64_t seed) : engine_(seed) {}

  double Uniform(double lo, double hi);
  int UniformInt(int lo, int hi);  // inclusive
  bool Bernoulli(double p);

 private:
  std::mt19937_64 engine_;
};

// Monotone submodular table: 0.8 * weighted coverage + 0.2 * additive, all
// singleton marginals strictly positive, values in [0, 1].
Instance RandomSubmodularInstance(CorpusRng& rng, int n);

// k random non-negative clauses normalized so the largest clause sums to at
// most 1; costs keep some agents light.
Instance RandomXosInstance(CorpusRng& rng, int n, int clauses);

// Additive values summing to at most 1, costs drawn so singleton payments
// spread over (0, 1].
Instance RandomAdditiveInstance(CorpusRng& rng, int n);

enum class CorpusKind { kSubmodular, kXos, kAdditive };
std::string_view CorpusKindName(CorpusKind kind);

}  // namespace bcd

#endif  // BCD_CORPUS_HPP_
