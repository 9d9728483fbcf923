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

#ifndef BCD_DOWNSIZING_HPP_
#define BCD_DOWNSIZING_HPP_

#include "bcd/extended_real.hpp"
#include "bcd/model.hpp"
#include "bcd/objective.hpp"
#include "bcd/subset.hpp"

namespace bcd {

struct DownsizeParams {
  int m = 3;                              // target payment fraction 2/m; m >= 3
  Objective psi = Objective::Reward();    // subadditive quantity to preserve
  // Runs Classify on the reward and rejects non-submodular inputs. Only
  // possible for n <= kClassifyCap.
  bool verify_submodular = false;
};

struct DownsizeResult {
  Subset subset = kEmptySet;
  ExtendedReal payment_before;
  ExtendedReal payment_after;
  double objective_before = 0.0;
  double objective_after = 0.0;
  // True iff the team was returned through the high-payment singleton branch.
  bool singleton_exit = false;
};

// Shrinks S to T subset of S with psi(T) >= psi(S)/(m-1) and either
// p(T) <= (2/m) p(S) or |T| = 1. Requires submodular reward, non-empty S with
// finite payment. Agents are packed into bags in ascending index order.
DownsizeResult DownsizeSubmodular(const Instance& inst, Subset s,
                                  const DownsizeParams& params);

// Removes agents from T (T subset of S) until every survivor keeps at least
// half of its marginal in S: f_U(i) >= f_S(i)/2. The survivor set keeps at
// least half of f(T) for XOS rewards. Each round drops the agent with the
// smallest f_U(i)/f_S(i), lowest index first.
Subset RecoverMarginalsXos(const Instance& inst, Subset t, Subset s);

// DownsizeSubmodular with psi = f followed by RecoverMarginalsXos. For XOS
// rewards the result U satisfies f(U) >= f(S)/(2m-2) and either
// p(U) <= (4/m) p(S) or |U| = 1.
DownsizeResult DownsizeXos(const Instance& inst, Subset s, int m);

}  // namespace bcd

#endif  // BCD_DOWNSIZING_HPP_
