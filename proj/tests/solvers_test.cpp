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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "bcd/corpus.hpp"
#include "bcd/errors.hpp"
#include "bcd/numeric.hpp"
#include "bcd/solvers.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace bcd {
namespace {

struct Named {
  Objective obj;
  oracle::Goal goal;
};

std::vector<Named> NamedObjectives() {
  return {{Objective::Reward(), oracle::Goal::kReward},
          {Objective::Profit(), oracle::Goal::kProfit},
          {Objective::Welfare(), oracle::Goal::kWelfare}};
}

TEST(BruteForceTest, Examples) {
  const Instance xos = fixtures::ThreeAgentXos();
  const SolveResult full = BruteForceMax(Objective::Reward(), xos, 1.0);
  EXPECT_EQ(full.optimum, FullSet(3));
  EXPECT_NEAR(full.value, 1.0, 1e-12);
  EXPECT_NEAR(full.payment.value(), 1.0, 1e-12);
  EXPECT_EQ(full.enumerated, 8u);
  EXPECT_NEAR(BruteForceMax(Objective::Reward(), xos, 0.49).value, 0.4, 1e-12);

  const Instance paid({0.1, 0.2}, SetFunction::FromAdditive({0.3, 0.3}));
  const SolveResult none = BruteForceMax(Objective::Reward(), paid, 1e-6);
  EXPECT_EQ(none.optimum, kEmptySet);
  EXPECT_EQ(none.value, 0.0);
}

TEST(BruteForceTest, NegativeWelfareYieldsEmptyTeam) {
  const Instance costly({0.5}, SetFunction::FromAdditive({0.2}));
  const SolveResult r = BruteForceMax(Objective::Welfare(), costly, 1.0);
  EXPECT_EQ(r.optimum, kEmptySet);
  EXPECT_EQ(r.value, 0.0);
}

TEST(BruteForceTest, Errors) {
  const Instance big(std::vector<double>(21, 0.0),
                     SetFunction::FromAdditive(std::vector<double>(21, 0.01)));
  EXPECT_THROW(BruteForceMax(Objective::Reward(), big, 1.0), SizeError);
  EXPECT_THROW(BruteForceMax(Objective::Reward(), fixtures::SingleAgent(), -0.1),
               InputError);
}

TEST(BruteForceTest, MatchesOracleOnCorpora) {
  CorpusRng rng(41);
  for (int trial = 0; trial < 24; ++trial) {
    const Instance inst = trial % 2 == 0
                              ? RandomSubmodularInstance(rng, rng.UniformInt(1, 8))
                              : RandomXosInstance(rng, rng.UniformInt(1, 8), 3);
    for (double budget : {0.1, 0.3, 0.5, 1.0}) {
      for (const Named& nm : NamedObjectives()) {
        for (bool light : {false, true}) {
          const SolveResult got = BruteForceMax(nm.obj, inst, budget, light);
          const oracle::Best want = oracle::BruteMax(nm.goal, inst, budget, light);
          ASSERT_NEAR(got.value, want.value, 1e-12);
          ASSERT_EQ(got.optimum, oracle::Mask(want.team));
          ASSERT_TRUE(got.payment.FitsWithin(budget, kTolerance));
        }
      }
    }
  }
}

TEST(BruteForceTest, MonotoneInBudgetAndLightDominated) {
  CorpusRng rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = RandomXosInstance(rng, rng.UniformInt(1, 8), 4);
    for (const Named& nm : NamedObjectives()) {
      double previous = 0.0;
      for (double budget = 0.05; budget <= 1.0 + 1e-12; budget += 0.05) {
        const double v = BruteForceMax(nm.obj, inst, budget).value;
        ASSERT_GE(v, previous - 1e-12);
        previous = v;
      }
    }
    for (double budget : {0.25, 0.5, 1.0}) {
      ASSERT_GE(BruteForceMax(Objective::Reward(), inst, budget).value,
                BruteForceMax(Objective::Reward(), inst, budget, true).value);
    }
  }
}

// --- profit FPTAS ----------------------------------------------------------

TEST(FptasTest, Examples) {
  const Instance two({0.1, 0.1}, SetFunction::FromAdditive({0.5, 0.5}));
  const SolveResult r = FptasAdditiveProfit(two, 1.0, 0.1);
  EXPECT_GE(r.value, 0.54);
  EXPECT_NEAR(r.value, Profit(two, r.optimum), 1e-12);

  const SolveResult one = FptasAdditiveProfit(fixtures::SingleAgent(), 1.0, 0.3);
  EXPECT_NEAR(one.value, 0.5, 1e-12);
  EXPECT_EQ(one.optimum, Singleton(0));

  EXPECT_THROW(FptasAdditiveProfit(fixtures::ThreeAgentXos(), 1.0, 0.1),
               PreconditionError);
  EXPECT_THROW(FptasAdditiveProfit(two, 1.0, 1.5), InputError);
}

TEST(FptasTest, WithinEpsilonOfOptimumOnRandomAdditive) {
  CorpusRng rng(43);
  for (int trial = 0; trial < 12; ++trial) {
    const Instance inst = RandomAdditiveInstance(rng, 12);
    const double opt = oracle::BruteMax(oracle::Goal::kProfit, inst, 1.0).value;
    const SolveResult r = FptasAdditiveProfit(inst, 1.0, 0.05);
    EXPECT_GE(r.value, 0.95 * opt - 1e-12) << "trial " << trial;
    EXPECT_TRUE(r.payment.FitsWithin(1.0, kTolerance));
  }
}

TEST(FptasTest, BudgetedRatioAcrossEpsilons) {
  CorpusRng rng(44);
  for (int trial = 0; trial < 8; ++trial) {
    const Instance inst = RandomAdditiveInstance(rng, rng.UniformInt(2, 10));
    for (double budget : {0.3, 0.6, 1.0}) {
      const double opt = oracle::BruteMax(oracle::Goal::kProfit, inst, budget).value;
      for (double eps : {0.3, 0.1, 0.02}) {
        const SolveResult r = FptasAdditiveProfit(inst, budget, eps);
        ASSERT_GE(r.value, (1 - eps) * opt - 1e-12);
        ASSERT_TRUE(r.payment.FitsWithin(budget, kTolerance));
      }
    }
  }
}

TEST(RoundedTableTest, ShapeAndMonotonicity) {
  CorpusRng rng(45);
  const Instance inst = RandomAdditiveInstance(rng, 6);
  const double eps = 0.2;
  const double anchor = inst.reward().additive()->values[2];
  const RoundedTable t = BuildRoundedTable(inst, eps, anchor);
  EXPECT_EQ(t.size(), static_cast<std::size_t>(CeilTol(36 / eps)) + 1);
  EXPECT_EQ(RoundedTableTopLevel(6, eps), CeilTol(36 / eps));
  EXPECT_DOUBLE_EQ(t.delta, eps / 6);
  EXPECT_DOUBLE_EQ(t.unit, t.delta * anchor);
  EXPECT_EQ(t.min_payment[0], 0.0);
  for (std::size_t k = 1; k < t.size(); ++k) {
    ASSERT_GE(t.min_payment[k], t.min_payment[k - 1]);
    if (std::isinf(t.min_payment[k])) continue;
    // The stored team pays the stored amount and reaches the level.
    double pay = 0.0;
    double rounded = 0.0;
    for (int i : ToIndices(t.teams[k])) {
      const double v = inst.reward().additive()->values[static_cast<std::size_t>(i)];
      pay += inst.cost(i) / v;
      rounded += static_cast<double>(FloorTol(v / t.unit));
    }
    ASSERT_NEAR(pay, t.min_payment[k], 1e-9);
    ASSERT_GE(std::min(rounded, static_cast<double>(t.size() - 1)), static_cast<double>(k));
  }
}

// --- knapsack FPTAS --------------------------------------------------------

TEST(KnapsackTest, Examples) {
  const Instance four({1.0 / 16, 1.0 / 16, 1.0 / 16, 1.0 / 16},
                      SetFunction::FromAdditive({0.25, 0.25, 0.25, 0.25}));
  EXPECT_GE(KnapsackFptas(four, 1.0, 0.1, Objective::Reward()).value, 0.9);

  const Instance heavy({0.4, 0.4}, SetFunction::FromAdditive({0.3, 0.3}));
  EXPECT_EQ(KnapsackFptas(heavy, 1.0, 0.1, Objective::Reward()).optimum, kEmptySet);

  const Instance free({0.0, 0.0, 0.0}, SetFunction::FromAdditive({0.2, 0.3, 0.1}));
  const SolveResult w = KnapsackFptas(free, 0.5, 0.1, Objective::Welfare());
  EXPECT_EQ(w.optimum, FullSet(3));
  EXPECT_NEAR(w.value, 0.6, 1e-12);

  EXPECT_THROW(KnapsackFptas(four, 1.0, 0.1, Objective::Profit()), PreconditionError);
  EXPECT_THROW(KnapsackFptas(fixtures::ThreeAgentXos(), 1.0, 0.1, Objective::Reward()),
               PreconditionError);
}

TEST(KnapsackTest, LosslessRoundingIsExact) {
  // Values are multiples of the rounding grid eps * vmax / #items = 0.05.
  const Instance inst({0.1, 0.2, 0.05}, SetFunction::FromAdditive({0.25, 0.5, 0.25}));
  for (double budget : {0.2, 0.45, 0.6, 1.0}) {
    const SolveResult r = KnapsackFptas(inst, budget, 0.3, Objective::Reward());
    EXPECT_NEAR(r.value, oracle::BruteMax(oracle::Goal::kReward, inst, budget).value,
                1e-12)
        << "B=" << budget;
  }
}

TEST(KnapsackTest, WithinEpsilonOnRandomAdditive) {
  CorpusRng rng(46);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = RandomAdditiveInstance(rng, rng.UniformInt(1, 12));
    for (double budget : {0.2, 0.5, 1.0}) {
      for (double eps : {0.3, 0.1}) {
        for (const auto& [obj, goal] :
             {std::pair{Objective::Reward(), oracle::Goal::kReward},
              std::pair{Objective::Welfare(), oracle::Goal::kWelfare}}) {
          const SolveResult r = KnapsackFptas(inst, budget, eps, obj);
          ASSERT_GE(r.value, (1 - eps) * oracle::BruteMax(goal, inst, budget).value - 1e-12);
          ASSERT_TRUE(r.payment.FitsWithin(budget, kTolerance));
        }
      }
    }
  }
}

}  // namespace
}  // namespace bcd
