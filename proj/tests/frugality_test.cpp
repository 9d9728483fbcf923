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

#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "bcd/corpus.hpp"
#include "bcd/errors.hpp"
#include "bcd/frugality.hpp"
#include "bcd/set_function.hpp"
#include "oracles.hpp"

namespace bcd {
namespace {

constexpr double kTol = 1e-9;

PofQuery Query(double b, double big_b, Objective obj = Objective::Reward()) {
  PofQuery q;
  q.b = b;
  q.big_b = big_b;
  q.objective = obj;
  return q;
}

bool SingletonsFeasible(const Instance& inst, double b) {
  for (int i = 0; i < inst.num_agents(); ++i) {
    if (!(oracle::Payment(inst, {i}) <= b + kTol)) return false;
  }
  return true;
}

TEST(PofTest, Examples) {
  const Instance lb = GenAdditiveLowerBound(10, 0.4, 1.0);
  const PofReport r = ComputePof(lb, Query(0.4, 1.0));
  ASSERT_TRUE(r.ratio.has_value());
  EXPECT_NEAR(*r.ratio, 4.0, kTol);
  EXPECT_NEAR(r.max_at_big_b, 1.0, kTol);
  EXPECT_NEAR(r.max_at_b, 0.25, kTol);
  EXPECT_EQ(r.bound_kind, BoundKind::kSubmodularExact);
  EXPECT_EQ(r.theoretical_bound, 4.0);

  const PofReport same = ComputePof(lb, Query(0.4, 0.4));
  EXPECT_NEAR(*same.ratio, 1.0, kTol);
  EXPECT_EQ(same.theoretical_bound, 1.0);

  const Instance xos = GenXosSeparation(0.5, 1.0);
  const PofReport sep = ComputePof(xos, Query(0.5, 1.0));
  EXPECT_GE(*sep.ratio, 2.5 - kTol);
  EXPECT_EQ(sep.bound_kind, BoundKind::kXosAsymptotic);
}

TEST(PofTest, Errors) {
  const Instance heavy({0.9, 0.1}, SetFunction::FromAdditive({0.5, 0.5}));
  EXPECT_THROW(ComputePof(heavy, Query(0.5, 1.0)), PreconditionError);
  EXPECT_THROW(ComputePof(heavy, Query(0.0, 1.0)), InputError);
  EXPECT_THROW(ComputePof(heavy, Query(0.8, 0.5)), InputError);
  EXPECT_THROW(ComputePof(heavy, Query(0.5, 1.5)), InputError);

  const Instance zero({0.0}, SetFunction::FromAdditive({0.0}));
  EXPECT_THROW(ComputePof(zero, Query(0.5, 1.0)), PreconditionError);
}

TEST(PofTest, UndefinedRatioWhenConstraintLifted) {
  const Instance heavy({0.9}, SetFunction::FromAdditive({1.0}));
  PofQuery q = Query(0.5, 1.0);
  q.singletons_feasible_at_b = false;
  const PofReport r = ComputePof(heavy, q);
  EXPECT_FALSE(r.ratio.has_value());
  EXPECT_EQ(r.max_at_b, 0.0);
  EXPECT_NEAR(r.max_at_big_b, 1.0, kTol);
}

TEST(PofBoundTest, Examples) {
  EXPECT_EQ(PofBound(0.4, 1.0, 10, BoundKind::kSubmodularExact), 4.0);
  EXPECT_EQ(ProfitLowerK(1.0 / 3, 1.0, 10), 3);
  EXPECT_NEAR(PofBound(1.0 / 3, 1.0, 10, BoundKind::kProfitLower), 1.8, 1e-12);
  for (BoundKind kind : {BoundKind::kSubmodularExact, BoundKind::kXosAsymptotic,
                         BoundKind::kProfitUpper, BoundKind::kProfitLower}) {
    EXPECT_EQ(PofBound(0.3, 0.3, 5, kind), 1.0);
  }
  EXPECT_EQ(PofBound(0.1, 1.0, 4, BoundKind::kSubmodularExact), 4.0);
  EXPECT_EQ(PofBound(0.25, 1.0, 10, BoundKind::kXosAsymptotic), 4.0);
  EXPECT_TRUE(std::isinf(PofBound(0.25, 1.0, 10, BoundKind::kNone)));
  EXPECT_THROW(PofBound(0.6, 0.5, 4, BoundKind::kSubmodularExact), InputError);
  EXPECT_THROW(PofBound(0.5, 1.0, 0, BoundKind::kSubmodularExact), InputError);
}

TEST(PofBoundTest, ApplicableKinds) {
  EXPECT_EQ(ApplicableBound(Objective::Kind::kReward, FunctionClass::kSubmodular),
            BoundKind::kSubmodularExact);
  EXPECT_EQ(ApplicableBound(Objective::Kind::kProfit, FunctionClass::kAdditive),
            BoundKind::kProfitUpper);
  EXPECT_EQ(ApplicableBound(Objective::Kind::kWelfare, FunctionClass::kXos),
            BoundKind::kXosAsymptotic);
  EXPECT_EQ(ApplicableBound(Objective::Kind::kReward, FunctionClass::kSubadditive),
            BoundKind::kNone);
  EXPECT_EQ(BoundKindName(BoundKind::kProfitLower), "profit-lower");
}

TEST(GeneratorTest, AdditiveLowerBound) {
  const Instance four = GenAdditiveLowerBound(10, 0.4, 1.0);
  ASSERT_EQ(four.num_agents(), 10);
  for (int i = 0; i < 10; ++i) {
    EXPECT_EQ(four.cost(i), i < 4 ? 1.0 / 16 : 0.0);
  }
  EXPECT_EQ(four.reward().Value(0b1111), 1.0);
  EXPECT_EQ(four.reward().Value(0b1111110000), 0.0);
  EXPECT_EQ(four.reward().Value(0b0101), 0.5);

  const Instance nine = GenAdditiveLowerBound(10, 0.2, 1.0);
  EXPECT_NEAR(*ComputePof(nine, Query(0.2, 1.0)).ratio, 9.0, kTol);

  const Instance one = GenAdditiveLowerBound(1, 0.3, 1.0);
  ASSERT_EQ(one.num_agents(), 1);
  EXPECT_EQ(one.reward().Value(1), 1.0);

  EXPECT_THROW(GenAdditiveLowerBound(0, 0.3, 1.0), InputError);
}

TEST(GeneratorTest, XosSeparation) {
  for (double b : {0.3, 0.5, 0.7}) {
    const Instance inst = GenXosSeparation(b, 1.0);
    EXPECT_EQ(oracle::Payment(inst, {2}), 0.0);
    EXPECT_NEAR(oracle::BruteMax(oracle::Goal::kReward, inst, b).value, 0.4, kTol);
  }
  const oracle::Classes cls = oracle::Classify(GenXosSeparation(0.5, 1.0).reward());
  EXPECT_TRUE(cls.monotone);
  EXPECT_TRUE(cls.subadditive);
  EXPECT_THROW(GenXosSeparation(0.5, 0.5), InputError);
}

TEST(GeneratorTest, SubadditiveLowerBound) {
  const Instance big = GenSubadditiveLowerBound(16, 0.9, 1.0);
  const PofReport r = ComputePof(big, Query(0.9, 1.0));
  EXPECT_GE(r.max_at_big_b, 1.0 - kTol);
  EXPECT_GE(*r.ratio, 2.0 - kTol);

  const Instance small = GenSubadditiveLowerBound(4, 0.5, 1.0);
  const oracle::Classes cls = oracle::Classify(small.reward());
  EXPECT_TRUE(cls.monotone);
  EXPECT_TRUE(cls.subadditive);
  EXPECT_FALSE(cls.submodular);
  // Peak 2/sqrt(4) + 1/2 exceeds one, so values are rescaled onto [0, 1].
  EXPECT_NEAR(small.reward().Value(FullSet(4)), 1.0, 1e-12);
  EXPECT_NEAR(*ComputePof(small, Query(0.5, 1.0)).ratio, 2.0, kTol);

  EXPECT_THROW(GenSubadditiveLowerBound(5, 0.5, 1.0), InputError);
  EXPECT_THROW(GenSubadditiveLowerBound(4, 0.2, 1.0), InputError);
}

TEST(GeneratorTest, ProfitTwo) {
  const Instance inst = GenProfitLowerBoundTwo(0.4, 1.0, 0.1);
  const PofReport r = ComputePof(inst, Query(0.4, 1.0, Objective::Profit()));
  EXPECT_NEAR(r.max_at_b, 0.5 - 0.4 / 2, kTol);
  EXPECT_GE(*r.ratio, 1.52 - kTol);
  EXPECT_GE(*r.ratio, (1 - 0.1 / 2) * (2 - 0.4) - kTol);

  const Instance tiny = GenProfitLowerBoundTwo(0.4, 1.0, 1e-6);
  EXPECT_NEAR(*ComputePof(tiny, Query(0.4, 1.0, Objective::Profit())).ratio, 1.6,
              1e-4);
  EXPECT_THROW(GenProfitLowerBoundTwo(0.4, 1.0, 0.6), InputError);
}

TEST(GeneratorTest, ProfitK) {
  const double b = 1.0 / 3;
  const double eps = 0.05;
  const Instance inst = GenProfitLowerBoundK(b, 1.0, 3, eps);
  const double target = (2 - 3 * (b + eps)) * 3 / (2 - b - eps);
  EXPECT_GE(*ComputePof(inst, Query(b, 1.0, Objective::Profit())).ratio,
            target - kTol);

  const Instance tiny = GenProfitLowerBoundK(b, 1.0, 3, 1e-7);
  EXPECT_NEAR(*ComputePof(tiny, Query(b, 1.0, Objective::Profit())).ratio, 1.8,
              1e-5);

  const Instance single = GenProfitLowerBoundK(b, 1.0, 1, 1e-7);
  EXPECT_NEAR(*ComputePof(single, Query(b, 1.0, Objective::Profit())).ratio, 1.0,
              1e-12);
  EXPECT_THROW(GenProfitLowerBoundK(0.5, 1.0, 4, 0.01), InputError);
  EXPECT_THROW(GenProfitLowerBoundK(0.5, 1.0, 0, 0.01), InputError);
}

TEST(FamilyTest, NamesAndTargets) {
  for (Family f : {Family::kAdditiveLb, Family::kXosSeparation,
                   Family::kSubadditiveLb, Family::kProfitTwo, Family::kProfitK}) {
    EXPECT_EQ(ParseFamily(FamilyName(f)), f);
  }
  EXPECT_FALSE(ParseFamily("nope").has_value());

  FamilyParams p;
  p.n = 8;
  p.b = 0.25;
  p.big_b = 1.0;
  EXPECT_EQ(FamilyTarget(Family::kAdditiveLb, p, Objective::Kind::kReward), 7.0);
  EXPECT_TRUE(FamilyTargetIsExact(Family::kAdditiveLb, Objective::Kind::kReward));
  EXPECT_EQ(FamilyTarget(Family::kXosSeparation, p, Objective::Kind::kReward), 2.5);
  EXPECT_EQ(DefaultEpsTwo(0.4, 1.0), 0.01);
  EXPECT_NEAR(DefaultEpsTwo(0.99, 1.0), 0.005, 1e-15);
}

TEST(FamilyPropertyTest, AdditiveLowerBoundIsTight) {
  for (int n : {4, 8, 10}) {
    for (double big_b : {0.5, 1.0}) {
      for (int tenth = 1; tenth <= 9; ++tenth) {
        const double b = tenth / 10.0;
        if (b > big_b) continue;
        const Instance inst = GenAdditiveLowerBound(n, b, big_b);
        for (Objective obj : {Objective::Reward(), Objective::Welfare()}) {
          const PofReport r = ComputePof(inst, Query(b, big_b, obj));
          ASSERT_TRUE(r.ratio.has_value());
          ASSERT_NEAR(*r.ratio, PofBound(b, big_b, n, BoundKind::kSubmodularExact),
                      kTol)
              << "n=" << n << " b=" << b << " B=" << big_b;
        }
      }
    }
  }
}

TEST(FamilyPropertyTest, SubadditiveGapGrows) {
  for (int n : {4, 16}) {
    const Instance inst = GenSubadditiveLowerBound(n, 0.9, 1.0);
    const double ratio = *ComputePof(inst, Query(0.9, 1.0)).ratio;
    EXPECT_GE(ratio, 0.5 * std::sqrt(static_cast<double>(n)) - kTol);
  }
}

TEST(PofPropertyTest, SubmodularCorpusWithinBound) {
  CorpusRng rng(61);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Instance inst = RandomSubmodularInstance(rng, rng.UniformInt(1, 8));
    for (double b : {0.3, 0.5, 0.7}) {
      if (!SingletonsFeasible(inst, b)) continue;
      for (double big_b : {b, 1.0}) {
        const PofReport reward = ComputePof(inst, Query(b, big_b),
                                            FunctionClass::kSubmodular);
        ASSERT_LE(*reward.ratio,
                  PofBound(b, big_b, inst.num_agents(),
                           BoundKind::kSubmodularExact) + kTol);
        const PofReport profit = ComputePof(
            inst, Query(b, big_b, Objective::Profit()), FunctionClass::kSubmodular);
        ASSERT_LE(*profit.ratio, *reward.ratio + kTol);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(PofPropertyTest, XosCorpusWithinExplicitConstant) {
  CorpusRng rng(62);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Instance inst = RandomXosInstance(rng, rng.UniformInt(1, 8), 3);
    const int n = inst.num_agents();
    for (double b : {0.3, 0.5, 0.7}) {
      if (!SingletonsFeasible(inst, b)) continue;
      const double cap = kXosProofConstant * std::min(1.0 / b, 2.0 * n);
      for (Objective obj :
           {Objective::Reward(), Objective::Profit(), Objective::Welfare()}) {
        PofQuery q = Query(b, 1.0, obj);
        q.singletons_feasible_at_b = obj.kind() != Objective::Kind::kWelfare;
        const PofReport r = ComputePof(inst, q, FunctionClass::kXos);
        if (r.ratio) ASSERT_LE(*r.ratio, cap);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(BudgetCurveTest, StepsAreMonotone) {
  const Instance inst = GenAdditiveLowerBound(6, 0.4, 1.0);
  const std::vector<CurvePoint> curve = BudgetCurve(inst);
  ASSERT_FALSE(curve.empty());
  EXPECT_EQ(curve.front().payment, 0.0);
  for (std::size_t i = 1; i < curve.size(); ++i) {
    EXPECT_GT(curve[i].payment, curve[i - 1].payment);
    EXPECT_GE(curve[i].max_reward, curve[i - 1].max_reward);
    EXPECT_GE(curve[i].max_profit, curve[i - 1].max_profit);
  }
  for (const CurvePoint& pt : curve) {
    EXPECT_NEAR(pt.discounted_reward, (1 - pt.payment) * pt.max_reward, 1e-12);
    EXPECT_NEAR(pt.max_reward,
                oracle::BruteMax(oracle::Goal::kReward, inst, pt.payment).value, kTol);
  }
  EXPECT_NEAR(curve.back().max_reward, 1.0, kTol);
}

}  // namespace
}  // namespace bcd
