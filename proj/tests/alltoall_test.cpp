/* Copyright 2026 The ringcdc Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "ringcdc/alltoall.hpp"

namespace ringcdc {
namespace {

RunResult simulate(const AllToAllPlan& plan) {
  return run_schedule(plan.topo, plan.placement, plan.schedule,
                      Requirement::all_to_all(plan.topo.n()));
}

void expect_plan_reaches(const AllToAllPlan& plan, const Rational& want) {
  const RunResult run = simulate(plan);
  EXPECT_TRUE(run.report.complete) << run.report.failure.value_or("");
  EXPECT_EQ(run.report.ncl, want) << to_string(run.report.ncl);
  const OracleResult oracle = closure_oracle(plan.topo, plan.placement, run.ledger,
                                             Requirement::all_to_all(plan.topo.n()));
  EXPECT_TRUE(oracle.met);
}

TEST(DistanceClasses, SmallExample) {
  const DistanceClasses classes = distance_classes(RingTopology(9, 1), cyclic_placement(9, 2));
  const std::vector<IvLabel> want = {IvLabel::all_to_all(1, 3), IvLabel::all_to_all(2, 8)};
  ASSERT_TRUE(classes.count({1, 2}));
  EXPECT_EQ(classes.at({1, 2}), want);
  EXPECT_EQ(cyclic_distance_class(9, 2, 1, 2), want);
}

TEST(DistanceClasses, EveryMissingLabelHasAClass) {
  for (int n = 4; n <= 14; ++n) {
    for (int r = 1; r < n; ++r) {
      const Placement placement = cyclic_placement(n, r);
      const DistanceClasses classes = distance_classes(RingTopology(n, 1), placement);
      std::set<IvLabel> seen;
      for (const auto& [key, labels] : classes) seen.insert(labels.begin(), labels.end());
      for (int i = 1; i <= n; ++i) {
        for (int k = 1; k <= n; ++k) {
          if (placement.caches(k, i)) continue;
          EXPECT_TRUE(seen.count(IvLabel::all_to_all(i, k))) << "n=" << n << " r=" << r;
        }
      }
    }
  }
}

TEST(DistanceClasses, LiteralDefinitionMatchesClosedForm) {
  for (int n = 5; n <= 16; ++n) {
    for (int r = 1; r < n; ++r) {
      const DistanceClasses classes = distance_classes(RingTopology(n, 1), cyclic_placement(n, r));
      for (int j = 1; j <= n; ++j) {
        for (int l = 1; 2 * l <= n - r; ++l) {
          ASSERT_TRUE(classes.count({j, l}));
          EXPECT_EQ(classes.at({j, l}), cyclic_distance_class(n, r, j, l))
              << "n=" << n << " r=" << r << " j=" << j << " l=" << l;
        }
      }
    }
  }
}

TEST(DistanceClasses, RejectsNonCyclicPlacement) {
  EXPECT_THROW(distance_classes(RingTopology(8, 1), appendix_c_placement(8, 4)), InvalidParameter);
}

TEST(Regime, EveryValidTripleHasExactlyOneRegime) {
  for (int n = 3; n <= 30; ++n) {
    for (int r = 1; r <= n; ++r) {
      for (int d = 1; d <= n / 2; ++d) {
        const Regime regime = classify_regime(n, r, d);
        if (r == n) {
          EXPECT_EQ(regime, Regime::kEmpty);
        } else if (d >= 2 * r - 1) {
          EXPECT_EQ(regime, Regime::kWide);
        } else if (d == 1) {
          EXPECT_EQ(regime, Regime::kDEq1);
        } else {
          EXPECT_EQ(regime, Regime::kMid);
        }
        EXPECT_NE(regime, Regime::kAppendixC);
      }
    }
  }
}

TEST(BuildAllToAll, WorkedExample) {
  const AllToAllPlan plan = build_alltoall(8, 3, 1);
  EXPECT_EQ(plan.regime, Regime::kDEq1);
  EXPECT_EQ(plan.rounds, 3);
  expect_plan_reaches(plan, Rational(11, 2));
}

TEST(BuildAllToAll, SmallSingleHop) {
  const AllToAllPlan plan = build_alltoall(6, 2, 1);
  EXPECT_EQ(plan.rounds, 2);
  expect_plan_reaches(plan, Rational(3));
}

TEST(BuildAllToAll, MidRegime) {
  const AllToAllPlan plan = build_alltoall(20, 4, 3);
  EXPECT_EQ(plan.regime, Regime::kMid);
  EXPECT_EQ(plan.d1, 3);
  expect_plan_reaches(plan, Rational(15));
}

TEST(BuildAllToAll, WideRegime) {
  const AllToAllPlan plan = build_alltoall(12, 1, 2);
  EXPECT_EQ(plan.regime, Regime::kWide);
  expect_plan_reaches(plan, Rational(35, 2));
}

TEST(BuildAllToAll, WideSingleCarpoolHalvesBothHops) {
  const AllToAllPlan plan = build_alltoall(8, 1, 4);
  expect_plan_reaches(plan, Rational(7));
}

TEST(BuildAllToAll, AppendixCPlacement) {
  expect_plan_reaches(build_alltoall(10, 5, 1, PlacementKind::kAppendixC), Rational(3));
  expect_plan_reaches(build_alltoall(8, 4, 1, PlacementKind::kAppendixC), Rational(2));
}

TEST(BuildAllToAll, AppendixCGeneralSizes) {
  for (int n = 6; n <= 24; ++n) {
    for (int r = (n + 1) / 2; r < n; ++r) {
      expect_plan_reaches(build_alltoall(n, r, 1, PlacementKind::kAppendixC),
                          Rational((n - r + 1) / 2));
    }
  }
}

TEST(BuildAllToAll, FullReplicationIsEmpty) {
  const AllToAllPlan plan = build_alltoall(7, 7, 2);
  EXPECT_EQ(plan.regime, Regime::kEmpty);
  EXPECT_TRUE(plan.schedule.transmissions.empty());
  expect_plan_reaches(plan, Rational(0));
}

TEST(BuildAllToAll, Preconditions) {
  EXPECT_THROW(build_alltoall_d1(8, 1), InvalidParameter);
  EXPECT_THROW(build_alltoall_d1(8, 8), InvalidParameter);
  EXPECT_THROW(build_alltoall_mid(12, 3, 1), InvalidParameter);
  EXPECT_THROW(build_alltoall_mid(12, 3, 5), InvalidParameter);
  EXPECT_THROW(build_alltoall_wide(12, 3, 4), InvalidParameter);
  EXPECT_THROW(build_alltoall(8, 4, 2, PlacementKind::kAppendixC), InvalidParameter);
  EXPECT_THROW(build_alltoall(8, 2, 5), InvalidParameter);
  EXPECT_THROW(alltoall_formulas(8, 3, 1, PlacementKind::kAppendixC), InvalidParameter);
}

TEST(BuildAllToAll, SimulationMatchesExactFormulaOnGrid) {
  for (int n = 3; n <= 14; ++n) {
    for (int r = 1; r <= n; ++r) {
      for (int d = 1; d <= n / 2; ++d) {
        const AllToAllPlan plan = build_alltoall(n, r, d);
        const RunResult run = simulate(plan);
        const AllToAllFormulas f = alltoall_formulas(n, r, d);
        ASSERT_TRUE(run.report.complete) << n << "," << r << "," << d;
        ASSERT_EQ(run.report.ncl, *f.ach_exact) << n << "," << r << "," << d;
        ASSERT_TRUE(closure_oracle(plan.topo, plan.placement, run.ledger,
                                   Requirement::all_to_all(n)).met);
        for (const auto& rec : run.ledger) {
          ASSERT_LE(rec.size_units, Rational(1));
          ASSERT_LE(rec.packet.labels().size(), 2u);
        }
      }
    }
  }
}

TEST(Formulas, Examples) {
  const AllToAllFormulas f = alltoall_formulas(8, 3, 1);
  EXPECT_EQ(f.regime, Regime::kDEq1);
  EXPECT_EQ(*f.ach_exact, Rational(11, 2));
  EXPECT_EQ(*f.uncoded, Rational(11));
  EXPECT_EQ(*f.lb_cyc, Rational(4));
  EXPECT_FALSE(f.lb_arb_d1.has_value());
  EXPECT_EQ(f.lb_any, Rational(5, 2));
  EXPECT_EQ(f.asymptotic_case, "d<=r-1");

  const AllToAllFormulas g = alltoall_formulas(8, 4, 1, PlacementKind::kAppendixC);
  EXPECT_EQ(*g.ach_exact, Rational(2));
  EXPECT_EQ(*g.lb_arb_d1, Rational(2));

  EXPECT_EQ(alltoall_formulas(12, 1, 2).asymptotic_case, "d>=2r-1");
  EXPECT_EQ(alltoall_formulas(20, 4, 5).asymptotic_case, "r-1<d<=2(r-1)");
}

TEST(Formulas, AchievableAboveEveryLowerBound) {
  for (int n = 3; n <= 40; ++n) {
    for (int r = 1; r <= n; ++r) {
      for (int d = 1; d <= n / 2; ++d) {
        const AllToAllFormulas f = alltoall_formulas(n, r, d);
        ASSERT_GE(*f.ach_exact, f.lb_any);
        if (f.lb_cyc) ASSERT_GE(*f.ach_exact, *f.lb_cyc) << n << "," << r << "," << d;
        if (f.lb_arb_d1) ASSERT_GE(*f.ach_exact, *f.lb_arb_d1);
        ASSERT_EQ(*f.uncoded, *f.ach_exact * 2);
      }
    }
  }
}

}  // namespace
}  // namespace ringcdc
