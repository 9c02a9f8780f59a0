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

#include <gtest/gtest.h>

#include "ringcdc/allgather.hpp"
#include "ringcdc/alltoall.hpp"
#include "ringcdc/baselines.hpp"

namespace ringcdc {
namespace {

RunResult simulate(const BaselinePlan& plan, Flavor flavor) {
  return run_schedule(plan.topo, plan.placement, plan.schedule,
                      Requirement::for_flavor(flavor, plan.topo.n()));
}

TEST(Fragouli, EightNodes) {
  const BaselinePlan plan = build_fragouli(8);
  const RunResult run = simulate(plan, Flavor::kAllGather);
  EXPECT_TRUE(run.report.complete);
  EXPECT_EQ(run.report.ncl, Rational(4));
  const AllGatherPlan coded = build_allgather(8, 1, 1);
  const RunResult coded_run =
      run_schedule(coded.topo, coded.placement, coded.schedule, Requirement::all_gather(8));
  EXPECT_EQ(run.report.ncl, coded_run.report.ncl);
}

TEST(Fragouli, EvenSizesReachHalfOfN) {
  for (int n = 4; n <= 24; n += 2) {
    const BaselinePlan plan = build_fragouli(n);
    const RunResult run = simulate(plan, Flavor::kAllGather);
    ASSERT_TRUE(run.report.complete) << n;
    EXPECT_EQ(run.report.ncl, Rational(n, 2)) << n;
    EXPECT_TRUE(closure_oracle(plan.topo, plan.placement, run.ledger, Requirement::all_gather(n)).met);
    EXPECT_LE(plan.rounds, 2 * ((n + 3) / 4 + 1));
  }
}

TEST(Fragouli, OddSizesComplete) {
  for (int n = 5; n <= 23; n += 2) {
    const BaselinePlan plan = build_fragouli(n);
    const RunResult run = simulate(plan, Flavor::kAllGather);
    ASSERT_TRUE(run.report.complete) << n;
    EXPECT_GE(run.report.ncl, Rational(n - 1, 2));
  }
}

TEST(Fragouli, RejectsTinyRings) { EXPECT_THROW(build_fragouli(3), InvalidParameter); }

TEST(Uncoded, AllGatherExample) {
  const BaselinePlan plan = build_uncoded(Flavor::kAllGather, 8, 2, 3);
  const RunResult run = simulate(plan, Flavor::kAllGather);
  EXPECT_TRUE(run.report.complete);
  EXPECT_EQ(run.report.ncl, Rational(2));
}

TEST(Uncoded, AllToAllExample) {
  const BaselinePlan plan = build_uncoded(Flavor::kAllToAll, 8, 3, 1);
  const RunResult run = simulate(plan, Flavor::kAllToAll);
  EXPECT_TRUE(run.report.complete);
  EXPECT_EQ(run.report.ncl, Rational(11));
}

TEST(Uncoded, OnlySingletonPackets) {
  for (Flavor flavor : {Flavor::kAllGather, Flavor::kAllToAll}) {
    for (int n = 4; n <= 12; ++n) {
      for (int r = 1; r < n; ++r) {
        const BaselinePlan plan = build_uncoded(flavor, n, r, 1);
        const RunResult run = simulate(plan, flavor);
        ASSERT_TRUE(run.report.complete);
        for (const auto& rec : run.ledger) ASSERT_EQ(rec.packet.labels().size(), 1u);
      }
    }
  }
}

TEST(CodingGain, Examples) {
  EXPECT_EQ(*coding_gain(Flavor::kAllGather, 8, 2, 3), Rational(2));
  EXPECT_EQ(*coding_gain(Flavor::kAllToAll, 8, 3, 1), Rational(2));
  EXPECT_FALSE(coding_gain(Flavor::kAllGather, 8, 8, 1).has_value());
  EXPECT_EQ(schedule_load(build_allgather(8, 2, 3).schedule, 8), Rational(1));
}

TEST(CodingGain, NeverAboveTwo) {
  for (Flavor flavor : {Flavor::kAllGather, Flavor::kAllToAll}) {
    for (int n = 3; n <= 20; ++n) {
      for (int r = 1; r < n; ++r) {
        for (int d = 1; d <= n / 2; ++d) {
          const auto gain = coding_gain(flavor, n, r, d);
          ASSERT_TRUE(gain.has_value());
          ASSERT_GE(*gain, Rational(1));
          ASSERT_LE(*gain, Rational(2));
          if (flavor == Flavor::kAllGather || classify_regime(n, r, d) == Regime::kDEq1) ASSERT_EQ(*gain, Rational(2));
        }
      }
    }
  }
}

}  // namespace
}  // namespace ringcdc
