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

#ifndef RINGCDC_ALLTOALL_HPP_
#define RINGCDC_ALLTOALL_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringcdc/packet.hpp"
#include "ringcdc/rational.hpp"
#include "ringcdc/ring.hpp"
#include "ringcdc/sim.hpp"

namespace ringcdc {

enum class Regime { kEmpty, kDEq1, kMid, kWide, kAppendixC };

std::string regime_name(Regime regime);

// Builder regime for cyclic placement: r = n -> kEmpty, d = 1 and r >= 2 ->
// kDEq1, 1 < d <= 2(r-1) -> kMid, d >= 2r-1 -> kWide.
Regime classify_regime(int n, int r, int d);

struct AllToAllPlan {
  Regime regime = Regime::kEmpty;
  int d1 = 0;
  int rounds = 0;
  RingTopology topo;
  Placement placement;
  Schedule schedule;
};

using DistanceClasses = std::map<std::pair<int, int>, std::vector<IvLabel>>;

// W_j^(l) by definition: labels v_i^k with i cached at j, ring distance l
// from j to k, and no holder of file i strictly closer to k. Only nonempty
// classes appear. Rejects non-cyclic placements.
DistanceClasses distance_classes(const RingTopology& topo, const Placement& placement);

// Closed form under cyclic placement: {v_j^{j+l}, v_{j+r-1}^{j-l}}.
std::vector<IvLabel> cyclic_distance_class(int n, int r, int j, int l);

AllToAllPlan build_alltoall_d1(int n, int r);
AllToAllPlan build_alltoall_mid(int n, int r, int d);
AllToAllPlan build_alltoall_wide(int n, int r, int d);
AllToAllPlan build_alltoall_appendix_c(int n, int r);

// Dispatches on placement and classify_regime.
AllToAllPlan build_alltoall(int n, int r, int d, PlacementKind placement = PlacementKind::kCyclic);

struct AllToAllFormulas {
  Regime regime = Regime::kEmpty;
  std::optional<Rational> ach_exact;   // per-round sums the builders realize
  std::optional<Rational> asymptotic;  // leading-order expression, O(.) dropped
  std::string asymptotic_case;         // "d>=2r-1", "r-1<d<=2(r-1)", "d<=r-1"
  std::optional<Rational> lb_cyc;      // r <= ceil(n/2)-1
  std::optional<Rational> lb_arb_d1;   // d = 1, r >= ceil(n/2)
  Rational lb_any;                     // (n-r)/(2d)
  std::optional<Rational> uncoded;     // 2 * ach_exact
};

AllToAllFormulas alltoall_formulas(int n, int r, int d,
                                   PlacementKind placement = PlacementKind::kCyclic);

}  // namespace ringcdc

#endif  // RINGCDC_ALLTOALL_HPP_
