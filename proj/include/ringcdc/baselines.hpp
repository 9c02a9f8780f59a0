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

#ifndef RINGCDC_BASELINES_HPP_
#define RINGCDC_BASELINES_HPP_

#include <optional>

#include "ringcdc/packet.hpp"
#include "ringcdc/rational.hpp"
#include "ringcdc/ring.hpp"
#include "ringcdc/sim.hpp"

namespace ringcdc {

struct BaselinePlan {
  RingTopology topo;
  Placement placement;
  int rounds = 0;
  Schedule schedule;
};

// Same senders, ticks and cache hooks; every flow component becomes its own
// plain packet (coinciding components are sent once per flow).
Schedule to_uncoded(const Schedule& coded);

// Network-coded all-gather for r = 1, d = 1. Odd positions form set A, even
// positions set B; sources of A are disseminated first, then sources of B.
// Odd n adds a silent virtual node at position n+1 that forwarding skips.
BaselinePlan build_fragouli(int n);

BaselinePlan build_uncoded(Flavor problem, int n, int r, int d,
                           PlacementKind placement = PlacementKind::kCyclic);

// Sum of packet sizes divided by n, without running the schedule.
Rational schedule_load(const Schedule& schedule, int n);

// Uncoded over coded load; empty when the coded load is zero.
std::optional<Rational> coding_gain(Flavor problem, int n, int r, int d,
                                    PlacementKind placement = PlacementKind::kCyclic);

}  // namespace ringcdc

#endif  // RINGCDC_BASELINES_HPP_
