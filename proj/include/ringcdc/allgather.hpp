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

#ifndef RINGCDC_ALLGATHER_HPP_
#define RINGCDC_ALLGATHER_HPP_

#include <stdexcept>
#include <vector>

#include "ringcdc/packet.hpp"
#include "ringcdc/rational.hpp"
#include "ringcdc/ring.hpp"
#include "ringcdc/sim.hpp"

namespace ringcdc {

struct AllGatherPlan {
  RingTopology topo;
  Placement placement;
  int rounds = 0;
  Schedule schedule;
};

// Round 1: node i sends V_i + V_{i+r-1} (V_i alone when r = 1).
// Round k >= 2: node i sends V_{i-d(k-1)} + V_{i+d(k-1)+r-1}.
AllGatherPlan build_allgather(int n, int r, int d);

class ChainBroken : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Peels the round-1 receptions in batches: every packet with a single unknown
// is peeled against the knowledge available at the start of the batch. Within
// a batch, labels are ordered left side first (offsets -1..-d from the node),
// then right side.
std::vector<std::vector<IvLabel>> successive_decode_round1(
    int node, const std::vector<Packet>& received, const KnowledgeSet& known,
    const RingTopology& topo);

// ceil((n-r)/(2d)).
Rational allgather_ncl_formula(int n, int r, int d);

// (n-r)/(2d).
Rational allgather_lower_bound(int n, int r, int d);

// Lower convex envelope of {(r, ceil((n-r)/(2d))) : r = 1..n} at r_real.
Rational memory_sharing_envelope(int n, int d, const Rational& r_real);

}  // namespace ringcdc

#endif  // RINGCDC_ALLGATHER_HPP_
