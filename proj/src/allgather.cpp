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

#include "ringcdc/allgather.hpp"

#include <algorithm>

namespace ringcdc {
namespace {

void check_range(int n, int r, int d) {
  if (n < 3) throw InvalidParameter("n must be >= 3");
  if (r < 1 || r > n) throw InvalidParameter("r must satisfy 1 <= r <= n");
  if (d < 1 || d > n / 2) throw InvalidParameter("d must satisfy 1 <= d <= n/2");
}

}  // namespace

AllGatherPlan build_allgather(int n, int r, int d) {
  check_range(n, r, d);
  AllGatherPlan plan{RingTopology(n, d), cyclic_placement(n, r), 0, {}};
  plan.schedule.flavor = Flavor::kAllGather;
  if (r == n) return plan;
  plan.rounds = static_cast<int>(ceil(Rational(n - r, 2 * d)));
  for (int k = 1; k <= plan.rounds; ++k) {
    for (int i = 1; i <= n; ++i) {
      TransmissionIntent t;
      t.tick = k;
      t.round = k;
      t.step = 1;
      t.sender = i;
      if (k == 1) {
        t.components = {IvLabel::all_gather(i), IvLabel::all_gather(normalize_index(i + r - 1, n))};
      } else {
        const long long shift = static_cast<long long>(d) * (k - 1);
        t.components = {IvLabel::all_gather(normalize_index(i - shift, n)),
                        IvLabel::all_gather(normalize_index(i + shift + r - 1, n))};
      }
      plan.schedule.transmissions.push_back(std::move(t));
    }
  }
  return plan;
}

std::vector<std::vector<IvLabel>> successive_decode_round1(
    int node, const std::vector<Packet>& received, const KnowledgeSet& known,
    const RingTopology& topo) {
  const int n = topo.n();
  KnowledgeSet state = known;
  int r = 0;
  while (r < n && state.contains(IvLabel::all_gather(normalize_index(node + r, n)))) ++r;

  std::vector<const Packet*> open;
  for (const auto& p : received) {
    if (!p.empty()) open.push_back(&p);
  }
  std::vector<std::vector<IvLabel>> batches;
  while (true) {
    std::vector<IvLabel> batch;
    std::vector<const Packet*> rest;
    for (const Packet* p : open) {
      PeelResult res = peel(*p, state);
      if (const auto* label = std::get_if<IvLabel>(&res)) {
        if (std::find(batch.begin(), batch.end(), *label) == batch.end()) batch.push_back(*label);
      } else if (std::get<NotDecodable>(res).unknown_count > 0) {
        rest.push_back(p);
      }
    }
    if (batch.empty()) {
      if (!rest.empty()) {
        throw ChainBroken("node " + std::to_string(node) + ": " + std::to_string(rest.size()) +
                          " received packets left with no single unknown");
      }
      break;
    }
    auto side_key = [&](const IvLabel& l) {
      const int left_gap = normalize_index(node - l.source + 1, n) - 1;
      const int right_gap = normalize_index(l.source - (node + r - 1) + 1, n) - 1;
      return left_gap <= right_gap ? std::make_pair(0, left_gap) : std::make_pair(1, right_gap);
    };
    std::sort(batch.begin(), batch.end(),
              [&](const IvLabel& a, const IvLabel& b) { return side_key(a) < side_key(b); });
    for (const auto& l : batch) state.insert(l);
    open = std::move(rest);
    batches.push_back(std::move(batch));
  }
  return batches;
}

Rational allgather_ncl_formula(int n, int r, int d) {
  check_range(n, r, d);
  return Rational(ceil(Rational(n - r, 2 * d)));
}

Rational allgather_lower_bound(int n, int r, int d) {
  check_range(n, r, d);
  return Rational(n - r, 2 * d);
}

Rational memory_sharing_envelope(int n, int d, const Rational& r_real) {
  if (r_real < Rational(1) || r_real > Rational(n)) {
    throw InvalidParameter("memory sharing needs 1 <= r <= n");
  }
  std::vector<std::pair<Rational, Rational>> hull;
  auto cross = [](const auto& o, const auto& a, const auto& b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  for (int r = 1; r <= n; ++r) {
    std::pair<Rational, Rational> pt{Rational(r), allgather_ncl_formula(n, r, d)};
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= Rational(0)) {
      hull.pop_back();
    }
    hull.push_back(pt);
  }
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    const auto& a = hull[k];
    const auto& b = hull[k + 1];
    if (r_real >= a.first && r_real <= b.first) {
      return a.second + (b.second - a.second) * (r_real - a.first) / (b.first - a.first);
    }
  }
  return hull.back().second;
}

}  // namespace ringcdc
