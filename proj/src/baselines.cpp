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

#include "ringcdc/baselines.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ringcdc/allgather.hpp"
#include "ringcdc/alltoall.hpp"

namespace ringcdc {
namespace {

Schedule coded_schedule(Flavor problem, int n, int r, int d, PlacementKind placement) {
  if (problem == Flavor::kAllGather) {
    if (placement != PlacementKind::kCyclic) {
      throw InvalidParameter("all-gather is defined for cyclic placement only");
    }
    return build_allgather(n, r, d).schedule;
  }
  return build_alltoall(n, r, d, placement).schedule;
}

}  // namespace

Schedule to_uncoded(const Schedule& coded) {
  Schedule out;
  out.flavor = coded.flavor;
  out.cache_updates = coded.cache_updates;
  for (const auto& t : coded.transmissions) {
    for (const auto& l : t.components) {
      TransmissionIntent plain = t;
      plain.components = {l};
      out.transmissions.push_back(std::move(plain));
    }
  }
  return out;
}

BaselinePlan build_fragouli(int n) {
  if (n < 4) throw InvalidParameter("the two-pass baseline needs n >= 4");
  BaselinePlan plan{RingTopology(n, 1), cyclic_placement(n, 1), 0, {}};
  plan.schedule.flavor = Flavor::kAllGather;

  const int m = n % 2 == 0 ? n : n + 1;  // positions; m is the virtual slot for odd n
  auto real = [&](int p) { return p <= n; };
  auto pos = [&](long long p) { return normalize_index(p, m); };
  std::vector<std::set<int>> known(n + 1);
  for (int i = 1; i <= n; ++i) known[i].insert(i);
  auto ring_neighbors = [&](int p) { return std::vector<int>{normalize_index(p - 1, n), normalize_index(p + 1, n)}; };

  const int cap = (n + 3) / 4 + 1;
  int tick = 0;
  int round_base = 0;
  for (int pass = 0; pass < 2; ++pass) {
    // pass 0 spreads the odd positions, pass 1 the even ones.
    std::vector<int> sources, first, second;
    for (int p = 1; p <= m; ++p) {
      const bool in_pass_set = (p % 2 == 1) == (pass == 0);
      (in_pass_set ? first : second).push_back(p);
      if (in_pass_set && real(p)) sources.push_back(p);
    }
    auto done = [&]() {
      for (int i = 1; i <= n; ++i) {
        for (int s : sources) {
          if (!known[i].count(s)) return false;
        }
      }
      return true;
    };
    int k = 0;
    while (!done()) {
      ++k;
      if (k > cap) {
        throw std::runtime_error("the two-pass baseline did not finish within " +
                                 std::to_string(cap) + " rounds for n=" + std::to_string(n));
      }
      for (int phase = 1; phase <= 2 && !done(); ++phase) {
        const std::vector<int>& senders = phase == 1 ? first : second;
        const int off = phase == 1 ? 2 * (k - 1) : 1 + 2 * (k - 1);
        ++tick;
        std::vector<std::pair<int, std::vector<int>>> sends;
        for (int p : senders) {
          if (!real(p)) continue;
          std::vector<int> labels;
          for (int q : {pos(p - off), pos(p + off)}) {
            if (real(q) && std::find(labels.begin(), labels.end(), q) == labels.end()) labels.push_back(q);
          }
          if (labels.empty()) continue;
          TransmissionIntent t;
          t.tick = tick;
          t.round = round_base + k;
          t.step = phase;
          t.sender = p;
          for (int q : labels) t.components.push_back(IvLabel::all_gather(q));
          plan.schedule.transmissions.push_back(std::move(t));
          sends.emplace_back(p, std::move(labels));
        }
        for (const auto& [p, labels] : sends) {
          for (int v : ring_neighbors(p)) {
            int unknown = 0;
            int last = 0;
            for (int q : labels) {
              if (!known[v].count(q)) {
                ++unknown;
                last = q;
              }
            }
            if (unknown == 1) known[v].insert(last);
          }
        }
      }
    }
    round_base += k;
  }
  plan.rounds = round_base;
  return plan;
}

BaselinePlan build_uncoded(Flavor problem, int n, int r, int d, PlacementKind placement) {
  BaselinePlan plan{RingTopology(n, d), make_placement(placement, n, r), 0, {}};
  plan.schedule = to_uncoded(coded_schedule(problem, n, r, d, placement));
  for (const auto& t : plan.schedule.transmissions) plan.rounds = std::max(plan.rounds, t.round);
  return plan;
}

Rational schedule_load(const Schedule& schedule, int n) {
  Rational total(0);
  for (const auto& t : schedule.transmissions) {
    std::vector<IvLabel> distinct = t.components;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    total += size_units_of(distinct);
  }
  return total / static_cast<std::int64_t>(n);
}

std::optional<Rational> coding_gain(Flavor problem, int n, int r, int d, PlacementKind placement) {
  const Schedule coded = coded_schedule(problem, n, r, d, placement);
  const Rational coded_load = schedule_load(coded, n);
  if (coded_load == Rational(0)) return std::nullopt;
  return schedule_load(to_uncoded(coded), n) / coded_load;
}

}  // namespace ringcdc
