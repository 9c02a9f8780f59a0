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

#include "ringcdc/alltoall.hpp"

#include <algorithm>
#include <set>

namespace ringcdc {
namespace {

void check_range(int n, int r, int d) {
  if (n < 3) throw InvalidParameter("n must be >= 3");
  if (r < 1 || r > n) throw InvalidParameter("r must satisfy 1 <= r <= n");
  if (d < 1 || d > n / 2) throw InvalidParameter("d must satisfy 1 <= d <= n/2");
}

int ceil_div(int a, int b) { return static_cast<int>(ceil(Rational(a, b))); }

IvLabel cw_label(int origin, int j, int n) {
  return IvLabel::all_to_all(normalize_index(origin, n), normalize_index(origin + j, n));
}

IvLabel ccw_label(int origin, int j, int r, int n) {
  return IvLabel::all_to_all(normalize_index(origin + r - 1, n), normalize_index(origin - j, n));
}

AllToAllPlan empty_plan(int n, int r, int d, Regime regime, PlacementKind kind) {
  AllToAllPlan plan{regime, 0, 0, RingTopology(n, d), make_placement(kind, n, r), {}};
  plan.schedule.flavor = Flavor::kAllToAll;
  return plan;
}

// Per-round chains for cyclic placement. Before step s of round j the flow
// heads sit P_s hops from their origins; node y sends the clockwise label
// with origin y - P_s together with the counter-clockwise label with origin
// y + P_s. With `wide`, the first hop is split into two uncoded steps.
void fill_chains(AllToAllPlan& plan, int n, int r, int d, int d1, bool wide) {
  const int rounds = ceil_div(n - r, 2);
  const bool odd = (n - r) % 2 == 1;
  plan.rounds = rounds;
  int tick = 0;
  auto emit = [&](int round, int step, int sender, std::vector<IvLabel> components) {
    TransmissionIntent t;
    t.tick = tick;
    t.round = round;
    t.step = step;
    t.sender = sender;
    t.components = std::move(components);
    plan.schedule.transmissions.push_back(std::move(t));
  };

  for (int j = 1; j <= rounds; ++j) {
    const bool halve = odd && j == rounds;
    if (wide) {
      const int carpool = ceil_div(j, d);
      const bool split_first_hop = halve && carpool == 1;
      ++tick;
      for (int i = 1; i <= n; ++i) {
        IvLabel l = ccw_label(i, j, r, n);
        emit(j, 0, i, {split_first_hop ? l.with_half(Half::kSecond) : l});
      }
      ++tick;
      for (int i = 1; i <= n; ++i) {
        IvLabel l = cw_label(i, j, n);
        emit(j, 1, i, {split_first_hop ? l.with_half(Half::kFirst) : l});
      }
      for (int s = 2; s <= carpool; ++s) {
        ++tick;
        const int p = (s - 1) * d;
        for (int i = 1; i <= n; ++i) {
          IvLabel a = cw_label(i - p, j, n);
          IvLabel b = ccw_label(i + p, j, r, n);
          if (halve && s == carpool) {
            a = a.with_half(Half::kFirst);
            b = b.with_half(Half::kSecond);
          }
          emit(j, s, i, {a, b});
        }
      }
    } else {
      const int steps = 1 + std::max(0, ceil_div(j - d1, d));
      for (int s = 1; s <= steps; ++s) {
        ++tick;
        const int p = s == 1 ? 0 : d1 + (s - 2) * d;
        for (int i = 1; i <= n; ++i) {
          IvLabel a = cw_label(i - p, j, n);
          IvLabel b = ccw_label(i + p, j, r, n);
          if (halve && s == steps) {
            a = a.with_half(Half::kFirst);
            b = b.with_half(Half::kSecond);
          }
          emit(j, s, i, {a, b});
          if (d == 1 && s >= 2) {
            // Labels used to decode at this step are not needed again.
            for (const IvLabel& used : {cw_label(i - (s - 2), j, n), ccw_label(i + (s - 2), j, r, n)}) {
              if (plan.placement.caches(i, used.source) || used.dest == i) continue;
              CacheUpdate u;
              u.kind = CacheUpdate::Kind::kDelete;
              u.tick = tick;
              u.node = i;
              u.label = used;
              plan.schedule.cache_updates.push_back(u);
            }
          }
        }
      }
    }
    if (d > 1 || wide) {
      CacheUpdate u;
      u.kind = CacheUpdate::Kind::kPurgeRound;
      u.tick = tick;
      u.round = j;
      plan.schedule.cache_updates.push_back(u);
    }
  }
}

}  // namespace

std::string regime_name(Regime regime) {
  switch (regime) {
    case Regime::kEmpty:
      return "EMPTY";
    case Regime::kDEq1:
      return "D_EQ_1";
    case Regime::kMid:
      return "MID";
    case Regime::kWide:
      return "WIDE";
    case Regime::kAppendixC:
      break;
  }
  return "APPENDIX_C";
}

Regime classify_regime(int n, int r, int d) {
  check_range(n, r, d);
  if (r == n) return Regime::kEmpty;
  if (d >= 2 * r - 1) return Regime::kWide;
  if (d == 1) return Regime::kDEq1;
  return Regime::kMid;
}

DistanceClasses distance_classes(const RingTopology& topo, const Placement& placement) {
  const int n = topo.n();
  const int r = placement.uniform_size();
  if (r == 0 || !(placement == cyclic_placement(n, r))) {
    throw InvalidParameter("distance classes are defined for cyclic placement only");
  }
  DistanceClasses out;
  for (int j = 1; j <= n; ++j) {
    for (int i : placement.files(j)) {
      for (int k = 1; k <= n; ++k) {
        const int l = topo.distance(j, k);
        if (l == 0) continue;
        bool closer = false;
        for (int z : placement.holders(i)) {
          if (topo.distance(z, k) < l) closer = true;
        }
        if (!closer) out[{j, l}].push_back(IvLabel::all_to_all(i, k));
      }
    }
  }
  for (auto& [key, labels] : out) std::sort(labels.begin(), labels.end());
  return out;
}

std::vector<IvLabel> cyclic_distance_class(int n, int r, int j, int l) {
  std::vector<IvLabel> out{IvLabel::all_to_all(normalize_index(j, n), normalize_index(j + l, n)),
                           IvLabel::all_to_all(normalize_index(j + r - 1, n),
                                               normalize_index(j - l, n))};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

AllToAllPlan build_alltoall_d1(int n, int r) {
  check_range(n, r, 1);
  if (r < 2 || r > n - 1) throw InvalidParameter("the d = 1 scheme needs 2 <= r <= n-1");
  AllToAllPlan plan = empty_plan(n, r, 1, Regime::kDEq1, PlacementKind::kCyclic);
  plan.d1 = 1;
  fill_chains(plan, n, r, 1, 1, false);
  return plan;
}

AllToAllPlan build_alltoall_mid(int n, int r, int d) {
  check_range(n, r, d);
  if (r < 2 || r > n - 1 || d < 2 || d > 2 * (r - 1)) {
    throw InvalidParameter("the MID scheme needs 2 <= r <= n-1 and 1 < d <= 2(r-1)");
  }
  AllToAllPlan plan = empty_plan(n, r, d, Regime::kMid, PlacementKind::kCyclic);
  plan.d1 = std::min(d, r - 1);
  fill_chains(plan, n, r, d, plan.d1, false);
  return plan;
}

AllToAllPlan build_alltoall_wide(int n, int r, int d) {
  check_range(n, r, d);
  if (r > n - 1 || d < 2 * r - 1) {
    throw InvalidParameter("the WIDE scheme needs r <= n-1 and d >= 2r-1");
  }
  AllToAllPlan plan = empty_plan(n, r, d, Regime::kWide, PlacementKind::kCyclic);
  plan.d1 = 0;
  fill_chains(plan, n, r, d, 0, true);
  return plan;
}

AllToAllPlan build_alltoall_appendix_c(int n, int r) {
  check_range(n, r, 1);
  AllToAllPlan plan = empty_plan(n, r, 1, Regime::kAppendixC, PlacementKind::kAppendixC);
  if (r == n) return plan;

  std::set<int> offsets;
  for (int f : plan.placement.files(1)) offsets.insert(f - 1);
  auto has = [&](int z) { return offsets.count(((z % n) + n) % n) > 0; };

  // Classify each missing offset z (file x+z at destination x) by feeder.
  // Left feeder x-1 holds it when z+1 is cached there; the receiver of the
  // partner label can cancel it when z+2 is cached. Mirror for the right.
  std::vector<int> left_coded, right_coded, left_plain, right_plain;
  std::vector<int> missing;
  for (int z = 0; z < n; ++z) {
    if (!has(z)) missing.push_back(z);
  }
  struct Option {
    int z;
    bool left, left_coded, right, right_coded;
  };
  std::vector<Option> options;
  for (int z : missing) {
    Option o{z, has(z + 1), has(z + 1) && has(z + 2), has(z - 1), has(z - 1) && has(z - 2)};
    if (!o.left && !o.right) {
      throw InvalidParameter("appendix-c scheme cannot reach offset " + std::to_string(z));
    }
    options.push_back(o);
  }
  auto take = [&](const Option& o, bool left, bool coded) {
    // Stored as file offset relative to the sending node.
    if (left) {
      (coded ? left_coded : left_plain).push_back(((o.z + 1) % n + n) % n);
    } else {
      (coded ? right_coded : right_plain).push_back(((o.z - 1) % n + n) % n);
    }
  };
  std::vector<const Option*> flexible;
  for (const auto& o : options) {
    if (o.left && !o.right) {
      take(o, true, o.left_coded);
    } else if (o.right && !o.left) {
      take(o, false, o.right_coded);
    } else if (o.left_coded != o.right_coded) {
      take(o, o.left_coded, true);
    } else {
      flexible.push_back(&o);
    }
  }
  for (const Option* o : flexible) {
    if (o->left_coded) {
      take(*o, left_coded.size() <= right_coded.size(), true);
    } else {
      take(*o, left_plain.size() + left_coded.size() <= right_plain.size() + right_coded.size(),
           false);
    }
  }
  for (auto* v : {&left_coded, &right_coded, &left_plain, &right_plain}) std::sort(v->begin(), v->end());

  std::vector<std::vector<std::pair<int, bool>>> packets;  // (offset, is_left)
  const std::size_t pairs = std::min(left_coded.size(), right_coded.size());
  for (std::size_t t = 0; t < pairs; ++t) {
    packets.push_back({{left_coded[t], true}, {right_coded[t], false}});
  }
  for (std::size_t t = pairs; t < left_coded.size(); ++t) packets.push_back({{left_coded[t], true}});
  for (std::size_t t = pairs; t < right_coded.size(); ++t) packets.push_back({{right_coded[t], false}});
  for (int off : left_plain) packets.push_back({{off, true}});
  for (int off : right_plain) packets.push_back({{off, false}});

  plan.rounds = 1;
  plan.d1 = 1;
  for (std::size_t t = 0; t < packets.size(); ++t) {
    for (int y = 1; y <= n; ++y) {
      TransmissionIntent intent;
      intent.tick = static_cast<int>(t) + 1;
      intent.round = 1;
      intent.step = static_cast<int>(t) + 1;
      intent.sender = y;
      for (const auto& [off, left] : packets[t]) {
        intent.components.push_back(
            IvLabel::all_to_all(normalize_index(y + off, n), normalize_index(left ? y + 1 : y - 1, n)));
      }
      plan.schedule.transmissions.push_back(std::move(intent));
    }
  }
  return plan;
}

AllToAllPlan build_alltoall(int n, int r, int d, PlacementKind placement) {
  if (placement == PlacementKind::kAppendixC) {
    if (d != 1) throw InvalidParameter("the appendix-c scheme needs d = 1");
    return build_alltoall_appendix_c(n, r);
  }
  switch (classify_regime(n, r, d)) {
    case Regime::kEmpty:
      return empty_plan(n, r, d, Regime::kEmpty, PlacementKind::kCyclic);
    case Regime::kDEq1:
      return build_alltoall_d1(n, r);
    case Regime::kMid:
      return build_alltoall_mid(n, r, d);
    case Regime::kWide:
      return build_alltoall_wide(n, r, d);
    case Regime::kAppendixC:
      break;
  }
  return build_alltoall_appendix_c(n, r);
}

AllToAllFormulas alltoall_formulas(int n, int r, int d, PlacementKind placement) {
  check_range(n, r, d);
  AllToAllFormulas f;
  const Rational N(n);
  const Rational R(r);
  const Rational D(d);
  const int rounds = ceil_div(n - r, 2);
  const bool odd = (n - r) % 2 == 1;

  if (placement == PlacementKind::kAppendixC) {
    if (d != 1 || 2 * r < n) throw InvalidParameter("appendix-c formulas need d = 1, r >= ceil(n/2)");
    f.regime = Regime::kAppendixC;
    f.ach_exact = Rational(rounds);
  } else {
    f.regime = classify_regime(n, r, d);
    Rational sum(0);
    const int d1 = std::min(d, r - 1);
    for (int j = 1; j <= rounds; ++j) {
      switch (f.regime) {
        case Regime::kDEq1:
          sum += j;
          break;
        case Regime::kMid:
          sum += 1 + std::max(0, ceil_div(j - d1, d));
          break;
        case Regime::kWide:
          sum += 1 + ceil_div(j, d);
          break;
        default:
          break;
      }
    }
    if (odd && f.regime != Regime::kEmpty) {
      const bool whole = f.regime == Regime::kWide && ceil_div(rounds, d) == 1;
      sum -= whole ? Rational(1) : Rational(1, 2);
    }
    f.ach_exact = sum;
  }
  f.uncoded = *f.ach_exact * 2;

  if (d >= 2 * r - 1) {
    f.asymptotic_case = "d>=2r-1";
    f.asymptotic = N / (4 * D) * (N / 2 - R) + Rational(3) * (N - R) / 4 + R * R / (8 * D);
  } else if (d > r - 1) {
    f.asymptotic_case = "r-1<d<=2(r-1)";
    f.asymptotic = N / (4 * D) * (N / 2 - 3 * R) + (3 * N - 5 * R) / 4 +
                 (9 * R * R + 4 * (N - R + 1)) / (8 * D);
  } else {
    f.asymptotic_case = "d<=r-1";
    f.asymptotic = N / (4 * D) * (N / 2 - R) + (N - R) / 4 + R * R / (8 * D);
  }

  if (r <= (n + 1) / 2 - 1) f.lb_cyc = N / (4 * D) * (N / 2 - R + 1);
  if (d == 1 && 2 * r >= n) f.lb_arb_d1 = (N - R) / 2;
  f.lb_any = (N - R) / (2 * D);
  return f;
}

}  // namespace ringcdc
