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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ringcdc/allgather.hpp"
#include "ringcdc/alltoall.hpp"
#include "ringcdc/baselines.hpp"
#include "ringcdc/driver.hpp"
#include "ringcdc/goldens.hpp"

namespace ringcdc {
namespace {

// Pinned tolerances.
constexpr double kMaxAsymptoticConstant = 2.0;
constexpr double kRatioLow = 0.8;
constexpr double kRatioHigh = 1.3;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << why;
    pass = false;
  }
};

template <typename T, typename F>
std::vector<T> parallel_map(std::size_t count, F fn) {
  std::vector<T> out(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t k = next++; k < count; k = next++) out[k] = fn(k);
  };
  const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

std::string triple(int n, int r, int d) {
  return "(n=" + std::to_string(n) + ",r=" + std::to_string(r) + ",d=" + std::to_string(d) + ")";
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

RunOutcome run_one(Flavor problem, int n, int r, int d, Scheme scheme = Scheme::kCoded,
                   PlacementKind placement = PlacementKind::kCyclic) {
  RunConfig c;
  c.problem = problem;
  c.n = n;
  c.r = r;
  c.d = d;
  c.scheme = scheme;
  c.placement = placement;
  return run_config(c);
}

std::vector<SweepRow> sweep(Flavor problem, std::vector<int> ns, std::vector<int> ds, int r_min = 1,
                            PlacementKind placement = PlacementKind::kCyclic) {
  SweepSpec spec;
  spec.problem = problem;
  spec.ns = std::move(ns);
  spec.ds = std::move(ds);
  spec.r_min = r_min;
  spec.placement = placement;
  return run_sweep(spec);
}

Rational d1_round_sum(int n, int r) {
  const int rounds = (n - r + 1) / 2;
  Rational sum(rounds * (rounds + 1) / 2);
  if ((n - r) % 2 == 1) sum -= Rational(1, 2);
  return sum;
}

Outcome criterion1() {
  Outcome o;
  const auto rows = sweep(Flavor::kAllGather, range(3, 32), range(1, 16));
  for (const auto& row : rows) {
    if (!row.complete) o.fail("incomplete at " + triple(row.n, row.r, row.d));
    if (row.ncl != allgather_ncl_formula(row.n, row.r, row.d)) {
      o.fail("NCL " + to_string(row.ncl) + " at " + triple(row.n, row.r, row.d));
    }
  }
  o.detail << (o.pass ? "" : "; ") << rows.size() << " triples";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto rows = sweep(Flavor::kAllGather, range(3, 32), range(1, 16));
  for (const auto& row : rows) {
    const Rational lb(row.n - row.r, 2 * row.d);
    if (!(lb <= row.ncl && row.ncl < lb + 1)) o.fail("sandwich broken at " + triple(row.n, row.r, row.d));
  }
  o.detail << (o.pass ? "" : "; ") << rows.size() << " triples";
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (const auto& g : check_goldens()) {
    if (!g.match) o.fail(g.name + " " + g.detail);
  }
  const std::vector<std::string> needed = {"decode_order_allgather_n8_r2_d3.txt",
                                           "broadcasts_alltoall_n8_r3_d1.txt",
                                           "placement_appendix_c_n8_r4.txt",
                                           "appendix_c_alltoall_n8_r4_d1.txt"};
  for (const auto& name : needed) {
    bool present = false;
    for (const auto& g : embedded_goldens()) present = present || g.name == name;
    if (!present) o.fail("missing golden " + name);
  }
  const RunOutcome a = run_one(Flavor::kAllGather, 8, 2, 3);
  if (!a.ok() || a.result.report.ncl != Rational(1)) o.fail("(8,2,3) NCL " + to_string(a.result.report.ncl));
  const RunOutcome b = run_one(Flavor::kAllToAll, 8, 3, 1);
  if (!b.ok() || b.result.report.ncl != Rational(11, 2)) o.fail("(8,3,1) NCL " + to_string(b.result.report.ncl));
  const RunOutcome c = run_one(Flavor::kAllToAll, 8, 4, 1, Scheme::kCoded, PlacementKind::kAppendixC);
  if (!c.ok() || c.result.report.ncl != Rational(2)) o.fail("appendix-c NCL " + to_string(c.result.report.ncl));
  if (o.pass) o.detail << "NCL 1, 11/2, 2; goldens identical";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto rows = sweep(Flavor::kAllToAll, range(5, 24), {1}, 2);
  std::size_t checked = 0;
  for (const auto& row : rows) {
    if (row.r > row.n - 1) continue;
    ++checked;
    if (!row.complete) o.fail("incomplete at " + triple(row.n, row.r, 1));
    if (row.ncl != d1_round_sum(row.n, row.r)) o.fail("NCL " + to_string(row.ncl) + " at " + triple(row.n, row.r, 1));
  }
  o.detail << (o.pass ? "" : "; ") << checked << " triples";
  return o;
}

struct Criterion5Stats {
  double c_mid = 0;
  double c_wide = 0;
};

Outcome criterion5(Criterion5Stats& stats) {
  Outcome o;
  const auto rows = sweep(Flavor::kAllToAll, range(8, 20), range(1, 10));
  std::size_t checked = 0;
  for (const auto& row : rows) {
    const Regime regime = classify_regime(row.n, row.r, row.d);
    if (regime != Regime::kMid && regime != Regime::kWide) continue;
    ++checked;
    if (!row.complete) o.fail("incomplete at " + triple(row.n, row.r, row.d));
    const Rational expr = *alltoall_formulas(row.n, row.r, row.d).asymptotic;
    if (expr <= Rational(0)) {
      o.fail("non-positive asymptotic expression at " + triple(row.n, row.r, row.d));
      continue;
    }
    const double ratio = to_double(row.ncl / expr);
    double& c = regime == Regime::kMid ? stats.c_mid : stats.c_wide;
    c = std::max(c, ratio);
  }
  std::printf("C_MID = %.6f\nC_WIDE = %.6f\n", stats.c_mid, stats.c_wide);
  if (stats.c_mid > kMaxAsymptoticConstant || stats.c_wide > kMaxAsymptoticConstant) {
    o.fail("constant above 2");
  }
  o.detail << (o.pass ? "" : "; ") << checked << " triples, C_MID=" << stats.c_mid
           << " C_WIDE=" << stats.c_wide;
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::vector<SweepRow> rows = sweep(Flavor::kAllToAll, range(5, 24), {1}, 2);
  for (const auto& row : sweep(Flavor::kAllToAll, range(8, 20), range(2, 10))) rows.push_back(row);
  for (const auto& row : sweep(Flavor::kAllToAll, range(8, 20), {1}, 1)) {
    if (row.r == 1) rows.push_back(row);
  }
  std::size_t checked = 0;
  for (const auto& row : rows) {
    if (row.r > (row.n + 1) / 2 - 1) continue;
    ++checked;
    const Rational lb = Rational(row.n, 4 * row.d) * (Rational(row.n, 2) - row.r + 1);
    if (row.ncl < lb) o.fail("NCL below cyclic bound at " + triple(row.n, row.r, row.d));
  }
  o.detail << (o.pass ? "" : "; ") << checked << " triples";
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (int r : {1, 5}) {
    double ratio[2] = {0, 0};
    int k = 0;
    for (int n : {24, 48}) {
      const RunOutcome run = run_one(Flavor::kAllToAll, n, r, 1);
      if (!run.ok()) o.fail("incomplete at " + triple(n, r, 1));
      ratio[k++] = to_double(run.result.report.ncl / Rational(n * n, 8));
    }
    std::printf("ratio r=%d: N=24 %.6f, N=48 %.6f\n", r, ratio[0], ratio[1]);
    if (ratio[1] < kRatioLow || ratio[1] > kRatioHigh) o.fail("N=48 ratio out of range for r=" + std::to_string(r));
    if (!(std::abs(ratio[1] - 1) < std::abs(ratio[0] - 1))) o.fail("ratio not approaching 1 for r=" + std::to_string(r));
    o.detail << (r == 1 ? "" : ", ") << "r=" << r << ": " << ratio[0] << " -> " << ratio[1];
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& row : sweep(Flavor::kAllToAll, range(6, 20), {1}, 1, PlacementKind::kAppendixC)) {
    if (row.r == row.n) continue;
    ++checked;
    const Rational half(row.n - row.r, 2);
    if (!row.complete) o.fail("incomplete at " + triple(row.n, row.r, 1));
    if (row.ncl != Rational((row.n - row.r + 1) / 2)) o.fail("NCL " + to_string(row.ncl) + " at " + triple(row.n, row.r, 1));
    if (!(half <= row.ncl && row.ncl < half + 1)) o.fail("bound broken at " + triple(row.n, row.r, 1));
    if ((row.n - row.r) % 2 == 0 && row.ncl != half) o.fail("even gap not tight at " + triple(row.n, row.r, 1));
  }
  o.detail << (o.pass ? "" : "; ") << checked << " pairs";
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::vector<std::string> odd_misses;
  for (int n = 4; n <= 33; ++n) {
    const RunOutcome run = run_one(Flavor::kAllGather, n, 1, 1, Scheme::kFragouli);
    const Rational want = n % 2 == 0 ? Rational(n, 2) : Rational(n - 1, 2);
    if (!run.ok() || run.result.report.ncl != want) {
      odd_misses.push_back("n=" + std::to_string(n) + ":" + to_string(run.result.report.ncl));
    }
  }
  if (!odd_misses.empty()) {
    std::string joined;
    for (const auto& m : odd_misses) joined += (joined.empty() ? "" : " ") + m;
    o.fail("fragouli NCL differs at " + joined);
  }

  struct Point {
    Flavor problem;
    int n, r, d;
  };
  std::vector<Point> grid;
  for (int n = 3; n <= 32; ++n) {
    for (int r = 1; r <= n; ++r) {
      for (int d = 1; d <= n / 2; ++d) grid.push_back({Flavor::kAllGather, n, r, d});
    }
  }
  for (int n = 5; n <= 24; ++n) {
    for (int r = 2; r <= n - 1; ++r) grid.push_back({Flavor::kAllToAll, n, r, 1});
  }
  const auto uncoded_ok = parallel_map<std::string>(grid.size(), [&](std::size_t k) -> std::string {
    const Point& p = grid[k];
    const RunOutcome coded = run_one(p.problem, p.n, p.r, p.d);
    const RunOutcome plain = run_one(p.problem, p.n, p.r, p.d, Scheme::kUncoded);
    if (!plain.ok() || plain.result.report.ncl != coded.result.report.ncl * 2) {
      return "uncoded != 2x coded at " + flavor_name(p.problem) + triple(p.n, p.r, p.d);
    }
    return "";
  });
  for (const auto& msg : uncoded_ok) {
    if (!msg.empty()) o.fail(msg);
  }

  Rational worst(0);
  for (Flavor f : {Flavor::kAllGather, Flavor::kAllToAll}) {
    for (int n = 3; n <= 24; ++n) {
      for (int r = 1; r <= n; ++r) {
        for (int d = 1; d <= n / 2; ++d) {
          const auto gain = coding_gain(f, n, r, d);
          if (gain) worst = std::max(worst, *gain);
        }
      }
    }
  }
  if (worst > Rational(2)) o.fail("coding gain " + to_string(worst));
  o.detail << (o.pass ? "" : "; ") << grid.size() << " uncoded points, max gain " << to_string(worst);
  return o;
}

Outcome criterion10() {
  Outcome o;
  for (Flavor f : {Flavor::kAllGather, Flavor::kAllToAll}) {
    const std::string first = sweep_csv(sweep(f, {50}, {1, 2}));
    const std::string second = sweep_csv(sweep(f, {50}, {1, 2}));
    if (first != second) o.fail(flavor_name(f) + " sweep CSV not reproducible");
    const auto rows = sweep(f, {50}, {1, 2});
    if (rows.size() != 100) o.fail(flavor_name(f) + " sweep has " + std::to_string(rows.size()) + " rows");
    for (const auto& row : rows) {
      if (!row.complete) o.fail("incomplete at " + triple(row.n, row.r, row.d));
      if (!(row.uncoded == row.ncl * 2 && row.ncl >= row.lb)) {
        o.fail(flavor_name(f) + " ordering broken at " + triple(row.n, row.r, row.d));
      }
      if (f == Flavor::kAllGather && row.ncl != allgather_ncl_formula(row.n, row.r, row.d)) {
        o.fail("allgather sweep NCL off at " + triple(row.n, row.r, row.d));
      }
    }
  }
  if (o.pass) o.detail << "n=50, d in {1,2}, both problems, byte-identical reruns";
  return o;
}

}  // namespace
}  // namespace ringcdc

int main() {
  using namespace ringcdc;
  Criterion5Stats stats;
  const std::vector<std::function<Outcome()>> criteria = {
      criterion1, criterion2, criterion3, criterion4, [&] { return criterion5(stats); },
      criterion6, criterion7, criterion8, criterion9, criterion10};
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = criteria[k]();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", k + 1,
                o.detail.str().c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
