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

#ifndef RINGCDC_DRIVER_HPP_
#define RINGCDC_DRIVER_HPP_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ringcdc/alltoall.hpp"
#include "ringcdc/packet.hpp"
#include "ringcdc/rational.hpp"
#include "ringcdc/ring.hpp"
#include "ringcdc/sim.hpp"

namespace ringcdc {

using Json = nlohmann::ordered_json;

enum class Scheme { kCoded, kUncoded, kFragouli };

std::string scheme_name(Scheme scheme);
Scheme parse_scheme(const std::string& name);

struct RunConfig {
  Flavor problem = Flavor::kAllGather;
  int n = 8;
  int r = 1;
  int d = 1;
  PlacementKind placement = PlacementKind::kCyclic;
  Scheme scheme = Scheme::kCoded;
  bool check_oracle = true;
  SimOptions options;
};

struct BuiltPlan {
  RingTopology topo;
  Placement placement;
  Schedule schedule;
  std::string regime;
  int rounds = 0;
};

BuiltPlan build_plan(const RunConfig& config);

struct RunOutcome {
  RunConfig config;
  std::string regime;
  int rounds = 0;
  RunResult result;
  std::optional<OracleResult> oracle;
  std::optional<std::string> error;  // SimulationError text, if the run aborted

  // Completed, no simulation error, and the oracle (if run) agrees.
  bool ok() const;
};

// Never throws SimulationError; it is captured in RunOutcome::error.
RunOutcome run_config(const RunConfig& config);

// Ledger CSV: tick,round,step,sender,labels,size_units.
std::string ledger_csv(const Ledger& ledger);

Json report_json(const RunOutcome& outcome);
Json placement_to_json(const Placement& placement);
Placement placement_from_json(const Json& json);

// Every closed form that applies to the triple, as exact/decimal pairs.
Json bounds_json(Flavor problem, int n, int r, int d,
                 PlacementKind placement = PlacementKind::kCyclic);

struct SweepSpec {
  Flavor problem = Flavor::kAllGather;
  std::vector<int> ns;
  int r_min = 1;
  int r_max = 0;  // 0 means n
  std::vector<int> ds;
  PlacementKind placement = PlacementKind::kCyclic;
  bool check_oracle = true;
  unsigned threads = 0;  // 0 means hardware concurrency
};

struct SweepRow {
  Flavor problem = Flavor::kAllGather;
  int n = 0;
  int r = 0;
  int d = 0;
  PlacementKind placement = PlacementKind::kCyclic;
  Rational ncl;
  Rational lb;
  Rational uncoded;
  int ticks = 0;
  bool complete = false;
};

// Rows ordered by (n, d, r); invalid triples are skipped.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace ringcdc

#endif  // RINGCDC_DRIVER_HPP_
