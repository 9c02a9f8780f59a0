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

#include "ringcdc/driver.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "ringcdc/allgather.hpp"
#include "ringcdc/baselines.hpp"

namespace ringcdc {
namespace {

Json rational_json(const Rational& q) {
  return Json{{"exact", to_string(q)}, {"float", to_decimal(q)}};
}

Json optional_json(const std::optional<Rational>& q) {
  return q ? rational_json(*q) : Json(nullptr);
}

}  // namespace

std::string scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::kCoded:
      return "coded";
    case Scheme::kUncoded:
      return "uncoded";
    case Scheme::kFragouli:
      break;
  }
  return "fragouli";
}

Scheme parse_scheme(const std::string& name) {
  if (name == "coded") return Scheme::kCoded;
  if (name == "uncoded") return Scheme::kUncoded;
  if (name == "fragouli") return Scheme::kFragouli;
  throw InvalidParameter("unknown scheme '" + name + "'");
}

BuiltPlan build_plan(const RunConfig& c) {
  if (c.scheme == Scheme::kFragouli) {
    if (c.problem != Flavor::kAllGather || c.r != 1 || c.d != 1) {
      throw InvalidParameter("the fragouli baseline is all-gather with r = 1, d = 1");
    }
    BaselinePlan p = build_fragouli(c.n);
    return {p.topo, p.placement, p.schedule, "FRAGOULI", p.rounds};
  }
  if (c.problem == Flavor::kAllGather) {
    if (c.placement != PlacementKind::kCyclic) {
      throw InvalidParameter("all-gather is defined for cyclic placement only");
    }
    AllGatherPlan p = build_allgather(c.n, c.r, c.d);
    Schedule s = c.scheme == Scheme::kUncoded ? to_uncoded(p.schedule) : p.schedule;
    return {p.topo, p.placement, s, "ALLGATHER", p.rounds};
  }
  AllToAllPlan p = build_alltoall(c.n, c.r, c.d, c.placement);
  Schedule s = c.scheme == Scheme::kUncoded ? to_uncoded(p.schedule) : p.schedule;
  return {p.topo, p.placement, s, regime_name(p.regime), p.rounds};
}

bool RunOutcome::ok() const {
  if (error) return false;
  if (!result.report.complete) return false;
  return !oracle || oracle->met;
}

RunOutcome run_config(const RunConfig& config) {
  BuiltPlan plan = build_plan(config);
  RunOutcome out{config, plan.regime, plan.rounds, {}, std::nullopt, std::nullopt};
  const Requirement req = Requirement::for_flavor(config.problem, config.n);
  try {
    out.result = run_schedule(plan.topo, plan.placement, plan.schedule, req, config.options);
  } catch (const SimulationError& e) {
    out.error = error_kind_name(e.kind()) + ": " + e.what();
    out.result.report.failure = out.error;
    return out;
  }
  if (config.check_oracle) {
    out.oracle = closure_oracle(plan.topo, plan.placement, out.result.ledger, req);
  }
  return out;
}

std::string ledger_csv(const Ledger& ledger) {
  std::ostringstream os;
  os << "tick,round,step,sender,labels,size_units\n";
  for (const auto& rec : ledger) {
    os << rec.tick << ',' << rec.round << ',' << rec.step << ',' << rec.sender << ',';
    for (std::size_t i = 0; i < rec.components.size(); ++i) {
      if (i) os << '+';
      os << rec.components[i].to_string();
    }
    os << ',' << to_string(rec.size_units) << '\n';
  }
  return os.str();
}

Json report_json(const RunOutcome& o) {
  const NclReport& rep = o.result.report;
  Json j;
  j["schema"] = "1";
  j["problem"] = flavor_name(o.config.problem);
  j["n"] = o.config.n;
  j["r"] = o.config.r;
  j["d"] = o.config.d;
  j["placement"] = placement_name(o.config.placement);
  j["scheme"] = scheme_name(o.config.scheme);
  j["regime"] = o.regime;
  j["rounds"] = o.rounds;
  j["ticks"] = rep.ticks;
  j["transmissions"] = o.result.ledger.size();
  j["total_units"] = to_string(rep.total_units);
  j["ncl"] = to_string(rep.ncl);
  j["ncl_float"] = to_decimal(rep.ncl);
  Json per_node = Json::array();
  for (const auto& u : rep.per_node_units) per_node.push_back(to_string(u));
  j["per_node_units"] = per_node;
  j["complete"] = rep.complete;
  j["failure"] = rep.failure ? Json(*rep.failure) : Json(nullptr);
  if (o.oracle) {
    Json deficit = Json::array();
    for (std::size_t v = 0; v < o.oracle->deficit.size(); ++v) {
      if (!o.oracle->deficit[v].empty()) deficit.push_back(static_cast<int>(v) + 1);
    }
    j["oracle"] = Json{{"checked", true}, {"met", o.oracle->met}, {"deficit_nodes", deficit}};
  } else {
    j["oracle"] = Json{{"checked", false}};
  }
  j["ok"] = o.ok();
  return j;
}

Json placement_to_json(const Placement& placement) {
  Json cached = Json::object();
  for (int i = 1; i <= placement.n(); ++i) cached[std::to_string(i)] = placement.files(i);
  return Json{{"n", placement.n()}, {"r", to_string(placement.load())}, {"cached", cached}};
}

Placement placement_from_json(const Json& json) {
  const int n = json.at("n").get<int>();
  std::vector<std::vector<int>> cached(n);
  for (int i = 1; i <= n; ++i) {
    cached[i - 1] = json.at("cached").at(std::to_string(i)).get<std::vector<int>>();
  }
  Placement p(n, std::move(cached));
  if (json.contains("r") && parse_rational(json.at("r").get<std::string>()) != p.load()) {
    throw InvalidParameter("placement JSON load does not match its cached sets");
  }
  return p;
}

Json bounds_json(Flavor problem, int n, int r, int d, PlacementKind placement) {
  Json j;
  j["schema"] = "1";
  j["problem"] = flavor_name(problem);
  j["n"] = n;
  j["r"] = r;
  j["d"] = d;
  j["placement"] = placement_name(placement);
  if (problem == Flavor::kAllGather) {
    const Rational ach = allgather_ncl_formula(n, r, d);
    j["achievable"] = rational_json(ach);
    j["lower_bound"] = rational_json(allgather_lower_bound(n, r, d));
    j["uncoded"] = rational_json(ach * 2);
    j["memory_sharing"] = rational_json(memory_sharing_envelope(n, d, Rational(r)));
    return j;
  }
  const AllToAllFormulas f = alltoall_formulas(n, r, d, placement);
  j["regime"] = regime_name(f.regime);
  j["achievable"] = optional_json(f.ach_exact);
  j["asymptotic_case"] = f.asymptotic_case;
  j["asymptotic_expression"] = optional_json(f.asymptotic);
  j["lower_bound_cyclic"] = optional_json(f.lb_cyc);
  j["lower_bound_d1"] = optional_json(f.lb_arb_d1);
  j["lower_bound_any"] = rational_json(f.lb_any);
  j["uncoded"] = optional_json(f.uncoded);
  return j;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  std::vector<RunConfig> configs;
  std::vector<int> ns = spec.ns;
  std::vector<int> ds = spec.ds;
  std::sort(ns.begin(), ns.end());
  std::sort(ds.begin(), ds.end());
  for (int n : ns) {
    if (n < 3) continue;
    for (int d : ds) {
      if (d < 1 || d > n / 2) continue;
      const int r_max = spec.r_max == 0 ? n : std::min(spec.r_max, n);
      for (int r = std::max(spec.r_min, 1); r <= r_max; ++r) {
        if (spec.placement == PlacementKind::kAppendixC && (d != 1 || 2 * r < n)) continue;
        RunConfig c;
        c.problem = spec.problem;
        c.n = n;
        c.r = r;
        c.d = d;
        c.placement = spec.placement;
        c.check_oracle = spec.check_oracle;
        configs.push_back(c);
      }
    }
  }

  std::vector<SweepRow> rows(configs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t k = next++; k < configs.size(); k = next++) {
      const RunConfig& c = configs[k];
      RunOutcome o = run_config(c);
      SweepRow row;
      row.problem = c.problem;
      row.n = c.n;
      row.r = c.r;
      row.d = c.d;
      row.placement = c.placement;
      row.ncl = o.result.report.ncl;
      row.uncoded = row.ncl * 2;
      row.ticks = o.result.report.ticks;
      row.complete = o.ok();
      if (c.problem == Flavor::kAllGather) {
        row.lb = allgather_lower_bound(c.n, c.r, c.d);
      } else {
        const AllToAllFormulas f = alltoall_formulas(c.n, c.r, c.d, c.placement);
        row.lb = f.lb_cyc ? *f.lb_cyc : (f.lb_arb_d1 ? *f.lb_arb_d1 : f.lb_any);
      }
      rows[k] = row;
    }
  };
  unsigned threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(configs.size(), 1));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "problem,n,r,d,placement,scheme,ncl_exact,ncl_float,lb_exact,lb_float,uncoded_exact,ticks,"
        "complete\n";
  for (const auto& row : rows) {
    os << flavor_name(row.problem) << ',' << row.n << ',' << row.r << ',' << row.d << ','
       << placement_name(row.placement) << ",coded," << to_string(row.ncl) << ','
       << to_decimal(row.ncl) << ',' << to_string(row.lb) << ',' << to_decimal(row.lb) << ','
       << to_string(row.uncoded) << ',' << row.ticks << ',' << (row.complete ? "true" : "false")
       << '\n';
  }
  return os.str();
}

}  // namespace ringcdc
