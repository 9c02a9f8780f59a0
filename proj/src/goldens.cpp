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

#include "ringcdc/goldens.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "ringcdc/allgather.hpp"
#include "ringcdc/alltoall.hpp"
#include "ringcdc/driver.hpp"

namespace ringcdc {
namespace {

#include "ringcdc/golden_data.inc"

std::string base_labels(const std::vector<IvLabel>& components) {
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += "+";
    out += components[i].full().to_string();
  }
  return out;
}

RunResult run_plan(const RingTopology& topo, const Placement& placement, const Schedule& s) {
  return run_schedule(topo, placement, s, Requirement::for_flavor(s.flavor, topo.n()));
}

std::string decode_order() {
  const AllGatherPlan plan = build_allgather(8, 2, 3);
  const RunResult run = run_plan(plan.topo, plan.placement, plan.schedule);
  const int n = plan.topo.n();
  std::ostringstream os;
  os << "node";
  for (int f = 1; f <= n; ++f) os << ",V" << f;
  os << '\n';
  for (int v = 1; v <= n; ++v) {
    std::vector<Packet> received;
    KnowledgeSet known;
    for (const auto& l : mapped_labels(Flavor::kAllGather, plan.placement, v)) known.insert(l);
    for (const auto& rec : run.ledger) {
      if (rec.round != 1) continue;
      if (std::find(rec.receivers.begin(), rec.receivers.end(), v) != rec.receivers.end()) {
        received.push_back(rec.packet);
      }
    }
    std::map<int, int> batch_of;
    const auto batches = successive_decode_round1(v, received, known, plan.topo);
    for (std::size_t b = 0; b < batches.size(); ++b) {
      for (const auto& l : batches[b]) batch_of[l.source] = static_cast<int>(b) + 1;
    }
    os << 'n' << v;
    for (int f = 1; f <= n; ++f) {
      os << ',';
      if (plan.placement.caches(v, f)) {
        os << '*';
      } else if (batch_of.count(f)) {
        os << batch_of[f];
      } else {
        os << '?';
      }
    }
    os << '\n';
  }
  return os.str();
}

std::string broadcast_lists() {
  const AllToAllPlan plan = build_alltoall_d1(8, 3);
  const RunResult run = run_plan(plan.topo, plan.placement, plan.schedule);
  const int n = plan.topo.n();
  std::map<std::pair<int, int>, const TransmissionRecord*> by_tick_sender;
  for (const auto& rec : run.ledger) by_tick_sender[{rec.tick, rec.sender}] = &rec;
  std::ostringstream os;
  os << "round,step,node,broadcast,receive_from_prev,receive_from_next\n";
  for (const auto& rec : run.ledger) {
    const auto* prev = by_tick_sender.at({rec.tick, normalize_index(rec.sender - 1, n)});
    const auto* next = by_tick_sender.at({rec.tick, normalize_index(rec.sender + 1, n)});
    os << rec.round << ',' << rec.step << ",n" << rec.sender << ',' << base_labels(rec.components)
       << ',' << base_labels(prev->components) << ',' << base_labels(next->components) << '\n';
  }
  return os.str();
}

std::string placement_grid() {
  const Placement p = appendix_c_placement(8, 4);
  std::ostringstream os;
  os << "node";
  for (int f = 1; f <= p.n(); ++f) os << ",w" << f;
  os << '\n';
  for (int v = 1; v <= p.n(); ++v) {
    os << 'n' << v;
    for (int f = 1; f <= p.n(); ++f) os << ',' << (p.caches(v, f) ? "*" : "");
    os << '\n';
  }
  return os.str();
}

std::string appendix_c() {
  const AllToAllPlan plan = build_alltoall_appendix_c(8, 4);
  const RunResult run = run_plan(plan.topo, plan.placement, plan.schedule);
  std::ostringstream os;
  os << "step,node,broadcast\n";
  for (const auto& rec : run.ledger) {
    os << rec.step << ",n" << rec.sender << ',' << base_labels(rec.components) << '\n';
  }
  os << "node,decoded\n";
  for (const auto& node : run.nodes) {
    std::vector<IvLabel> mine;
    for (const auto& ev : node.decoded) {
      if (ev.label.dest == node.node) mine.push_back(ev.label);
    }
    std::sort(mine.begin(), mine.end());
    os << 'n' << node.node << ',';
    for (std::size_t i = 0; i < mine.size(); ++i) os << (i ? " " : "") << mine[i].to_string();
    os << '\n';
  }
  return os.str();
}

RunOutcome fixed_run(Flavor problem, int n, int r, int d) {
  RunConfig c;
  c.problem = problem;
  c.n = n;
  c.r = r;
  c.d = d;
  return run_config(c);
}

}  // namespace

const std::vector<GoldenFile>& embedded_goldens() {
  static const std::vector<GoldenFile> files = [] {
    std::vector<GoldenFile> out;
    for (const auto& [name, content] : kGoldenData) out.push_back({name, content});
    return out;
  }();
  return files;
}

std::string render_golden(const std::string& name) {
  if (name == "decode_order_allgather_n8_r2_d3.txt") return decode_order();
  if (name == "broadcasts_alltoall_n8_r3_d1.txt") return broadcast_lists();
  if (name == "placement_appendix_c_n8_r4.txt") return placement_grid();
  if (name == "appendix_c_alltoall_n8_r4_d1.txt") return appendix_c();
  if (name == "ledger_alltoall_n8_r3_d1.csv") {
    return ledger_csv(fixed_run(Flavor::kAllToAll, 8, 3, 1).result.ledger);
  }
  if (name == "report_allgather_n8_r2_d3.json") {
    return report_json(fixed_run(Flavor::kAllGather, 8, 2, 3)).dump(2) + "\n";
  }
  throw std::invalid_argument("unknown golden file '" + name + "'");
}

std::vector<GoldenDiff> check_goldens() {
  std::vector<GoldenDiff> out;
  for (const auto& g : embedded_goldens()) {
    GoldenDiff diff{g.name, false, {}};
    const std::string actual = render_golden(g.name);
    diff.match = actual == g.content;
    if (!diff.match) {
      std::istringstream want(g.content);
      std::istringstream got(actual);
      std::string a, b;
      int line = 0;
      while (true) {
        ++line;
        const bool more_a = static_cast<bool>(std::getline(want, a));
        const bool more_b = static_cast<bool>(std::getline(got, b));
        if (!more_a && !more_b) break;
        if (!more_a || !more_b || a != b) {
          diff.detail = "line " + std::to_string(line) + ": expected '" + (more_a ? a : "<eof>") +
                        "', got '" + (more_b ? b : "<eof>") + "'";
          break;
        }
      }
      if (diff.detail.empty()) diff.detail = "trailing bytes differ";
    }
    out.push_back(std::move(diff));
  }
  return out;
}

}  // namespace ringcdc
