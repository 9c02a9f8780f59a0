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

#include "ringcdc/sim.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace ringcdc {
namespace {

using LabelSet = std::unordered_set<IvLabel, IvLabelHash>;

struct Pending {
  int round = 0;
  std::size_t record = 0;
};

struct EngineNode {
  NodeState state;
  std::unordered_map<IvLabel, Bytes, IvLabelHash> store;
  LabelSet deleted;
  LabelSet required;
  LabelSet mapped;
  std::vector<Pending> pending;
};

bool is_in(const LabelSet& set, const IvLabel& label) {
  return set.count(label) || (label.is_half() && set.count(label.full()));
}

Bytes lookup_payload(const EngineNode& node, const IvLabel& label, const PacketConfig& cfg) {
  if (auto it = node.store.find(label); it != node.store.end()) return it->second;
  if (label.is_half()) {
    if (auto it = node.store.find(label.full()); it != node.store.end()) {
      const std::size_t first = payload_size(label.with_half(Half::kFirst), cfg);
      if (label.half == Half::kFirst) return Bytes(it->second.begin(), it->second.begin() + first);
      return Bytes(it->second.begin() + first, it->second.end());
    }
  }
  throw SimulationError(SimulationError::Kind::kEncodeFromUnknown,
                        "node " + std::to_string(node.state.node) + " has no payload for " +
                            label.to_string());
}

void learn(EngineNode& node, const IvLabel& label, Bytes payload, bool verify) {
  node.state.known.insert(label);
  node.deleted.erase(label);
  if (!verify) return;
  node.store[label] = std::move(payload);
  if (label.is_half() && node.state.known.contains(label.full()) &&
      !node.store.count(label.full())) {
    auto h1 = node.store.find(label.with_half(Half::kFirst));
    auto h2 = node.store.find(label.with_half(Half::kSecond));
    if (h1 != node.store.end() && h2 != node.store.end()) {
      Bytes full = h1->second;
      full.insert(full.end(), h2->second.begin(), h2->second.end());
      node.store[label.full()] = std::move(full);
    }
  }
}

void forget(EngineNode& node, const IvLabel& label) {
  if (!node.state.known.contains(label)) return;
  node.state.known.erase(label);
  node.store.erase(label);
  if (!label.is_half()) {
    node.store.erase(label.with_half(Half::kFirst));
    node.store.erase(label.with_half(Half::kSecond));
  }
  node.deleted.insert(label);
  node.state.deleted.push_back(label);
}

void check_schedule(const RingTopology& topo, const Schedule& schedule) {
  int last = 0;
  for (const auto& t : schedule.transmissions) {
    if (t.tick < 1 || t.tick < last) {
      throw SimulationError(SimulationError::Kind::kMalformedSchedule,
                            "transmission ticks must be >= 1 and non-decreasing");
    }
    last = t.tick;
    if (t.sender < 1 || t.sender > topo.n()) {
      throw SimulationError(SimulationError::Kind::kMalformedSchedule, "sender out of range");
    }
    if (t.components.empty()) {
      throw SimulationError(SimulationError::Kind::kMalformedSchedule, "empty transmission");
    }
    for (const auto& l : t.components) {
      if (l.flavor != schedule.flavor) {
        throw SimulationError(SimulationError::Kind::kMalformedSchedule,
                              "label " + l.to_string() + " does not match the schedule flavor");
      }
    }
  }
}

std::vector<IvLabel> distinct_in_order(const std::vector<IvLabel>& components) {
  std::vector<IvLabel> out;
  for (const auto& l : components) {
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
  }
  return out;
}

}  // namespace

std::string error_kind_name(SimulationError::Kind kind) {
  switch (kind) {
    case SimulationError::Kind::kEncodeFromUnknown:
      return "EncodeFromUnknown";
    case SimulationError::Kind::kDeletedLabelNeeded:
      return "DeletedLabelNeeded";
    case SimulationError::Kind::kPayloadMismatch:
      return "PayloadMismatch";
    case SimulationError::Kind::kMalformedSchedule:
      break;
  }
  return "MalformedSchedule";
}

Requirement Requirement::all_gather(int n) {
  Requirement req{Flavor::kAllGather, {}};
  std::vector<IvLabel> all;
  for (int f = 1; f <= n; ++f) all.push_back(IvLabel::all_gather(f));
  req.per_node.assign(n, all);
  return req;
}

Requirement Requirement::all_to_all(int n) {
  Requirement req{Flavor::kAllToAll, {}};
  req.per_node.resize(n);
  for (int k = 1; k <= n; ++k) {
    for (int f = 1; f <= n; ++f) req.per_node[k - 1].push_back(IvLabel::all_to_all(f, k));
    std::sort(req.per_node[k - 1].begin(), req.per_node[k - 1].end());
  }
  return req;
}

Requirement Requirement::for_flavor(Flavor flavor, int n) {
  return flavor == Flavor::kAllGather ? all_gather(n) : all_to_all(n);
}

std::vector<IvLabel> mapped_labels(Flavor flavor, const Placement& placement, int node) {
  std::vector<IvLabel> out;
  for (int f : placement.files(node)) {
    if (flavor == Flavor::kAllGather) {
      out.push_back(IvLabel::all_gather(f));
    } else {
      for (int k = 1; k <= placement.n(); ++k) out.push_back(IvLabel::all_to_all(f, k));
    }
  }
  return out;
}

RunResult run_schedule(const RingTopology& topo, const Placement& placement,
                       const Schedule& schedule, const Requirement& requirement,
                       const SimOptions& options) {
  const int n = topo.n();
  if (placement.n() != n || static_cast<int>(requirement.per_node.size()) != n) {
    throw SimulationError(SimulationError::Kind::kMalformedSchedule,
                          "topology, placement and requirement disagree on n");
  }
  check_schedule(topo, schedule);
  const PacketConfig& cfg = options.packets;
  const bool verify = options.verify_payloads;

  std::vector<EngineNode> nodes(n);
  for (int i = 1; i <= n; ++i) {
    EngineNode& node = nodes[i - 1];
    node.state.node = i;
    for (const auto& l : mapped_labels(schedule.flavor, placement, i)) {
      node.mapped.insert(l);
      learn(node, l, verify ? generate_payload(l, cfg) : Bytes{}, verify);
    }
    for (const auto& l : requirement.per_node[i - 1]) node.required.insert(l);
  }

  std::vector<CacheUpdate> updates = schedule.cache_updates;
  std::stable_sort(updates.begin(), updates.end(),
                   [](const CacheUpdate& a, const CacheUpdate& b) { return a.tick < b.tick; });
  std::set<int> ticks;
  for (const auto& t : schedule.transmissions) ticks.insert(t.tick);
  for (const auto& u : updates) ticks.insert(u.tick);

  RunResult result;
  Ledger& ledger = result.ledger;
  std::size_t next_tx = 0;
  std::size_t next_update = 0;

  for (int tick : ticks) {
    // Encode everything against the pre-tick state, then deliver.
    const std::size_t first_record = ledger.size();
    while (next_tx < schedule.transmissions.size() &&
           schedule.transmissions[next_tx].tick == tick) {
      const TransmissionIntent& intent = schedule.transmissions[next_tx++];
      EngineNode& sender = nodes[intent.sender - 1];
      TransmissionRecord rec;
      rec.tick = intent.tick;
      rec.round = intent.round;
      rec.step = intent.step;
      rec.sender = intent.sender;
      rec.components = distinct_in_order(intent.components);
      Bytes payload;
      for (const auto& l : rec.components) {
        if (!sender.state.known.contains(l)) {
          const bool was_deleted = is_in(sender.deleted, l);
          throw SimulationError(
              was_deleted ? SimulationError::Kind::kDeletedLabelNeeded
                          : SimulationError::Kind::kEncodeFromUnknown,
              "tick " + std::to_string(tick) + ": node " + std::to_string(intent.sender) +
                  " cannot encode " + l.to_string() +
                  (was_deleted ? " (deleted by a cache update)" : ""));
        }
        if (verify) xor_into(payload, lookup_payload(sender, l, cfg));
      }
      rec.packet = Packet(rec.components, std::move(payload), cfg.payload_bytes);
      rec.size_units = rec.packet.size_units();
      rec.receivers = topo.neighbors(intent.sender);
      ledger.push_back(std::move(rec));
    }
    for (std::size_t idx = first_record; idx < ledger.size(); ++idx) {
      for (int v : ledger[idx].receivers) nodes[v - 1].pending.push_back({ledger[idx].round, idx});
    }

    for (auto& node : nodes) {
      bool progress = true;
      while (progress && !node.pending.empty()) {
        progress = false;
        std::vector<Pending> keep;
        for (const Pending& p : node.pending) {
          const Packet& packet = ledger[p.record].packet;
          PeelResult res = peel_labels(packet.labels(), node.state.known);
          if (const auto* label = std::get_if<IvLabel>(&res)) {
            Bytes value;
            if (verify) {
              value = reconstruct_payload(
                  packet, *label,
                  [&](const IvLabel& l) { return lookup_payload(node, l, cfg); }, cfg);
              if (value != generate_payload(*label, cfg)) {
                throw SimulationError(SimulationError::Kind::kPayloadMismatch,
                                      "node " + std::to_string(node.state.node) +
                                          " reconstructed a wrong payload for " +
                                          label->to_string());
              }
            }
            learn(node, *label, std::move(value), verify);
            node.state.decoded.push_back({tick, p.round, *label});
            progress = true;
          } else if (std::get<NotDecodable>(res).unknown_count > 0) {
            keep.push_back(p);
          }
        }
        node.pending = std::move(keep);
      }
    }

    while (next_update < updates.size() && updates[next_update].tick == tick) {
      const CacheUpdate& u = updates[next_update++];
      if (u.kind == CacheUpdate::Kind::kDelete) {
        if (u.node < 1 || u.node > n) {
          throw SimulationError(SimulationError::Kind::kMalformedSchedule,
                                "cache update for an unknown node");
        }
        forget(nodes[u.node - 1], u.label);
        continue;
      }
      for (auto& node : nodes) {
        for (const DecodeEvent& ev : node.state.decoded) {
          if (ev.round != u.round) continue;
          if (is_in(node.mapped, ev.label) || is_in(node.required, ev.label)) continue;
          forget(node, ev.label);
        }
        std::erase_if(node.pending, [&](const Pending& p) { return p.round == u.round; });
      }
    }

    for (const auto& node : nodes) {
      for (const Pending& p : node.pending) {
        const Packet& packet = ledger[p.record].packet;
        std::size_t unknown = 0;
        const IvLabel* lost = nullptr;
        for (const auto& l : packet.labels()) {
          if (node.state.known.contains(l)) continue;
          ++unknown;
          if (is_in(node.deleted, l)) lost = &l;
        }
        if (unknown >= 2 && lost != nullptr) {
          throw SimulationError(SimulationError::Kind::kDeletedLabelNeeded,
                                "tick " + std::to_string(tick) + ": node " +
                                    std::to_string(node.state.node) + " deleted " +
                                    lost->to_string() + " but still needs it to peel " +
                                    packet.to_string());
        }
      }
    }
  }

  NclReport& report = result.report;
  report.per_node_units.assign(n, Rational(0));
  for (const auto& rec : ledger) {
    report.total_units += rec.size_units;
    report.per_node_units[rec.sender - 1] += rec.size_units;
  }
  report.ncl = report.total_units / static_cast<std::int64_t>(n);
  report.ticks = ledger.empty() ? 0 : ledger.back().tick;
  report.complete = true;
  for (const auto& node : nodes) {
    for (const auto& l : requirement.per_node[node.state.node - 1]) {
      if (!node.state.known.contains(l)) {
        report.complete = false;
        report.failure = "node " + std::to_string(node.state.node) + " is missing " + l.to_string();
        break;
      }
    }
    if (!report.complete) break;
  }
  for (auto& node : nodes) result.nodes.push_back(std::move(node.state));
  return result;
}

OracleResult closure_oracle(const RingTopology& topo, const Placement& placement,
                            const Ledger& ledger, const Requirement& requirement) {
  const int n = topo.n();
  const int d = topo.d();
  auto knows = [](const std::set<IvLabel>& s, const IvLabel& l) {
    if (s.count(l)) return true;
    if (l.is_half()) return s.count(l.full()) > 0;
    return s.count(l.with_half(Half::kFirst)) > 0 && s.count(l.with_half(Half::kSecond)) > 0;
  };

  OracleResult out;
  out.met = true;
  out.deficit.resize(n);
  for (int v = 1; v <= n; ++v) {
    std::set<IvLabel> known;
    for (const auto& l : mapped_labels(requirement.flavor, placement, v)) known.insert(l);
    std::vector<const std::vector<IvLabel>*> heard;
    for (const auto& rec : ledger) {
      int gap = std::abs(rec.sender - v) % n;
      gap = std::min(gap, n - gap);
      if (gap >= 1 && gap <= d) heard.push_back(&rec.packet.labels());
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto* labels : heard) {
        const IvLabel* unknown = nullptr;
        int count = 0;
        for (const auto& l : *labels) {
          if (!knows(known, l)) {
            ++count;
            unknown = &l;
          }
        }
        if (count == 1) {
          known.insert(*unknown);
          changed = true;
        }
      }
    }
    KnowledgeSet closure;
    for (const auto& l : known) closure.insert(l);
    for (const auto& l : requirement.per_node[v - 1]) {
      if (!knows(known, l)) out.deficit[v - 1].push_back(l);
    }
    if (!out.deficit[v - 1].empty()) out.met = false;
    out.closure.push_back(std::move(closure));
  }
  return out;
}

Rational ncl_of(const Ledger& ledger, int n) {
  Rational total(0);
  for (const auto& rec : ledger) total += rec.packet.size_units();
  return total / static_cast<std::int64_t>(n);
}

}  // namespace ringcdc
