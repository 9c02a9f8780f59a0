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

#ifndef RINGCDC_SIM_HPP_
#define RINGCDC_SIM_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringcdc/packet.hpp"
#include "ringcdc/rational.hpp"
#include "ringcdc/ring.hpp"

namespace ringcdc {

// One planned broadcast. components lists the summands in flow order
// (clockwise first); coinciding components are sent once.
struct TransmissionIntent {
  int tick = 1;
  int round = 0;
  int step = 0;
  int sender = 1;
  std::vector<IvLabel> components;
};

// Cache-update hook, applied after all decoding of its tick.
//   kDelete: node forgets label.
//   kPurgeRound: every node forgets what it decoded during `round` unless the
//   label is mapped or required, and drops that round's pending packets.
struct CacheUpdate {
  enum class Kind { kDelete, kPurgeRound };
  Kind kind = Kind::kDelete;
  int tick = 1;
  int node = 0;
  IvLabel label;
  int round = 0;
};

struct Schedule {
  Flavor flavor = Flavor::kAllGather;
  std::vector<TransmissionIntent> transmissions;  // ticks non-decreasing
  std::vector<CacheUpdate> cache_updates;
};

struct TransmissionRecord {
  int tick = 1;
  int round = 0;
  int step = 0;
  int sender = 1;
  std::vector<IvLabel> components;  // distinct summands in flow order
  Packet packet;
  Rational size_units;
  std::vector<int> receivers;
};

using Ledger = std::vector<TransmissionRecord>;

// Labels each node must hold at the end, sorted.
struct Requirement {
  Flavor flavor = Flavor::kAllGather;
  std::vector<std::vector<IvLabel>> per_node;  // index 0 is node 1

  static Requirement all_gather(int n);
  static Requirement all_to_all(int n);
  static Requirement for_flavor(Flavor flavor, int n);
};

// Labels a node can compute from its own cached files.
std::vector<IvLabel> mapped_labels(Flavor flavor, const Placement& placement, int node);

struct NclReport {
  Rational total_units;
  Rational ncl;
  int ticks = 0;
  std::vector<Rational> per_node_units;  // index 0 is node 1
  bool complete = false;
  std::optional<std::string> failure;
};

struct DecodeEvent {
  int tick = 0;
  int round = 0;
  IvLabel label;
};

struct NodeState {
  int node = 0;
  KnowledgeSet known;
  std::vector<DecodeEvent> decoded;    // successful peels in order
  std::vector<IvLabel> deleted;        // audit trail of cache deletions
};

class SimulationError : public std::runtime_error {
 public:
  enum class Kind { kEncodeFromUnknown, kDeletedLabelNeeded, kPayloadMismatch, kMalformedSchedule };

  SimulationError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

std::string error_kind_name(SimulationError::Kind kind);

struct SimOptions {
  PacketConfig packets;
  bool verify_payloads = true;
};

struct RunResult {
  NclReport report;
  Ledger ledger;
  std::vector<NodeState> nodes;  // index 0 is node 1
};

// Tick-synchronous broadcast run. Throws SimulationError on causality
// violations; completeness is reported, not thrown.
RunResult run_schedule(const RingTopology& topo, const Placement& placement,
                       const Schedule& schedule, const Requirement& requirement,
                       const SimOptions& options = {});

struct OracleResult {
  bool met = false;
  std::vector<std::vector<IvLabel>> deficit;  // per node, sorted
  std::vector<KnowledgeSet> closure;          // per node
};

// Fixed-point peeling over each node's full reception multiset, ignoring
// ordering and deletions. Receivers are recomputed from the topology.
OracleResult closure_oracle(const RingTopology& topo, const Placement& placement,
                            const Ledger& ledger, const Requirement& requirement);

Rational ncl_of(const Ledger& ledger, int n);

}  // namespace ringcdc

#endif  // RINGCDC_SIM_HPP_
