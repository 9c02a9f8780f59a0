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

#ifndef RINGCDC_PACKET_HPP_
#define RINGCDC_PACKET_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <variant>
#include <vector>

#include "ringcdc/rational.hpp"

namespace ringcdc {

enum class Flavor : std::uint8_t { kAllGather, kAllToAll };

enum class Half : std::uint8_t { kFull, kFirst, kSecond };

std::string flavor_name(Flavor flavor);
Flavor parse_flavor(const std::string& name);

// V_source (all-gather) or v_source^dest (all-to-all), optionally one half.
struct IvLabel {
  Flavor flavor = Flavor::kAllGather;
  int source = 0;
  int dest = 0;  // 0 for all-gather labels
  Half half = Half::kFull;

  static IvLabel all_gather(int source);
  static IvLabel all_to_all(int source, int dest);

  IvLabel with_half(Half h) const;
  IvLabel full() const { return with_half(Half::kFull); }
  bool is_half() const { return half != Half::kFull; }

  // "V3", "v3^8", "v3^8:h1".
  std::string to_string() const;
  static IvLabel parse(std::string_view text);

  std::uint64_t key() const;

  auto operator<=>(const IvLabel&) const = default;
};

struct IvLabelHash {
  std::size_t operator()(const IvLabel& l) const noexcept {
    return std::hash<std::uint64_t>{}(l.key());
  }
};

using Bytes = std::vector<std::uint8_t>;

struct PacketConfig {
  std::size_t payload_bytes = 64;
  std::uint64_t seed = 0;
};

class FlavorMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Size of a label's payload under cfg: B, ceil(B/2) or floor(B/2).
std::size_t payload_size(const IvLabel& label, const PacketConfig& cfg);

// Synthetic IV contents. Half labels are slices of the full payload.
Bytes generate_payload(const IvLabel& label, const PacketConfig& cfg);

// A GF(2) sum of labeled IVs. Labels are kept sorted and unique; the size in
// packet units is 1 if any summand is a full IV, 1/2 if all are halves, and 0
// for the empty packet.
class Packet {
 public:
  Packet() = default;
  // block_bytes is the full-IV payload size the packet was built with.
  Packet(std::vector<IvLabel> labels, Bytes payload, std::size_t block_bytes);

  const std::vector<IvLabel>& labels() const { return labels_; }
  const Bytes& payload() const { return payload_; }
  std::size_t block_bytes() const { return block_bytes_; }
  Rational size_units() const;
  bool empty() const { return labels_.empty(); }
  bool contains(const IvLabel& label) const;

  friend Packet operator^(const Packet& p, const Packet& q);
  friend bool operator==(const Packet& p, const Packet& q) = default;

  std::string to_string() const;

 private:
  std::vector<IvLabel> labels_;
  Bytes payload_;
  std::size_t block_bytes_ = 0;
};

Packet make_iv(const IvLabel& label, const PacketConfig& cfg);
Packet xor_packets(const Packet& p, const Packet& q);

Rational size_units_of(const std::vector<IvLabel>& labels);

// XORs src into dst, zero-extending dst as needed.
void xor_into(Bytes& dst, const Bytes& src);

// Set of known labels. A half counts as known when its full label is known;
// inserting the second of two complementary halves stores the full label.
class KnowledgeSet {
 public:
  bool contains(const IvLabel& label) const;

  // Returns true if the insertion added information.
  bool insert(const IvLabel& label);

  // Removes the label; erasing a full label also forgets its halves.
  bool erase(const IvLabel& label);

  std::vector<IvLabel> sorted() const;
  std::size_t size() const { return set_.size(); }

 private:
  std::unordered_set<IvLabel, IvLabelHash> set_;
};

struct NotDecodable {
  std::size_t unknown_count = 0;
};

using PeelResult = std::variant<IvLabel, NotDecodable>;

PeelResult peel(const Packet& p, const KnowledgeSet& known);

// Label-only variant used by the engine and the closure oracle.
PeelResult peel_labels(const std::vector<IvLabel>& labels, const KnowledgeSet& known);

using PayloadLookup = std::function<Bytes(const IvLabel&)>;

// Cancels every label except target out of p's payload.
Bytes reconstruct_payload(const Packet& p, const IvLabel& target, const PayloadLookup& lookup,
                          const PacketConfig& cfg);

}  // namespace ringcdc

#endif  // RINGCDC_PACKET_HPP_
