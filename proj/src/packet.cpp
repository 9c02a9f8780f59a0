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

#include "ringcdc/packet.hpp"

#include <algorithm>
#include <charconv>

namespace ringcdc {
namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
    throw std::invalid_argument("malformed label '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

std::string flavor_name(Flavor flavor) {
  return flavor == Flavor::kAllGather ? "allgather" : "alltoall";
}

Flavor parse_flavor(const std::string& name) {
  if (name == "allgather") return Flavor::kAllGather;
  if (name == "alltoall") return Flavor::kAllToAll;
  throw std::invalid_argument("unknown problem '" + name + "'");
}

IvLabel IvLabel::all_gather(int source) { return {Flavor::kAllGather, source, 0, Half::kFull}; }

IvLabel IvLabel::all_to_all(int source, int dest) {
  return {Flavor::kAllToAll, source, dest, Half::kFull};
}

IvLabel IvLabel::with_half(Half h) const {
  IvLabel out = *this;
  out.half = h;
  return out;
}

std::string IvLabel::to_string() const {
  std::string out;
  if (flavor == Flavor::kAllGather) {
    out = "V" + std::to_string(source);
  } else {
    out = "v" + std::to_string(source) + "^" + std::to_string(dest);
  }
  if (half == Half::kFirst) out += ":h1";
  if (half == Half::kSecond) out += ":h2";
  return out;
}

IvLabel IvLabel::parse(std::string_view text) {
  std::string_view body = text;
  Half half = Half::kFull;
  if (auto colon = body.find(':'); colon != std::string_view::npos) {
    std::string_view suffix = body.substr(colon + 1);
    if (suffix == "h1") {
      half = Half::kFirst;
    } else if (suffix == "h2") {
      half = Half::kSecond;
    } else {
      throw std::invalid_argument("malformed label '" + std::string(text) + "'");
    }
    body = body.substr(0, colon);
  }
  if (body.size() < 2) throw std::invalid_argument("malformed label '" + std::string(text) + "'");
  IvLabel out;
  if (body[0] == 'V') {
    out = all_gather(parse_int(body.substr(1), text));
  } else if (body[0] == 'v') {
    auto caret = body.find('^');
    if (caret == std::string_view::npos) {
      throw std::invalid_argument("malformed label '" + std::string(text) + "'");
    }
    out = all_to_all(parse_int(body.substr(1, caret - 1), text),
                     parse_int(body.substr(caret + 1), text));
  } else {
    throw std::invalid_argument("malformed label '" + std::string(text) + "'");
  }
  return out.with_half(half);
}

std::uint64_t IvLabel::key() const {
  return (static_cast<std::uint64_t>(flavor) << 62) | (static_cast<std::uint64_t>(half) << 60) |
         (static_cast<std::uint64_t>(source) << 30) | static_cast<std::uint64_t>(dest);
}

std::size_t payload_size(const IvLabel& label, const PacketConfig& cfg) {
  switch (label.half) {
    case Half::kFirst:
      return (cfg.payload_bytes + 1) / 2;
    case Half::kSecond:
      return cfg.payload_bytes / 2;
    case Half::kFull:
      break;
  }
  return cfg.payload_bytes;
}

Bytes generate_payload(const IvLabel& label, const PacketConfig& cfg) {
  std::uint64_t state = cfg.seed ^ (label.full().key() * 0xD1B54A32D192ED03ULL);
  Bytes full(cfg.payload_bytes);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < full.size(); ++i) {
    if (i % 8 == 0) word = splitmix64(state);
    full[i] = static_cast<std::uint8_t>(word >> (8 * (i % 8)));
  }
  const std::size_t first = (cfg.payload_bytes + 1) / 2;
  if (label.half == Half::kFirst) return Bytes(full.begin(), full.begin() + first);
  if (label.half == Half::kSecond) return Bytes(full.begin() + first, full.end());
  return full;
}

void xor_into(Bytes& dst, const Bytes& src) {
  if (dst.size() < src.size()) dst.resize(src.size(), 0);
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] ^= src[i];
}

Rational size_units_of(const std::vector<IvLabel>& labels) {
  if (labels.empty()) return Rational(0);
  for (const auto& l : labels) {
    if (!l.is_half()) return Rational(1);
  }
  return Rational(1, 2);
}

Packet::Packet(std::vector<IvLabel> labels, Bytes payload, std::size_t block_bytes)
    : labels_(std::move(labels)), payload_(std::move(payload)), block_bytes_(block_bytes) {
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
  for (std::size_t i = 1; i < labels_.size(); ++i) {
    if (labels_[i].flavor != labels_[0].flavor) {
      throw FlavorMismatch("packet mixes all-gather and all-to-all labels");
    }
  }
  if (labels_.empty()) {
    payload_.clear();
    block_bytes_ = 0;
    return;
  }
  PacketConfig cfg{block_bytes_, 0};
  std::size_t len = 0;
  for (const auto& l : labels_) len = std::max(len, payload_size(l, cfg));
  payload_.resize(len, 0);
}

Rational Packet::size_units() const { return size_units_of(labels_); }

bool Packet::contains(const IvLabel& label) const {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

Packet operator^(const Packet& p, const Packet& q) {
  if (p.empty()) return q;
  if (q.empty()) return p;
  if (p.labels_.front().flavor != q.labels_.front().flavor) {
    throw FlavorMismatch("cannot XOR all-gather and all-to-all packets");
  }
  if (p.block_bytes_ != q.block_bytes_) {
    throw std::invalid_argument("cannot XOR packets built with different payload sizes");
  }
  std::vector<IvLabel> labels;
  std::set_symmetric_difference(p.labels_.begin(), p.labels_.end(), q.labels_.begin(),
                                q.labels_.end(), std::back_inserter(labels));
  Bytes payload = p.payload_;
  xor_into(payload, q.payload_);
  return Packet(std::move(labels), std::move(payload), p.block_bytes_);
}

Packet xor_packets(const Packet& p, const Packet& q) { return p ^ q; }

std::string Packet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) out += "+";
    out += labels_[i].to_string();
  }
  return out;
}

Packet make_iv(const IvLabel& label, const PacketConfig& cfg) {
  if (cfg.payload_bytes == 0) throw std::invalid_argument("payload_bytes must be positive");
  return Packet({label}, generate_payload(label, cfg), cfg.payload_bytes);
}

bool KnowledgeSet::contains(const IvLabel& label) const {
  if (set_.count(label)) return true;
  return label.is_half() && set_.count(label.full()) > 0;
}

bool KnowledgeSet::insert(const IvLabel& label) {
  if (contains(label)) return false;
  if (!label.is_half()) {
    set_.erase(label.with_half(Half::kFirst));
    set_.erase(label.with_half(Half::kSecond));
    set_.insert(label);
    return true;
  }
  const IvLabel other = label.with_half(label.half == Half::kFirst ? Half::kSecond : Half::kFirst);
  if (set_.count(other)) {
    set_.erase(other);
    set_.insert(label.full());
  } else {
    set_.insert(label);
  }
  return true;
}

bool KnowledgeSet::erase(const IvLabel& label) {
  if (!label.is_half()) {
    bool removed = set_.erase(label) > 0;
    removed |= set_.erase(label.with_half(Half::kFirst)) > 0;
    removed |= set_.erase(label.with_half(Half::kSecond)) > 0;
    return removed;
  }
  if (set_.erase(label)) return true;
  if (set_.count(label.full())) {
    // Keep the complementary half only.
    set_.erase(label.full());
    set_.insert(label.with_half(label.half == Half::kFirst ? Half::kSecond : Half::kFirst));
    return true;
  }
  return false;
}

std::vector<IvLabel> KnowledgeSet::sorted() const {
  std::vector<IvLabel> out(set_.begin(), set_.end());
  std::sort(out.begin(), out.end());
  return out;
}

PeelResult peel_labels(const std::vector<IvLabel>& labels, const KnowledgeSet& known) {
  const IvLabel* unknown = nullptr;
  std::size_t count = 0;
  for (const auto& l : labels) {
    if (!known.contains(l)) {
      ++count;
      unknown = &l;
    }
  }
  if (count == 1) return *unknown;
  return NotDecodable{count};
}

PeelResult peel(const Packet& p, const KnowledgeSet& known) {
  if (p.empty()) throw std::invalid_argument("cannot peel an empty packet");
  return peel_labels(p.labels(), known);
}

Bytes reconstruct_payload(const Packet& p, const IvLabel& target, const PayloadLookup& lookup,
                          const PacketConfig& cfg) {
  Bytes out = p.payload();
  for (const auto& l : p.labels()) {
    if (l == target) continue;
    xor_into(out, lookup(l));
  }
  out.resize(payload_size(target, cfg));
  return out;
}

}  // namespace ringcdc
