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

#include "ringcdc/ring.hpp"

#include <algorithm>
#include <set>

namespace ringcdc {

int normalize_index(long long a, int n) {
  long long m = (a - 1) % n;
  if (m < 0) m += n;
  return static_cast<int>(m) + 1;
}

RingTopology::RingTopology(int n, int d) : n_(n), d_(d) {
  if (n < 3) throw InvalidParameter("ring needs n >= 3, got " + std::to_string(n));
  if (d < 1 || d > n / 2) {
    throw InvalidParameter("broadcast distance must satisfy 1 <= d <= n/2, got d=" +
                           std::to_string(d) + " n=" + std::to_string(n));
  }
}

void RingTopology::check_node(int i) const {
  if (i < 1 || i > n_) {
    throw InvalidParameter("node id " + std::to_string(i) + " outside [1, " +
                           std::to_string(n_) + "]");
  }
}

int RingTopology::distance(int a, int b) const {
  check_node(a);
  check_node(b);
  int fwd = ((a - b) % n_ + n_) % n_;
  int back = ((b - a) % n_ + n_) % n_;
  return std::min(fwd, back);
}

std::vector<int> RingTopology::neighbors(int i) const {
  check_node(i);
  std::set<int> out;
  for (int k = 1; k <= d_; ++k) {
    out.insert(normalize(i - k));
    out.insert(normalize(i + k));
  }
  out.erase(i);
  return {out.begin(), out.end()};
}

int ring_distance(int a, int b, const RingTopology& topo) { return topo.distance(a, b); }

std::vector<int> neighbors(int i, const RingTopology& topo) { return topo.neighbors(i); }

std::string placement_name(PlacementKind kind) {
  return kind == PlacementKind::kCyclic ? "cyclic" : "appendix-c";
}

PlacementKind parse_placement(const std::string& name) {
  if (name == "cyclic") return PlacementKind::kCyclic;
  if (name == "appendix-c") return PlacementKind::kAppendixC;
  throw InvalidParameter("unknown placement '" + name + "'");
}

Placement::Placement(int n, std::vector<std::vector<int>> cached)
    : n_(n), cached_(std::move(cached)) {
  if (n < 1 || static_cast<int>(cached_.size()) != n) {
    throw InvalidParameter("placement needs one file list per node");
  }
  mask_.assign(n, std::vector<char>(n + 1, 0));
  std::vector<char> covered(n + 1, 0);
  for (int node = 1; node <= n; ++node) {
    auto& files = cached_[node - 1];
    std::sort(files.begin(), files.end());
    files.erase(std::unique(files.begin(), files.end()), files.end());
    for (int f : files) {
      if (f < 1 || f > n) throw InvalidParameter("file id out of range in placement");
      mask_[node - 1][f] = 1;
      covered[f] = 1;
    }
  }
  for (int f = 1; f <= n; ++f) {
    if (!covered[f]) {
      throw InvalidParameter("file w" + std::to_string(f) + " is cached nowhere");
    }
  }
}

const std::vector<int>& Placement::files(int node) const {
  if (node < 1 || node > n_) throw InvalidParameter("node id out of range");
  return cached_[node - 1];
}

bool Placement::caches(int node, int file) const {
  if (node < 1 || node > n_ || file < 1 || file > n_) return false;
  return mask_[node - 1][file] != 0;
}

std::vector<int> Placement::holders(int file) const {
  std::vector<int> out;
  for (int node = 1; node <= n_; ++node) {
    if (caches(node, file)) out.push_back(node);
  }
  return out;
}

Rational Placement::load() const {
  std::int64_t total = 0;
  for (const auto& files : cached_) total += static_cast<std::int64_t>(files.size());
  return Rational(total, n_);
}

int Placement::uniform_size() const {
  std::size_t size = cached_.front().size();
  for (const auto& files : cached_) {
    if (files.size() != size) return 0;
  }
  return static_cast<int>(size);
}

Placement cyclic_placement(int n, int r) {
  if (n < 1 || r < 1 || r > n) {
    throw InvalidParameter("cyclic placement needs 1 <= r <= n, got r=" + std::to_string(r) +
                           " n=" + std::to_string(n));
  }
  std::vector<std::vector<int>> cached(n);
  for (int i = 1; i <= n; ++i) {
    for (int k = 0; k < r; ++k) cached[i - 1].push_back(normalize_index(i + k, n));
  }
  return Placement(n, std::move(cached));
}

Placement appendix_c_placement(int n, int r) {
  if (n < 1 || r > n || 2 * r < n) {
    throw InvalidParameter("appendix-c placement needs ceil(n/2) <= r <= n, got r=" +
                           std::to_string(r) + " n=" + std::to_string(n));
  }
  const int q = (n + 3) / 4;
  std::vector<int> offsets;
  std::vector<char> seen(n, 0);
  for (int phase = 0; phase < 4 && static_cast<int>(offsets.size()) < r; ++phase) {
    for (int t = 0; t < q && static_cast<int>(offsets.size()) < r; ++t) {
      int off = (phase + 4 * t) % n;
      if (seen[off]) continue;
      seen[off] = 1;
      offsets.push_back(off);
    }
  }
  std::vector<std::vector<int>> cached(n);
  for (int i = 1; i <= n; ++i) {
    for (int off : offsets) cached[i - 1].push_back(normalize_index(i + off, n));
  }
  return Placement(n, std::move(cached));
}

Placement make_placement(PlacementKind kind, int n, int r) {
  return kind == PlacementKind::kCyclic ? cyclic_placement(n, r) : appendix_c_placement(n, r);
}

}  // namespace ringcdc
