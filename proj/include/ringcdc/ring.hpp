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

#ifndef RINGCDC_RING_HPP_
#define RINGCDC_RING_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "ringcdc/rational.hpp"

namespace ringcdc {

// Raised for any out-of-range construction parameter (n, r, d, node ids).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Maps any integer onto the 1-based cycle [1, n].
int normalize_index(long long a, int n);

// N nodes on a circle; each broadcast reaches every node within d hops.
class RingTopology {
 public:
  RingTopology(int n, int d);

  int n() const { return n_; }
  int d() const { return d_; }

  int normalize(long long a) const { return normalize_index(a, n_); }

  // Shortest hop count between two nodes.
  int distance(int a, int b) const;

  // Nodes within distance d of i, excluding i, in ascending order.
  std::vector<int> neighbors(int i) const;

 private:
  void check_node(int i) const;

  int n_;
  int d_;
};

int ring_distance(int a, int b, const RingTopology& topo);
std::vector<int> neighbors(int i, const RingTopology& topo);

enum class PlacementKind { kCyclic, kAppendixC };

std::string placement_name(PlacementKind kind);
PlacementKind parse_placement(const std::string& name);

// Per-node cached file sets. Node and file ids are both 1-based.
class Placement {
 public:
  Placement(int n, std::vector<std::vector<int>> cached);

  int n() const { return n_; }
  const std::vector<int>& files(int node) const;
  bool caches(int node, int file) const;

  // Nodes holding a copy of the file, ascending.
  std::vector<int> holders(int file) const;

  // Average number of copies per file, (sum |M_i|) / n.
  Rational load() const;

  // Set when every node caches exactly r files; 0 otherwise.
  int uniform_size() const;

  bool operator==(const Placement& other) const = default;

 private:
  int n_;
  std::vector<std::vector<int>> cached_;  // index 0 is node 1
  std::vector<std::vector<char>> mask_;
};

// M_i = {i, ..., i+r-1} mod n.
Placement cyclic_placement(int n, int r);

// Stride-4 placement for r >= ceil(n/2). Offsets are taken in the order
// 0,4,8,..., 1,5,9,..., 2,6,..., 3,7,... (each progression ceil(n/4) long)
// and the first r distinct ones are kept, so |M_i| = r for every n.
Placement appendix_c_placement(int n, int r);

Placement make_placement(PlacementKind kind, int n, int r);

}  // namespace ringcdc

#endif  // RINGCDC_RING_HPP_
