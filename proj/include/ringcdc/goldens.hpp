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

#ifndef RINGCDC_GOLDENS_HPP_
#define RINGCDC_GOLDENS_HPP_

#include <string>
#include <vector>

namespace ringcdc {

struct GoldenFile {
  std::string name;
  std::string content;
};

// Reference files compiled into the library from data/golden.
const std::vector<GoldenFile>& embedded_goldens();

// Regenerates a golden file from a fresh run. Known names:
//   decode_order_allgather_n8_r2_d3.txt        round-1 decoding batches
//   broadcasts_alltoall_n8_r3_d1.txt      per-step broadcasts and receptions
//   placement_appendix_c_n8_r4.txt           appendix-c placement matrix
//   appendix_c_alltoall_n8_r4_d1.txt     appendix-c broadcasts and decodes
//   ledger_alltoall_n8_r3_d1.csv         full ledger export
//   report_allgather_n8_r2_d3.json       report export
std::string render_golden(const std::string& name);

struct GoldenDiff {
  std::string name;
  bool match = false;
  std::string detail;  // first differing line, empty on match
};

std::vector<GoldenDiff> check_goldens();

}  // namespace ringcdc

#endif  // RINGCDC_GOLDENS_HPP_
