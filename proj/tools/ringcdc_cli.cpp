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

// Command-line front end for the ring coded-computing simulator.
//
//   ringcdc run --problem alltoall --n 8 --r 3 --d 1 --check-oracle
//   ringcdc sweep --problem allgather --n 50 --d 1,2 --output allgather_n50.csv
//   ringcdc goldens
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ringcdc/baselines.hpp"
#include "ringcdc/driver.hpp"
#include "ringcdc/goldens.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct RunFlags {
  std::string problem = "allgather";
  int n = 8;
  int r = 1;
  int d = 1;
  std::string placement = "cyclic";
  std::string scheme = "coded";
  bool check_oracle = false;
  std::string ledger_path;
  std::size_t payload_bytes = 64;
  std::uint64_t seed = 0;
};

void add_triple(CLI::App* cmd, RunFlags& f) {
  cmd->add_option("--n", f.n, "Number of nodes")->required();
  cmd->add_option("--r", f.r, "Computation load")->required();
  cmd->add_option("--d", f.d, "Broadcast distance")->required();
}

void add_run_extras(CLI::App* cmd, RunFlags& f) {
  cmd->add_flag("--check-oracle", f.check_oracle, "Certify the ledger with the closure oracle");
  cmd->add_option("--emit-ledger", f.ledger_path, "Write the transmission ledger as CSV");
  cmd->add_option("--payload-bytes", f.payload_bytes, "Synthetic IV size in bytes")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "Seed for synthetic payloads");
}

int do_run(const RunFlags& f) {
  ringcdc::RunConfig c;
  c.problem = ringcdc::parse_flavor(f.problem);
  c.n = f.n;
  c.r = f.r;
  c.d = f.d;
  c.placement = ringcdc::parse_placement(f.placement);
  c.scheme = ringcdc::parse_scheme(f.scheme);
  c.check_oracle = f.check_oracle;
  c.options.packets.payload_bytes = f.payload_bytes;
  c.options.packets.seed = f.seed;
  const ringcdc::RunOutcome o = ringcdc::run_config(c);
  if (!f.ledger_path.empty()) {
    std::ofstream out(f.ledger_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << f.ledger_path << "\n";
      return kUsage;
    }
    out << ringcdc::ledger_csv(o.result.ledger);
  }
  std::cout << ringcdc::report_json(o).dump(2) << "\n";
  return o.ok() ? kOk : kVerifyFailed;
}

std::vector<int> expand_ns(const std::vector<int>& ns, int n_min, int n_max) {
  std::vector<int> out = ns;
  if (n_min > 0 && n_max >= n_min) {
    for (int n = n_min; n <= n_max; ++n) out.push_back(n);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coded distributed computing on ring networks"};
  app.require_subcommand(1);

  RunFlags run_flags;
  auto* run = app.add_subcommand("run", "Build, simulate and report one configuration");
  run->add_option("--problem", run_flags.problem, "allgather or alltoall")
      ->check(CLI::IsMember({"allgather", "alltoall"}))
      ->required();
  add_triple(run, run_flags);
  run->add_option("--placement", run_flags.placement, "cyclic or appendix-c")
      ->check(CLI::IsMember({"cyclic", "appendix-c"}));
  run->add_option("--scheme", run_flags.scheme, "coded, uncoded or fragouli")
      ->check(CLI::IsMember({"coded", "uncoded", "fragouli"}));
  add_run_extras(run, run_flags);

  RunFlags ag_flags;
  ag_flags.problem = "allgather";
  auto* allgather = app.add_subcommand("allgather", "Run the coded all-gather scheme");
  add_triple(allgather, ag_flags);
  add_run_extras(allgather, ag_flags);

  RunFlags aa_flags;
  aa_flags.problem = "alltoall";
  auto* alltoall = app.add_subcommand("alltoall", "Run the coded all-to-all scheme");
  add_triple(alltoall, aa_flags);
  alltoall->add_option("--placement", aa_flags.placement, "cyclic or appendix-c")
      ->check(CLI::IsMember({"cyclic", "appendix-c"}));
  add_run_extras(alltoall, aa_flags);

  RunFlags base_flags;
  auto* baseline = app.add_subcommand("baseline", "Run a reference scheme");
  baseline->add_option("--scheme", base_flags.scheme, "fragouli or uncoded")
      ->check(CLI::IsMember({"fragouli", "uncoded"}))
      ->required();
  baseline->add_option("--problem", base_flags.problem, "allgather or alltoall")
      ->check(CLI::IsMember({"allgather", "alltoall"}));
  baseline->add_option("--n", base_flags.n, "Number of nodes")->required();
  baseline->add_option("--r", base_flags.r, "Computation load");
  baseline->add_option("--d", base_flags.d, "Broadcast distance");
  baseline->add_option("--placement", base_flags.placement, "cyclic or appendix-c")
      ->check(CLI::IsMember({"cyclic", "appendix-c"}));
  add_run_extras(baseline, base_flags);

  RunFlags bound_flags;
  auto* bounds = app.add_subcommand("bounds", "Print every applicable closed form");
  bounds->add_option("--problem", bound_flags.problem, "allgather or alltoall")
      ->check(CLI::IsMember({"allgather", "alltoall"}))
      ->required();
  add_triple(bounds, bound_flags);
  bounds->add_option("--placement", bound_flags.placement, "cyclic or appendix-c")
      ->check(CLI::IsMember({"cyclic", "appendix-c"}));

  std::string sweep_problem = "allgather";
  std::vector<int> sweep_ns;
  std::vector<int> sweep_ds{1};
  int n_min = 0, n_max = 0, r_min = 1, r_max = 0;
  std::string sweep_placement = "cyclic";
  std::string sweep_output;
  unsigned sweep_threads = 0;
  bool sweep_no_oracle = false;
  auto* sweep = app.add_subcommand("sweep", "Simulate a parameter grid and emit CSV");
  sweep->add_option("--problem", sweep_problem, "allgather or alltoall")
      ->check(CLI::IsMember({"allgather", "alltoall"}))
      ->required();
  sweep->add_option("--n", sweep_ns, "Node counts (comma separated)")->delimiter(',');
  sweep->add_option("--n-min", n_min, "Smallest n of a contiguous range");
  sweep->add_option("--n-max", n_max, "Largest n of a contiguous range");
  sweep->add_option("--r-min", r_min, "Smallest r");
  sweep->add_option("--r-max", r_max, "Largest r (default n)");
  sweep->add_option("--d", sweep_ds, "Broadcast distances (comma separated)")->delimiter(',');
  sweep->add_option("--placement", sweep_placement, "cyclic or appendix-c")
      ->check(CLI::IsMember({"cyclic", "appendix-c"}));
  sweep->add_option("--output", sweep_output, "CSV path (default stdout)");
  sweep->add_option("--threads", sweep_threads, "Worker threads (default: all cores)");
  sweep->add_flag("--no-oracle", sweep_no_oracle, "Skip closure-oracle certification");

  std::string golden_write_dir;
  auto* goldens = app.add_subcommand("goldens", "Replay the worked examples against golden files");
  goldens->add_option("--write", golden_write_dir, "Also write regenerated files to this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*run) return do_run(run_flags);
    if (*allgather) return do_run(ag_flags);
    if (*alltoall) return do_run(aa_flags);
    if (*baseline) {
      if (base_flags.scheme == "fragouli") {
        base_flags.problem = "allgather";
        base_flags.r = 1;
        base_flags.d = 1;
      }
      return do_run(base_flags);
    }
    if (*bounds) {
      std::cout << ringcdc::bounds_json(ringcdc::parse_flavor(bound_flags.problem), bound_flags.n,
                                        bound_flags.r, bound_flags.d,
                                        ringcdc::parse_placement(bound_flags.placement))
                       .dump(2)
                << "\n";
      return kOk;
    }
    if (*sweep) {
      ringcdc::SweepSpec spec;
      spec.problem = ringcdc::parse_flavor(sweep_problem);
      spec.ns = expand_ns(sweep_ns, n_min, n_max);
      spec.r_min = r_min;
      spec.r_max = r_max;
      spec.ds = sweep_ds;
      spec.placement = ringcdc::parse_placement(sweep_placement);
      spec.check_oracle = !sweep_no_oracle;
      spec.threads = sweep_threads;
      const auto rows = ringcdc::run_sweep(spec);
      const std::string csv = ringcdc::sweep_csv(rows);
      if (sweep_output.empty()) {
        std::cout << csv;
      } else {
        std::ofstream out(sweep_output, std::ios::binary);
        if (!out) {
          std::cerr << "cannot write " << sweep_output << "\n";
          return kUsage;
        }
        out << csv;
      }
      for (const auto& row : rows) {
        if (!row.complete) return kVerifyFailed;
      }
      return kOk;
    }
    if (*goldens) {
      bool all = true;
      for (const auto& diff : ringcdc::check_goldens()) {
        std::cout << (diff.match ? "MATCH  " : "DIFFER ") << diff.name;
        if (!diff.match) std::cout << "  " << diff.detail;
        std::cout << "\n";
        all = all && diff.match;
        if (!golden_write_dir.empty()) {
          std::ofstream out(golden_write_dir + "/" + diff.name, std::ios::binary);
          out << ringcdc::render_golden(diff.name);
        }
      }
      return all ? kOk : kVerifyFailed;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kUsage;
}
