// Copyright 2026 The Antimagic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef ANTIMAGIC_TOOLS_CLI_HPP_
#define ANTIMAGIC_TOOLS_CLI_HPP_

#include <chrono>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "antimagic/oracle.hpp"
#include "antimagic/spider.hpp"

namespace antimagic::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitMalformed = 1,
  kExitPropertyFailure = 2,
  kExitInternal = 3,
  kExitProvenNone = 4,
  kExitBudget = 5,
};

// Largest instance the oracle subcommand will attempt.
inline constexpr int kOracleMaxEdges = 12;

struct SweepOptions {
  int max_edges = 5;
  int oracle_max = 0;  // oracle cross-check for m <= oracle_max; 0 disables
  int workers = 1;
};

struct SweepRecord {
  CanonicalDoubleSpider instance;
  int edge_count = 0;
  CaseTag tag = CaseTag::kEqualDeg3;
  std::string route;
  bool pass = false;
  std::string detail;                  // failure reason, empty on pass
  std::optional<SearchStatus> oracle;  // set when the oracle ran
  std::chrono::microseconds elapsed{0};
};

struct SweepReport {
  std::vector<SweepRecord> records;  // enumerate_instances order
  int passed = 0;
  int failed = 0;

  // One line per record plus a totals line. Timings are left out so the
  // text is identical across runs.
  std::string format() const;
};

SweepReport run_sweep(const SweepOptions& options);

// Entry point shared by main() and the tests. `args` excludes the program
// name. Returns one of the ExitCode values.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace antimagic::cli

#endif  // ANTIMAGIC_TOOLS_CLI_HPP_
