// Copyright 2026 The hamdg Authors.
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


// Command-line frontend and reproducible experiment tables.

#ifndef HAMDG_CLI_H_
#define HAMDG_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "hamdg/verdict.h"

namespace hamdg {

enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,  // e.g. a rule fails or no Hamilton cycle exists
  kExitUsage = 2,
  kExitBudget = 3,
};

// Search budget: HAMDG_BUDGET if set to a positive integer, otherwise the
// solvers' default. Throws BadParams on a malformed value.
std::uint64_t DefaultBudget();

// One row of an experiment table. Fully determined by the experiment name,
// its parameters, and the seed; wall time is only filled in on request.
struct ExperimentRecord {
  std::string id;
  std::string family;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::uint64_t seed = 0;
  std::string operation;
  nlohmann::ordered_json metrics = nlohmann::ordered_json::object();
  std::optional<double> wall_ms;
};

struct ExperimentConfig {
  std::vector<int> sizes;  // empty means the experiment's default sizes
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;  // 0 means DefaultBudget()
  int samples = 0;           // 0 means the experiment's default
  Fraction xi{1, 4};
  Fraction nu{1, 20};
  Fraction tau{1, 5};
  int matching_cap = 0;
  bool timing = false;
};

// Names accepted by RunExperiment.
std::vector<std::string> ExperimentNames();

// Rows sorted by id. Throws BadParams for an unknown name.
std::vector<ExperimentRecord> RunExperiment(const std::string& name,
                                            const ExperimentConfig& config);

// "# schema=1", a header line, then one line per record; params and
// metrics are written as key=value pairs separated by ';'.
std::string ToCsv(const std::vector<ExperimentRecord>& records);
std::string ToJsonLines(const std::vector<ExperimentRecord>& records);

// Runs `hamdg <args...>` (args excludes the program name).
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hamdg

#endif  // HAMDG_CLI_H_
