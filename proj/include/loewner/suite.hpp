// Copyright 2026 The loewner developers
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

#ifndef LOEWNER_SUITE_HPP
#define LOEWNER_SUITE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "loewner/check_outcome.hpp"
#include "loewner/rng.hpp"
#include "loewner/types.hpp"

namespace loewner {

struct SuiteFailure {
  std::size_t trial_index;  // flattened: dim_index * trials + trial
  std::string instance_digest;
  double margin;  // normalized margin (margin / scale)
};

struct SuiteReport {
  std::string suite_id;
  std::uint64_t master_seed = 0;
  std::size_t trials = 0;  // per dimension
  std::vector<std::size_t> dims;
  std::vector<SuiteFailure> failures;
  double min_margin = 0.0;  // min over trials of margin / scale
  double tolerance = 0.0;   // the tol_margin the verdicts used
  double wall_time = 0.0;   // seconds

  bool passed() const { return failures.empty(); }
};

// The OpenMP path distributes trials across threads; the serial path is the
// reference. Both produce identical reports (apart from wall_time): each
// trial's randomness comes from (master_seed, suite_id, trial_index) alone
// and aggregation walks the trial slots in index order.
enum class RunPolicy { serial, parallel };

using TrialFn = std::function<CheckOutcome(Rng&, std::size_t dim, const Tolerances&)>;

// The inequality identifiers the runner knows.
const std::vector<std::string>& known_suite_ids();
bool is_known_suite(const std::string& suite_id);

SuiteReport run_suite(const std::string& suite_id, std::uint64_t master_seed,
                      std::size_t trials, const std::vector<std::size_t>& dims,
                      const Tolerances& tol = {}, RunPolicy policy = RunPolicy::parallel);

// Injection point: runs an arbitrary trial function under the same
// aggregation machinery. Used by tests to exercise the failure path.
SuiteReport run_suite_with(const TrialFn& fn, const std::string& suite_id,
                           std::uint64_t master_seed, std::size_t trials,
                           const std::vector<std::size_t>& dims, const Tolerances& tol = {},
                           RunPolicy policy = RunPolicy::parallel);

// 0 when every report passed, 1 otherwise.
int exit_code_for(const std::vector<SuiteReport>& reports);

// JSON rendering of reports (an array, one object per suite). Dropping
// wall_time makes reports byte-comparable across runs.
std::string reports_to_json(const std::vector<SuiteReport>& reports,
                            bool include_wall_time = true);

}  // namespace loewner

#endif  // LOEWNER_SUITE_HPP
