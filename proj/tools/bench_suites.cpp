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

// Compares the serial reference runner against the OpenMP runner on a few
// representative suites and checks that both produce the same report.

#include <cstdio>
#include <string>
#include <vector>

#include "loewner/suite.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

int main(int argc, char** argv) {
  using namespace loewner;
  std::size_t trials = 400;
  if (argc > 1) trials = static_cast<std::size_t>(std::stoul(argv[1]));
  const std::vector<std::size_t> dims = {2, 3, 4, 6};
  const std::vector<std::string> suites = {"schwarz-block", "thm-2-1-ii", "mean-sub-geo",
                                           "thm-3-2"};

#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; parallel policy falls back to serial\n");
#endif
  std::printf("%-16s %10s %12s %12s %9s %6s\n", "suite", "trials", "serial[ms]",
              "parallel[ms]", "speedup", "same");

  bool all_same = true;
  for (const auto& id : suites) {
    const SuiteReport serial = run_suite(id, 42, trials, dims, {}, RunPolicy::serial);
    const SuiteReport parallel = run_suite(id, 42, trials, dims, {}, RunPolicy::parallel);
    const bool same = reports_to_json({serial}, false) == reports_to_json({parallel}, false);
    all_same = all_same && same && serial.passed() && parallel.passed();
    std::printf("%-16s %10zu %12.1f %12.1f %8.2fx %6s\n", id.c_str(),
                trials * dims.size(), serial.wall_time * 1e3, parallel.wall_time * 1e3,
                serial.wall_time / parallel.wall_time, same ? "yes" : "NO");
  }
  return all_same ? 0 : 1;
}
