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

#ifndef LOEWNER_CHECK_OUTCOME_HPP
#define LOEWNER_CHECK_OUTCOME_HPP

#include <string>
#include <utility>
#include <vector>

namespace loewner {

// The result of one inequality verification. `margin` is the minimum
// eigenvalue of the asserted-nonnegative difference (or the scalar
// difference); `holds` is margin >= -tol_margin * scale, where `scale` is
// max(1, norms of the compared sides). For every returned outcome the
// hypothesis report lists the verified preconditions; checks refuse (throw
// HypothesisError) instead of reporting on invalid instances.
struct CheckOutcome {
  std::string inequality_id;
  bool holds = false;
  double margin = 0.0;
  double scale = 1.0;
  std::vector<std::pair<std::string, double>> residuals;
  std::string instance_digest;
  std::vector<std::pair<std::string, bool>> hypothesis_report;

  double normalized_margin() const { return margin / scale; }
  bool equality_detected(double tol_margin) const {
    return std::abs(margin) <= 10.0 * tol_margin * scale;
  }
};

}  // namespace loewner

#endif  // LOEWNER_CHECK_OUTCOME_HPP
