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

#ifndef LOEWNER_FUNCTIONS_HPP
#define LOEWNER_FUNCTIONS_HPP

#include <functional>
#include <string>
#include <vector>

#include "loewner/types.hpp"

namespace loewner {

// A scalar function together with the interval on which it is applied through
// the functional calculus.
struct FunctionDescriptor {
  std::string name;
  Interval domain;
  std::function<double(double)> eval;
};

// The operator convex catalog. Each entry is operator convex on its stated
// domain; the Jensen property suite exercises that claim numerically.
namespace opconvex {

FunctionDescriptor square();    // t^2 on R
FunctionDescriptor inverse();   // 1/t on (0, inf)
FunctionDescriptor neg_sqrt();  // -sqrt(t) on [0, inf)
FunctionDescriptor neg_log();   // -log t on (0, inf)
FunctionDescriptor t_log_t();   // t log t on (0, inf)

const std::vector<FunctionDescriptor>& catalog();
FunctionDescriptor by_name(const std::string& name);

}  // namespace opconvex

// Fractional powers on [0, inf); not operator convex for p in (0, 2), used
// where square roots and t^{3/2} of positive operators are needed.
FunctionDescriptor power_function(double p);

}  // namespace loewner

#endif  // LOEWNER_FUNCTIONS_HPP
