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

#include "loewner/functions.hpp"

#include <cmath>
#include <stdexcept>

namespace loewner {
namespace opconvex {

FunctionDescriptor square() {
  return {"square", Interval::real_line(), [](double t) { return t * t; }};
}

FunctionDescriptor inverse() {
  return {"inverse", Interval::positive_reals(), [](double t) { return 1.0 / t; }};
}

FunctionDescriptor neg_sqrt() {
  return {"neg_sqrt", Interval::nonnegative_reals(), [](double t) { return -std::sqrt(t); }};
}

FunctionDescriptor neg_log() {
  return {"neg_log", Interval::positive_reals(), [](double t) { return -std::log(t); }};
}

FunctionDescriptor t_log_t() {
  return {"t_log_t", Interval::positive_reals(), [](double t) { return t * std::log(t); }};
}

const std::vector<FunctionDescriptor>& catalog() {
  static const std::vector<FunctionDescriptor> entries = {square(), inverse(), neg_sqrt(),
                                                          neg_log(), t_log_t()};
  return entries;
}

FunctionDescriptor by_name(const std::string& name) {
  for (const auto& f : catalog()) {
    if (f.name == name) return f;
  }
  throw std::invalid_argument("unknown operator convex function: " + name);
}

}  // namespace opconvex

FunctionDescriptor power_function(double p) {
  return {"pow_" + std::to_string(p), Interval::nonnegative_reals(),
          [p](double t) { return std::pow(t, p); }};
}

}  // namespace loewner
