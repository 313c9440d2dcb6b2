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

#ifndef LOEWNER_DIGEST_HPP
#define LOEWNER_DIGEST_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "loewner/matrix.hpp"

namespace loewner {

// Stable FNV-1a digest of check inputs: dimensions and IEEE-754 bit patterns,
// independent of platform and formatting.
class InstanceDigest {
 public:
  InstanceDigest& absorb(std::string_view s);
  InstanceDigest& absorb(std::uint64_t v);
  InstanceDigest& absorb(double v);
  InstanceDigest& absorb(const Complex& z);
  InstanceDigest& absorb(const ComplexMatrix& m);
  InstanceDigest& absorb(const ComplexVector& v);
  std::string hex() const;

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

}  // namespace loewner

#endif  // LOEWNER_DIGEST_HPP
