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

#include "loewner/digest.hpp"

#include <cstring>

namespace loewner {

namespace {
constexpr std::uint64_t kPrime = 0x100000001b3ULL;
}

InstanceDigest& InstanceDigest::absorb(std::string_view s) {
  for (char c : s) {
    h_ ^= static_cast<std::uint8_t>(c);
    h_ *= kPrime;
  }
  return *this;
}

InstanceDigest& InstanceDigest::absorb(std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h_ ^= static_cast<std::uint8_t>(v >> (8 * i));
    h_ *= kPrime;
  }
  return *this;
}

InstanceDigest& InstanceDigest::absorb(double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, sizeof(bits));
  return absorb(bits);
}

InstanceDigest& InstanceDigest::absorb(const Complex& z) {
  absorb(z.real());
  return absorb(z.imag());
}

InstanceDigest& InstanceDigest::absorb(const ComplexMatrix& m) {
  absorb(static_cast<std::uint64_t>(m.rows()));
  absorb(static_cast<std::uint64_t>(m.cols()));
  for (const Complex& z : m.entries()) absorb(z);
  return *this;
}

InstanceDigest& InstanceDigest::absorb(const ComplexVector& v) {
  absorb(static_cast<std::uint64_t>(v.size()));
  for (const Complex& z : v) absorb(z);
  return *this;
}

std::string InstanceDigest::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 0; i < 16; ++i) out[15 - i] = digits[(h_ >> (4 * i)) & 0xf];
  return out;
}

}  // namespace loewner
