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

#ifndef LOEWNER_MATRIX_IO_HPP
#define LOEWNER_MATRIX_IO_HPP

#include <string>

#include "loewner/matrix.hpp"

namespace loewner {

// Raised on malformed matrix files; the message carries the parse position or
// the offending row/entry.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Matrix file format:
//   {"rows": n, "cols": m, "data": [[[re, im], ...], ...]}   (row-major)
// Real matrices may abbreviate entries to bare numbers. Round-trips are
// bit-exact for finite doubles; non-finite entries are rejected.
ComplexMatrix parse_matrix_json(const std::string& text);
std::string matrix_to_json(const ComplexMatrix& m);

ComplexMatrix read_matrix(const std::string& path);
void write_matrix(const std::string& path, const ComplexMatrix& m);

}  // namespace loewner

#endif  // LOEWNER_MATRIX_IO_HPP
