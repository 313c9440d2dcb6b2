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

#include "loewner/matrix_io.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace loewner {

namespace {

using nlohmann::json;

double finite_number(const json& j, std::size_t row, std::size_t col, const char* part) {
  if (!j.is_number()) {
    throw IoError("matrix entry (" + std::to_string(row) + ", " + std::to_string(col) +
                  "): " + part + " is not a number");
  }
  const double v = j.get<double>();
  if (!std::isfinite(v)) {
    throw IoError("matrix entry (" + std::to_string(row) + ", " + std::to_string(col) +
                  "): non-finite " + part);
  }
  return v;
}

}  // namespace

ComplexMatrix parse_matrix_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw IoError(std::string("matrix parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data")) {
    throw IoError("matrix file must be an object with rows, cols and data");
  }
  if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned()) {
    throw IoError("rows/cols must be nonnegative integers");
  }
  const std::size_t rows = j["rows"].get<std::size_t>();
  const std::size_t cols = j["cols"].get<std::size_t>();
  if (rows == 0 || cols == 0) throw IoError("rows and cols must be positive");
  const json& data = j["data"];
  if (!data.is_array() || data.size() != rows) {
    throw IoError("data must be an array of " + std::to_string(rows) + " rows");
  }
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = data[i];
    if (!row.is_array() || row.size() != cols) {
      throw IoError("data row " + std::to_string(i) + " has " +
                    std::to_string(row.is_array() ? row.size() : 0) + " entries, expected " +
                    std::to_string(cols));
    }
    for (std::size_t k = 0; k < cols; ++k) {
      const json& entry = row[k];
      if (entry.is_number()) {
        m(i, k) = Complex(finite_number(entry, i, k, "value"), 0.0);
      } else if (entry.is_array() && entry.size() == 2) {
        m(i, k) = Complex(finite_number(entry[0], i, k, "real part"),
                          finite_number(entry[1], i, k, "imaginary part"));
      } else {
        throw IoError("matrix entry (" + std::to_string(i) + ", " + std::to_string(k) +
                      ") must be a number or an [re, im] pair");
      }
    }
  }
  return m;
}

std::string matrix_to_json(const ComplexMatrix& m) {
  json data = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) {
      const Complex& z = m(i, k);
      row.push_back(json::array({z.real(), z.imag()}));
    }
    data.push_back(std::move(row));
  }
  json out = {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
  return out.dump();
}

ComplexMatrix read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open matrix file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_matrix_json(buffer.str());
  } catch (const IoError& e) {
    throw IoError(path + ": " + e.what());
  }
}

void write_matrix(const std::string& path, const ComplexMatrix& m) {
  if (!m.all_finite()) throw IoError("refusing to write non-finite matrix to " + path);
  std::ofstream out(path);
  if (!out) throw IoError("cannot open matrix file for writing: " + path);
  out << matrix_to_json(m) << "\n";
}

}  // namespace loewner
