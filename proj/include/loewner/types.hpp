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

#ifndef LOEWNER_TYPES_HPP
#define LOEWNER_TYPES_HPP

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace loewner {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

// Thrown when an input violates a numerical contract (not PSD, spectrum
// outside the function domain, iteration did not converge, ...).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an inequality check refuses an instance because one of its
// hypotheses fails. Carries the name of the failing hypothesis.
class HypothesisError : public std::runtime_error {
 public:
  HypothesisError(std::string hypothesis, const std::string& what)
      : std::runtime_error(what), hypothesis_(std::move(hypothesis)) {}
  const std::string& hypothesis() const { return hypothesis_; }

 private:
  std::string hypothesis_;
};

// Relative tolerances, all measured against max(1, operand scale).
struct Tolerances {
  double tol_herm = 1e-10;    // accepted hermiticity defect
  double tol_psd = 1e-9;      // eigenvalue slack for PSD verdicts
  double tol_recon = 1e-10;   // decomposition reconstruction error
  double tol_rank = 1e-12;    // singular values below tol_rank * sigma_max count as zero
  double tol_margin = 1e-8;   // inequality margin slack
  double tol_spec = 1e-9;     // spectrum-vs-domain slack at closed endpoints
};

// A real interval with independently open/closed endpoints. Infinite
// endpoints are always open.
struct Interval {
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();
  bool lower_closed = false;
  bool upper_closed = false;

  static Interval real_line() { return {}; }
  static Interval open(double lo, double hi) { return {lo, hi, false, false}; }
  static Interval closed(double lo, double hi) { return {lo, hi, true, true}; }
  static Interval positive_reals() {
    return {0.0, std::numeric_limits<double>::infinity(), false, false};
  }
  static Interval nonnegative_reals() {
    return {0.0, std::numeric_limits<double>::infinity(), true, false};
  }

  bool contains(double t) const {
    if (t < lower || (t == lower && !lower_closed)) return false;
    if (t > upper || (t == upper && !upper_closed)) return false;
    return true;
  }

  // Clamps t into the interval. Only meaningful when the violation is at a
  // closed endpoint; callers decide tolerance before clamping.
  double clamp(double t) const {
    if (t < lower) return lower;
    if (t > upper) return upper;
    return t;
  }
};

}  // namespace loewner

#endif  // LOEWNER_TYPES_HPP
