// Copyright 2026 The zxzw authors
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

#pragma once

#include <cstdint>
#include <string>

#include "zxzw/common.hpp"

namespace zxzw {

/// An angle in [0, 2*pi), stored either as an exact rational multiple of pi
/// or as a plain double. Exact rationals survive arithmetic with other
/// rationals; mixing with a double degrades to a double. Normalization back
/// into [0, 2*pi) happens after every operation.
class Phase {
 public:
  Phase() : rational_(true), p_(0), q_(1), x_(0.0) {}

  /// (p/q)*pi. q must be positive.
  static Phase rational(std::int64_t p, std::int64_t q);
  static Phase radians(double x);
  static Phase zero() { return rational(0, 1); }
  static Phase pi() { return rational(1, 1); }
  static Phase pi_over(std::int64_t k) { return rational(1, k); }

  bool is_rational() const { return rational_; }
  std::int64_t num() const { return p_; }
  std::int64_t den() const { return q_; }

  /// The angle in radians, always in [0, 2*pi).
  double value() const;

  /// e^{i*theta}. Exact at multiples of pi/2.
  Complex unit() const;

  Phase operator+(const Phase& o) const;
  Phase operator-() const;
  Phase operator-(const Phase& o) const { return *this + (-o); }
  /// k*theta, staying exact for rational phases.
  Phase scaled(std::int64_t k) const;

  /// Exact comparison for two rationals; |difference| mod 2*pi <= tol otherwise.
  bool equals(const Phase& o, double tol = 1e-12) const;

  std::string str() const;

 private:
  void normalize();

  bool rational_;
  std::int64_t p_, q_;  // (p_/q_)*pi with q_ > 0, gcd(p_,q_) = 1, 0 <= p_ < 2q_
  double x_;            // radians in [0, 2*pi)
};

}  // namespace zxzw
