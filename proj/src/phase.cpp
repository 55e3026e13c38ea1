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

#include "zxzw/phase.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace zxzw {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

Phase Phase::rational(std::int64_t p, std::int64_t q) {
  if (q <= 0) throw DomainError("Phase::rational: denominator must be positive, got " + std::to_string(q));
  Phase ph;
  ph.rational_ = true;
  ph.p_ = p;
  ph.q_ = q;
  ph.normalize();
  return ph;
}

Phase Phase::radians(double x) {
  if (!std::isfinite(x)) throw DomainError("Phase::radians: non-finite angle");
  Phase ph;
  ph.rational_ = false;
  ph.x_ = x;
  ph.normalize();
  return ph;
}

void Phase::normalize() {
  if (rational_) {
    std::int64_t g = std::gcd(p_ < 0 ? -p_ : p_, q_);
    if (g > 1) {
      p_ /= g;
      q_ /= g;
    }
    std::int64_t two_q = 2 * q_;
    p_ %= two_q;
    if (p_ < 0) p_ += two_q;
    x_ = 0.0;
  } else {
    x_ = std::fmod(x_, kTwoPi);
    if (x_ < 0) x_ += kTwoPi;
    if (x_ >= kTwoPi) x_ = 0.0;  // fmod may land on 2*pi through rounding
    p_ = 0;
    q_ = 1;
  }
}

double Phase::value() const {
  if (rational_) return M_PI * static_cast<double>(p_) / static_cast<double>(q_);
  return x_;
}

Complex Phase::unit() const {
  if (rational_) {
    // Multiples of pi/2 come out exact; rule grids lean on 0 and pi heavily.
    if (q_ == 1) return (p_ % 2 == 0) ? Complex(1, 0) : Complex(-1, 0);
    if (q_ == 2) {
      switch (p_ % 4) {
        case 1: return Complex(0, 1);
        case 3: return Complex(0, -1);
        default: break;
      }
    }
  }
  double v = value();
  return Complex(std::cos(v), std::sin(v));
}

Phase Phase::operator+(const Phase& o) const {
  if (rational_ && o.rational_) {
    // p1/q1 + p2/q2 over a common denominator; values stay desk-scale small.
    std::int64_t q = q_ / std::gcd(q_, o.q_) * o.q_;
    std::int64_t p = p_ * (q / q_) + o.p_ * (q / o.q_);
    return rational(p, q);
  }
  return radians(value() + o.value());
}

Phase Phase::operator-() const {
  if (rational_) return rational(-p_, q_);
  return radians(-x_);
}

Phase Phase::scaled(std::int64_t k) const {
  if (rational_) return rational(p_ * k, q_);
  return radians(x_ * static_cast<double>(k));
}

bool Phase::equals(const Phase& o, double tol) const {
  if (rational_ && o.rational_) return p_ == o.p_ && q_ == o.q_;
  double d = std::fabs(value() - o.value());
  d = std::fmod(d, kTwoPi);
  d = std::min(d, kTwoPi - d);
  return d <= tol;
}

std::string Phase::str() const {
  std::ostringstream os;
  if (rational_) {
    if (p_ == 0) return "0";
    os << p_ << "pi";
    if (q_ != 1) os << "/" << q_;
  } else {
    os << x_ << "rad";
  }
  return os.str();
}

}  // namespace zxzw
