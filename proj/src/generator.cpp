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

#include "zxzw/generator.hpp"

#include <cmath>
#include <sstream>

namespace zxzw {

std::string calculus_name(Calculus c) {
  switch (c) {
    case Calculus::ZX: return "zx";
    case Calculus::ZW: return "zw";
    default: return "shared";
  }
}

Calculus join_calculus(Calculus a, Calculus b) {
  if (a == Calculus::Shared) return b;
  if (b == Calculus::Shared || a == b) return a;
  throw DomainError("cannot mix ZX and ZW generators in one diagram");
}

std::string kind_name(GenKind k) {
  switch (k) {
    case GenKind::ZSpider: return "zspider";
    case GenKind::PhaseGate: return "phase";
    case GenKind::Hadamard: return "h";
    case GenKind::LambdaBox: return "lambda";
    case GenKind::Triangle: return "triangle";
    case GenKind::WhiteSpider: return "wspider";
    case GenKind::RGate: return "rgate";
    case GenKind::Crossing: return "cross";
    case GenKind::BlackPi: return "bpi";
    case GenKind::BlackW: return "bw";
    case GenKind::Identity: return "id";
    case GenKind::Swap: return "swap";
    case GenKind::Cap: return "cap";
    case GenKind::Cup: return "cup";
    case GenKind::Empty: return "empty";
  }
  return "?";
}

static void check_legs(int n, int m) {
  if (n < 0 || m < 0) throw DomainError("spider legs must be non-negative");
}

Generator Generator::zspider(int n, int m) {
  check_legs(n, m);
  Generator g;
  g.kind = GenKind::ZSpider;
  g.n = n;
  g.m = m;
  return g;
}

Generator Generator::wspider(int n, int m) {
  check_legs(n, m);
  Generator g;
  g.kind = GenKind::WhiteSpider;
  g.n = n;
  g.m = m;
  return g;
}

Generator Generator::phase_gate(const Phase& a) {
  Generator g;
  g.kind = GenKind::PhaseGate;
  g.phase = a;
  return g;
}

Generator Generator::hadamard() {
  Generator g;
  g.kind = GenKind::Hadamard;
  return g;
}

Generator Generator::lambda_box(double l) {
  if (!(l >= 0.0) || !std::isfinite(l)) {
    throw DomainError("lambda box requires lambda >= 0, got " + std::to_string(l));
  }
  Generator g;
  g.kind = GenKind::LambdaBox;
  g.lambda = l;
  return g;
}

Generator Generator::triangle() {
  Generator g;
  g.kind = GenKind::Triangle;
  return g;
}

Generator Generator::rgate(Complex r) {
  Generator g;
  g.kind = GenKind::RGate;
  g.r = r;
  return g;
}

Generator Generator::crossing() {
  Generator g;
  g.kind = GenKind::Crossing;
  return g;
}

Generator Generator::black_pi() {
  Generator g;
  g.kind = GenKind::BlackPi;
  return g;
}

Generator Generator::black_w() {
  Generator g;
  g.kind = GenKind::BlackW;
  return g;
}

Generator Generator::identity() {
  Generator g;
  g.kind = GenKind::Identity;
  return g;
}

Generator Generator::swap_gen() {
  Generator g;
  g.kind = GenKind::Swap;
  return g;
}

Generator Generator::cap() {
  Generator g;
  g.kind = GenKind::Cap;
  return g;
}

Generator Generator::cup() {
  Generator g;
  g.kind = GenKind::Cup;
  return g;
}

Generator Generator::empty() {
  Generator g;
  g.kind = GenKind::Empty;
  return g;
}

Generator Generator::phase_var(const std::string& name) {
  Generator g;
  g.kind = GenKind::PhaseGate;
  g.var = name;
  return g;
}

Generator Generator::lambda_var(const std::string& name) {
  Generator g;
  g.kind = GenKind::LambdaBox;
  g.var = name;
  return g;
}

Generator Generator::r_var(const std::string& name) {
  Generator g;
  g.kind = GenKind::RGate;
  g.var = name;
  return g;
}

Arity Generator::arity() const {
  switch (kind) {
    case GenKind::ZSpider:
    case GenKind::WhiteSpider: return {n, m};
    case GenKind::PhaseGate:
    case GenKind::Hadamard:
    case GenKind::LambdaBox:
    case GenKind::Triangle:
    case GenKind::RGate:
    case GenKind::BlackPi:
    case GenKind::Identity: return {1, 1};
    case GenKind::Crossing:
    case GenKind::Swap: return {2, 2};
    case GenKind::BlackW: return {1, 2};
    case GenKind::Cap: return {0, 2};
    case GenKind::Cup: return {2, 0};
    case GenKind::Empty: return {0, 0};
  }
  return {0, 0};
}

Calculus Generator::calculus() const {
  switch (kind) {
    case GenKind::ZSpider:
    case GenKind::PhaseGate:
    case GenKind::Hadamard:
    case GenKind::LambdaBox:
    case GenKind::Triangle: return Calculus::ZX;
    case GenKind::WhiteSpider:
    case GenKind::RGate:
    case GenKind::Crossing:
    case GenKind::BlackPi:
    case GenKind::BlackW: return Calculus::ZW;
    default: return Calculus::Shared;
  }
}

bool Generator::is_structural() const {
  switch (kind) {
    case GenKind::Identity:
    case GenKind::Swap:
    case GenKind::Cap:
    case GenKind::Cup:
    case GenKind::Empty: return true;
    default: return false;
  }
}

bool Generator::same_generator(const Generator& o, double tol) const {
  if (kind != o.kind || n != o.n || m != o.m) return false;
  if (var || o.var) return false;
  switch (kind) {
    case GenKind::PhaseGate: return phase.equals(o.phase, tol);
    case GenKind::LambdaBox: return std::fabs(lambda - o.lambda) <= tol;
    case GenKind::RGate: return std::abs(r - o.r) <= tol;
    default: return true;
  }
}

std::string Generator::str() const {
  std::ostringstream os;
  os << kind_name(kind);
  if (is_spider()) os << "(" << n << "," << m << ")";
  if (var) {
    os << "[?" << *var << "]";
  } else if (kind == GenKind::PhaseGate) {
    os << "(" << phase.str() << ")";
  } else if (kind == GenKind::LambdaBox) {
    os << "(" << lambda << ")";
  } else if (kind == GenKind::RGate) {
    os << "(" << r.real() << (r.imag() < 0 ? "" : "+") << r.imag() << "i)";
  }
  return os.str();
}

}  // namespace zxzw
