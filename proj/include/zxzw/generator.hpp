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

#include <optional>
#include <string>

#include "zxzw/common.hpp"
#include "zxzw/phase.hpp"

namespace zxzw {

enum class Calculus { Shared, ZX, ZW };

std::string calculus_name(Calculus c);

/// Joins the calculi of two subterms; mixing ZX and ZW is a domain error.
Calculus join_calculus(Calculus a, Calculus b);

enum class GenKind {
  // ZX
  ZSpider,
  PhaseGate,
  Hadamard,
  LambdaBox,
  Triangle,
  // ZW
  WhiteSpider,
  RGate,
  Crossing,
  BlackPi,
  BlackW,
  // shared structural
  Identity,
  Swap,
  Cap,
  Cup,
  Empty,
};

std::string kind_name(GenKind k);

struct Arity {
  int inputs = 0;
  int outputs = 0;
  bool operator==(const Arity& o) const { return inputs == o.inputs && outputs == o.outputs; }
  std::string str() const { return std::to_string(inputs) + "->" + std::to_string(outputs); }
};

/// A single generator occurrence. Parameter fields are meaningful only for
/// the kinds that declare them. `var`, when set, marks a pattern
/// metavariable slot (used by rule matching, never by ordinary diagrams).
class Generator {
 public:
  GenKind kind = GenKind::Identity;
  int n = 0, m = 0;  // spider legs
  Phase phase;       // PhaseGate
  double lambda = 0.0;
  Complex r{0.0, 0.0};
  std::optional<std::string> var;

  static Generator zspider(int n, int m);
  static Generator wspider(int n, int m);
  static Generator phase_gate(const Phase& a);
  static Generator hadamard();
  static Generator lambda_box(double l);
  static Generator triangle();
  static Generator rgate(Complex r);
  static Generator crossing();
  static Generator black_pi();
  static Generator black_w();
  static Generator identity();
  static Generator swap_gen();
  static Generator cap();
  static Generator cup();
  static Generator empty();

  // Pattern metavariable slots.
  static Generator phase_var(const std::string& name);
  static Generator lambda_var(const std::string& name);
  static Generator r_var(const std::string& name);

  Arity arity() const;
  Calculus calculus() const;
  bool is_structural() const;
  bool is_spider() const { return kind == GenKind::ZSpider || kind == GenKind::WhiteSpider; }

  /// Same kind, same legs, and parameter values equal (exact for rational
  /// phases, |diff| <= tol otherwise). Variable slots never compare equal.
  bool same_generator(const Generator& o, double tol = 1e-12) const;

  std::string str() const;
};

}  // namespace zxzw
