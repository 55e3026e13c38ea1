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

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zxzw/builders.hpp"

namespace zxzw {

enum class ParamDomain { Angle, Scalar, ComplexR };

struct ParamSpec {
  std::string name;
  ParamDomain domain;
};

using ParamValue = std::variant<Phase, double, Complex>;
using Binding = std::map<std::string, ParamValue>;

Phase bind_phase(const Binding& b, const std::string& sym);
double bind_scalar(const Binding& b, const std::string& sym);
Complex bind_r(const Binding& b, const std::string& sym);

enum class Direction { LR, RL };

/// A rewrite rule template. lhs/rhs build concrete Terms from a binding;
/// with free_ok, unbound bare parameters become pattern metavariables
/// (derived parameters must always be bound). side augments a binding with
/// derived values before the right side is built.
struct RuleSchema {
  std::string name;
  Calculus calculus = Calculus::ZX;
  std::string group;
  std::vector<ParamSpec> params;
  std::function<Binding(const Binding&)> side;  // may be null
  std::function<Term(const Binding&, bool free_ok)> lhs, rhs;

  bool has_side() const { return static_cast<bool>(side); }
};

const std::vector<RuleSchema>& catalog(Calculus c);
const RuleSchema& find_rule(Calculus c, const std::string& name);

/// Validates the binding against the declared parameter domains, runs the
/// side condition, and builds both sides as concrete well-typed Terms.
std::pair<Term, Term> instantiate(const RuleSchema& rule, const Binding& b);

/// One side of the rule; with allow_free, unbound parameters turn into
/// metavariable slots for matching.
Term instantiate_side(const RuleSchema& rule, Direction dir, const Binding& b, bool allow_free);

/// Polar form of l1 e^{i beta} + l2 e^{i alpha}. A vanishing sum returns
/// (0, 0); gamma is 0 there by convention.
std::pair<double, Phase> ad_compose(double l1, const Phase& beta, double l2, const Phase& alpha);

/// Lambda-box-free, triangle-free ZX term of arity 1->1 interpreting to
/// diag(1, lambda): a ladder of phase-pair gadgets diag(1, 2 cos a), with the
/// last rung at a = arccos(rest/2) and doubling rungs at a = 0.
Term decompose_lambda(double lambda);

struct BindingResult {
  Binding binding;
  double max_dev = 0.0;
  bool pass = false;
  std::string error;  // instantiation failure, recorded without aborting
};

struct RuleReport {
  std::string rule;
  bool pass = false;
  double max_dev = 0.0;
  std::vector<BindingResult> rows;
};

std::vector<Phase> default_angle_grid();
std::vector<double> default_scalar_grid();
std::vector<Complex> default_r_grid();

/// Cartesian product of the per-parameter grids, in declaration order.
std::vector<Binding> default_grid(const RuleSchema& rule, const std::vector<Phase>& angles,
                                  const std::vector<double>& scalars,
                                  const std::vector<Complex>& rs);
std::vector<Binding> default_grid(const RuleSchema& rule);

RuleReport check_rule_soundness(const RuleSchema& rule, const std::vector<Binding>& grid, double tol);

/// A deliberately broken copy of the rule: one phase-style perturbation of
/// size 0.1 applied to the right side, chosen so the default grid rejects it.
RuleSchema mutated_rule(const RuleSchema& rule);

}  // namespace zxzw
