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

#include <random>

#include "zxzw/rules.hpp"

namespace zxzw {

/// Weights and bounds for seeded random diagram growth. Weights are data so
/// sweeps can be reshaped without touching code.
struct TermGenConfig {
  int max_wires = 4;
  int max_generators = 20;
  double w_spider = 3.0;
  double w_phase = 2.0;     // phase gate / r-gate
  double w_unary = 2.0;     // H + triangle / black pi
  double w_binary = 1.0;    // swap + crossing
  double w_cupcap = 1.0;
  double w_wnode = 1.0;     // ZW only
  double w_lambda = 1.0;    // ZX only
};

/// A random well-typed diagram grown as layered slices of parallel
/// generators padded with identities.
Term random_term(std::mt19937_64& rng, Calculus cal, const TermGenConfig& cfg);

/// A random admissible binding for the rule's declared parameters.
Binding random_binding(std::mt19937_64& rng, const RuleSchema& rule);

}  // namespace zxzw
