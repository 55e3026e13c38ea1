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

#include "zxzw/graph.hpp"
#include "zxzw/tensor.hpp"
#include "zxzw/term.hpp"

namespace zxzw {

/// The matrix of a single generator. Spiders map to |0..0><0..0| + |1..1><1..1|,
/// the phase gate to diag(1, e^{i a}), the Hadamard to (1/sqrt 2)[[1,1],[1,-1]],
/// the lambda box to diag(1, lambda), the triangle to [[1,1],[0,1]], the r-gate
/// to diag(1, r), the crossing to the swap with a -1 on |11>, the W node to
/// [[0,1],[1,0],[1,0],[0,0]], the black pi to [[0,1],[1,0]], cap/cup to the
/// unnormalized Bell pair, and the empty diagram to the scalar 1.
TensorMatrix generator_matrix(const Generator& g);

/// The standard interpretation: recursive over the term, with parallel
/// composition as Kronecker product and sequential composition as matrix
/// product.
TensorMatrix interpret(const Term& d);

/// Evaluates by summing over wire assignments of the graph form, contracting
/// node tensors in a greedy order. An independent path used to cross-check
/// the recursive interpreter.
TensorMatrix contract_graph(const OpenGraph& g);

}  // namespace zxzw
