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

#include "zxzw/term.hpp"

namespace zxzw {

// Leaf shorthands.
Term wire();
Term swap_term();
Term cap_term();
Term cup_term();
Term empty_term();
Term had();
Term tri();
Term phase_term(const Phase& a);
Term lambda_term(double l);
Term zs(int n, int m);
Term ws(int n, int m);
Term rgate_term(Complex r);
Term bpi_term();
Term bw_term();

/// Phased Z spider sugar: spider composed with a phase gate on one leg
/// (first output if any, else first input, else the trace form for (0,0)).
/// A phase of exactly 0 elaborates to the bare spider.
Term zspider(int n, int m, const Phase& a);

/// Red-node macro: Hadamards on all legs around a phased Z spider.
Term xspider(int n, int m, const Phase& a);

Term zstate(const Phase& a);   // zspider(0,1,a)
Term zeffect(const Phase& a);  // zspider(1,0,a)
Term xstate(const Phase& a);   // xspider(0,1,a)
Term xeffect(const Phase& a);  // xspider(1,0,a)

/// Scalar dot: value 1 + e^{i a} (a plain (0,0) spider when a == 0).
Term dot(const Phase& a);

/// Scalar sqrt(2): a green effect applied to a red state.
Term dumbbell();

/// Scalar 1/sqrt(2): pi-red effect, lambda 1/2, green state.
Term half_gadget();

/// Transpose by bending all legs with nested caps/cups. For generators whose
/// legs-per-side are symmetric (or with at most one leg per side) this is the
/// plain matrix transpose; in general both wire blocks come out reversed.
Term bent(const Term& t);

// --- ZX gadgets built from triangles and spiders ---

/// diag(1,1,1,0) on two wires: spiders joined through a triangle+pi edge.
Term zx_cl0();
/// 2->1 map |00>->|0>, |01>,|10>->|1>, |11>->0 (exact, includes the sqrt(2)).
Term zx_add();
/// 1->2 transpose of zx_add: |0>->|00>, |1>->|01>+|10>.
Term zx_coadd();
/// Controlled-Z on two wires (exact scalar).
Term zx_cz();
/// ZX image of the fermionic crossing.
Term zx_crossing();
/// ZX image of the W node: coadd twisted by a red pi.
Term zx_w();

/// X-spider sandwich around two parallel 1->1 terms:
/// diag((1 + z1 z2)/2, (z1 + z2)/2) for diagonal arguments diag(1, zk).
Term x_sandwich(const Term& a, const Term& b);

/// diag(1, 2 cos a), lambda-box-free and triangle-free.
Term pair2(const Phase& a);

// --- ZW gadgets ---

/// ZW image of the triangle: black pi, W, white counit on the second leg.
Term zw_triangle();
/// 2->1 black W (the bent generator).
Term zw_bent_w();
/// Scalar 1 + r as an r-gate trace loop.
Term zw_rloop(Complex r);
/// ZW image of the Hadamard.
Term zw_hadamard();
/// White unit restricted to |0> (unit then r = 0 gate).
Term zw_zero_state();
/// <0| effect: r = 0 gate then white counit.
Term zw_zero_effect();

}  // namespace zxzw
