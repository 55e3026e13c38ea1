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

#include "zxzw/builders.hpp"

#include <cmath>

namespace zxzw {

Term wire() { return Term::gen(Generator::identity()); }
Term swap_term() { return Term::gen(Generator::swap_gen()); }
Term cap_term() { return Term::gen(Generator::cap()); }
Term cup_term() { return Term::gen(Generator::cup()); }
Term empty_term() { return Term::gen(Generator::empty()); }
Term had() { return Term::gen(Generator::hadamard()); }
Term tri() { return Term::gen(Generator::triangle()); }
Term phase_term(const Phase& a) { return Term::gen(Generator::phase_gate(a)); }
Term lambda_term(double l) { return Term::gen(Generator::lambda_box(l)); }
Term zs(int n, int m) { return Term::gen(Generator::zspider(n, m)); }
Term ws(int n, int m) { return Term::gen(Generator::wspider(n, m)); }
Term rgate_term(Complex r) { return Term::gen(Generator::rgate(r)); }
Term bpi_term() { return Term::gen(Generator::black_pi()); }
Term bw_term() { return Term::gen(Generator::black_w()); }

static bool is_zero_phase(const Phase& a) { return a.is_rational() && a.num() == 0; }

Term zspider(int n, int m, const Phase& a) {
  Term spider = zs(n, m);
  if (is_zero_phase(a)) return spider;
  if (m > 0) {
    return seq(spider, par(phase_term(a), identity_wires(m - 1)));
  }
  if (n > 0) {
    return seq(par(phase_term(a), identity_wires(n - 1)), spider);
  }
  // (0,0): trace of the phase gate, 1 + e^{i a}.
  return seqs({cap_term(), par(phase_term(a), wire()), cup_term()});
}

Term xspider(int n, int m, const Phase& a) {
  Term core = zspider(n, m, a);
  if (n > 0) {
    Term hs = had();
    for (int i = 1; i < n; ++i) hs = par(hs, had());
    core = seq(hs, core);
  }
  if (m > 0) {
    Term hs = had();
    for (int i = 1; i < m; ++i) hs = par(hs, had());
    core = seq(core, hs);
  }
  return core;
}

Term zstate(const Phase& a) { return zspider(0, 1, a); }
Term zeffect(const Phase& a) { return zspider(1, 0, a); }
Term xstate(const Phase& a) { return xspider(0, 1, a); }
Term xeffect(const Phase& a) { return xspider(1, 0, a); }

Term dot(const Phase& a) { return zspider(0, 0, a); }

Term dumbbell() { return seq(xstate(Phase::zero()), zeffect(Phase::zero())); }

Term half_gadget() {
  return seqs({zstate(Phase::zero()), lambda_term(0.5), xeffect(Phase::pi())});
}

Term bent(const Term& t) {
  Arity ar = t.arity();
  int n = ar.inputs, m = ar.outputs;
  // Nested cap stack: 0 -> 2k, pairing wire i with wire 2k-1-i.
  auto cap_stack = [&](int k) {
    if (k == 0) return empty_term();
    Term s = cap_term();
    for (int i = 1; i < k; ++i) s = seq(s, pars({identity_wires(i), cap_term(), identity_wires(i)}));
    return s;
  };
  auto cup_stack = [&](int k) {
    if (k == 0) return empty_term();
    Term s = cup_term();
    for (int i = 1; i < k; ++i) s = seq(pars({identity_wires(i), cup_term(), identity_wires(i)}), s);
    return s;
  };
  // m -> 2n + m -> n + m + m -> n
  Term stage1 = par(cap_stack(n), identity_wires(m));
  Term stage2 = pars({identity_wires(n), t, identity_wires(m)});
  Term stage3 = par(identity_wires(n), cup_stack(m));
  return seqs({stage1, stage2, stage3});
}

// --- ZX gadgets -------------------------------------------------------------

Term zx_cl0() {
  // Two copy spiders joined by an edge carrying triangle-after-pi, which has
  // matrix [[1,1],[1,0]]: the joint weight vanishes exactly on |11>.
  Term edge_piece = seq(xspider(1, 1, Phase::pi()), tri());
  Term cup_m = seq(par(edge_piece, wire()), cup_term());
  return seq(par(zs(1, 2), zs(1, 2)), pars({wire(), cup_m, wire()}));
}

Term zx_add() {
  Term xor_merge = xspider(2, 1, Phase::zero());
  return par(seq(zx_cl0(), xor_merge), dumbbell());
}

Term zx_coadd() { return bent(zx_add()); }

Term zx_cz() {
  Term cup_h = seq(par(had(), wire()), cup_term());
  Term core = seq(par(zs(1, 2), zs(1, 2)), pars({wire(), cup_h, wire()}));
  return par(core, dumbbell());
}

Term zx_crossing() { return seq(zx_cz(), swap_term()); }

Term zx_w() { return seq(xspider(1, 1, Phase::pi()), zx_coadd()); }

Term x_sandwich(const Term& a, const Term& b) {
  return seqs({xspider(1, 2, Phase::zero()), par(a, b), xspider(2, 1, Phase::zero())});
}

Term pair2(const Phase& a) {
  Phase third = Phase::rational(1, 3);
  Term core = x_sandwich(phase_term(third + a), phase_term(third - a));
  return pars({core, dot(Phase::zero()), dot(Phase::rational(-2, 3))});
}

// --- ZW gadgets -------------------------------------------------------------

Term zw_triangle() {
  return seqs({bpi_term(), bw_term(), par(wire(), ws(1, 0))});
}

Term zw_bent_w() { return bent(bw_term()); }

Term zw_rloop(Complex r) {
  return seqs({cap_term(), par(rgate_term(r), wire()), cup_term()});
}

Term zw_hadamard() {
  Term t_up = zw_triangle();
  Term t_down = seqs({bpi_term(), zw_triangle(), bpi_term()});
  Term chain = seqs({t_up, rgate_term(Complex(-2, 0)), t_down});
  return par(chain, zw_rloop(Complex(1.0 / std::sqrt(2.0) - 1.0, 0)));
}

Term zw_zero_state() { return seq(ws(0, 1), rgate_term(Complex(0, 0))); }

Term zw_zero_effect() { return seq(rgate_term(Complex(0, 0)), ws(1, 0)); }

}  // namespace zxzw
