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

// The ZW rewrite catalog: crossing laws, W-node (co)monoid laws, white spider
// laws, and the ring-parameter laws for the r-gate. All equations are exact
// under the standard interpretation and checked numerically by the sweep.

#include "zxzw/rules.hpp"

namespace zxzw {

namespace {

struct Ctx {
  const Binding& b;
  bool free_ok;
  Term rg(const std::string& sym) const {
    if (b.count(sym)) return rgate_term(bind_r(b, sym));
    if (free_ok) return Term::gen(Generator::r_var(sym));
    throw DomainError("missing complex binding: " + sym);
  }
};

RuleSchema make(const std::string& name, const std::string& group, std::vector<ParamSpec> params,
                std::function<Term(const Binding&, bool)> lhs,
                std::function<Term(const Binding&, bool)> rhs,
                std::function<Binding(const Binding&)> side = nullptr) {
  RuleSchema r;
  r.name = name;
  r.calculus = Calculus::ZW;
  r.group = group;
  r.params = std::move(params);
  r.side = std::move(side);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

constexpr auto kR = ParamDomain::ComplexR;

Term tau() { return Term::gen(Generator::crossing()); }
Term wc() { return seq(bpi_term(), bw_term()); }  // 1->2 coaddition (W after pi)

}  // namespace

void register_zw_rules(std::vector<RuleSchema>& out) {
  // --- crossing and W-node laws ---

  // (reix1) The crossing is an involution.
  out.push_back(make(
      "reix1", "zw.I", {},
      [](const Binding&, bool) { return seq(tau(), tau()); },
      [](const Binding&, bool) { return identity_wires(2); }));

  // (reix2) The crossing commutes with the plain swap.
  out.push_back(make(
      "reix2", "zw.I", {},
      [](const Binding&, bool) { return seq(tau(), swap_term()); },
      [](const Binding&, bool) { return seq(swap_term(), tau()); }));

  // (reix3) Yang-Baxter for the crossing.
  out.push_back(make(
      "reix3", "zw.I", {},
      [](const Binding&, bool) {
        return seqs({par(tau(), wire()), par(wire(), tau()), par(tau(), wire())});
      },
      [](const Binding&, bool) {
        return seqs({par(wire(), tau()), par(tau(), wire()), par(wire(), tau())});
      }));

  // (natnx) The white unit slides over the plain swap.
  out.push_back(make(
      "natnx", "zw.I", {},
      [](const Binding&, bool) { return seq(par(ws(0, 1), wire()), swap_term()); },
      [](const Binding&, bool) { return par(wire(), ws(0, 1)); }));

  // (natex) The cup absorbs the crossing at the price of a -1 gate.
  out.push_back(make(
      "natex", "zw.I", {},
      [](const Binding&, bool) { return seq(tau(), cup_term()); },
      [](const Binding&, bool) {
        return seq(par(rgate_term(Complex(-1, 0)), wire()), cup_term());
      }));

  // (uncowL) Left counit of the W node is the black pi.
  out.push_back(make(
      "uncowL", "zw.I", {},
      [](const Binding&, bool) { return seq(bw_term(), par(zw_zero_effect(), wire())); },
      [](const Binding&, bool) { return bpi_term(); }));

  // (uncowR) Right counit of the W node is the black pi.
  out.push_back(make(
      "uncowR", "zw.I", {},
      [](const Binding&, bool) { return seq(bw_term(), par(wire(), zw_zero_effect())); },
      [](const Binding&, bool) { return bpi_term(); }));

  // (natww) Coassociativity of the pi-twisted W.
  out.push_back(make(
      "natww", "zw.I", {},
      [](const Binding&, bool) { return seq(wc(), par(wc(), wire())); },
      [](const Binding&, bool) { return seq(wc(), par(wire(), wc())); }));

  // (natwx) The W node crosses a wire, with a -1 twist on that wire.
  out.push_back(make(
      "natwx", "zw.I", {},
      [](const Binding&, bool) {
        return seqs({par(bw_term(), wire()), par(wire(), tau()), par(tau(), wire())});
      },
      [](const Binding&, bool) {
        return seqs({par(wire(), rgate_term(Complex(-1, 0))), tau(), par(wire(), bw_term())});
      }));

  // (comcow) The W node is symmetric under the fermionic crossing.
  out.push_back(make(
      "comcow", "zw.I", {},
      [](const Binding&, bool) { return seq(bw_term(), tau()); },
      [](const Binding&, bool) { return bw_term(); }));

  // (natmw) Bialgebra between the white merge and the W node.
  out.push_back(make(
      "natmw", "zw.I", {},
      [](const Binding&, bool) { return seq(ws(2, 1), bw_term()); },
      [](const Binding&, bool) {
        return seqs({par(bw_term(), bw_term()),
                     pars({wire(), swap_term(), wire()}),
                     par(ws(2, 1), ws(2, 1))});
      }));

  // (natmnw) Bialgebra of the white merge and white copy.
  out.push_back(make(
      "natmnw", "zw.I", {},
      [](const Binding&, bool) { return seq(ws(2, 1), ws(1, 2)); },
      [](const Binding&, bool) {
        return seqs({par(ws(1, 2), ws(1, 2)),
                     pars({wire(), swap_term(), wire()}),
                     par(ws(2, 1), ws(2, 1))});
      }));

  // (natmnew) Unit against counit is the circle.
  out.push_back(make(
      "natmnew", "zw.I", {},
      [](const Binding&, bool) { return seq(ws(0, 1), ws(1, 0)); },
      [](const Binding&, bool) { return seq(cap_term(), cup_term()); }));

  // (hopf) White copy, black pi, W-transpose collapse to delete-then-zero.
  out.push_back(make(
      "hopf", "zw.I", {},
      [](const Binding&, bool) {
        return seqs({ws(1, 2), par(bpi_term(), wire()), zw_bent_w()});
      },
      [](const Binding&, bool) { return seq(ws(1, 0), zw_zero_state()); }));

  // (sym3) The white merge absorbs the crossing at the price of a -1 gate.
  out.push_back(make(
      "sym3", "zw.I", {},
      [](const Binding&, bool) { return seq(tau(), ws(2, 1)); },
      [](const Binding&, bool) {
        return seq(par(rgate_term(Complex(-1, 0)), wire()), ws(2, 1));
      }));

  // --- white spider and ring laws ---

  // (sym2) The white merge is commutative under the plain swap.
  out.push_back(make(
      "sym2", "zw.II", {},
      [](const Binding&, bool) { return seq(swap_term(), ws(2, 1)); },
      [](const Binding&, bool) { return ws(2, 1); }));

  // (inv) The -1 gate is an involution.
  out.push_back(make(
      "inv", "zw.II", {},
      [](const Binding&, bool) {
        return seq(rgate_term(Complex(-1, 0)), rgate_term(Complex(-1, 0)));
      },
      [](const Binding&, bool) { return wire(); }));

  // (antnx) The white copy absorbs the crossing at the price of a -1 gate.
  out.push_back(make(
      "antnx", "zw.II", {},
      [](const Binding&, bool) { return seq(ws(1, 2), tau()); },
      [](const Binding&, bool) { return seq(rgate_term(Complex(-1, 0)), ws(1, 2)); }));

  // (symz) The white copy is cocommutative under the plain swap.
  out.push_back(make(
      "symz", "zw.II", {},
      [](const Binding&, bool) { return seq(ws(1, 2), swap_term()); },
      [](const Binding&, bool) { return ws(1, 2); }));

  // (uncozR) Right counit of the white copy.
  out.push_back(make(
      "uncozR", "zw.II", {},
      [](const Binding&, bool) { return seq(ws(1, 2), par(wire(), ws(1, 0))); },
      [](const Binding&, bool) { return wire(); }));

  // (natzz) White spiders fuse.
  out.push_back(make(
      "natzz", "zw.II", {},
      [](const Binding&, bool) { return seq(ws(2, 1), ws(1, 2)); },
      [](const Binding&, bool) { return ws(2, 2); }));

  // (ph) Black pi copies through the white copy.
  out.push_back(make(
      "ph", "zw.II", {},
      [](const Binding&, bool) {
        return seqs({bpi_term(), ws(1, 2), par(bpi_term(), bpi_term())});
      },
      [](const Binding&, bool) { return ws(1, 2); }));

  // (natnc) The white copy slides across the cap.
  out.push_back(make(
      "natnc", "zw.II", {},
      [](const Binding&, bool) { return seq(cap_term(), par(ws(1, 2), wire())); },
      [](const Binding&, bool) { return seq(cap_term(), par(wire(), ws(1, 2))); }));

  // (natmc) Bending one input of the white merge gives the white copy.
  out.push_back(make(
      "natmc", "zw.II", {},
      [](const Binding&, bool) {
        return seq(par(cap_term(), wire()), par(wire(), ws(2, 1)));
      },
      [](const Binding&, bool) { return ws(1, 2); }));

  // (loop) A white copy closed by a cup is the counit.
  out.push_back(make(
      "loop", "zw.II", {},
      [](const Binding&, bool) { return seq(ws(1, 2), cup_term()); },
      [](const Binding&, bool) { return ws(1, 0); }));

  // (unx) The zero state copies.
  out.push_back(make(
      "unx", "zw.II", {},
      [](const Binding&, bool) { return seq(zw_zero_state(), ws(1, 2)); },
      [](const Binding&, bool) { return par(zw_zero_state(), zw_zero_state()); }));

  // (rng1) The r = 1 gate is a plain wire.
  out.push_back(make(
      "rng1", "zw.II", {},
      [](const Binding&, bool) { return rgate_term(Complex(1, 0)); },
      [](const Binding&, bool) { return wire(); }));

  // (rng-1) A crossing self-loop is the -1 gate.
  out.push_back(make(
      "rng-1", "zw.II", {},
      [](const Binding&, bool) {
        return seqs({par(wire(), cap_term()), par(tau(), wire()), par(wire(), cup_term())});
      },
      [](const Binding&, bool) { return rgate_term(Complex(-1, 0)); }));

  // (rngrsx) Stacked r-gates multiply.
  out.push_back(make(
      "rngrsx", "zw.II", {{"r", kR}, {"s", kR}},
      [](const Binding& b, bool f) {
        Ctx c{b, f};
        return seq(c.rg("r"), c.rg("s"));
      },
      [](const Binding& b, bool f) {
        Ctx c{b, f};
        return c.rg("rs");
      },
      [](const Binding& b) {
        Binding full = b;
        full["rs"] = bind_r(b, "r") * bind_r(b, "s");
        return full;
      }));

  // (rngrsp) r-gates add through the W pair (pi-conjugated on the right).
  out.push_back(make(
      "rngrsp", "zw.III", {{"r", kR}, {"s", kR}},
      [](const Binding& b, bool f) {
        Ctx c{b, f};
        return seqs({bw_term(), par(c.rg("r"), c.rg("s")), zw_bent_w()});
      },
      [](const Binding& b, bool f) {
        Ctx c{b, f};
        return seqs({bpi_term(), c.rg("rps"), bpi_term()});
      },
      [](const Binding& b) {
        Binding full = b;
        full["rps"] = bind_r(b, "r") + bind_r(b, "s");
        return full;
      }));

  // (natrc) The r-gate slides through the crossing.
  out.push_back(make(
      "natrc", "zw.III", {{"r", kR}},
      [](const Binding& b, bool f) {
        Ctx c{b, f};
        return seq(par(c.rg("r"), wire()), tau());
      },
      [](const Binding& b, bool f) {
        Ctx c{b, f};
        return seq(tau(), par(wire(), c.rg("r")));
      }));

  // (natrec) The r-gate slides across the cup.
  out.push_back(make(
      "natrec", "zw.III", {{"r", kR}},
      [](const Binding& b, bool f) {
        Ctx c{b, f};
        return seq(par(c.rg("r"), wire()), cup_term());
      },
      [](const Binding& b, bool f) {
        Ctx c{b, f};
        return seq(par(wire(), c.rg("r")), cup_term());
      }));

  // (phr) The r-gate copies through the white copy.
  out.push_back(make(
      "phr", "zw.III", {{"r", kR}},
      [](const Binding& b, bool f) {
        Ctx c{b, f};
        return seq(c.rg("r"), ws(1, 2));
      },
      [](const Binding& b, bool f) {
        Ctx c{b, f};
        return seq(ws(1, 2), par(c.rg("r"), wire()));
      }));
}

}  // namespace zxzw
