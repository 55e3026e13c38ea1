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

// The ZX rewrite catalog. Every equation is scalar-exact: where a law only
// holds up to a factor, the factor appears explicitly as a scalar subdiagram
// (the sqrt(2) dumbbell, phase dots, or a half-weight lambda gadget). All
// entries are validated numerically by the soundness sweep.

#include "zxzw/rules.hpp"

namespace zxzw {

namespace {

struct Ctx {
  const Binding& b;
  bool free_ok;

  Term pg(const std::string& sym) const {
    if (b.count(sym)) return phase_term(bind_phase(b, sym));
    if (free_ok) return Term::gen(Generator::phase_var(sym));
    throw DomainError("missing angle binding: " + sym);
  }
  Phase ph(const std::string& sym) const {
    if (!b.count(sym) && free_ok)
      throw RewriteError("parameter expression over " + sym + " requires a bound value");
    return bind_phase(b, sym);
  }
  Term lb(const std::string& sym) const {
    if (b.count(sym)) return lambda_term(bind_scalar(b, sym));
    if (free_ok) return Term::gen(Generator::lambda_var(sym));
    throw DomainError("missing scalar binding: " + sym);
  }
  // Phased spider template: the phase gate sits on the first output leg
  // (first input leg when there are no outputs), like the zspider sugar.
  Term zsp(int n, int m, const std::string& sym) const {
    if (m > 0) return seq(zs(n, m), par(pg(sym), identity_wires(m - 1)));
    if (n > 0) return seq(par(pg(sym), identity_wires(n - 1)), zs(n, m));
    throw DomainError("template (0,0) spider with symbolic phase unsupported");
  }
};

RuleSchema make(const std::string& name, const std::string& group, std::vector<ParamSpec> params,
                std::function<Term(const Binding&, bool)> lhs,
                std::function<Term(const Binding&, bool)> rhs,
                std::function<Binding(const Binding&)> side = nullptr) {
  RuleSchema r;
  r.name = name;
  r.calculus = Calculus::ZX;
  r.group = group;
  r.params = std::move(params);
  r.side = std::move(side);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

constexpr auto kAngle = ParamDomain::Angle;
constexpr auto kScalar = ParamDomain::Scalar;

}  // namespace

void register_zx_rules(std::vector<RuleSchema>& out) {
  // --- core rules ---

  // (S1) Two spiders joined by one wire fuse; phases add.
  out.push_back(make(
      "S1", "zx.core", {{"alpha", kAngle}, {"beta", kAngle}},
      [](const Binding& b, bool f) {
        Ctx c{b, f};
        return seq(par(c.zsp(1, 2, "alpha"), wire()), par(wire(), c.zsp(2, 1, "beta")));
      },
      [](const Binding& b, bool f) {
        Ctx c{b, f};
        return zspider(2, 2, c.ph("alpha") + c.ph("beta"));
      }));

  // (S2) The phase-free (1,1) spider is a plain wire.
  out.push_back(make(
      "S2", "zx.core", {},
      [](const Binding&, bool) { return zs(1, 1); },
      [](const Binding&, bool) { return wire(); }));

  // (S3) The spider-induced cap/cup satisfy the snake.
  out.push_back(make(
      "S3", "zx.core", {},
      [](const Binding&, bool) {
        return seq(par(zs(0, 2), wire()), par(wire(), zs(2, 0)));
      },
      [](const Binding&, bool) { return wire(); }));

  // (H2) Hadamard is an involution.
  out.push_back(make(
      "H2", "zx.core", {},
      [](const Binding&, bool) { return seq(had(), had()); },
      [](const Binding&, bool) { return wire(); }));

  // (H3) Hadamard slides across the cap.
  out.push_back(make(
      "H3", "zx.core", {},
      [](const Binding&, bool) { return seq(cap_term(), par(had(), wire())); },
      [](const Binding&, bool) { return seq(cap_term(), par(wire(), had())); }));

  // (H) Colour change: Hadamards on all legs of a green spider give the red
  // node (stated with the red macro on the right).
  out.push_back(make(
      "H", "zx.core", {{"alpha", kAngle}},
      [](const Binding& b, bool f) {
        Ctx c{b, f};
        return seq(c.zsp(1, 2, "alpha"), par(had(), had()));
      },
      [](const Binding& b, bool f) {
        Ctx c{b, f};
        return seq(had(), seqs({seq(had(), c.zsp(1, 2, "alpha")), par(had(), had())}));
      }));

  // (B1) The red point copies through a green spider (sqrt(2) tracked).
  out.push_back(make(
      "B1", "zx.core", {},
      [](const Binding&, bool) {
        return par(seq(xstate(Phase::zero()), zs(1, 2)), dumbbell());
      },
      [](const Binding&, bool) { return par(xstate(Phase::zero()), xstate(Phase::zero())); }));

  // (B2) Bialgebra between the green copy and the red merge.
  out.push_back(make(
      "B2", "zx.core", {},
      [](const Binding&, bool) {
        return seq(xspider(2, 1, Phase::zero()), zs(1, 2));
      },
      [](const Binding&, bool) {
        Term core = seqs({par(zs(1, 2), zs(1, 2)),
                          pars({wire(), swap_term(), wire()}),
                          par(xspider(2, 1, Phase::zero()), xspider(2, 1, Phase::zero()))});
        return par(core, dumbbell());
      }));

  // (EU) Euler decomposition of the Hadamard into single-qubit phases.
  out.push_back(make(
      "EU", "zx.core", {},
      [](const Binding&, bool) { return par(had(), dot(Phase::rational(1, 2))); },
      [](const Binding&, bool) {
        Term chain = seqs({phase_term(Phase::rational(1, 2)), xspider(1, 1, Phase::rational(1, 2)),
                           phase_term(Phase::rational(1, 2))});
        return par(chain, dumbbell());
      }));

  // (K2) Pushing a green phase through a red pi negates it; the phase dots on
  // the two sides carry the scalar exactly.
  out.push_back(make(
      "K2", "zx.core", {{"alpha", kAngle}},
      [](const Binding& b, bool f) {
        Ctx c{b, f};
        return par(seq(c.pg("alpha"), xspider(1, 1, Phase::pi())), dot(-c.ph("alpha")));
      },
      [](const Binding& b, bool f) {
        Ctx c{b, f};
        return par(seq(xspider(1, 1, Phase::pi()), phase_term(-c.ph("alpha"))), dot(c.ph("alpha")));
      }));

  // (S4) The red point deletes a phase gate.
  out.push_back(make(
      "S4", "zx.core", {{"alpha", kAngle}},
      [](const Binding& b, bool f) {
        Ctx c{b, f};
        return seq(c.pg("alpha"), xeffect(Phase::zero()));
      },
      [](const Binding&, bool) { return xeffect(Phase::zero()); }));

  // --- lambda and addition rules ---

  // (IV) The sqrt(2) dumbbell cancels against its lambda-weighted inverse.
  out.push_back(make(
      "IV", "zx.scalar", {},
      [](const Binding&, bool) { return par(dumbbell(), half_gadget()); },
      [](const Binding&, bool) { return empty_term(); }));

  // (L1) A lambda box slides through a copy spider onto one branch.
  out.push_back(make(
      "L1", "zx.scalar", {{"lam", kScalar}},
      [](const Binding& b, bool f) {
        Ctx c{b, f};
        return seq(c.lb("lam"), zs(1, 2));
      },
      [](const Binding& b, bool f) {
        Ctx c{b, f};
        return seq(zs(1, 2), par(c.lb("lam"), wire()));
      }));

  // (AD) Addition: two weighted phases combined through the W pair equal the
  // polar sum lam e^{i gam} = lam1 e^{i beta} + lam2 e^{i alpha}.
  out.push_back(make(
      "AD", "zx.scalar",
      {{"lam1", kScalar}, {"beta", kAngle}, {"lam2", kScalar}, {"alpha", kAngle}},
      [](const Binding& b, bool f) {
        Ctx c{b, f};
        return seqs({zx_coadd(),
                     par(seq(c.lb("lam1"), c.pg("beta")), seq(c.lb("lam2"), c.pg("alpha"))),
                     zx_add()});
      },
      [](const Binding& b, bool f) {
        Ctx c{b, f};
        return seq(c.lb("lam"), c.pg("gam"));
      },
      [](const Binding& b) {
        Binding full = b;
        auto [lam, gam] = ad_compose(bind_scalar(b, "lam1"), bind_phase(b, "beta"),
                                     bind_scalar(b, "lam2"), bind_phase(b, "alpha"));
        full["lam"] = lam;
        full["gam"] = gam;
        return full;
      }));

  // (L2) The red point deletes a lambda box.
  out.push_back(make(
      "L2", "zx.scalar", {{"lam", kScalar}},
      [](const Binding& b, bool f) {
        Ctx c{b, f};
        return seq(c.lb("lam"), xeffect(Phase::zero()));
      },
      [](const Binding&, bool) { return xeffect(Phase::zero()); }));

  // (L3) The lambda-1 box is a plain wire.
  out.push_back(make(
      "L3", "zx.scalar", {},
      [](const Binding&, bool) { return lambda_term(1.0); },
      [](const Binding&, bool) { return wire(); }));

  // (L4) Stacked lambda boxes multiply.
  out.push_back(make(
      "L4", "zx.scalar", {{"lam1", kScalar}, {"lam2", kScalar}},
      [](const Binding& b, bool f) {
        Ctx c{b, f};
        return seq(c.lb("lam1"), c.lb("lam2"));
      },
      [](const Binding& b, bool f) {
        Ctx c{b, f};
        return c.lb("lamp");
      },
      [](const Binding& b) {
        Binding full = b;
        full["lamp"] = bind_scalar(b, "lam1") * bind_scalar(b, "lam2");
        return full;
      }));

  // (L5) Lambda boxes commute with phase gates.
  out.push_back(make(
      "L5", "zx.scalar", {{"lam", kScalar}, {"alpha", kAngle}},
      [](const Binding& b, bool f) {
        Ctx c{b, f};
        return seq(c.lb("lam"), c.pg("alpha"));
      },
      [](const Binding& b, bool f) {
        Ctx c{b, f};
        return seq(c.pg("alpha"), c.lb("lam"));
      }));

  // --- triangle rules ---

  // (TR1) Conjugation by red pi flips the triangle.
  out.push_back(make(
      "TR1", "zx.triangle", {},
      [](const Binding&, bool) {
        return seqs({xspider(1, 1, Phase::pi()), tri(), xspider(1, 1, Phase::pi())});
      },
      [](const Binding&, bool) { return bent(tri()); }));

  // (TR2) The red point is fixed by the triangle.
  out.push_back(make(
      "TR2", "zx.triangle", {},
      [](const Binding&, bool) { return seq(xstate(Phase::zero()), tri()); },
      [](const Binding&, bool) { return xstate(Phase::zero()); }));

  // (TR3) The red pi point becomes the green point (with sqrt 2).
  out.push_back(make(
      "TR3", "zx.triangle", {},
      [](const Binding&, bool) { return seq(xstate(Phase::pi()), tri()); },
      [](const Binding&, bool) { return par(zstate(Phase::zero()), dumbbell()); }));

  // (TR4) The green pi point becomes the red pi point, weight -1/sqrt(2).
  out.push_back(make(
      "TR4", "zx.triangle", {},
      [](const Binding&, bool) { return seq(zstate(Phase::pi()), tri()); },
      [](const Binding&, bool) {
        Term neg_half = seqs({zstate(Phase::zero()), phase_term(Phase::pi()), lambda_term(0.5),
                              xeffect(Phase::pi())});
        return par(xstate(Phase::pi()), neg_half);
      }));

  // (TR5) The red point is the unit of the triangle sum node.
  out.push_back(make(
      "TR5", "zx.triangle", {},
      [](const Binding&, bool) { return seq(par(xstate(Phase::zero()), wire()), zx_add()); },
      [](const Binding&, bool) { return par(wire(), dumbbell()); }));

  // (TR6) A green pi between two triangles is bare green pi.
  out.push_back(make(
      "TR6", "zx.triangle", {},
      [](const Binding&, bool) { return seqs({tri(), phase_term(Phase::pi()), tri()}); },
      [](const Binding&, bool) { return phase_term(Phase::pi()); }));

  // (TR7) Hopf law of the triangle sum pair: red pi is the antipode.
  out.push_back(make(
      "TR7", "zx.triangle", {},
      [](const Binding&, bool) {
        return seqs({zx_coadd(), par(wire(), xspider(1, 1, Phase::pi())), zx_add()});
      },
      [](const Binding&, bool) { return xspider(1, 1, Phase::pi()); }));

  // (TR8) Associativity of the sum node.
  out.push_back(make(
      "TR8", "zx.triangle", {},
      [](const Binding&, bool) { return seq(par(zx_add(), wire()), zx_add()); },
      [](const Binding&, bool) { return seq(par(wire(), zx_add()), zx_add()); }));

  // (TR9) Coassociativity of the co-sum node.
  out.push_back(make(
      "TR9", "zx.triangle", {},
      [](const Binding&, bool) { return seq(zx_coadd(), par(zx_coadd(), wire())); },
      [](const Binding&, bool) { return seq(zx_coadd(), par(wire(), zx_coadd())); }));

  // (TR10) The sum pair composes to the lambda-2 box.
  out.push_back(make(
      "TR10", "zx.triangle", {},
      [](const Binding&, bool) { return seq(zx_coadd(), zx_add()); },
      [](const Binding&, bool) { return lambda_term(2.0); }));

  // (TR11) A trace of triangle-with-red-pi is the empty diagram.
  out.push_back(make(
      "TR11", "zx.triangle", {},
      [](const Binding&, bool) {
        return seqs({cap_term(), par(seq(tri(), xspider(1, 1, Phase::pi())), wire()), cup_term()});
      },
      [](const Binding&, bool) { return empty_term(); }));

  // (TR12) A bare triangle trace is the circle.
  out.push_back(make(
      "TR12", "zx.triangle", {},
      [](const Binding&, bool) {
        return seqs({cap_term(), par(tri(), wire()), cup_term()});
      },
      [](const Binding&, bool) { return seq(cap_term(), cup_term()); }));

  // (TR13) Phase gates copy through the co-sum node.
  out.push_back(make(
      "TR13", "zx.triangle", {{"alpha", kAngle}},
      [](const Binding& b, bool f) {
        Ctx c{b, f};
        return seq(c.pg("alpha"), zx_coadd());
      },
      [](const Binding& b, bool f) {
        Ctx c{b, f};
        return seq(zx_coadd(), par(c.pg("alpha"), c.pg("alpha")));
      }));

  // (TR14) Lambda boxes copy through the co-sum node.
  out.push_back(make(
      "TR14", "zx.triangle", {{"lam", kScalar}},
      [](const Binding& b, bool f) {
        Ctx c{b, f};
        return seq(c.lb("lam"), zx_coadd());
      },
      [](const Binding& b, bool f) {
        Ctx c{b, f};
        return seq(zx_coadd(), par(c.lb("lam"), c.lb("lam")));
      }));
}

}  // namespace zxzw
