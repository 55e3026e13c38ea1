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

#include "zxzw/rules.hpp"

#include <cmath>

#include "zxzw/interpret.hpp"

namespace zxzw {

void register_zx_rules(std::vector<RuleSchema>& out);
void register_zw_rules(std::vector<RuleSchema>& out);

Phase bind_phase(const Binding& b, const std::string& sym) {
  auto it = b.find(sym);
  if (it == b.end()) throw DomainError("missing angle binding: " + sym);
  if (const Phase* p = std::get_if<Phase>(&it->second)) return *p;
  throw DomainError("binding " + sym + " is not an angle");
}

double bind_scalar(const Binding& b, const std::string& sym) {
  auto it = b.find(sym);
  if (it == b.end()) throw DomainError("missing scalar binding: " + sym);
  if (const double* d = std::get_if<double>(&it->second)) {
    if (*d < 0) throw DomainError("scalar binding " + sym + " must be >= 0");
    return *d;
  }
  throw DomainError("binding " + sym + " is not a scalar");
}

Complex bind_r(const Binding& b, const std::string& sym) {
  auto it = b.find(sym);
  if (it == b.end()) throw DomainError("missing complex binding: " + sym);
  if (const Complex* c = std::get_if<Complex>(&it->second)) return *c;
  throw DomainError("binding " + sym + " is not complex");
}

const std::vector<RuleSchema>& catalog(Calculus c) {
  static const std::vector<RuleSchema> zx = [] {
    std::vector<RuleSchema> v;
    register_zx_rules(v);
    return v;
  }();
  static const std::vector<RuleSchema> zw = [] {
    std::vector<RuleSchema> v;
    register_zw_rules(v);
    return v;
  }();
  if (c == Calculus::ZX) return zx;
  if (c == Calculus::ZW) return zw;
  throw DomainError("catalog: calculus must be ZX or ZW");
}

const RuleSchema& find_rule(Calculus c, const std::string& name) {
  for (const auto& r : catalog(c))
    if (r.name == name) return r;
  throw DomainError("no rule named " + name + " in the " + calculus_name(c) + " catalog");
}

static void validate_binding(const RuleSchema& rule, const Binding& b) {
  for (const auto& ps : rule.params) {
    switch (ps.domain) {
      case ParamDomain::Angle: bind_phase(b, ps.name); break;
      case ParamDomain::Scalar: bind_scalar(b, ps.name); break;
      case ParamDomain::ComplexR: bind_r(b, ps.name); break;
    }
  }
}

std::pair<Term, Term> instantiate(const RuleSchema& rule, const Binding& b) {
  validate_binding(rule, b);
  Binding full = rule.has_side() ? rule.side(b) : b;
  Term l = rule.lhs(full, false);
  Term r = rule.rhs(full, false);
  if (!(l.arity() == r.arity())) {
    throw DomainError("rule " + rule.name + " instantiated with unequal arities " + l.arity().str() +
                      " vs " + r.arity().str());
  }
  return {l, r};
}

Term instantiate_side(const RuleSchema& rule, Direction dir, const Binding& b, bool allow_free) {
  Binding full = b;
  if (!allow_free) {
    validate_binding(rule, b);
    if (rule.has_side()) full = rule.side(b);
  } else if (rule.has_side()) {
    // Side conditions need every input parameter; run them only when possible.
    bool complete = true;
    for (const auto& ps : rule.params) complete = complete && b.count(ps.name) > 0;
    if (complete) full = rule.side(b);
  }
  return dir == Direction::LR ? rule.lhs(full, allow_free) : rule.rhs(full, allow_free);
}

std::pair<double, Phase> ad_compose(double l1, const Phase& beta, double l2, const Phase& alpha) {
  if (l1 < 0 || l2 < 0 || !std::isfinite(l1) || !std::isfinite(l2))
    throw DomainError("ad_compose: lambdas must be finite and >= 0");
  Complex s = l1 * beta.unit() + l2 * alpha.unit();
  double lam = std::abs(s);
  if (lam <= 1e-12 * (l1 + l2 + 1.0)) return {0.0, Phase::zero()};
  return {lam, Phase::radians(std::atan2(s.imag(), s.real()))};
}

Term decompose_lambda(double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda))
    throw DomainError("decompose_lambda: lambda must be finite and >= 0");
  if (lambda == 1.0) return wire();
  int doublings = 0;
  double rest = lambda;
  while (rest > 2.0) {
    rest /= 2.0;  // exact in binary floating point
    ++doublings;
  }
  std::vector<Term> chain;
  chain.push_back(pair2(Phase::radians(std::acos(rest / 2.0))));
  for (int i = 0; i < doublings; ++i) chain.push_back(pair2(Phase::zero()));
  return seqs(chain);
}

std::vector<Phase> default_angle_grid() {
  return {Phase::zero(),          Phase::rational(1, 4), Phase::rational(1, 2), Phase::pi(),
          Phase::rational(3, 2),  Phase::radians(0.3),   Phase::radians(2.1)};
}

std::vector<double> default_scalar_grid() { return {0.0, 0.5, 1.0, 2.0, 2.5}; }

std::vector<Complex> default_r_grid() {
  std::vector<Complex> rs;
  for (double l : default_scalar_grid())
    for (const Phase& a : default_angle_grid()) rs.push_back(l * a.unit());
  return rs;
}

std::vector<Binding> default_grid(const RuleSchema& rule, const std::vector<Phase>& angles,
                                  const std::vector<double>& scalars,
                                  const std::vector<Complex>& rs) {
  std::vector<Binding> grid{Binding{}};
  for (const auto& ps : rule.params) {
    std::vector<Binding> next;
    for (const auto& base : grid) {
      switch (ps.domain) {
        case ParamDomain::Angle:
          for (const Phase& a : angles) {
            Binding b = base;
            b[ps.name] = a;
            next.push_back(std::move(b));
          }
          break;
        case ParamDomain::Scalar:
          for (double l : scalars) {
            Binding b = base;
            b[ps.name] = l;
            next.push_back(std::move(b));
          }
          break;
        case ParamDomain::ComplexR:
          for (Complex r : rs) {
            Binding b = base;
            b[ps.name] = r;
            next.push_back(std::move(b));
          }
          break;
      }
    }
    grid = std::move(next);
  }
  return grid;
}

std::vector<Binding> default_grid(const RuleSchema& rule) {
  return default_grid(rule, default_angle_grid(), default_scalar_grid(), default_r_grid());
}

RuleReport check_rule_soundness(const RuleSchema& rule, const std::vector<Binding>& grid, double tol) {
  RuleReport report;
  report.rule = rule.name;
  report.pass = true;
  for (const auto& b : grid) {
    BindingResult row;
    row.binding = b;
    try {
      auto [l, r] = instantiate(rule, b);
      TensorMatrix ml = interpret(l), mr = interpret(r);
      row.max_dev = max_deviation(ml, mr);
      row.pass = row.max_dev <= tol;
    } catch (const Error& e) {
      row.pass = false;
      row.error = e.what();
    }
    report.pass = report.pass && row.pass;
    report.max_dev = std::max(report.max_dev, row.max_dev);
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

// Probe gadgets of size 0.1: a phase nudge in the calculus at hand, plus a
// pure-scalar variant for 0 -> 0 rules.
Term probe_gate(Calculus c) {
  if (c == Calculus::ZW) return rgate_term(std::polar(1.0, 0.1));
  return phase_term(Phase::radians(0.1));
}

Term probe_gate_conj(Calculus c) {
  if (c == Calculus::ZW) return seqs({bpi_term(), probe_gate(c), bpi_term()});
  return seqs({had(), probe_gate(c), had()});
}

Term probe_scalar(Calculus c) {
  if (c == Calculus::ZW) return zw_rloop(std::polar(1.0, 0.1) - Complex(1, 0));
  // Two dots whose product is e^{i 0.1}.
  double half_sum = 0.05;
  double half_diff = std::acos(0.5 - std::cos(half_sum));
  return par(dot(Phase::radians(2 * (half_sum / 2 + half_diff / 2))),
             dot(Phase::radians(2 * (half_sum / 2 - half_diff / 2))));
}

using RhsWrap = std::function<Term(const RuleSchema&, const Binding&, bool)>;

RuleSchema with_rhs(const RuleSchema& rule, const RhsWrap& wrap) {
  RuleSchema m = rule;
  m.name = rule.name + "~mut";
  auto original = std::make_shared<RuleSchema>(rule);
  m.rhs = [original, wrap](const Binding& b, bool free_ok) { return wrap(*original, b, free_ok); };
  return m;
}

}  // namespace

RuleSchema mutated_rule(const RuleSchema& rule) {
  std::vector<RuleSchema> candidates;

  // Shift the first angle parameter by 0.1 on the right side only.
  for (const auto& ps : rule.params) {
    if (ps.domain != ParamDomain::Angle) continue;
    std::string sym = ps.name;
    candidates.push_back(with_rhs(rule, [sym](const RuleSchema& orig, const Binding& b, bool free_ok) {
      Binding shifted = b;
      auto it = shifted.find(sym);
      if (it != shifted.end())
        it->second = std::get<Phase>(it->second) + Phase::radians(0.1);
      Binding full = orig.has_side() ? orig.side(shifted) : shifted;
      return orig.rhs(full, free_ok);
    }));
    break;
  }

  // Wire probes on the first output / input, in both bases, then a scalar.
  auto wrap_out = [](Term probe) {
    return [probe](const RuleSchema& orig, const Binding& b, bool free_ok) {
      Binding full = orig.has_side() ? orig.side(b) : b;
      Term t = orig.rhs(full, free_ok);
      int outs = t.arity().outputs;
      if (outs < 1) throw DomainError("probe needs an output wire");
      return seq(t, par(probe, identity_wires(outs - 1)));
    };
  };
  auto wrap_in = [](Term probe) {
    return [probe](const RuleSchema& orig, const Binding& b, bool free_ok) {
      Binding full = orig.has_side() ? orig.side(b) : b;
      Term t = orig.rhs(full, free_ok);
      int ins = t.arity().inputs;
      if (ins < 1) throw DomainError("probe needs an input wire");
      return seq(par(probe, identity_wires(ins - 1)), t);
    };
  };
  candidates.push_back(with_rhs(rule, wrap_out(probe_gate(rule.calculus))));
  candidates.push_back(with_rhs(rule, wrap_out(probe_gate_conj(rule.calculus))));
  candidates.push_back(with_rhs(rule, wrap_in(probe_gate(rule.calculus))));
  candidates.push_back(with_rhs(rule, wrap_in(probe_gate_conj(rule.calculus))));
  {
    Term probe = probe_scalar(rule.calculus);
    candidates.push_back(with_rhs(rule, [probe](const RuleSchema& orig, const Binding& b, bool free_ok) {
      Binding full = orig.has_side() ? orig.side(b) : b;
      return par(orig.rhs(full, free_ok), probe);
    }));
  }

  std::vector<Binding> grid = default_grid(rule);
  for (const auto& cand : candidates) {
    try {
      RuleReport rep = check_rule_soundness(cand, grid, 1e-9);
      bool effective = !rep.pass && rep.max_dev >= 1e-2;
      for (const auto& row : rep.rows) effective = effective && row.error.empty();
      if (effective) return cand;
    } catch (const Error&) {
      continue;
    }
  }
  throw DomainError("no effective mutation found for rule " + rule.name);
}

}  // namespace zxzw
