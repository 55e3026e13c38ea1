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

#include "zxzw/random_terms.hpp"

namespace zxzw {

namespace {

constexpr double kTwoPi = 6.283185307179586;

Phase random_phase(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 3);
  switch (kind(rng)) {
    case 0: {
      std::uniform_int_distribution<int> num(0, 7);
      return Phase::rational(num(rng), 4);
    }
    default: {
      std::uniform_real_distribution<double> u(0.0, kTwoPi);
      return Phase::radians(u(rng));
    }
  }
}

struct Candidate {
  double weight;
  int n, m;
  std::function<Term(std::mt19937_64&)> build;
};

std::vector<Candidate> candidates(Calculus cal, const TermGenConfig& cfg) {
  std::vector<Candidate> cs;
  auto spider = [cal](int n, int m) {
    return cal == Calculus::ZW ? ws(n, m) : zs(n, m);
  };
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m) {
      if (n == 0 && m == 0) continue;
      cs.push_back({cfg.w_spider / 8.0, n, m, [spider, n, m](std::mt19937_64&) { return spider(n, m); }});
    }
  if (cal == Calculus::ZW) {
    cs.push_back({cfg.w_phase, 1, 1, [](std::mt19937_64& rng) {
                    std::uniform_real_distribution<double> u(-1.5, 1.5);
                    return rgate_term(Complex(u(rng), u(rng)));
                  }});
    cs.push_back({cfg.w_unary, 1, 1, [](std::mt19937_64&) { return bpi_term(); }});
    cs.push_back({cfg.w_binary, 2, 2, [](std::mt19937_64&) { return Term::gen(Generator::crossing()); }});
    cs.push_back({cfg.w_wnode, 1, 2, [](std::mt19937_64&) { return bw_term(); }});
  } else {
    cs.push_back({cfg.w_phase, 1, 1, [](std::mt19937_64& rng) { return phase_term(random_phase(rng)); }});
    cs.push_back({cfg.w_unary / 2.0, 1, 1, [](std::mt19937_64&) { return had(); }});
    cs.push_back({cfg.w_unary / 2.0, 1, 1, [](std::mt19937_64&) { return tri(); }});
    cs.push_back({cfg.w_lambda, 1, 1, [](std::mt19937_64& rng) {
                    std::uniform_real_distribution<double> u(0.0, 2.5);
                    return lambda_term(u(rng));
                  }});
  }
  cs.push_back({cfg.w_binary, 2, 2, [](std::mt19937_64&) { return swap_term(); }});
  cs.push_back({cfg.w_cupcap, 0, 2, [](std::mt19937_64&) { return cap_term(); }});
  cs.push_back({cfg.w_cupcap, 2, 0, [](std::mt19937_64&) { return cup_term(); }});
  return cs;
}

}  // namespace

Term random_term(std::mt19937_64& rng, Calculus cal, const TermGenConfig& cfg) {
  std::vector<Candidate> cs = candidates(cal, cfg);
  std::uniform_int_distribution<int> wire_dist(0, cfg.max_wires);
  std::uniform_int_distribution<int> budget_dist(1, cfg.max_generators);
  int wires = wire_dist(rng);
  int budget = budget_dist(rng);

  Term t = identity_wires(wires);
  int used = 0;
  int stall = 0;
  while (used < budget && stall < 50) {
    std::vector<double> w;
    for (const auto& c : cs) {
      bool fits = c.n <= wires && wires - c.n + c.m <= cfg.max_wires;
      w.push_back(fits ? c.weight : 0.0);
    }
    double total = 0;
    for (double x : w) total += x;
    if (total == 0) break;
    std::uniform_real_distribution<double> pick(0.0, total);
    double z = pick(rng);
    std::size_t idx = 0;
    for (; idx < w.size(); ++idx) {
      z -= w[idx];
      if (z <= 0) break;
    }
    if (idx >= cs.size()) idx = cs.size() - 1;
    const Candidate& c = cs[idx];
    if (c.n > wires || wires - c.n + c.m > cfg.max_wires) {
      ++stall;
      continue;
    }
    std::uniform_int_distribution<int> pos_dist(0, wires - c.n);
    int pos = pos_dist(rng);
    Term piece = c.build(rng);
    std::vector<Term> parts;
    if (pos > 0) parts.push_back(identity_wires(pos));
    parts.push_back(piece);
    if (wires - pos - c.n > 0) parts.push_back(identity_wires(wires - pos - c.n));
    t = seq(t, pars(parts));
    wires = wires - c.n + c.m;
    used += piece.size();
  }
  return t;
}

Binding random_binding(std::mt19937_64& rng, const RuleSchema& rule) {
  Binding b;
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::uniform_real_distribution<double> scalar(0.0, 3.0);
  std::uniform_real_distribution<double> comp(-2.0, 2.0);
  for (const auto& ps : rule.params) {
    switch (ps.domain) {
      case ParamDomain::Angle: b[ps.name] = Phase::radians(angle(rng)); break;
      case ParamDomain::Scalar: b[ps.name] = scalar(rng); break;
      case ParamDomain::ComplexR: b[ps.name] = Complex(comp(rng), comp(rng)); break;
    }
  }
  return b;
}

}  // namespace zxzw
