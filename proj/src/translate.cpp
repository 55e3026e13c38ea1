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

#include "zxzw/translate.hpp"

#include <cmath>
#include <mutex>

#include "zxzw/interpret.hpp"

namespace zxzw {

std::pair<double, Phase> polar(Complex r) {
  double lam = std::abs(r);
  if (lam == 0.0) return {0.0, Phase::zero()};
  return {lam, Phase::radians(std::atan2(r.imag(), r.real()))};
}

Term xw_image(const Generator& g) {
  switch (g.kind) {
    case GenKind::ZSpider: return ws(g.n, g.m);
    case GenKind::PhaseGate: return rgate_term(g.phase.unit());
    case GenKind::LambdaBox: return rgate_term(Complex(g.lambda, 0));
    case GenKind::Hadamard: return zw_hadamard();
    case GenKind::Triangle: return zw_triangle();
    case GenKind::Identity:
    case GenKind::Swap:
    case GenKind::Cap:
    case GenKind::Cup:
    case GenKind::Empty: return Term::gen(g);
    default:
      throw DomainError("xw_image: " + kind_name(g.kind) + " is not a ZX generator");
  }
}

Term wx_image(const Generator& g) {
  switch (g.kind) {
    case GenKind::WhiteSpider: return zs(g.n, g.m);
    case GenKind::RGate: {
      auto [lam, alpha] = polar(g.r);
      return seq(lambda_term(lam), phase_term(alpha));
    }
    case GenKind::BlackPi: return xspider(1, 1, Phase::pi());
    case GenKind::Crossing: return zx_crossing();
    case GenKind::BlackW: return zx_w();
    case GenKind::Identity:
    case GenKind::Swap:
    case GenKind::Cap:
    case GenKind::Cup:
    case GenKind::Empty: return Term::gen(g);
    default:
      throw DomainError("wx_image: " + kind_name(g.kind) + " is not a ZW generator");
  }
}

Term translate_with(const Term& d, const ImageFn& image) {
  switch (d.tag()) {
    case Term::Tag::Gen: return image(d.generator());
    case Term::Tag::Seq: return seq(translate_with(d.first(), image), translate_with(d.second(), image));
    case Term::Tag::Par: return par(translate_with(d.first(), image), translate_with(d.second(), image));
  }
  throw DomainError("unreachable term tag");
}

namespace {

void check_entry(const Generator& g, const Term& image) {
  TensorMatrix want = generator_matrix(g);
  TensorMatrix got = interpret(image);
  double dev = max_deviation(got, want);
  if (dev > 1e-12) {
    throw DomainError("translation table entry for " + g.str() + " deviates by " +
                      std::to_string(dev));
  }
}

void validate_tables_impl() {
  std::vector<Generator> zx_gens = {
      Generator::zspider(0, 0), Generator::zspider(1, 1), Generator::zspider(0, 2),
      Generator::zspider(2, 1), Generator::zspider(2, 3), Generator::hadamard(),
      Generator::triangle(),    Generator::identity(),    Generator::swap_gen(),
      Generator::cap(),         Generator::cup(),         Generator::empty()};
  for (const Phase& a : default_angle_grid()) zx_gens.push_back(Generator::phase_gate(a));
  for (double l : default_scalar_grid()) zx_gens.push_back(Generator::lambda_box(l));
  for (const auto& g : zx_gens) check_entry(g, xw_image(g));

  std::vector<Generator> zw_gens = {
      Generator::wspider(0, 0), Generator::wspider(1, 1), Generator::wspider(0, 2),
      Generator::wspider(2, 1), Generator::wspider(2, 3), Generator::black_pi(),
      Generator::black_w(),     Generator::crossing(),    Generator::identity(),
      Generator::swap_gen(),    Generator::cap(),         Generator::cup(),
      Generator::empty()};
  for (Complex r : default_r_grid()) zw_gens.push_back(Generator::rgate(r));
  for (const auto& g : zw_gens) check_entry(g, wx_image(g));
}

}  // namespace

void validate_translation_tables() {
  static std::once_flag flag;
  static std::exception_ptr failure;
  std::call_once(flag, [] {
    try {
      validate_tables_impl();
    } catch (...) {
      failure = std::current_exception();
    }
  });
  if (failure) std::rethrow_exception(failure);
}

Term to_zw(const Term& d) {
  if (d.calculus() == Calculus::ZW) throw DomainError("to_zw expects a ZX diagram");
  validate_translation_tables();
  return translate_with(d, xw_image);
}

Term to_zx(const Term& d) {
  if (d.calculus() == Calculus::ZX) throw DomainError("to_zx expects a ZW diagram");
  validate_translation_tables();
  return translate_with(d, wx_image);
}

std::pair<Term, RoundtripReport> roundtrip_zx(const Term& d) {
  Term there = to_zw(d);
  Term back = to_zx(there);
  RoundtripReport rep;
  rep.deviation = max_deviation(interpret(back), interpret(d));
  rep.iso_recovered = iso_check(back, d);
  return {back, rep};
}

TranslatedRulesReport check_translated_zw_rules(double tol, const ImageFn& image) {
  validate_translation_tables();
  ImageFn table = image ? image : ImageFn(wx_image);
  TranslatedRulesReport report;
  for (const RuleSchema& rule : catalog(Calculus::ZW)) {
    TranslatedRuleRow row;
    row.rule = rule.name;
    row.pass = true;
    for (const Binding& b : default_grid(rule)) {
      try {
        auto [l, r] = instantiate(rule, b);
        Term lt = translate_with(l, table);
        Term rt = translate_with(r, table);
        double dev = max_deviation(interpret(lt), interpret(rt));
        row.max_dev = std::max(row.max_dev, dev);
        if (dev > tol) row.pass = false;
      } catch (const Error& e) {
        row.pass = false;
        row.error = e.what();
      }
    }
    report.pass = report.pass && row.pass;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace zxzw
