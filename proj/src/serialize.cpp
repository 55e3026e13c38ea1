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

#include "zxzw/serialize.hpp"

#include "zxzw/builders.hpp"

namespace zxzw {

using nlohmann::json;

json phase_to_json(const Phase& p) {
  if (p.is_rational()) return json{{"pi_rational", {p.num(), p.den()}}};
  return json{{"radians", p.value()}};
}

Phase phase_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("phase must be an object with pi_rational or radians");
  if (j.contains("pi_rational")) {
    const auto& pr = j.at("pi_rational");
    if (!pr.is_array() || pr.size() != 2 || !pr[0].is_number_integer() || !pr[1].is_number_integer())
      throw ParseError("pi_rational must be an integer pair [p, q]");
    return Phase::rational(pr[0].get<std::int64_t>(), pr[1].get<std::int64_t>());
  }
  if (j.contains("radians")) {
    if (!j.at("radians").is_number()) throw ParseError("radians must be a number");
    return Phase::radians(j.at("radians").get<double>());
  }
  throw ParseError("phase object needs pi_rational or radians");
}

json term_to_json(const Term& d) {
  switch (d.tag()) {
    case Term::Tag::Seq: return json{{"seq", {term_to_json(d.first()), term_to_json(d.second())}}};
    case Term::Tag::Par: return json{{"par", {term_to_json(d.first()), term_to_json(d.second())}}};
    case Term::Tag::Gen: break;
  }
  const Generator& g = d.generator();
  if (g.var) throw DomainError("cannot serialize a pattern metavariable");
  json j{{"gen", kind_name(g.kind)}};
  switch (g.kind) {
    case GenKind::ZSpider:
    case GenKind::WhiteSpider:
      j["n"] = g.n;
      j["m"] = g.m;
      break;
    case GenKind::PhaseGate: j["phase"] = phase_to_json(g.phase); break;
    case GenKind::LambdaBox: j["lambda"] = g.lambda; break;
    case GenKind::RGate:
      j["re"] = g.r.real();
      j["im"] = g.r.imag();
      break;
    default: break;
  }
  return j;
}

static int legs_field(const json& j, const char* name) {
  if (!j.contains(name) || !j.at(name).is_number_integer())
    throw ParseError(std::string("spider needs integer field ") + name);
  int v = j.at(name).get<int>();
  if (v < 0) throw DomainError(std::string("spider field ") + name + " must be non-negative");
  return v;
}

Term term_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("diagram node must be a JSON object");
  if (j.contains("seq")) {
    const auto& arr = j.at("seq");
    if (!arr.is_array() || arr.size() != 2) throw ParseError("seq expects [T, T]");
    return seq(term_from_json(arr[0]), term_from_json(arr[1]));
  }
  if (j.contains("par")) {
    const auto& arr = j.at("par");
    if (!arr.is_array() || arr.size() != 2) throw ParseError("par expects [T, T]");
    return par(term_from_json(arr[0]), term_from_json(arr[1]));
  }
  if (!j.contains("gen") || !j.at("gen").is_string())
    throw ParseError("diagram node needs seq, par, or gen");
  std::string name = j.at("gen").get<std::string>();
  if (name == "zspider") {
    int n = legs_field(j, "n"), m = legs_field(j, "m");
    if (j.contains("phase")) return zspider(n, m, phase_from_json(j.at("phase")));
    return Term::gen(Generator::zspider(n, m));
  }
  if (name == "wspider") {
    return Term::gen(Generator::wspider(legs_field(j, "n"), legs_field(j, "m")));
  }
  if (name == "phase") {
    if (!j.contains("phase")) throw ParseError("phase gate needs a phase field");
    return Term::gen(Generator::phase_gate(phase_from_json(j.at("phase"))));
  }
  if (name == "lambda") {
    if (!j.contains("lambda") || !j.at("lambda").is_number())
      throw ParseError("lambda box needs a numeric lambda field");
    return Term::gen(Generator::lambda_box(j.at("lambda").get<double>()));
  }
  if (name == "rgate") {
    if (!j.contains("re") || !j.contains("im") || !j.at("re").is_number() || !j.at("im").is_number())
      throw ParseError("rgate needs numeric re and im fields");
    return Term::gen(Generator::rgate(Complex(j.at("re").get<double>(), j.at("im").get<double>())));
  }
  if (name == "h") return Term::gen(Generator::hadamard());
  if (name == "triangle") return Term::gen(Generator::triangle());
  if (name == "cross") return Term::gen(Generator::crossing());
  if (name == "bpi") return Term::gen(Generator::black_pi());
  if (name == "bw") return Term::gen(Generator::black_w());
  if (name == "id") return Term::gen(Generator::identity());
  if (name == "swap") return Term::gen(Generator::swap_gen());
  if (name == "cap") return Term::gen(Generator::cap());
  if (name == "cup") return Term::gen(Generator::cup());
  if (name == "empty") return Term::gen(Generator::empty());
  throw ParseError("unknown generator kind: " + name);
}

std::string serialize(const Term& d) { return term_to_json(d).dump(); }

Term deserialize(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return term_from_json(j);
}

json matrix_to_json(const TensorMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) {
      row.push_back(json::array({m.at(i, c).real(), m.at(i, c).imag()}));
    }
    rows.push_back(row);
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

}  // namespace zxzw
