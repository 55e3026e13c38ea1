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

#include <string>

#include <json.hpp>

#include "zxzw/tensor.hpp"
#include "zxzw/term.hpp"

namespace zxzw {

/// Diagram document grammar (UTF-8 JSON):
///   {"seq":[T,T]} | {"par":[T,T]} | {"gen": name, ...params}
/// with names zspider (n, m, optional phase), phase, h, lambda, triangle,
/// id, swap, cap, cup, empty, wspider (n, m), rgate (re, im), cross, bpi, bw.
/// Phases encode as {"pi_rational":[p,q]} or {"radians": x}. A zspider with a
/// phase field is accepted as sugar and elaborates to spider + phase gate.
nlohmann::json term_to_json(const Term& d);
Term term_from_json(const nlohmann::json& j);

std::string serialize(const Term& d);
/// Throws ParseError (with position for syntax errors) or DomainError.
Term deserialize(const std::string& text);

nlohmann::json phase_to_json(const Phase& p);
Phase phase_from_json(const nlohmann::json& j);

/// Matrix dump: {"rows": R, "cols": C, "entries": row-major [re, im] pairs}.
nlohmann::json matrix_to_json(const TensorMatrix& m);

}  // namespace zxzw
