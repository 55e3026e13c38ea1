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

#include <functional>

#include "zxzw/rules.hpp"

namespace zxzw {

/// Polar decomposition r = lambda e^{i alpha} with lambda >= 0 and
/// alpha in [0, 2 pi); r = 0 gives (0, 0) by convention.
std::pair<double, Phase> polar(Complex r);

using ImageFn = std::function<Term(const Generator&)>;

/// Per-generator image of a ZX generator in ZW. Structural generators map to
/// themselves; spiders to white spiders; phase gates and lambda boxes to
/// r-gates; H and the triangle to small W/pi constructions.
Term xw_image(const Generator& g);

/// Per-generator image of a ZW generator in ZX. The r-gate image is a lambda
/// box with a phase gate via the polar pair; the crossing and W node land on
/// spider/triangle gadgets.
Term wx_image(const Generator& g);

/// Structural recursion with the given per-generator image table.
Term translate_with(const Term& d, const ImageFn& image);

/// ZX -> ZW; validates the image tables against the matrix semantics on
/// first use (every entry must agree to 1e-12).
Term to_zw(const Term& d);
/// ZW -> ZX.
Term to_zx(const Term& d);

/// Forces the load-time semantic validation of both tables. Throws on any
/// entry whose interpretation deviates from its source by more than 1e-12.
void validate_translation_tables();

struct RoundtripReport {
  double deviation = 0.0;
  bool iso_recovered = false;
};

/// to_zx(to_zw(d)) with the semantic deviation from d and whether the
/// original is recovered syntactically (expected for structural generators).
std::pair<Term, RoundtripReport> roundtrip_zx(const Term& d);

struct TranslatedRuleRow {
  std::string rule;
  bool pass = false;
  double max_dev = 0.0;
  std::string error;
};

struct TranslatedRulesReport {
  bool pass = true;
  std::vector<TranslatedRuleRow> rows;
};

/// For every ZW rule and every default-grid binding, translates both sides
/// into ZX and compares interpretations to tol. `image` overrides the WX
/// table (fault-injection hook for tests); null means wx_image.
TranslatedRulesReport check_translated_zw_rules(double tol, const ImageFn& image = nullptr);

}  // namespace zxzw
