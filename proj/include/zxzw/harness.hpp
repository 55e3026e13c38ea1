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

#include <cstdint>

#include "zxzw/random_terms.hpp"
#include "zxzw/rewrite.hpp"
#include "zxzw/translate.hpp"

namespace zxzw {

struct HarnessConfig {
  double tol = 1e-9;
  std::vector<Phase> angles = default_angle_grid();
  std::vector<double> scalars = default_scalar_grid();
  std::uint64_t seed = 1;
  int samples = 500;
  TermGenConfig gen;
  bool with_mutation = false;
};

/// One check outcome. A failing record always carries a reproducible
/// counterexample in `details` (serialized terms, bindings, or seeds).
struct CheckRecord {
  std::string check;
  std::string anchor;
  bool pass = false;
  double max_dev = 0.0;
  nlohmann::json details;  // null unless needed
};

struct Report {
  std::vector<CheckRecord> records;
  bool all_pass() const {
    for (const auto& r : records)
      if (!r.pass) return false;
    return true;
  }
};

/// Soundness sweep over one catalog; with cfg.with_mutation, each rule also
/// gets a perturbed copy that must fail.
Report run_check_rules(Calculus cal, const HarnessConfig& cfg);

/// Semantic equality of two diagrams (the completeness hypothesis).
Report run_verify_equiv(const Term& a, const Term& b, const HarnessConfig& cfg);

/// The proof-shaped pipeline on two diagrams: semantic equality, translation
/// preservation both ways, ZW-level equality, and round-trip recovery.
Report run_pipeline(const Term& a, const Term& b, const HarnessConfig& cfg);

/// Seeded random-corpus checks for the translation functors and round trip.
Report run_translation_sweep(const HarnessConfig& cfg);

/// Rewrite soundness: random (rule, site) applications preserve semantics.
Report run_rewrite_sweep(const HarnessConfig& cfg, int draws);

std::string report_to_jsonl(const Report& rep);
std::string report_summary(const Report& rep);

/// Builds a random host that is guaranteed to contain `inst` as a subdiagram.
Term embed_in_random_host(std::mt19937_64& rng, const Term& inst, Calculus cal,
                          const TermGenConfig& cfg);

}  // namespace zxzw
