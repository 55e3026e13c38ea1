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

#include <json.hpp>

#include "zxzw/graph.hpp"
#include "zxzw/rules.hpp"

namespace zxzw {

/// Where a matched pattern sits inside a host graph: an injective node map
/// plus, for every pattern boundary wire, the host edge it rides on and
/// which end of that edge is the reconnection point.
struct Embedding {
  struct HalfEdge {
    int edge = -1;
    int end = 0;  // 0 = first endpoint of the edge, 1 = second
    bool operator==(const HalfEdge& o) const { return edge == o.edge && end == o.end; }
    bool operator<(const HalfEdge& o) const { return std::tie(edge, end) < std::tie(o.edge, o.end); }
  };
  std::map<int, int> node_map;  // pattern node id -> host node id
  std::vector<HalfEdge> inputs, outputs;

  bool operator==(const Embedding& o) const {
    return node_map == o.node_map && inputs == o.inputs && outputs == o.outputs;
  }
  bool operator<(const Embedding& o) const {
    return std::tie(node_map, inputs, outputs) < std::tie(o.node_map, o.inputs, o.outputs);
  }
};

struct MatchResult {
  Embedding emb;
  Binding binding;  // includes any metavariables solved from the host
};

/// All embeddings of the pattern into the host, in deterministic order
/// (lexicographic on host node ids). Pattern metavariable slots solve
/// against host parameter values. The pattern must contain at least one
/// generator node; bare-wire patterns cannot be anchored.
std::vector<MatchResult> find_matches(const Term& pattern, const Term& host);

/// Matches one side of a rule, solving parameters not fixed by `partial`.
std::vector<MatchResult> find_rule_matches(const RuleSchema& rule, Direction dir, const Term& host,
                                           const Binding& partial);

/// Replaces the embedded side of the rule by the instantiated opposite side,
/// rewired along the boundary. The outer arity is unchanged.
Term apply(const Term& host, const RuleSchema& rule, Direction dir, const Embedding& e,
           const Binding& b);

struct DerivationStep {
  std::string rule;
  Direction dir = Direction::LR;
  std::map<int, int> site;  // pattern node id -> host node id (to_graph numbering)
  Binding binding;
};

struct Derivation {
  Term start;
  std::vector<DerivationStep> steps;
  Term end;
};

struct ReplayReport {
  bool ok = false;
  int failed_step = -1;  // -1 when every step applied
  std::string message;
  bool end_isomorphic = false;
  double semantic_deviation = 0.0;  // |start - end| as a sanity channel
  Term final;
};

/// Replays the steps from `start`; succeeds iff every step applies and the
/// result is graph-isomorphic to `end`.
ReplayReport replay(const Derivation& d);

/// Convenience simplifier: repeatedly applies spider fusion and the trivial
/// spider/Hadamard cancellations until no match remains. Not part of any
/// completeness claim; there is no terminating normalization strategy here.
Term greedy_fuse(const Term& t);

nlohmann::json binding_to_json(const Binding& b);
Binding binding_from_json(const nlohmann::json& j);
Derivation derivation_from_json(const nlohmann::json& j);
nlohmann::json derivation_to_json(const Derivation& d);

}  // namespace zxzw
