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
#include <vector>

#include "zxzw/term.hpp"

namespace zxzw {

/// One end of a graph edge. Identity, swap, cap, cup and the empty diagram
/// are absorbed into the wiring, so endpoints are only generator ports and
/// boundary positions. NodeIn/GraphOut consume a value ("downstream"),
/// NodeOut/GraphIn produce one ("upstream"). A cap shows up as an edge with
/// two downstream ends, a cup as one with two upstream ends.
struct Endpoint {
  enum class Kind { GraphIn, GraphOut, NodeIn, NodeOut };
  Kind kind = Kind::GraphIn;
  int node = -1;  // NodeIn/NodeOut only
  int index = 0;  // boundary position or port index within inputs/outputs

  static Endpoint graph_in(int i) { return {Kind::GraphIn, -1, i}; }
  static Endpoint graph_out(int i) { return {Kind::GraphOut, -1, i}; }
  static Endpoint node_in(int v, int p) { return {Kind::NodeIn, v, p}; }
  static Endpoint node_out(int v, int p) { return {Kind::NodeOut, v, p}; }

  bool is_upstream() const { return kind == Kind::GraphIn || kind == Kind::NodeOut; }

  bool operator==(const Endpoint& o) const {
    return kind == o.kind && node == o.node && index == o.index;
  }
  bool operator<(const Endpoint& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (node != o.node) return node < o.node;
    return index < o.index;
  }
  std::string str() const;
};

struct GraphEdge {
  Endpoint a, b;  // canonical order: a <= b
};

/// Boundary-ordered graph form of a Term. Node ids are the deterministic
/// left-to-right traversal order of the generators in the originating Term.
struct OpenGraph {
  std::vector<Generator> nodes;
  std::vector<GraphEdge> edges;
  int n_inputs = 0;
  int n_outputs = 0;
  int loops = 0;  // closed wire cycles with no generator on them (value 2 each)
  Calculus calculus = Calculus::Shared;

  /// Every port and boundary position is the endpoint of exactly one edge.
  void validate() const;
  int edge_at(const Endpoint& e) const;  // -1 if absent
};

OpenGraph to_graph(const Term& t);

/// Rebuilds a Term by topological layering into slices of parallel
/// generators padded with identities, reintroducing caps/cups/swaps as the
/// wiring demands. Semantics is preserved; syntax generally is not.
Term from_graph(const OpenGraph& g);

bool graphs_isomorphic(const OpenGraph& a, const OpenGraph& b);

/// Graph isomorphism respecting boundaries, generator kinds and parameters
/// (exact for rational phases, 1e-12 otherwise), with spider legs unordered.
bool iso_check(const Term& a, const Term& b);

}  // namespace zxzw
