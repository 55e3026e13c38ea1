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

#include "zxzw/graph.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace zxzw {

std::string Endpoint::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::GraphIn: os << "in" << index; break;
    case Kind::GraphOut: os << "out" << index; break;
    case Kind::NodeIn: os << "n" << node << ".in" << index; break;
    case Kind::NodeOut: os << "n" << node << ".out" << index; break;
  }
  return os.str();
}

void OpenGraph::validate() const {
  std::map<Endpoint, int> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (const Endpoint& e : {edges[i].a, edges[i].b}) {
      if (e.kind == Endpoint::Kind::GraphIn && (e.index < 0 || e.index >= n_inputs))
        throw GraphError("edge references input boundary " + e.str() + " out of range");
      if (e.kind == Endpoint::Kind::GraphOut && (e.index < 0 || e.index >= n_outputs))
        throw GraphError("edge references output boundary " + e.str() + " out of range");
      if (e.kind == Endpoint::Kind::NodeIn || e.kind == Endpoint::Kind::NodeOut) {
        if (e.node < 0 || e.node >= static_cast<int>(nodes.size()))
          throw GraphError("edge references missing node " + e.str());
        Arity ar = nodes[e.node].arity();
        int lim = e.kind == Endpoint::Kind::NodeIn ? ar.inputs : ar.outputs;
        if (e.index < 0 || e.index >= lim) throw GraphError("port out of range: " + e.str());
      }
      if (seen.count(e)) throw GraphError("port used by two edges: " + e.str());
      seen[e] = static_cast<int>(i);
    }
  }
  auto require = [&](const Endpoint& e) {
    if (!seen.count(e)) throw GraphError("dangling port: " + e.str());
  };
  for (int i = 0; i < n_inputs; ++i) require(Endpoint::graph_in(i));
  for (int i = 0; i < n_outputs; ++i) require(Endpoint::graph_out(i));
  for (int v = 0; v < static_cast<int>(nodes.size()); ++v) {
    Arity ar = nodes[v].arity();
    for (int p = 0; p < ar.inputs; ++p) require(Endpoint::node_in(v, p));
    for (int p = 0; p < ar.outputs; ++p) require(Endpoint::node_out(v, p));
  }
}

int OpenGraph::edge_at(const Endpoint& e) const {
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].a == e || edges[i].b == e) return static_cast<int>(i);
  return -1;
}

// ---------------------------------------------------------------------------
// to_graph
// ---------------------------------------------------------------------------

namespace {

// Union-find over wire segments. Each class eventually holds the (at most
// two) real endpoints of one graph edge; a weld that closes a cycle with no
// endpoints on it is a free loop.
struct Welder {
  std::vector<int> parent;
  std::vector<std::vector<Endpoint>> reals;
  int loops = 0;

  int make() {
    parent.push_back(static_cast<int>(parent.size()));
    reals.emplace_back();
    return static_cast<int>(parent.size()) - 1;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      loops++;
      return;
    }
    parent[b] = a;
    for (auto& e : reals[b]) reals[a].push_back(e);
    reals[b].clear();
  }
  void attach(int slot, const Endpoint& e) { reals[find(slot)].push_back(e); }
};

struct Frag {
  std::vector<int> ins, outs;
};

Frag build_fragment(const Term& t, Welder& w, std::vector<Generator>& nodes) {
  switch (t.tag()) {
    case Term::Tag::Gen: {
      const Generator& g = t.generator();
      switch (g.kind) {
        case GenKind::Identity: {
          int s = w.make();
          return {{s}, {s}};
        }
        case GenKind::Swap: {
          int a = w.make(), b = w.make();
          return {{a, b}, {b, a}};
        }
        case GenKind::Cap: {
          int s = w.make();
          return {{}, {s, s}};
        }
        case GenKind::Cup: {
          int s = w.make();
          return {{s, s}, {}};
        }
        case GenKind::Empty:
          return {{}, {}};
        default: {
          int id = static_cast<int>(nodes.size());
          nodes.push_back(g);
          Arity ar = g.arity();
          Frag f;
          for (int p = 0; p < ar.inputs; ++p) {
            int s = w.make();
            w.attach(s, Endpoint::node_in(id, p));
            f.ins.push_back(s);
          }
          for (int p = 0; p < ar.outputs; ++p) {
            int s = w.make();
            w.attach(s, Endpoint::node_out(id, p));
            f.outs.push_back(s);
          }
          return f;
        }
      }
    }
    case Term::Tag::Seq: {
      Frag f1 = build_fragment(t.first(), w, nodes);
      Frag f2 = build_fragment(t.second(), w, nodes);
      for (std::size_t i = 0; i < f1.outs.size(); ++i) w.unite(f1.outs[i], f2.ins[i]);
      return {f1.ins, f2.outs};
    }
    case Term::Tag::Par: {
      Frag f1 = build_fragment(t.first(), w, nodes);
      Frag f2 = build_fragment(t.second(), w, nodes);
      Frag f;
      f.ins = f1.ins;
      f.ins.insert(f.ins.end(), f2.ins.begin(), f2.ins.end());
      f.outs = f1.outs;
      f.outs.insert(f.outs.end(), f2.outs.begin(), f2.outs.end());
      return f;
    }
  }
  throw GraphError("unreachable term tag");
}

}  // namespace

OpenGraph to_graph(const Term& t) {
  Welder w;
  OpenGraph g;
  Frag f = build_fragment(t, w, g.nodes);
  for (std::size_t i = 0; i < f.ins.size(); ++i) w.attach(f.ins[i], Endpoint::graph_in(static_cast<int>(i)));
  for (std::size_t i = 0; i < f.outs.size(); ++i) w.attach(f.outs[i], Endpoint::graph_out(static_cast<int>(i)));

  std::set<int> roots;
  for (std::size_t s = 0; s < w.parent.size(); ++s) roots.insert(w.find(static_cast<int>(s)));
  for (int root : roots) {
    auto& reals = w.reals[root];
    if (reals.empty()) continue;  // counted as a loop at weld time
    if (reals.size() != 2) throw GraphError("internal: wire with " + std::to_string(reals.size()) + " endpoints");
    GraphEdge e{reals[0], reals[1]};
    if (e.b < e.a) std::swap(e.a, e.b);
    g.edges.push_back(e);
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const GraphEdge& x, const GraphEdge& y) {
    if (!(x.a == y.a)) return x.a < y.a;
    return x.b < y.b;
  });
  g.n_inputs = t.arity().inputs;
  g.n_outputs = t.arity().outputs;
  g.loops = w.loops;
  g.calculus = t.calculus();
  return g;
}

// ---------------------------------------------------------------------------
// from_graph
// ---------------------------------------------------------------------------

namespace {

struct Wire {
  int edge = -1;
  bool cup_wait = false;  // waiting for the other upstream end of its edge
  Endpoint heading;       // destination when !cup_wait
};

class Extractor {
 public:
  explicit Extractor(const OpenGraph& g) : g_(g) {
    capped_.assign(g_.edges.size(), false);
    placed_.assign(g_.nodes.size(), false);
  }

  Term run() {
    init_frontier();
    for (;;) {
      if (step_cup()) continue;
      if (step_node()) continue;
      if (step_boundary_cap()) continue;
      if (step_reroute()) continue;
      break;
    }
    finish_outputs();

    Term result = slices_.empty() ? identity_wires(g_.n_inputs) : seqs(slices_);
    for (int i = 0; i < g_.loops; ++i) {
      result = par(result, seq(Term::gen(Generator::cap()), Term::gen(Generator::cup())));
    }
    return result;
  }

 private:
  const OpenGraph& g_;
  std::vector<Wire> frontier_;
  std::vector<Term> slices_;
  std::vector<bool> capped_, placed_;

  Endpoint other_end(int e, const Endpoint& ep) const {
    return g_.edges[e].a == ep ? g_.edges[e].b : g_.edges[e].a;
  }

  Wire wire_towards(int e, const Endpoint& dest) const {
    Wire w;
    w.edge = e;
    if (dest.is_upstream()) {
      w.cup_wait = true;
    } else {
      w.heading = dest;
    }
    return w;
  }

  void init_frontier() {
    for (int i = 0; i < g_.n_inputs; ++i) {
      int e = g_.edge_at(Endpoint::graph_in(i));
      frontier_.push_back(wire_towards(e, other_end(e, Endpoint::graph_in(i))));
    }
  }

  void emit(int pos, int consume, const Term& piece) {
    int w = static_cast<int>(frontier_.size());
    std::vector<Term> parts;
    if (pos > 0) parts.push_back(identity_wires(pos));
    parts.push_back(piece);
    if (w - pos - consume > 0) parts.push_back(identity_wires(w - pos - consume));
    slices_.push_back(pars(parts));
  }

  // Moves the wire at `from` to position `to` with adjacent swaps.
  void move_wire(int from, int to) {
    while (from < to) {
      emit(from, 2, Term::gen(Generator::swap_gen()));
      std::swap(frontier_[from], frontier_[from + 1]);
      ++from;
    }
    while (from > to) {
      emit(from - 1, 2, Term::gen(Generator::swap_gen()));
      std::swap(frontier_[from - 1], frontier_[from]);
      --from;
    }
  }

  int find_wire_heading(const Endpoint& dest) const {
    for (std::size_t i = 0; i < frontier_.size(); ++i)
      if (!frontier_[i].cup_wait && frontier_[i].heading == dest) return static_cast<int>(i);
    return -1;
  }

  bool step_cup() {
    // Pair the two upstream ends of an edge, smallest edge id first.
    int best = -1, p1 = -1, p2 = -1;
    for (std::size_t i = 0; i < frontier_.size(); ++i) {
      if (!frontier_[i].cup_wait) continue;
      for (std::size_t j = i + 1; j < frontier_.size(); ++j) {
        if (!frontier_[j].cup_wait || frontier_[j].edge != frontier_[i].edge) continue;
        if (best == -1 || frontier_[i].edge < best) {
          best = frontier_[i].edge;
          p1 = static_cast<int>(i);
          p2 = static_cast<int>(j);
        }
        break;
      }
    }
    if (best == -1) return false;
    int w = static_cast<int>(frontier_.size());
    move_wire(p2, w - 1);
    int p1_now = -1;
    for (std::size_t i = 0; i < frontier_.size() - 1; ++i)
      if (frontier_[i].cup_wait && frontier_[i].edge == best) p1_now = static_cast<int>(i);
    move_wire(p1_now, w - 2);
    emit(w - 2, 2, Term::gen(Generator::cup()));
    frontier_.pop_back();
    frontier_.pop_back();
    return true;
  }

  bool node_ready(int v) const {
    Arity ar = g_.nodes[v].arity();
    for (int p = 0; p < ar.inputs; ++p) {
      Endpoint dest = Endpoint::node_in(v, p);
      int e = g_.edge_at(dest);
      if (find_wire_heading(dest) >= 0) continue;
      Endpoint oth = other_end(e, dest);
      if (!oth.is_upstream() && !capped_[e]) continue;  // a cap can supply both ends
      return false;
    }
    return true;
  }

  bool step_node() {
    int chosen = -1;
    for (int v = 0; v < static_cast<int>(g_.nodes.size()); ++v) {
      if (!placed_[v] && node_ready(v)) {
        chosen = v;
        break;
      }
    }
    if (chosen == -1) return false;
    int v = chosen;
    Arity ar = g_.nodes[v].arity();

    // Emit caps for inputs fed by a two-consumer edge.
    for (int p = 0; p < ar.inputs; ++p) {
      Endpoint dest = Endpoint::node_in(v, p);
      int e = g_.edge_at(dest);
      if (find_wire_heading(dest) >= 0) continue;
      emit(static_cast<int>(frontier_.size()), 0, Term::gen(Generator::cap()));
      capped_[e] = true;
      frontier_.push_back(wire_towards(e, g_.edges[e].a));
      frontier_.push_back(wire_towards(e, g_.edges[e].b));
    }

    // Route the inputs to the right end in port order, then apply the node.
    for (int p = 0; p < ar.inputs; ++p) {
      int pos = find_wire_heading(Endpoint::node_in(v, p));
      if (pos < 0) throw GraphError("internal: missing input wire for node " + std::to_string(v));
      move_wire(pos, static_cast<int>(frontier_.size()) - 1 - (ar.inputs - 1 - p));
    }
    int base = static_cast<int>(frontier_.size()) - ar.inputs;
    emit(base, ar.inputs, Term::gen(g_.nodes[v]));
    frontier_.resize(frontier_.size() - ar.inputs);
    for (int q = 0; q < ar.outputs; ++q) {
      Endpoint src = Endpoint::node_out(v, q);
      int e = g_.edge_at(src);
      if (capped_[e]) {
        // This edge was broken with a cap earlier; close the feedback now.
        Wire w;
        w.edge = e;
        w.cup_wait = true;
        frontier_.push_back(w);
      } else {
        frontier_.push_back(wire_towards(e, other_end(e, src)));
      }
    }
    placed_[v] = true;
    return true;
  }

  bool step_boundary_cap() {
    for (int v = 0; v < static_cast<int>(g_.nodes.size()); ++v)
      if (!placed_[v]) return false;
    for (std::size_t e = 0; e < g_.edges.size(); ++e) {
      if (capped_[e]) continue;
      if (g_.edges[e].a.is_upstream() || g_.edges[e].b.is_upstream()) continue;
      bool travelled = false;
      for (const auto& w : frontier_)
        if (w.edge == static_cast<int>(e)) travelled = true;
      if (travelled) continue;
      emit(static_cast<int>(frontier_.size()), 0, Term::gen(Generator::cap()));
      capped_[e] = true;
      frontier_.push_back(wire_towards(e, g_.edges[e].a));
      frontier_.push_back(wire_towards(e, g_.edges[e].b));
      return true;
    }
    return false;
  }

  bool step_reroute() {
    // Cyclic dependency: break the smallest blocked node's first unavailable
    // input with a cap; the matching cup closes once the producer lands.
    for (int v = 0; v < static_cast<int>(g_.nodes.size()); ++v) {
      if (placed_[v]) continue;
      Arity ar = g_.nodes[v].arity();
      for (int p = 0; p < ar.inputs; ++p) {
        Endpoint dest = Endpoint::node_in(v, p);
        int e = g_.edge_at(dest);
        if (find_wire_heading(dest) >= 0) continue;
        Endpoint oth = other_end(e, dest);
        if (!oth.is_upstream() && !capped_[e]) continue;
        if (capped_[e]) continue;
        emit(static_cast<int>(frontier_.size()), 0, Term::gen(Generator::cap()));
        capped_[e] = true;
        frontier_.push_back(wire_towards(e, dest));
        Wire w;
        w.edge = e;
        w.cup_wait = true;
        frontier_.push_back(w);
        return true;
      }
    }
    return false;
  }

  void finish_outputs() {
    for (int v = 0; v < static_cast<int>(g_.nodes.size()); ++v)
      if (!placed_[v]) throw GraphError("from_graph: could not schedule node " + std::to_string(v));
    if (static_cast<int>(frontier_.size()) != g_.n_outputs)
      throw GraphError("from_graph: frontier does not match the output boundary");
    for (int j = 0; j < g_.n_outputs; ++j) {
      int pos = find_wire_heading(Endpoint::graph_out(j));
      if (pos < 0) throw GraphError("from_graph: missing wire for output " + std::to_string(j));
      move_wire(pos, j);
    }
  }
};

}  // namespace

Term from_graph(const OpenGraph& g) {
  g.validate();
  return Extractor(g).run();
}

// ---------------------------------------------------------------------------
// isomorphism
// ---------------------------------------------------------------------------

namespace {

// Edge fingerprint under a node mapping. Spider legs collapse to the side
// (inputs vs outputs); ordered generators keep their port index.
struct EdgeKey {
  int ka, na, pa;
  int kb, nb, pb;
  bool operator<(const EdgeKey& o) const {
    return std::tie(ka, na, pa, kb, nb, pb) < std::tie(o.ka, o.na, o.pa, o.kb, o.nb, o.pb);
  }
};

EdgeKey make_key(const OpenGraph& g, const GraphEdge& e, const std::vector<int>& node_map) {
  auto classify = [&](const Endpoint& ep, int& k, int& n, int& p) {
    switch (ep.kind) {
      case Endpoint::Kind::GraphIn: k = 0, n = -1, p = ep.index; return;
      case Endpoint::Kind::GraphOut: k = 1, n = -1, p = ep.index; return;
      case Endpoint::Kind::NodeIn: k = 2; break;
      case Endpoint::Kind::NodeOut: k = 3; break;
    }
    n = node_map.empty() ? ep.node : node_map[ep.node];
    p = g.nodes[ep.node].is_spider() ? -1 : ep.index;
  };
  EdgeKey key{};
  classify(e.a, key.ka, key.na, key.pa);
  classify(e.b, key.kb, key.nb, key.pb);
  if (std::tie(key.kb, key.nb, key.pb) < std::tie(key.ka, key.na, key.pa)) {
    std::swap(key.ka, key.kb);
    std::swap(key.na, key.nb);
    std::swap(key.pa, key.pb);
  }
  return key;
}

bool try_map(const OpenGraph& a, const OpenGraph& b, std::vector<int>& node_map,
             std::vector<bool>& used, std::size_t next) {
  if (next == a.nodes.size()) {
    std::multiset<EdgeKey> ka, kb;
    for (const auto& e : a.edges) ka.insert(make_key(a, e, node_map));
    std::vector<int> id;
    for (const auto& e : b.edges) kb.insert(make_key(b, e, id));
    return ka == kb;
  }
  for (std::size_t cand = 0; cand < b.nodes.size(); ++cand) {
    if (used[cand]) continue;
    if (!a.nodes[next].same_generator(b.nodes[cand])) continue;
    node_map[next] = static_cast<int>(cand);
    used[cand] = true;
    if (try_map(a, b, node_map, used, next + 1)) return true;
    used[cand] = false;
    node_map[next] = -1;
  }
  return false;
}

}  // namespace

bool graphs_isomorphic(const OpenGraph& a, const OpenGraph& b) {
  if (a.n_inputs != b.n_inputs || a.n_outputs != b.n_outputs) return false;
  if (a.loops != b.loops) return false;
  if (a.nodes.size() != b.nodes.size() || a.edges.size() != b.edges.size()) return false;
  std::vector<int> node_map(a.nodes.size(), -1);
  std::vector<bool> used(b.nodes.size(), false);
  return try_map(a, b, node_map, used, 0);
}

bool iso_check(const Term& a, const Term& b) {
  Calculus ca = a.calculus(), cb = b.calculus();
  if (ca != Calculus::Shared && cb != Calculus::Shared && ca != cb) return false;
  return graphs_isomorphic(to_graph(a), to_graph(b));
}

}  // namespace zxzw
