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

#include "zxzw/rewrite.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "zxzw/interpret.hpp"
#include "zxzw/serialize.hpp"

namespace zxzw {

namespace {

// Parameter unification between a pattern generator (possibly a
// metavariable) and a concrete host generator.
bool unify_generator(const Generator& pat, const Generator& host, Binding& b) {
  if (pat.kind != host.kind || pat.n != host.n || pat.m != host.m) return false;
  if (host.var) return false;
  if (!pat.var) return pat.same_generator(host);
  const std::string& sym = *pat.var;
  auto it = b.find(sym);
  switch (pat.kind) {
    case GenKind::PhaseGate: {
      if (it != b.end()) return std::get<Phase>(it->second).equals(host.phase);
      b[sym] = host.phase;
      return true;
    }
    case GenKind::LambdaBox: {
      if (it != b.end()) return std::fabs(std::get<double>(it->second) - host.lambda) <= 1e-12;
      b[sym] = host.lambda;
      return true;
    }
    case GenKind::RGate: {
      if (it != b.end()) return std::abs(std::get<Complex>(it->second) - host.r) <= 1e-12;
      b[sym] = host.r;
      return true;
    }
    default: return false;
  }
}

// Endpoint class used to align pattern edges with host edges once the node
// map is fixed. Spider legs collapse per side; ordered generators keep the
// port index.
struct EndClass {
  int kind;  // 0 boundary-in, 1 boundary-out, 2 node-in, 3 node-out, 4 free (pattern boundary)
  int node;
  int port;
  bool operator==(const EndClass& o) const {
    return kind == o.kind && node == o.node && port == o.port;
  }
};

struct PatternEdge {
  EndClass a, b;       // classes in host-node coordinates; kind 4 marks a boundary side
  int boundary = -1;   // pattern boundary slot: inputs are i, outputs are n_inputs + j
  Endpoint node_side;  // the pattern endpoint on a node (for boundary edges)
};

class Matcher {
 public:
  Matcher(const OpenGraph& pg, const OpenGraph& hg, const Binding& partial)
      : pg_(pg), hg_(hg), base_binding_(partial) {
    if (pg_.nodes.empty())
      throw RewriteError("pattern has no generator nodes and cannot be anchored");
    for (const auto& e : pg_.edges) {
      bool ba = e.a.kind == Endpoint::Kind::GraphIn || e.a.kind == Endpoint::Kind::GraphOut;
      bool bb = e.b.kind == Endpoint::Kind::GraphIn || e.b.kind == Endpoint::Kind::GraphOut;
      if (ba && bb)
        throw RewriteError("pattern has a wire not touching any generator; unsupported");
    }
    if (pg_.loops > 0) throw RewriteError("pattern has free loops; unsupported");
  }

  std::vector<MatchResult> run() {
    std::vector<int> node_map(pg_.nodes.size(), -1);
    std::vector<bool> used(hg_.nodes.size(), false);
    Binding b = base_binding_;
    assign(0, node_map, used, b);
    std::sort(results_.begin(), results_.end(), [](const MatchResult& x, const MatchResult& y) {
      return x.emb < y.emb;
    });
    results_.erase(std::unique(results_.begin(), results_.end(),
                               [](const MatchResult& x, const MatchResult& y) {
                                 return x.emb == y.emb;
                               }),
                   results_.end());
    return results_;
  }

 private:
  const OpenGraph& pg_;
  const OpenGraph& hg_;
  Binding base_binding_;
  std::vector<MatchResult> results_;

  void assign(std::size_t next, std::vector<int>& node_map, std::vector<bool>& used, Binding& b) {
    if (next == pg_.nodes.size()) {
      resolve_edges(node_map, b);
      return;
    }
    for (std::size_t h = 0; h < hg_.nodes.size(); ++h) {
      if (used[h]) continue;
      Binding trial = b;
      if (!unify_generator(pg_.nodes[next], hg_.nodes[h], trial)) continue;
      node_map[next] = static_cast<int>(h);
      used[h] = true;
      assign(next + 1, node_map, used, trial);
      used[h] = false;
      node_map[next] = -1;
    }
  }

  EndClass classify_host(const Endpoint& e) const {
    switch (e.kind) {
      case Endpoint::Kind::GraphIn: return {0, -1, e.index};
      case Endpoint::Kind::GraphOut: return {1, -1, e.index};
      case Endpoint::Kind::NodeIn:
        return {2, e.node, hg_.nodes[e.node].is_spider() ? -1 : e.index};
      case Endpoint::Kind::NodeOut:
        return {3, e.node, hg_.nodes[e.node].is_spider() ? -1 : e.index};
    }
    return {0, -1, -1};
  }

  EndClass classify_pattern(const Endpoint& e, const std::vector<int>& node_map) const {
    switch (e.kind) {
      case Endpoint::Kind::GraphIn:
      case Endpoint::Kind::GraphOut: return {4, -1, -1};
      case Endpoint::Kind::NodeIn:
        return {2, node_map[e.node], pg_.nodes[e.node].is_spider() ? -1 : e.index};
      case Endpoint::Kind::NodeOut:
        return {3, node_map[e.node], pg_.nodes[e.node].is_spider() ? -1 : e.index};
    }
    return {0, -1, -1};
  }

  // Matches pattern edges to distinct host edges; a boundary side accepts
  // anything, node sides must agree classwise.
  void resolve_edges(const std::vector<int>& node_map, const Binding& b) {
    std::vector<PatternEdge> pedges;
    for (const auto& e : pg_.edges) {
      PatternEdge pe;
      pe.a = classify_pattern(e.a, node_map);
      pe.b = classify_pattern(e.b, node_map);
      if (pe.a.kind == 4 || pe.b.kind == 4) {
        const Endpoint& bnd = pe.a.kind == 4 ? e.a : e.b;
        pe.node_side = pe.a.kind == 4 ? e.b : e.a;
        pe.boundary = bnd.kind == Endpoint::Kind::GraphIn ? bnd.index : pg_.n_inputs + bnd.index;
      }
      pedges.push_back(pe);
    }
    // Deterministic candidate exploration: match edges one by one. A host
    // edge end may be claimed by at most one pattern edge; a boundary-type
    // pattern edge claims only its node-side end, so an edge fully inside
    // the image can carry two pattern boundary wires (feedback loops).
    std::vector<int> chosen(pedges.size(), -1);
    std::vector<int> claimed(hg_.edges.size(), 0);  // bit 0: end a, bit 1: end b
    match_edges(0, pedges, node_map, chosen, claimed, b);
  }

  static bool side_ok(const EndClass& pat, const EndClass& host) {
    if (pat.kind == 4) return true;
    return pat == host;
  }

  // needed: claim bits for the node-side ends under this orientation.
  bool edge_fits(const PatternEdge& pe, const GraphEdge& he, bool flipped, int& needed) const {
    EndClass ha = classify_host(he.a), hb = classify_host(he.b);
    const EndClass& host_for_a = flipped ? hb : ha;
    const EndClass& host_for_b = flipped ? ha : hb;
    if (!side_ok(pe.a, host_for_a) || !side_ok(pe.b, host_for_b)) return false;
    needed = 0;
    if (pe.a.kind != 4) needed |= flipped ? 2 : 1;
    if (pe.b.kind != 4) needed |= flipped ? 1 : 2;
    return true;
  }

  void match_edges(std::size_t next, const std::vector<PatternEdge>& pedges,
                   const std::vector<int>& node_map, std::vector<int>& chosen,
                   std::vector<int>& claimed, const Binding& b) {
    if (next == pedges.size()) {
      emit(pedges, node_map, chosen, b);
      return;
    }
    const PatternEdge& pe = pedges[next];
    for (std::size_t he = 0; he < hg_.edges.size(); ++he) {
      for (int ori = 0; ori < 2; ++ori) {
        int needed = 0;
        if (!edge_fits(pe, hg_.edges[he], ori == 1, needed)) continue;
        if ((claimed[he] & needed) != 0) continue;
        chosen[next] = static_cast<int>(he) * 2 + ori;
        claimed[he] |= needed;
        match_edges(next + 1, pedges, node_map, chosen, claimed, b);
        claimed[he] &= ~needed;
        chosen[next] = -1;
      }
    }
  }

  void emit(const std::vector<PatternEdge>& pedges, const std::vector<int>& node_map,
            const std::vector<int>& chosen, const Binding& b) {
    MatchResult res;
    for (std::size_t p = 0; p < node_map.size(); ++p)
      res.emb.node_map[static_cast<int>(p)] = node_map[p];
    res.emb.inputs.assign(pg_.n_inputs, {});
    res.emb.outputs.assign(pg_.n_outputs, {});
    for (std::size_t i = 0; i < pedges.size(); ++i) {
      if (pedges[i].boundary < 0) continue;
      int he = chosen[i] / 2;
      bool flipped = chosen[i] % 2 == 1;
      // The attachment is the host end aligned with the pattern boundary side.
      const PatternEdge& pe = pedges[i];
      int attach_end;
      if (pe.a.kind == 4) {
        attach_end = flipped ? 1 : 0;
      } else {
        attach_end = flipped ? 0 : 1;
      }
      Embedding::HalfEdge half{he, attach_end};
      if (pedges[i].boundary < pg_.n_inputs) {
        res.emb.inputs[pedges[i].boundary] = half;
      } else {
        res.emb.outputs[pedges[i].boundary - pg_.n_inputs] = half;
      }
    }
    res.binding = b;
    results_.push_back(std::move(res));
  }
};

}  // namespace

std::vector<MatchResult> find_matches(const Term& pattern, const Term& host) {
  OpenGraph pg = to_graph(pattern);
  OpenGraph hg = to_graph(host);
  Binding none;
  return Matcher(pg, hg, none).run();
}

std::vector<MatchResult> find_rule_matches(const RuleSchema& rule, Direction dir, const Term& host,
                                           const Binding& partial) {
  Term pattern = instantiate_side(rule, dir, partial, true);
  OpenGraph pg = to_graph(pattern);
  OpenGraph hg = to_graph(host);
  return Matcher(pg, hg, partial).run();
}

namespace {

// Welding apparatus for graph surgery: points are kept host endpoints, new
// replacement endpoints, and passthrough markers for the replacement
// boundary.
class Surgeon {
 public:
  int point() {
    parent_.push_back(static_cast<int>(parent_.size()));
    reals_.emplace_back();
    return static_cast<int>(parent_.size()) - 1;
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void weld(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      loops++;
      return;
    }
    parent_[b] = a;
    for (auto& e : reals_[b]) reals_[a].push_back(e);
    reals_[b].clear();
  }
  void attach(int p, const Endpoint& e) { reals_[find(p)].push_back(e); }

  int loops = 0;
  std::vector<std::vector<Endpoint>> reals_;

 private:
  std::vector<int> parent_;
};

}  // namespace

Term apply(const Term& host, const RuleSchema& rule, Direction dir, const Embedding& emb,
           const Binding& b) {
  OpenGraph hg = to_graph(host);
  {
    // Full validation happens in instantiate_side via the rule builders.
    Term pattern = instantiate_side(rule, dir, b, false);
    OpenGraph pg = to_graph(pattern);
    if (static_cast<int>(emb.node_map.size()) != static_cast<int>(pg.nodes.size()))
      throw RewriteError("stale embedding: node map size mismatch");
    for (const auto& [p, h] : emb.node_map) {
      if (p < 0 || p >= static_cast<int>(pg.nodes.size()) || h < 0 ||
          h >= static_cast<int>(hg.nodes.size()))
        throw RewriteError("stale embedding: node out of range");
      if (!pg.nodes[p].same_generator(hg.nodes[h]))
        throw RewriteError("stale embedding: generator mismatch at host node " + std::to_string(h));
    }
    for (const auto& half : emb.inputs)
      if (half.edge < 0 || half.edge >= static_cast<int>(hg.edges.size()))
        throw RewriteError("stale embedding: boundary edge out of range");
    for (const auto& half : emb.outputs)
      if (half.edge < 0 || half.edge >= static_cast<int>(hg.edges.size()))
        throw RewriteError("stale embedding: boundary edge out of range");
    if (pg.n_inputs != static_cast<int>(emb.inputs.size()) ||
        pg.n_outputs != static_cast<int>(emb.outputs.size()))
      throw RewriteError("stale embedding: boundary size mismatch");
  }
  Term replacement = instantiate_side(rule, dir == Direction::LR ? Direction::RL : Direction::LR,
                                      b, false);
  OpenGraph rg = to_graph(replacement);

  std::set<int> image;
  for (const auto& [p, h] : emb.node_map) image.insert(h);

  // New node list: kept host nodes in order, then replacement nodes.
  OpenGraph out;
  out.n_inputs = hg.n_inputs;
  out.n_outputs = hg.n_outputs;
  out.calculus = hg.calculus;
  std::vector<int> host_renum(hg.nodes.size(), -1);
  for (std::size_t v = 0; v < hg.nodes.size(); ++v) {
    if (image.count(static_cast<int>(v))) continue;
    host_renum[v] = static_cast<int>(out.nodes.size());
    out.nodes.push_back(hg.nodes[v]);
  }
  int rep_base = static_cast<int>(out.nodes.size());
  for (const auto& g : rg.nodes) out.nodes.push_back(g);

  Surgeon s;
  std::map<Endpoint, int> host_pt, rep_pt;
  std::vector<int> rb_in(rg.n_inputs), rb_out(rg.n_outputs);
  auto host_point = [&](const Endpoint& e) {
    auto it = host_pt.find(e);
    if (it != host_pt.end()) return it->second;
    int p = s.point();
    bool real = true;
    Endpoint renamed = e;
    if (e.kind == Endpoint::Kind::NodeIn || e.kind == Endpoint::Kind::NodeOut) {
      if (host_renum[e.node] < 0) {
        real = false;  // image port, being deleted
      } else {
        renamed.node = host_renum[e.node];
      }
    }
    if (real) s.attach(p, renamed);
    host_pt[e] = p;
    return p;
  };
  auto rep_point = [&](const Endpoint& e) -> int {
    if (e.kind == Endpoint::Kind::GraphIn) return rb_in[e.index];
    if (e.kind == Endpoint::Kind::GraphOut) return rb_out[e.index];
    auto it = rep_pt.find(e);
    if (it != rep_pt.end()) return it->second;
    int p = s.point();
    Endpoint renamed = e;
    renamed.node = e.node + rep_base;
    s.attach(p, renamed);
    rep_pt[e] = p;
    return p;
  };
  for (int i = 0; i < rg.n_inputs; ++i) rb_in[i] = s.point();
  for (int i = 0; i < rg.n_outputs; ++i) rb_out[i] = s.point();

  // Which host edges are consumed by the boundary?
  std::map<int, std::vector<std::pair<bool, int>>> boundary_edges;  // edge -> [(is_input, slot)]
  for (std::size_t k = 0; k < emb.inputs.size(); ++k)
    boundary_edges[emb.inputs[k].edge].push_back({true, static_cast<int>(k)});
  for (std::size_t k = 0; k < emb.outputs.size(); ++k)
    boundary_edges[emb.outputs[k].edge].push_back({false, static_cast<int>(k)});

  auto touches_image = [&](const GraphEdge& e) {
    auto on_image = [&](const Endpoint& ep) {
      return (ep.kind == Endpoint::Kind::NodeIn || ep.kind == Endpoint::Kind::NodeOut) &&
             image.count(ep.node) > 0;
    };
    return on_image(e.a) || on_image(e.b);
  };

  for (std::size_t e = 0; e < hg.edges.size(); ++e) {
    auto it = boundary_edges.find(static_cast<int>(e));
    if (it == boundary_edges.end()) {
      if (touches_image(hg.edges[e])) continue;  // internal to the match, dropped
      s.weld(host_point(hg.edges[e].a), host_point(hg.edges[e].b));
      continue;
    }
    const auto& slots = it->second;
    auto rb_of = [&](bool is_input, int slot) { return is_input ? rb_in[slot] : rb_out[slot]; };
    if (slots.size() == 2) {
      // Both ends re-enter the replacement: wire the two boundary slots.
      s.weld(rb_of(slots[0].first, slots[0].second), rb_of(slots[1].first, slots[1].second));
    } else {
      const Embedding::HalfEdge& half =
          slots[0].first ? emb.inputs[slots[0].second] : emb.outputs[slots[0].second];
      const Endpoint& attach = half.end == 0 ? hg.edges[e].a : hg.edges[e].b;
      s.weld(rb_of(slots[0].first, slots[0].second), host_point(attach));
    }
  }
  for (const auto& e : rg.edges) s.weld(rep_point(e.a), rep_point(e.b));

  // Collect result edges.
  std::set<int> roots;
  for (auto& [ep, p] : host_pt) roots.insert(s.find(p));
  for (auto& [ep, p] : rep_pt) roots.insert(s.find(p));
  for (int p : rb_in) roots.insert(s.find(p));
  for (int p : rb_out) roots.insert(s.find(p));
  for (int root : roots) {
    auto& reals = s.reals_[root];
    if (reals.empty()) continue;
    if (reals.size() != 2)
      throw RewriteError("rewrite produced a dangling wire (stale embedding?)");
    GraphEdge ge{reals[0], reals[1]};
    if (ge.b < ge.a) std::swap(ge.a, ge.b);
    out.edges.push_back(ge);
  }
  std::sort(out.edges.begin(), out.edges.end(), [](const GraphEdge& x, const GraphEdge& y) {
    if (!(x.a == y.a)) return x.a < y.a;
    return x.b < y.b;
  });
  out.loops = hg.loops + rg.loops + s.loops;
  out.validate();
  return from_graph(out);
}

ReplayReport replay(const Derivation& d) {
  ReplayReport rep;
  Term current = d.start;
  for (std::size_t k = 0; k < d.steps.size(); ++k) {
    const DerivationStep& st = d.steps[k];
    try {
      const RuleSchema& rule = find_rule(current.calculus() == Calculus::ZW ? Calculus::ZW
                                                                            : Calculus::ZX,
                                         st.rule);
      auto matches = find_rule_matches(rule, st.dir, current, st.binding);
      const MatchResult* found = nullptr;
      for (const auto& m : matches) {
        bool same_site = true;
        for (const auto& [p, h] : st.site) {
          auto it = m.emb.node_map.find(p);
          same_site = same_site && it != m.emb.node_map.end() && it->second == h;
        }
        if (same_site && st.site.size() == m.emb.node_map.size()) {
          found = &m;
          break;
        }
      }
      if (!found) {
        rep.ok = false;
        rep.failed_step = static_cast<int>(k);
        rep.message = "step " + std::to_string(k) + ": no match of rule " + st.rule +
                      " at the given site";
        rep.final = current;
        return rep;
      }
      current = apply(current, rule, st.dir, found->emb, found->binding);
    } catch (const Error& e) {
      rep.ok = false;
      rep.failed_step = static_cast<int>(k);
      rep.message = "step " + std::to_string(k) + ": " + e.what();
      rep.final = current;
      return rep;
    }
  }
  rep.final = current;
  rep.end_isomorphic = iso_check(current, d.end);
  rep.ok = rep.end_isomorphic;
  if (!rep.ok) rep.message = "replayed term is not isomorphic to the declared end";
  TensorMatrix ms = interpret(d.start), me = interpret(d.end);
  rep.semantic_deviation =
      (ms.rows() == me.rows() && ms.cols() == me.cols()) ? max_deviation(ms, me) : -1.0;
  return rep;
}

Term greedy_fuse(const Term& t) {
  Term current = t;
  if (current.calculus() == Calculus::ZW) return current;
  const char* names[] = {"S1", "S2", "H2", "L3"};
  bool progress = true;
  int guard = 0;
  while (progress && guard++ < 1000) {
    progress = false;
    for (const char* name : names) {
      const RuleSchema& rule = find_rule(Calculus::ZX, name);
      Binding none;
      auto matches = find_rule_matches(rule, Direction::LR, current, none);
      if (!matches.empty()) {
        current = apply(current, rule, Direction::LR, matches[0].emb, matches[0].binding);
        progress = true;
        break;
      }
    }
  }
  return current;
}

// --- JSON forms -------------------------------------------------------------

using nlohmann::json;

json binding_to_json(const Binding& b) {
  json j = json::object();
  for (const auto& [k, v] : b) {
    if (const Phase* p = std::get_if<Phase>(&v)) {
      j[k] = phase_to_json(*p);
    } else if (const double* d = std::get_if<double>(&v)) {
      j[k] = *d;
    } else {
      Complex c = std::get<Complex>(v);
      j[k] = json{{"re", c.real()}, {"im", c.imag()}};
    }
  }
  return j;
}

Binding binding_from_json(const json& j) {
  Binding b;
  if (j.is_null()) return b;
  if (!j.is_object()) throw ParseError("binding must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    if (v.is_number()) {
      b[it.key()] = v.get<double>();
    } else if (v.is_object() && (v.contains("pi_rational") || v.contains("radians"))) {
      b[it.key()] = phase_from_json(v);
    } else if (v.is_object() && v.contains("re") && v.contains("im")) {
      b[it.key()] = Complex(v.at("re").get<double>(), v.at("im").get<double>());
    } else {
      throw ParseError("binding value for " + it.key() + " not understood");
    }
  }
  return b;
}

Derivation derivation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("start") || !j.contains("steps") || !j.contains("end"))
    throw ParseError("derivation needs start, steps, end");
  Derivation d;
  d.start = term_from_json(j.at("start"));
  d.end = term_from_json(j.at("end"));
  if (!j.at("steps").is_array()) throw ParseError("steps must be an array");
  for (const auto& sj : j.at("steps")) {
    DerivationStep st;
    st.rule = sj.at("rule").get<std::string>();
    std::string dir = sj.value("dir", "LR");
    if (dir == "LR") {
      st.dir = Direction::LR;
    } else if (dir == "RL") {
      st.dir = Direction::RL;
    } else {
      throw ParseError("step dir must be LR or RL");
    }
    if (sj.contains("site")) {
      for (auto it = sj.at("site").begin(); it != sj.at("site").end(); ++it)
        st.site[std::stoi(it.key())] = it.value().get<int>();
    }
    if (sj.contains("binding")) st.binding = binding_from_json(sj.at("binding"));
    d.steps.push_back(std::move(st));
  }
  return d;
}

json derivation_to_json(const Derivation& d) {
  json steps = json::array();
  for (const auto& st : d.steps) {
    json site = json::object();
    for (const auto& [p, h] : st.site) site[std::to_string(p)] = h;
    steps.push_back(json{{"rule", st.rule},
                         {"dir", st.dir == Direction::LR ? "LR" : "RL"},
                         {"site", site},
                         {"binding", binding_to_json(st.binding)}});
  }
  return json{{"start", term_to_json(d.start)}, {"steps", steps}, {"end", term_to_json(d.end)}};
}

}  // namespace zxzw
