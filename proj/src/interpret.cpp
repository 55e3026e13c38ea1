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

#include "zxzw/interpret.hpp"

#include <algorithm>
#include <cmath>

namespace zxzw {

TensorMatrix generator_matrix(const Generator& g) {
  if (g.var) throw DomainError("cannot interpret a pattern metavariable");
  switch (g.kind) {
    case GenKind::ZSpider:
    case GenKind::WhiteSpider: {
      int rows = 1 << g.m, cols = 1 << g.n;
      TensorMatrix t(rows, cols);
      t.at(0, 0) += Complex(1, 0);
      t.at(rows - 1, cols - 1) += Complex(1, 0);
      return t;
    }
    case GenKind::PhaseGate: {
      TensorMatrix t(2, 2);
      t.at(0, 0) = 1;
      t.at(1, 1) = g.phase.unit();
      return t;
    }
    case GenKind::Hadamard: {
      const double s = 1.0 / std::sqrt(2.0);
      TensorMatrix t(2, 2);
      t.at(0, 0) = s;
      t.at(0, 1) = s;
      t.at(1, 0) = s;
      t.at(1, 1) = -s;
      return t;
    }
    case GenKind::LambdaBox: {
      TensorMatrix t(2, 2);
      t.at(0, 0) = 1;
      t.at(1, 1) = g.lambda;
      return t;
    }
    case GenKind::Triangle: {
      TensorMatrix t(2, 2);
      t.at(0, 0) = 1;
      t.at(0, 1) = 1;
      t.at(1, 1) = 1;
      return t;
    }
    case GenKind::RGate: {
      TensorMatrix t(2, 2);
      t.at(0, 0) = 1;
      t.at(1, 1) = g.r;
      return t;
    }
    case GenKind::Crossing: {
      TensorMatrix t(4, 4);
      t.at(0, 0) = 1;
      t.at(1, 2) = 1;
      t.at(2, 1) = 1;
      t.at(3, 3) = -1;
      return t;
    }
    case GenKind::BlackPi: {
      TensorMatrix t(2, 2);
      t.at(0, 1) = 1;
      t.at(1, 0) = 1;
      return t;
    }
    case GenKind::BlackW: {
      TensorMatrix t(4, 2);
      t.at(0, 1) = 1;
      t.at(1, 0) = 1;
      t.at(2, 0) = 1;
      return t;
    }
    case GenKind::Identity: return TensorMatrix::identity(2);
    case GenKind::Swap: {
      TensorMatrix t(4, 4);
      t.at(0, 0) = 1;
      t.at(1, 2) = 1;
      t.at(2, 1) = 1;
      t.at(3, 3) = 1;
      return t;
    }
    case GenKind::Cap: {
      TensorMatrix t(4, 1);
      t.at(0, 0) = 1;
      t.at(3, 0) = 1;
      return t;
    }
    case GenKind::Cup: {
      TensorMatrix t(1, 4);
      t.at(0, 0) = 1;
      t.at(0, 3) = 1;
      return t;
    }
    case GenKind::Empty: return TensorMatrix::scalar(Complex(1, 0));
  }
  throw DomainError("unknown generator kind");
}

TensorMatrix interpret(const Term& d) {
  switch (d.tag()) {
    case Term::Tag::Gen: return generator_matrix(d.generator());
    case Term::Tag::Seq: return interpret(d.second()).mul(interpret(d.first()));
    case Term::Tag::Par: return interpret(d.first()).kron(interpret(d.second()));
  }
  throw DomainError("unreachable term tag");
}

// ---------------------------------------------------------------------------
// Independent evaluation: greedy tensor contraction on the graph form.
// ---------------------------------------------------------------------------

namespace {

struct AxisTensor {
  std::vector<Endpoint> axes;  // axes[0] is the most significant bit
  std::vector<Complex> data;   // size 2^axes.size()

  static AxisTensor scalar(Complex v) {
    AxisTensor t;
    t.data = {v};
    return t;
  }
};

AxisTensor node_tensor(const Generator& g, int node_id) {
  TensorMatrix m = generator_matrix(g);
  Arity ar = g.arity();
  AxisTensor t;
  for (int p = 0; p < ar.inputs; ++p) t.axes.push_back(Endpoint::node_in(node_id, p));
  for (int p = 0; p < ar.outputs; ++p) t.axes.push_back(Endpoint::node_out(node_id, p));
  t.data.resize(static_cast<std::size_t>(1) << t.axes.size());
  for (int i = 0; i < (1 << ar.inputs); ++i)
    for (int o = 0; o < (1 << ar.outputs); ++o)
      t.data[(static_cast<std::size_t>(i) << ar.outputs) | o] = m.at(o, i);
  return t;
}

// delta tensor tying the two ends of an edge
AxisTensor edge_tensor(const GraphEdge& e) {
  AxisTensor t;
  t.axes = {e.a, e.b};
  t.data = {1, 0, 0, 1};
  return t;
}

AxisTensor contract(const AxisTensor& a, const AxisTensor& b) {
  std::vector<Endpoint> shared;
  for (const auto& ax : a.axes)
    if (std::find(b.axes.begin(), b.axes.end(), ax) != b.axes.end()) shared.push_back(ax);
  AxisTensor out;
  for (const auto& ax : a.axes)
    if (std::find(shared.begin(), shared.end(), ax) == shared.end()) out.axes.push_back(ax);
  for (const auto& ax : b.axes)
    if (std::find(shared.begin(), shared.end(), ax) == shared.end()) out.axes.push_back(ax);
  if (out.axes.size() > 22) throw GraphError("contract_graph: intermediate tensor too large");
  out.data.assign(static_cast<std::size_t>(1) << out.axes.size(), Complex(0, 0));

  auto index_of = [](const std::vector<Endpoint>& axes, const Endpoint& ax) {
    return static_cast<int>(std::find(axes.begin(), axes.end(), ax) - axes.begin());
  };
  std::vector<int> a_src, b_src;  // for each axis of a/b: position in out (>=0) or ~position in shared
  for (const auto& ax : a.axes) {
    auto it = std::find(shared.begin(), shared.end(), ax);
    a_src.push_back(it == shared.end() ? index_of(out.axes, ax) : ~static_cast<int>(it - shared.begin()));
  }
  for (const auto& ax : b.axes) {
    auto it = std::find(shared.begin(), shared.end(), ax);
    b_src.push_back(it == shared.end() ? index_of(out.axes, ax) : ~static_cast<int>(it - shared.begin()));
  }

  std::size_t n_out = out.axes.size(), n_sh = shared.size();
  for (std::size_t oi = 0; oi < out.data.size(); ++oi) {
    Complex acc(0, 0);
    for (std::size_t si = 0; si < (static_cast<std::size_t>(1) << n_sh); ++si) {
      auto bit_of = [&](int src) -> std::size_t {
        if (src >= 0) return (oi >> (n_out - 1 - src)) & 1u;
        int sp = ~src;
        return (si >> (n_sh - 1 - sp)) & 1u;
      };
      std::size_t ia = 0;
      for (std::size_t k = 0; k < a.axes.size(); ++k) ia = (ia << 1) | bit_of(a_src[k]);
      std::size_t ib = 0;
      for (std::size_t k = 0; k < b.axes.size(); ++k) ib = (ib << 1) | bit_of(b_src[k]);
      acc += a.data[ia] * b.data[ib];
    }
    out.data[oi] = acc;
  }
  return out;
}

}  // namespace

TensorMatrix contract_graph(const OpenGraph& g) {
  g.validate();
  std::vector<AxisTensor> pending;
  for (int v = 0; v < static_cast<int>(g.nodes.size()); ++v) pending.push_back(node_tensor(g.nodes[v], v));
  for (const auto& e : g.edges) pending.push_back(edge_tensor(e));

  double loop_factor = std::pow(2.0, g.loops);
  AxisTensor env = AxisTensor::scalar(Complex(loop_factor, 0));
  std::vector<bool> done(pending.size(), false);
  for (std::size_t round = 0; round < pending.size(); ++round) {
    // Pick the pending tensor sharing the most axes with the environment.
    int best = -1, best_shared = -1;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      if (done[i]) continue;
      int s = 0;
      for (const auto& ax : pending[i].axes)
        if (std::find(env.axes.begin(), env.axes.end(), ax) != env.axes.end()) ++s;
      if (s > best_shared) {
        best_shared = s;
        best = static_cast<int>(i);
      }
    }
    env = contract(env, pending[best]);
    done[best] = true;
  }

  // Remaining axes are exactly the boundary ports.
  TensorMatrix m(1 << g.n_outputs, 1 << g.n_inputs);
  std::vector<int> axis_role(env.axes.size());  // input position or ~output position
  for (std::size_t k = 0; k < env.axes.size(); ++k) {
    const Endpoint& ax = env.axes[k];
    if (ax.kind == Endpoint::Kind::GraphIn) {
      axis_role[k] = ax.index;
    } else if (ax.kind == Endpoint::Kind::GraphOut) {
      axis_role[k] = ~ax.index;
    } else {
      throw GraphError("contract_graph: non-boundary axis survived");
    }
  }
  for (std::size_t idx = 0; idx < env.data.size(); ++idx) {
    int row = 0, col = 0;
    for (std::size_t k = 0; k < env.axes.size(); ++k) {
      int bit = static_cast<int>((idx >> (env.axes.size() - 1 - k)) & 1u);
      if (axis_role[k] >= 0) {
        col |= bit << (g.n_inputs - 1 - axis_role[k]);
      } else {
        row |= bit << (g.n_outputs - 1 - ~axis_role[k]);
      }
    }
    m.at(row, col) += env.data[idx];
  }
  return m;
}

}  // namespace zxzw
