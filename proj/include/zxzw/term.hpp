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
#include <memory>
#include <vector>

#include "zxzw/generator.hpp"

namespace zxzw {

/// Immutable diagram term: a generator, a sequential composition ("first a,
/// then b", read top to bottom), or a parallel composition (a left of b).
/// Nodes are shared; copying a Term is cheap and thread-safe.
class Term {
 public:
  enum class Tag { Gen, Seq, Par };

  Term() : Term(gen(Generator::empty())) {}

  static Term gen(const Generator& g);

  Tag tag() const { return node_->tag; }
  const Generator& generator() const { return node_->g; }
  const Term& first() const { return node_->a; }
  const Term& second() const { return node_->b; }

  Arity arity() const { return node_->ar; }
  Calculus calculus() const { return node_->cal; }
  /// Number of generator leaves, structural ones included.
  int size() const { return node_->size; }

  bool contains_kind(GenKind k) const;
  void for_each_generator(const std::function<void(const Generator&)>& fn) const;

  std::string str() const;

 private:
  struct Node {
    Tag tag;
    Generator g;
    Term a, b;
    Arity ar;
    Calculus cal;
    int size;
    Node(Tag t, Generator gg, Arity arr, Calculus c, int s)
        : tag(t), g(std::move(gg)), ar(arr), cal(c), size(s) {}
  };

  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;

  friend Term seq(const Term& a, const Term& b);
  friend Term par(const Term& a, const Term& b);
};

/// a then b; requires outputs(a) == inputs(b).
Term seq(const Term& a, const Term& b);
/// a beside b; arities add componentwise.
Term par(const Term& a, const Term& b);

Term seqs(const std::vector<Term>& ts);
Term pars(const std::vector<Term>& ts);

/// k parallel wires; k == 0 gives the empty diagram.
Term identity_wires(int k);

}  // namespace zxzw
