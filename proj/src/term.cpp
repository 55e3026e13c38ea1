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

#include "zxzw/term.hpp"

#include <sstream>

namespace zxzw {

Term Term::gen(const Generator& g) {
  auto n = std::make_shared<Node>(Tag::Gen, g, g.arity(), g.calculus(), 1);
  return Term(std::move(n));
}

Term seq(const Term& a, const Term& b) {
  if (a.arity().outputs != b.arity().inputs) {
    throw ArityError("seq: cannot compose " + a.arity().str() + " with " + b.arity().str() +
                     " (outputs of the first must equal inputs of the second)");
  }
  auto n = std::make_shared<Term::Node>(Term::Tag::Seq, Generator::empty(),
                                        Arity{a.arity().inputs, b.arity().outputs},
                                        join_calculus(a.calculus(), b.calculus()),
                                        a.size() + b.size());
  n->a = a;
  n->b = b;
  return Term(std::move(n));
}

Term par(const Term& a, const Term& b) {
  auto n = std::make_shared<Term::Node>(Term::Tag::Par, Generator::empty(),
                                        Arity{a.arity().inputs + b.arity().inputs,
                                              a.arity().outputs + b.arity().outputs},
                                        join_calculus(a.calculus(), b.calculus()),
                                        a.size() + b.size());
  n->a = a;
  n->b = b;
  return Term(std::move(n));
}

Term seqs(const std::vector<Term>& ts) {
  if (ts.empty()) throw DomainError("seqs: empty list");
  Term t = ts[0];
  for (std::size_t i = 1; i < ts.size(); ++i) t = seq(t, ts[i]);
  return t;
}

Term pars(const std::vector<Term>& ts) {
  if (ts.empty()) return Term::gen(Generator::empty());
  Term t = ts[0];
  for (std::size_t i = 1; i < ts.size(); ++i) t = par(t, ts[i]);
  return t;
}

Term identity_wires(int k) {
  if (k < 0) throw DomainError("identity_wires: negative width");
  if (k == 0) return Term::gen(Generator::empty());
  Term t = Term::gen(Generator::identity());
  for (int i = 1; i < k; ++i) t = par(t, Term::gen(Generator::identity()));
  return t;
}

bool Term::contains_kind(GenKind k) const {
  bool found = false;
  for_each_generator([&](const Generator& g) { found = found || g.kind == k; });
  return found;
}

void Term::for_each_generator(const std::function<void(const Generator&)>& fn) const {
  if (tag() == Tag::Gen) {
    fn(generator());
    return;
  }
  first().for_each_generator(fn);
  second().for_each_generator(fn);
}

std::string Term::str() const {
  std::ostringstream os;
  switch (tag()) {
    case Tag::Gen: os << generator().str(); break;
    case Tag::Seq: os << "(" << first().str() << " ; " << second().str() << ")"; break;
    case Tag::Par: os << "(" << first().str() << " | " << second().str() << ")"; break;
  }
  return os.str();
}

}  // namespace zxzw
