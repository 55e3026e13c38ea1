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

#include <complex>
#include <stdexcept>
#include <string>

namespace zxzw {

using Complex = std::complex<double>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sequential composition with incompatible arities.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// Parameter outside its declared domain (negative lambda, q <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed diagram document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Malformed open graph (dangling port, boundary violation, cyclic deadlock).
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Rewrite failures: stale embeddings, unanchorable patterns, bad steps.
class RewriteError : public Error {
 public:
  using Error::Error;
};

}  // namespace zxzw
