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

#include <vector>

#include "zxzw/common.hpp"

namespace zxzw {

/// Dense complex matrix with power-of-two dimensions: 2^m rows by 2^n columns
/// for a diagram with n inputs and m outputs. Row-major; the leftmost wire is
/// the most significant bit of the index.
class TensorMatrix {
 public:
  TensorMatrix() : rows_(1), cols_(1), a_(1, Complex(1, 0)) {}
  TensorMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static TensorMatrix scalar(Complex v) {
    TensorMatrix s;
    s.a_[0] = v;
    return s;
  }
  static TensorMatrix identity(int dim);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Complex& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Complex& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  /// this * rhs (ordinary matrix product).
  TensorMatrix mul(const TensorMatrix& rhs) const;
  /// this (x) rhs, with this on the left wires.
  TensorMatrix kron(const TensorMatrix& rhs) const;
  TensorMatrix scaled(Complex v) const;

 private:
  int rows_, cols_;
  std::vector<Complex> a_;
};

/// True iff same dimensions and max entrywise |a-b| <= tol. tol must be > 0.
bool matrices_equal(const TensorMatrix& a, const TensorMatrix& b, double tol);

/// Max entrywise absolute difference; dimension mismatch is an error.
double max_deviation(const TensorMatrix& a, const TensorMatrix& b);

/// Best-fit proportionality constant c minimizing ||a - c*b||, for the
/// diagnostic channel when exact equality fails. Returns 0 when b is zero.
Complex best_fit_scale(const TensorMatrix& a, const TensorMatrix& b);

}  // namespace zxzw
