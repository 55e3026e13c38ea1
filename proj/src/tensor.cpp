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

#include "zxzw/tensor.hpp"

#include <cmath>

namespace zxzw {

TensorMatrix TensorMatrix::identity(int dim) {
  TensorMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = Complex(1, 0);
  return m;
}

TensorMatrix TensorMatrix::mul(const TensorMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DomainError("matrix product: inner dimensions differ");
  TensorMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      Complex v = at(i, k);
      if (v == Complex(0, 0)) continue;
      for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += v * rhs.at(k, j);
    }
  }
  return out;
}

TensorMatrix TensorMatrix::kron(const TensorMatrix& rhs) const {
  TensorMatrix out(rows_ * rhs.rows_, cols_ * rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      Complex v = at(i, j);
      if (v == Complex(0, 0)) continue;
      for (int k = 0; k < rhs.rows_; ++k)
        for (int l = 0; l < rhs.cols_; ++l)
          out.at(i * rhs.rows_ + k, j * rhs.cols_ + l) = v * rhs.at(k, l);
    }
  return out;
}

TensorMatrix TensorMatrix::scaled(Complex v) const {
  TensorMatrix out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = v * at(i, j);
  return out;
}

bool matrices_equal(const TensorMatrix& a, const TensorMatrix& b, double tol) {
  if (!(tol > 0)) throw DomainError("matrices_equal: tolerance must be positive");
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_deviation(a, b) <= tol;
}

double max_deviation(const TensorMatrix& a, const TensorMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DomainError("max_deviation: dimension mismatch " + std::to_string(a.rows()) + "x" +
                      std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                      std::to_string(b.cols()));
  }
  double d = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) d = std::max(d, std::abs(a.at(i, j) - b.at(i, j)));
  return d;
}

Complex best_fit_scale(const TensorMatrix& a, const TensorMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DomainError("best_fit_scale: dimension mismatch");
  }
  Complex num(0, 0);
  double den = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      num += std::conj(b.at(i, j)) * a.at(i, j);
      den += std::norm(b.at(i, j));
    }
  if (den == 0.0) return Complex(0, 0);
  return num / den;
}

}  // namespace zxzw
