// Copyright 2026 The rqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace rqc {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. Only intended for the small
/// (1x1, 2x2, 4x4, and test-sized) unitaries this project deals with.
class Matrix {
  public:
    Matrix() = default;
    explicit Matrix(std::size_t dim);
    Matrix(std::size_t dim, std::vector<Complex> row_major);

    static Matrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
    const std::vector<Complex> &data() const { return data_; }

    Matrix adjoint() const;
    Matrix operator*(const Matrix &rhs) const;
    Matrix operator*(Complex scalar) const;

    /// Largest entrywise |a - b|. Matrices must have the same dimension.
    friend double max_abs_diff(const Matrix &a, const Matrix &b);

  private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

/// Kronecker product with `hi` acting on the more significant index bits.
Matrix kron(const Matrix &hi, const Matrix &lo);

}  // namespace rqc
