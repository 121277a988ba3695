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

#include "rqc/matrix.h"

#include <algorithm>
#include <stdexcept>

namespace rqc {

Matrix::Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

Matrix::Matrix(std::size_t dim, std::vector<Complex> row_major) : dim_(dim), data_(std::move(row_major)) {
    if (data_.size() != dim * dim) {
        throw std::invalid_argument("matrix data does not match dimension");
    }
}

Matrix Matrix::identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; i++) {
        m(i, i) = 1.0;
    }
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix m(dim_);
    for (std::size_t r = 0; r < dim_; r++) {
        for (std::size_t c = 0; c < dim_; c++) {
            m(c, r) = std::conj((*this)(r, c));
        }
    }
    return m;
}

Matrix Matrix::operator*(const Matrix &rhs) const {
    if (dim_ != rhs.dim_) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    Matrix m(dim_);
    for (std::size_t r = 0; r < dim_; r++) {
        for (std::size_t k = 0; k < dim_; k++) {
            Complex a = (*this)(r, k);
            if (a == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < dim_; c++) {
                m(r, c) += a * rhs(k, c);
            }
        }
    }
    return m;
}

Matrix Matrix::operator*(Complex scalar) const {
    Matrix m = *this;
    for (auto &v : m.data_) {
        v *= scalar;
    }
    return m;
}

double max_abs_diff(const Matrix &a, const Matrix &b) {
    if (a.dim_ != b.dim_) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    double worst = 0;
    for (std::size_t i = 0; i < a.data_.size(); i++) {
        worst = std::max(worst, std::abs(a.data_[i] - b.data_[i]));
    }
    return worst;
}

Matrix kron(const Matrix &hi, const Matrix &lo) {
    std::size_t d = hi.dim() * lo.dim();
    Matrix m(d);
    for (std::size_t r1 = 0; r1 < hi.dim(); r1++) {
        for (std::size_t c1 = 0; c1 < hi.dim(); c1++) {
            for (std::size_t r2 = 0; r2 < lo.dim(); r2++) {
                for (std::size_t c2 = 0; c2 < lo.dim(); c2++) {
                    m(r1 * lo.dim() + r2, c1 * lo.dim() + c2) = hi(r1, c1) * lo(r2, c2);
                }
            }
        }
    }
    return m;
}

}  // namespace rqc
