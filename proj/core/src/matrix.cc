// Copyright 2026 The braidkit Authors
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

#include "braidkit/matrix.h"

#include <stdexcept>

namespace braidkit {

ComplexMatrix identity(std::size_t dim) {
    auto n = static_cast<Eigen::Index>(dim);
    return ComplexMatrix::Identity(n, n);
}

ComplexMatrix kron(const ComplexMatrix &left, const ComplexMatrix &right) {
    ComplexMatrix out(left.rows() * right.rows(), left.cols() * right.cols());
    for (Eigen::Index r = 0; r < left.rows(); r++) {
        for (Eigen::Index c = 0; c < left.cols(); c++) {
            out.block(r * right.rows(), c * right.cols(), right.rows(), right.cols()) = left(r, c) * right;
        }
    }
    return out;
}

ComplexMatrix kron_power(const ComplexMatrix &factor, int count) {
    if (count < 0) {
        throw std::invalid_argument("kron_power: negative count");
    }
    ComplexMatrix out = identity(1);
    for (int k = 0; k < count; k++) {
        out = kron(out, factor);
    }
    return out;
}

ComplexMatrix direct_sum(const ComplexMatrix &top, const ComplexMatrix &bottom) {
    ComplexMatrix out = ComplexMatrix::Zero(top.rows() + bottom.rows(), top.cols() + bottom.cols());
    out.topLeftCorner(top.rows(), top.cols()) = top;
    out.bottomRightCorner(bottom.rows(), bottom.cols()) = bottom;
    return out;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff: dimension mismatch");
    }
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

double unitarity_deviation(const ComplexMatrix &m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("unitarity_deviation: matrix is not square");
    }
    return max_abs_diff(m.adjoint() * m, ComplexMatrix::Identity(m.rows(), m.cols()));
}

bool is_unitary(const ComplexMatrix &m, double tolerance) {
    return m.rows() == m.cols() && unitarity_deviation(m) <= tolerance;
}

bool is_diagonal(const ComplexMatrix &m, double tolerance) {
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            if (r != c && std::abs(m(r, c)) > tolerance) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace braidkit
