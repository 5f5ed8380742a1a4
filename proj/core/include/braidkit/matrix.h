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

#ifndef BRAIDKIT_MATRIX_H
#define BRAIDKIT_MATRIX_H

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace braidkit {

using Complex = std::complex<double>;

/// Dense square matrix of complex amplitudes. Every operator and gate in the
/// library is one of these; dimensions stay at or below 2^6.
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kAlgebraTolerance = 1e-12;

ComplexMatrix identity(std::size_t dim);

/// Kronecker product; the left factor indexes the most significant bits.
ComplexMatrix kron(const ComplexMatrix &left, const ComplexMatrix &right);

/// `factor` tensored with itself `count` times. `count == 0` gives the 1x1 identity.
ComplexMatrix kron_power(const ComplexMatrix &factor, int count);

/// Block-diagonal direct sum: `top` in the upper-left block, `bottom` in the lower-right.
ComplexMatrix direct_sum(const ComplexMatrix &top, const ComplexMatrix &bottom);

/// Largest entrywise modulus of `a - b`. Dimensions must agree.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// max |(U^dagger U - I)_{rc}|.
double unitarity_deviation(const ComplexMatrix &m);

bool is_unitary(const ComplexMatrix &m, double tolerance = kAlgebraTolerance);

bool is_diagonal(const ComplexMatrix &m, double tolerance = kAlgebraTolerance);

}  // namespace braidkit

#endif  // BRAIDKIT_MATRIX_H
