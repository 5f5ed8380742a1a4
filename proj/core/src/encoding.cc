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

#include "braidkit/encoding.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace braidkit {

namespace {

constexpr double kTieTolerance = 1e-9;
constexpr double kTraceTolerance = 1e-9;
constexpr double kCanonicalTolerance = 1e-10;

}  // namespace

std::string_view to_string(Encoding e) {
    return e == Encoding::kSparse ? "sparse" : "dense";
}

Encoding parse_encoding(std::string_view text) {
    if (text == "sparse") {
        return Encoding::kSparse;
    }
    if (text == "dense") {
        return Encoding::kDense;
    }
    throw std::invalid_argument("encoding must be 'sparse' or 'dense', got '" + std::string(text) + "'");
}

std::size_t encoded_dim(Encoding e, int mf_count) {
    int modes = mf_count / 2;
    return std::size_t{1} << (e == Encoding::kSparse ? modes : modes - 1);
}

EncodedGate::EncodedGate(ComplexMatrix matrix_, Encoding encoding_, PairingDefinition definition_)
    : matrix(std::move(matrix_)), encoding(encoding_), definition(std::move(definition_)) {
    auto want = static_cast<Eigen::Index>(encoded_dim(encoding, definition.mf_count()));
    if (matrix.rows() != want || matrix.cols() != want) {
        throw std::invalid_argument(
            "EncodedGate: " + std::string(to_string(encoding)) + " gate over " + std::to_string(definition.mf_count()) +
            " MFs must be " + std::to_string(want) + "x" + std::to_string(want));
    }
    if (!is_unitary(matrix)) {
        throw std::invalid_argument("EncodedGate: matrix is not unitary");
    }
}

ParitySectors parity_sector_indices(const PairingDefinition &def) {
    ParityOperator parity = parity_matrix(def);
    ParitySectors out;
    for (Eigen::Index k = 0; k < parity.matrix.rows(); k++) {
        double eigenvalue = parity.matrix(k, k).real();
        if (std::abs(eigenvalue - parity.even_eigenvalue) < 0.5) {
            out.even.push_back(static_cast<std::size_t>(k));
        } else {
            out.odd.push_back(static_cast<std::size_t>(k));
        }
    }
    return out;
}

double cross_sector_mass(const ComplexMatrix &m, const ParitySectors &sectors) {
    double worst = 0.0;
    for (auto r : sectors.even) {
        for (auto c : sectors.odd) {
            auto ri = static_cast<Eigen::Index>(r);
            auto ci = static_cast<Eigen::Index>(c);
            worst = std::max({worst, std::abs(m(ri, ci)), std::abs(m(ci, ri))});
        }
    }
    return worst;
}

ComplexMatrix dense_reduce(const ComplexMatrix &sparse, const PairingDefinition &def, Sector sector) {
    auto dim = static_cast<Eigen::Index>(def.space().dim());
    if (sparse.rows() != dim || sparse.cols() != dim) {
        throw std::invalid_argument("dense_reduce: matrix dimension does not match the Fock space");
    }
    ParitySectors sectors = parity_sector_indices(def);
    double leak = cross_sector_mass(sparse, sectors);
    if (leak > kAlgebraTolerance) {
        throw std::invalid_argument(
            "dense_reduce: matrix couples parity sectors (max cross entry " + std::to_string(leak) +
            "); it cannot come from a braid");
    }
    // Ascending full indices within a sector are already ordered by the data bits,
    // because the ancilla is the least significant bit.
    const auto &keep = sector == Sector::kEven ? sectors.even : sectors.odd;
    auto n = static_cast<Eigen::Index>(keep.size());
    ComplexMatrix out(n, n);
    for (Eigen::Index r = 0; r < n; r++) {
        for (Eigen::Index c = 0; c < n; c++) {
            out(r, c) = sparse(static_cast<Eigen::Index>(keep[static_cast<std::size_t>(r)]),
                               static_cast<Eigen::Index>(keep[static_cast<std::size_t>(c)]));
        }
    }
    return out;
}

EncodedGate dense_reduce(const EncodedGate &sparse, Sector sector) {
    if (sparse.encoding != Encoding::kSparse) {
        throw std::invalid_argument("dense_reduce: input gate is already dense");
    }
    if (sparse.definition.modes() < 2) {
        throw std::invalid_argument("dense_reduce: need at least 4 MFs (one data qubit plus the ancilla)");
    }
    return EncodedGate(dense_reduce(sparse.matrix, sparse.definition, sector), Encoding::kDense, sparse.definition);
}

PhaseCanonical canonicalize_phase(const ComplexMatrix &m) {
    if (m.size() == 0) {
        throw std::invalid_argument("canonicalize_phase: empty matrix");
    }
    double largest = m.cwiseAbs().maxCoeff();
    if (largest == 0.0) {
        throw std::invalid_argument("canonicalize_phase: zero matrix has no phase");
    }
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            double magnitude = std::abs(m(r, c));
            if (magnitude >= largest - kTieTolerance) {
                Complex phase = m(r, c) / magnitude;
                ComplexMatrix canonical = m / phase;
                // The pivot is real by construction; drop its rounding residue.
                canonical(r, c) = Complex(magnitude, 0.0);
                return {std::move(canonical), phase};
            }
        }
    }
    throw std::logic_error("canonicalize_phase: no pivot found");
}

bool equal_up_to_phase(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("equal_up_to_phase: dimension mismatch");
    }
    if (a.size() == 0) {
        return true;
    }
    if (a.rows() == a.cols() && is_unitary(a, 1e-9) && is_unitary(b, 1e-9)) {
        Complex overlap = (a.adjoint() * b).trace();
        return std::abs(overlap) >= static_cast<double>(a.rows()) - kTraceTolerance;
    }
    return max_abs_diff(canonicalize_phase(a).matrix, canonicalize_phase(b).matrix) <= kCanonicalTolerance;
}

OrientationMatch match_up_to_orientation(const ComplexMatrix &candidate, const ComplexMatrix &reference) {
    if (equal_up_to_phase(candidate, reference)) {
        return OrientationMatch::kDirect;
    }
    if (equal_up_to_phase(candidate, reference.adjoint())) {
        return OrientationMatch::kAdjoint;
    }
    return OrientationMatch::kNone;
}

}  // namespace braidkit
