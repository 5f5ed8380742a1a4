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

#ifndef BRAIDKIT_ENCODING_H
#define BRAIDKIT_ENCODING_H

#include <cstddef>
#include <string_view>
#include <vector>

#include "braidkit/majorana.h"
#include "braidkit/matrix.h"

namespace braidkit {

/// Sparse gates act on the full Fock space (2^m); dense gates on the even
/// parity sector only (2^(m-1)), with the last mode acting as the parity ancilla.
enum class Encoding {
    kSparse,
    kDense,
};

std::string_view to_string(Encoding e);
Encoding parse_encoding(std::string_view text);

enum class Sector {
    kEven,
    kOdd,
};

/// A gate tagged with its encoding and the pairing it was computed under.
/// Construction checks the dimension against the encoding and unitarity.
struct EncodedGate {
    ComplexMatrix matrix;
    Encoding encoding;
    PairingDefinition definition;

    EncodedGate(ComplexMatrix matrix, Encoding encoding, PairingDefinition definition);

    int mf_count() const {
        return definition.mf_count();
    }
};

std::size_t encoded_dim(Encoding e, int mf_count);

/// Basis indices split by eigenvalue of parity_matrix. "Even" is even total
/// occupation (|00>, |11>, ...). Both lists ascending.
struct ParitySectors {
    std::vector<std::size_t> even;
    std::vector<std::size_t> odd;
};

ParitySectors parity_sector_indices(const PairingDefinition &def);

/// Largest modulus among entries coupling the two sectors.
double cross_sector_mass(const ComplexMatrix &m, const ParitySectors &sectors);

/// Restriction of a parity-block-diagonal sparse gate to one sector. Rows and
/// columns are ordered by the data bits n_1..n_{m-1}; n_m is implied by the
/// sector. Throws std::invalid_argument if the input couples the sectors by more
/// than 1e-12.
EncodedGate dense_reduce(const EncodedGate &sparse, Sector sector = Sector::kEven);

ComplexMatrix dense_reduce(const ComplexMatrix &sparse, const PairingDefinition &def, Sector sector = Sector::kEven);

struct PhaseCanonical {
    ComplexMatrix matrix;
    /// Unit scalar removed from the input: input == phase * matrix.
    Complex phase;
};

/// Divides out the unit scalar that makes the first entry of largest modulus
/// (row-major scan, moduli within 1e-9 of the maximum count as ties) real and
/// positive. Throws on the zero matrix.
PhaseCanonical canonicalize_phase(const ComplexMatrix &m);

/// For unitaries: |tr(a^dagger b)| >= dim - 1e-9. Other inputs fall back to
/// comparing canonical forms entrywise at 1e-10.
bool equal_up_to_phase(const ComplexMatrix &a, const ComplexMatrix &b);

enum class OrientationMatch {
    kNone,
    kDirect,   ///< candidate ~ reference
    kAdjoint,  ///< candidate ~ reference^dagger
};

/// Compares up to global phase and orientation. Direct match wins when both hold.
OrientationMatch match_up_to_orientation(const ComplexMatrix &candidate, const ComplexMatrix &reference);

}  // namespace braidkit

#endif  // BRAIDKIT_ENCODING_H
