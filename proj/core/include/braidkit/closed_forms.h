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

#ifndef BRAIDKIT_CLOSED_FORMS_H
#define BRAIDKIT_CLOSED_FORMS_H

#include <string_view>

#include "braidkit/matrix.h"

namespace braidkit {

enum class GateKind {
    kOddNonancillary,   ///< phase gate on one data qubit
    kEvenNonancillary,  ///< X (x) X coupling of two neighbouring data qubits
    kOddAncillary,      ///< exchange inside the ancilla pair; S / iS^dagger direct sums
    kEvenAncillary,     ///< last data qubit with the ancilla; X on the last data qubit
};

/// Dense-encoded generator U_i over n + 2 Majoranas, i.e. on n/2 data qubits.
/// n must be even and >= 2; i ranges over [1, n + 1]. i < n is nonancillary,
/// i in {n, n + 1} is ancillary.
struct GateFamilyQuery {
    int n;
    int i;

    GateFamilyQuery(int n, int i);

    int data_qubits() const {
        return n / 2;
    }
    int mf_count() const {
        return n + 2;
    }
    GateKind kind() const;
};

/// Closed-form dense gate for `q`, a 2^(n/2) square unitary.
///
///   odd, i < n:   I^{(i-1)/2} (x) S (x) I^{(n-i-1)/2}
///   even, i < n:  (I + i I^{i/2-1} (x) X (x) X (x) I^{(n-i-2)/2}) / sqrt(2)
///   even, i = n:  (I + i I^{n/2-1} (x) X) / sqrt(2)
///   odd, i = n+1: U(n-2, i-2) (+) i U(n-2, i-2)^dagger, with U(2, 3) = S
ComplexMatrix closed_form(const GateFamilyQuery &q);

namespace gates {
ComplexMatrix I();
ComplexMatrix X();
ComplexMatrix Y();
ComplexMatrix Z();
ComplexMatrix S();
ComplexMatrix S_dag();
ComplexMatrix T();
ComplexMatrix H();
/// cos(theta/2) I - i sin(theta/2) X
ComplexMatrix Rx(double theta);
ComplexMatrix Ry(double theta);
}  // namespace gates

/// Single-qubit gate by name: I, X, Y, Z, S, Sdg (also "S†", "S^dag"), T, H,
/// Rx(angle), Ry(angle). Angles are radians and may be written with pi, e.g.
/// "Rx(-pi/2)", "Ry(3*pi/4)", "Rx(0.25)". Throws std::invalid_argument when the
/// name is unknown.
ComplexMatrix named_gate(std::string_view name);

/// Tensor product of comma-separated named gates, leftmost factor most
/// significant: "S,I" is S (x) I.
ComplexMatrix named_gate_product(std::string_view names);

}  // namespace braidkit

#endif  // BRAIDKIT_CLOSED_FORMS_H
