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

#ifndef BRAIDKIT_DEFINITION_TRANSFORM_H
#define BRAIDKIT_DEFINITION_TRANSFORM_H

#include <string>
#include <vector>

#include "braidkit/braid.h"
#include "braidkit/encoding.h"
#include "braidkit/majorana.h"

namespace braidkit {

struct LabeledGate {
    std::string label;
    ComplexMatrix matrix;
};

/// Gates sharing one pairing definition and encoding. Construction checks that
/// every matrix has the dimension the encoding implies.
struct GateSet {
    PairingDefinition definition;
    Encoding encoding;
    std::vector<LabeledGate> gates;

    GateSet(PairingDefinition definition, Encoding encoding, std::vector<LabeledGate> gates);

    /// The single-generator gates U_1..U_{2m-1} under `def`, labelled "U1", "U2", ...
    static GateSet generators(const PairingDefinition &def, Encoding encoding, Orientation o);
};

/// Braid word whose conjugation action carries the Majoranas of `from` pair k
/// onto the positions of `to` pair k (up to sign), in the same member order.
/// Compiled from adjacent transpositions, one positive letter per swap, filling
/// target positions lowest index first.
BraidWord repairing_braid(const PairingDefinition &from, const PairingDefinition &to);

/// Which side carries the adjoint when conjugating by W.
enum class ConjugationSide {
    kAdjointLeft,   ///< W^dagger G W
    kAdjointRight,  ///< W G W^dagger
};

/// Conjugates every gate of `gs` by W = word_unitary(gs.definition, w, o), reduced
/// to the even sector first when `gs` is dense. Labels and order are kept. The
/// result's definition is `gs.definition` relabelled by the word's action on
/// Majorana indices.
GateSet transform_gateset(
    const GateSet &gs, const BraidWord &w, Orientation o, ConjugationSide side = ConjugationSide::kAdjointLeft);

/// `def` with every Majorana index k replaced by pi^-1(k), where
/// W^dagger gamma_k W = +-gamma_{pi(k)}. For a D_0 gate set transformed with
/// ConjugationSide::kAdjointLeft this is the definition in which the results
/// keep their meaning.
PairingDefinition relabel_definition(const PairingDefinition &def, const BraidWord &w, Orientation o);

}  // namespace braidkit

#endif  // BRAIDKIT_DEFINITION_TRANSFORM_H
