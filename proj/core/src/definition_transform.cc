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

#include "braidkit/definition_transform.h"

#include <algorithm>
#include <stdexcept>

namespace braidkit {

GateSet::GateSet(PairingDefinition definition_, Encoding encoding_, std::vector<LabeledGate> gates_)
    : definition(std::move(definition_)), encoding(encoding_), gates(std::move(gates_)) {
    auto want = static_cast<Eigen::Index>(encoded_dim(encoding, definition.mf_count()));
    for (const auto &g : gates) {
        if (g.matrix.rows() != want || g.matrix.cols() != want) {
            throw std::invalid_argument(
                "GateSet: gate '" + g.label + "' is " + std::to_string(g.matrix.rows()) + "x" +
                std::to_string(g.matrix.cols()) + ", expected " + std::to_string(want) + "x" + std::to_string(want));
        }
    }
}

GateSet GateSet::generators(const PairingDefinition &def, Encoding encoding, Orientation o) {
    std::vector<LabeledGate> gates;
    for (int i = 1; i < def.mf_count(); i++) {
        ComplexMatrix u = generator_unitary(def, i, o);
        if (encoding == Encoding::kDense) {
            u = dense_reduce(u, def);
        }
        gates.push_back({"U" + std::to_string(i), std::move(u)});
    }
    return GateSet(def, encoding, std::move(gates));
}

BraidWord repairing_braid(const PairingDefinition &from, const PairingDefinition &to) {
    if (from.mf_count() != to.mf_count()) {
        throw std::invalid_argument(
            "repairing_braid: definitions cover different Majorana sets (" + std::to_string(from.mf_count()) + " vs " +
            std::to_string(to.mf_count()) + " MFs)");
    }
    const int n = from.mf_count();
    // wanted[slot] = Majorana that must end up at `slot` (1-based).
    std::vector<int> wanted(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t k = 0; k < from.pairs().size(); k++) {
        wanted[static_cast<std::size_t>(to.pairs()[k].first)] = from.pairs()[k].first;
        wanted[static_cast<std::size_t>(to.pairs()[k].second)] = from.pairs()[k].second;
    }
    // current[slot] = Majorana now sitting at `slot`. Letter j swaps slots j and j+1.
    std::vector<int> current(static_cast<std::size_t>(n) + 1);
    for (int s = 0; s <= n; s++) {
        current[static_cast<std::size_t>(s)] = s;
    }
    std::vector<int> letters;
    for (int slot = 1; slot <= n; slot++) {
        auto it = std::find(current.begin() + slot, current.end(), wanted[static_cast<std::size_t>(slot)]);
        int at = static_cast<int>(it - current.begin());
        for (int j = at - 1; j >= slot; j--) {
            std::swap(current[static_cast<std::size_t>(j)], current[static_cast<std::size_t>(j) + 1]);
            letters.push_back(j);
        }
    }
    return BraidWord(std::move(letters), n);
}

PairingDefinition relabel_definition(const PairingDefinition &def, const BraidWord &w, Orientation o) {
    // W^dagger gamma_k W = +-gamma_{pi(k)}, so the Majorana that now plays the
    // role of gamma_k is pi^-1(k).
    std::vector<SignedIndex> action = conjugation_action(def, w, o);
    std::vector<int> preimage(action.size() + 1, 0);
    for (std::size_t k = 0; k < action.size(); k++) {
        preimage[static_cast<std::size_t>(action[k].index)] = static_cast<int>(k + 1);
    }
    std::vector<PairingDefinition::Pair> pairs;
    for (const auto &[p, q] : def.pairs()) {
        pairs.emplace_back(preimage[static_cast<std::size_t>(p)], preimage[static_cast<std::size_t>(q)]);
    }
    return PairingDefinition(std::move(pairs));
}

GateSet transform_gateset(const GateSet &gs, const BraidWord &w, Orientation o, ConjugationSide side) {
    if (w.mf_count() != gs.definition.mf_count()) {
        throw std::invalid_argument(
            "transform_gateset: word over " + std::to_string(w.mf_count()) + " MFs for a " +
            std::to_string(gs.definition.mf_count()) + "-MF gate set");
    }
    ComplexMatrix conj = word_unitary(gs.definition, w, o);
    if (gs.encoding == Encoding::kDense) {
        conj = dense_reduce(conj, gs.definition);
    }
    ComplexMatrix conj_dag = conj.adjoint();
    std::vector<LabeledGate> out;
    out.reserve(gs.gates.size());
    for (const auto &g : gs.gates) {
        ComplexMatrix m = side == ConjugationSide::kAdjointLeft ? ComplexMatrix(conj_dag * g.matrix * conj)
                                                                : ComplexMatrix(conj * g.matrix * conj_dag);
        out.push_back({g.label, std::move(m)});
    }
    return GateSet(relabel_definition(gs.definition, w, o), gs.encoding, std::move(out));
}

}  // namespace braidkit
