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

#ifndef BRAIDKIT_BRAID_H
#define BRAIDKIT_BRAID_H

#include <string>
#include <string_view>
#include <vector>

#include "braidkit/majorana.h"
#include "braidkit/matrix.h"

namespace braidkit {

/// Sign of the exponent in U_i = exp(sign * pi/4 * gamma_i gamma_{i+1}).
/// Positive is the counterclockwise exchange.
enum class Orientation : int {
    kPositive = 1,
    kNegative = -1,
};

inline int sign_of(Orientation o) {
    return static_cast<int>(o);
}

inline Orientation reversed(Orientation o) {
    return o == Orientation::kPositive ? Orientation::kNegative : Orientation::kPositive;
}

/// Accepts "+1", "1", "-1", "positive", "negative".
Orientation parse_orientation(std::string_view text);

/// Finite sequence of signed generator letters over `mf_count` Majoranas.
/// Letter +i is b_i, -i is b_i^{-1}; |letter| must lie in [1, mf_count - 1].
/// The empty word is the identity braid.
class BraidWord {
   public:
    BraidWord(std::vector<int> letters, int mf_count);

    static BraidWord identity(int mf_count) {
        return BraidWord({}, mf_count);
    }

    /// Comma-separated signed integers, e.g. "1,2,-3". Empty text is the identity.
    static BraidWord parse(std::string_view text, int mf_count);

    const std::vector<int> &letters() const {
        return letters_;
    }
    int mf_count() const {
        return mf_count_;
    }
    std::size_t size() const {
        return letters_.size();
    }
    bool empty() const {
        return letters_.empty();
    }

    /// The inverse braid: letters reversed and negated.
    BraidWord inverse() const;

    /// `*this` followed by `next`.
    BraidWord then(const BraidWord &next) const;

    std::string str() const;

    bool operator==(const BraidWord &other) const = default;

   private:
    std::vector<int> letters_;
    int mf_count_;
};

/// (I + sign * gamma_i gamma_{i+1}) / sqrt(2), the closed form of the exponential.
ComplexMatrix generator_unitary(const PairingDefinition &def, int i, Orientation o);

/// Product of generator unitaries; the first letter acts first on states, so it
/// is the rightmost factor. A negative letter uses the adjoint generator.
ComplexMatrix word_unitary(const PairingDefinition &def, const BraidWord &w, Orientation o);

/// A Majorana index with a sign: the operator sign * gamma_index.
struct SignedIndex {
    int index;
    int sign;

    bool operator==(const SignedIndex &other) const = default;
};

/// Matches U^dagger gamma_k U against +-gamma_j numerically and returns (j, +-1).
/// For a single generator this is gamma_i -> gamma_{i+1}, gamma_{i+1} -> -gamma_i
/// (orientation +1).
/// Throws std::logic_error if the conjugate is not a single signed Majorana.
SignedIndex conjugate_gamma(const PairingDefinition &def, const BraidWord &w, int k, Orientation o);

/// conjugate_gamma for every k = 1..mf_count (entry k-1).
std::vector<SignedIndex> conjugation_action(const PairingDefinition &def, const BraidWord &w, Orientation o);

struct RelationCheck {
    std::string relation;
    bool pass;
    double max_deviation;
};

struct BraidRelationReport {
    std::vector<RelationCheck> checks;

    bool all_pass() const;
    double max_deviation() const;
};

/// Yang-Baxter U_i U_{i+1} U_i = U_{i+1} U_i U_{i+1} for every adjacent pair and
/// U_i U_j = U_j U_i for |i - j| >= 2. Failures are reported, not thrown.
/// Requires at least two modes.
BraidRelationReport verify_braid_relations(
    const PairingDefinition &def, Orientation o, double tolerance = kAlgebraTolerance);

}  // namespace braidkit

#endif  // BRAIDKIT_BRAID_H
