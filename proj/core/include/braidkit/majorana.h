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

#ifndef BRAIDKIT_MAJORANA_H
#define BRAIDKIT_MAJORANA_H

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidkit/matrix.h"

namespace braidkit {

/// Largest number of fermionic modes accepted anywhere (Fock dimension 2^10).
inline constexpr int kMaxModes = 10;

/// Fock space of `modes` fermionic modes.
///
/// Basis state |n_1 n_2 ... n_m> has index sum_j n_j * 2^(m-j), so mode 1 is the
/// most significant bit. The state is defined as
/// (a_1^dag)^{n_1} (a_2^dag)^{n_2} ... (a_m^dag)^{n_m} |0>, which fixes every
/// fermionic sign in the library.
struct FockSpace {
    int modes;

    explicit FockSpace(int modes);
    std::size_t dim() const {
        return std::size_t{1} << modes;
    }
};

/// Ordered list of disjoint Majorana-index pairs (p_k, q_k); mode k is
/// a_k = (gamma_{p_k} + i gamma_{q_k}) / 2. Indices are 1-based and cover
/// {1, ..., 2m} exactly once.
class PairingDefinition {
   public:
    using Pair = std::pair<int, int>;

    explicit PairingDefinition(std::vector<Pair> pairs);

    /// ((1,2), (3,4), ...): the adjacent pairing used throughout as D_0.
    static PairingDefinition adjacent(int modes);

    /// Parses "1:2,3:4". The word "adjacent" is not accepted here; callers that
    /// want a default should use adjacent().
    static PairingDefinition parse(std::string_view text);

    int modes() const {
        return static_cast<int>(pairs_.size());
    }
    int mf_count() const {
        return 2 * modes();
    }
    FockSpace space() const {
        return FockSpace(modes());
    }
    const std::vector<Pair> &pairs() const {
        return pairs_;
    }

    /// Mode k (1-based) owning Majorana `index`, and whether `index` is the
    /// first (p) member of that pair.
    std::pair<int, bool> locate(int index) const;

    /// True when Majoranas `a` and `b` belong to the same pair.
    bool same_pair(int a, int b) const;

    std::string str() const;

    bool operator==(const PairingDefinition &other) const = default;

   private:
    std::vector<Pair> pairs_;
};

/// Annihilation operator a_j (1-based j). Acting on a basis state it is zero if
/// n_j = 0 and otherwise clears bit j with sign (-1)^{sum_{k<j} n_k}.
ComplexMatrix ladder_matrix(const FockSpace &space, int j);

/// gamma_i = a_k + a_k^dag when i = p_k, and i (a_k^dag - a_k) when i = q_k.
ComplexMatrix gamma_matrix(const PairingDefinition &def, int i);

/// a_k^dag a_k for mode k of `def`.
ComplexMatrix number_matrix(const PairingDefinition &def, int k);

/// prod_k (i gamma_{p_k} gamma_{q_k}), diagonal in the Fock basis.
///
/// Each factor equals 2 n_k - 1, so an empty mode contributes -1 and the
/// product over m modes is (-1)^{m + sum n_k}. `even_eigenvalue` records which
/// sign marks even total occupation, since that depends on m.
struct ParityOperator {
    ComplexMatrix matrix;
    int even_eigenvalue;
};

ParityOperator parity_matrix(const PairingDefinition &def);

}  // namespace braidkit

#endif  // BRAIDKIT_MAJORANA_H
