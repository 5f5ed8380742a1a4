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

#ifndef BRAIDKIT_SYNTHESIS_H
#define BRAIDKIT_SYNTHESIS_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "braidkit/braid.h"
#include "braidkit/encoding.h"
#include "braidkit/matrix.h"

namespace braidkit {

/// Thrown when closure exceeds the element cap. The braid image is finite, so
/// hitting the cap means the keying tolerance is broken.
class ClosureOverflow : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct EnumerationOptions {
    std::size_t element_cap = 10'000'000;
};

/// Finite projective image of the braid representation for one MF count,
/// encoding and orientation, with a shortest word for every element.
///
/// Elements are keyed by their phase-canonical matrix with entries rounded to a
/// 1e-8 grid. Each distinct rounded entry gets a one-byte code, so a key is
/// dim^2 bytes compared byte-exactly. Element 0 is the identity. Words are
/// stored as a BFS tree (parent, last letter).
class GroupIndex {
   public:
    static constexpr double kGrid = 1e-8;

    int mf_count() const {
        return mf_count_;
    }
    Encoding encoding() const {
        return encoding_;
    }
    Orientation orientation() const {
        return orientation_;
    }
    std::size_t dim() const {
        return dim_;
    }
    std::size_t order() const {
        return parent_.size();
    }

    /// Generator alphabet in BFS order: 1, -1, 2, -2, ...
    const std::vector<int> &alphabet() const {
        return alphabet_;
    }

    /// Encoded matrix of a single letter under this index's orientation/encoding.
    const ComplexMatrix &generator(int letter) const;

    /// Element id of `m` up to global phase, if present. `m` must have dim().
    std::optional<std::size_t> find(const ComplexMatrix &m) const;

    /// Shortest word for an element (lexicographic under alphabet order among ties).
    BraidWord word(std::size_t element) const;

    /// Phase-canonical matrix of an element, rebuilt from its key.
    ComplexMatrix element(std::size_t element) const;

    /// Human-readable statement of what a lookup miss certifies, e.g.
    /// "dense 4-MF braid image, orientation +1, 24 elements".
    std::string scope() const;

    void save(std::ostream &out) const;
    static GroupIndex load(std::istream &in);

   private:
    friend GroupIndex enumerate_image(int, Encoding, Orientation, const EnumerationOptions &);

    GroupIndex(int mf_count, Encoding encoding, Orientation orientation);

    static std::pair<std::int64_t, std::int64_t> grid_point(Complex v);
    /// Key for a canonical matrix, assigning codes to unseen entry values.
    std::string intern_key(const ComplexMatrix &canonical);
    /// Key using existing codes only; nullopt if some entry value was never seen.
    std::optional<std::string> key_of(const ComplexMatrix &canonical) const;
    std::optional<std::size_t> lookup(std::string_view key) const;
    void append(std::string_view key, std::uint32_t parent, int letter);
    std::string_view key_at(std::size_t element) const;

    int mf_count_;
    Encoding encoding_;
    Orientation orientation_;
    std::size_t dim_;
    std::vector<int> alphabet_;
    std::vector<ComplexMatrix> generators_;

    // Entry codec: rounded grid point -> code, code -> first value seen.
    std::map<std::pair<std::int64_t, std::int64_t>, std::uint8_t> codes_;
    std::vector<Complex> code_values_;

    std::vector<std::uint8_t> keys_;
    std::vector<std::uint32_t> parent_;
    std::vector<std::int8_t> letter_;
    std::unordered_multimap<std::size_t, std::uint32_t> lookup_;
};

/// Breadth-first closure from the identity over every generator and inverse.
/// mf_count must be 4, 6 or 8. Throws ClosureOverflow past options.element_cap.
GroupIndex enumerate_image(
    int mf_count, Encoding encoding, Orientation o, const EnumerationOptions &options = {});

/// Shortest stored word for `target` up to global phase, or nullopt when the
/// target is outside the enumerated image. Throws std::invalid_argument for a
/// non-unitary target or a dimension mismatch.
std::optional<BraidWord> synthesize(const ComplexMatrix &target, const GroupIndex &index);

struct PoleReport {
    /// Subset of {"+Z", "-Z", "+X", "-X", "+Y", "-Y"} in that order.
    std::vector<std::string> poles_reached;
    std::size_t elements = 0;
    std::size_t off_pole = 0;

    bool six_poles_only() const {
        return poles_reached.size() == 6 && off_pole == 0;
    }
};

/// Name of the Bloch-sphere pole `state` sits on up to phase, if any.
std::optional<std::string> classify_pole(const Eigen::VectorXcd &state);

/// Applies every element (or its inverse) of a 4-MF dense index to |0>.
PoleReport pole_reachability(const GroupIndex &index, bool use_inverses = false);

}  // namespace braidkit

#endif  // BRAIDKIT_SYNTHESIS_H
