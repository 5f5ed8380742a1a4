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

#include "braidkit/synthesis.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace braidkit {

namespace {

constexpr std::uint32_t kNoParent = std::numeric_limits<std::uint32_t>::max();
constexpr double kPoleTolerance = 1e-9;

struct SparseEntry {
    Eigen::Index row;
    Eigen::Index col;
    Complex value;
};

// Braid generators have at most two nonzeros per row.
std::vector<SparseEntry> sparse_entries(const ComplexMatrix &m) {
    std::vector<SparseEntry> out;
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            if (std::abs(m(r, c)) > 1e-15) {
                out.push_back({r, c, m(r, c)});
            }
        }
    }
    return out;
}

void left_multiply(const std::vector<SparseEntry> &g, const ComplexMatrix &m, ComplexMatrix &out) {
    out.setZero(m.rows(), m.cols());
    for (const auto &e : g) {
        out.row(e.row) += e.value * m.row(e.col);
    }
}

std::size_t hash_key(std::string_view key) {
    return std::hash<std::string_view>{}(key);
}

}  // namespace

GroupIndex::GroupIndex(int mf_count, Encoding encoding, Orientation orientation)
    : mf_count_(mf_count), encoding_(encoding), orientation_(orientation) {
    if (mf_count != 4 && mf_count != 6 && mf_count != 8) {
        throw std::invalid_argument("enumerate_image: MF count must be 4, 6 or 8, got " + std::to_string(mf_count));
    }
    dim_ = encoded_dim(encoding, mf_count);
    PairingDefinition def = PairingDefinition::adjacent(mf_count / 2);
    generators_.resize(static_cast<std::size_t>(mf_count) * 2);
    for (int i = 1; i < mf_count; i++) {
        ComplexMatrix u = generator_unitary(def, i, orientation);
        if (encoding == Encoding::kDense) {
            u = dense_reduce(u, def);
        }
        alphabet_.push_back(i);
        alphabet_.push_back(-i);
        generators_[static_cast<std::size_t>(2 * i)] = u;
        generators_[static_cast<std::size_t>(2 * i + 1)] = u.adjoint();
    }
}

const ComplexMatrix &GroupIndex::generator(int letter) const {
    if (letter == 0 || std::abs(letter) >= mf_count_) {
        throw std::out_of_range("GroupIndex::generator: letter " + std::to_string(letter) + " out of range");
    }
    return generators_[static_cast<std::size_t>(2 * std::abs(letter) + (letter < 0 ? 1 : 0))];
}

std::pair<std::int64_t, std::int64_t> GroupIndex::grid_point(Complex v) {
    return {std::llround(v.real() / kGrid), std::llround(v.imag() / kGrid)};
}

std::string GroupIndex::intern_key(const ComplexMatrix &canonical) {
    std::string key;
    key.reserve(static_cast<std::size_t>(canonical.size()));
    for (Eigen::Index r = 0; r < canonical.rows(); r++) {
        for (Eigen::Index c = 0; c < canonical.cols(); c++) {
            Complex v = canonical(r, c);
            auto it = codes_.find(grid_point(v));
            if (it == codes_.end()) {
                if (code_values_.size() > std::numeric_limits<std::uint8_t>::max()) {
                    throw ClosureOverflow("GroupIndex: more than 256 distinct entry values; keying is broken");
                }
                it = codes_.emplace(grid_point(v), static_cast<std::uint8_t>(code_values_.size())).first;
                code_values_.push_back(v);
            }
            key.push_back(static_cast<char>(it->second));
        }
    }
    return key;
}

std::optional<std::string> GroupIndex::key_of(const ComplexMatrix &canonical) const {
    std::string key;
    key.reserve(static_cast<std::size_t>(canonical.size()));
    for (Eigen::Index r = 0; r < canonical.rows(); r++) {
        for (Eigen::Index c = 0; c < canonical.cols(); c++) {
            auto it = codes_.find(grid_point(canonical(r, c)));
            if (it == codes_.end()) {
                return std::nullopt;
            }
            key.push_back(static_cast<char>(it->second));
        }
    }
    return key;
}

std::string_view GroupIndex::key_at(std::size_t element) const {
    std::size_t width = dim_ * dim_;
    return {reinterpret_cast<const char *>(keys_.data()) + element * width, width};
}

std::optional<std::size_t> GroupIndex::lookup(std::string_view key) const {
    auto [begin, end] = lookup_.equal_range(hash_key(key));
    for (auto it = begin; it != end; ++it) {
        if (key_at(it->second) == key) {
            return it->second;
        }
    }
    return std::nullopt;
}

void GroupIndex::append(std::string_view key, std::uint32_t parent, int letter) {
    auto id = static_cast<std::uint32_t>(parent_.size());
    keys_.insert(keys_.end(), key.begin(), key.end());
    parent_.push_back(parent);
    letter_.push_back(static_cast<std::int8_t>(letter));
    lookup_.emplace(hash_key(key), id);
}

std::optional<std::size_t> GroupIndex::find(const ComplexMatrix &m) const {
    if (m.rows() != static_cast<Eigen::Index>(dim_) || m.cols() != static_cast<Eigen::Index>(dim_)) {
        throw std::invalid_argument("GroupIndex::find: expected a " + std::to_string(dim_) + "x" + std::to_string(dim_) + " matrix");
    }
    auto key = key_of(canonicalize_phase(m).matrix);
    if (!key) {
        return std::nullopt;
    }
    return lookup(*key);
}

BraidWord GroupIndex::word(std::size_t element) const {
    if (element >= order()) {
        throw std::out_of_range("GroupIndex::word: element out of range");
    }
    std::vector<int> letters;
    for (auto at = static_cast<std::uint32_t>(element); parent_[at] != kNoParent; at = parent_[at]) {
        letters.push_back(letter_[at]);
    }
    std::reverse(letters.begin(), letters.end());
    return BraidWord(std::move(letters), mf_count_);
}

ComplexMatrix GroupIndex::element(std::size_t element) const {
    if (element >= order()) {
        throw std::out_of_range("GroupIndex::element: element out of range");
    }
    auto n = static_cast<Eigen::Index>(dim_);
    ComplexMatrix out(n, n);
    std::string_view key = key_at(element);
    std::size_t k = 0;
    for (Eigen::Index r = 0; r < n; r++) {
        for (Eigen::Index c = 0; c < n; c++) {
            out(r, c) = code_values_[static_cast<std::uint8_t>(key[k++])];
        }
    }
    return out;
}

std::string GroupIndex::scope() const {
    return std::string(to_string(encoding_)) + " " + std::to_string(mf_count_) + "-MF braid image, orientation " +
           (orientation_ == Orientation::kPositive ? "+1" : "-1") + ", " + std::to_string(order()) + " elements";
}

GroupIndex enumerate_image(int mf_count, Encoding encoding, Orientation o, const EnumerationOptions &options) {
    GroupIndex index(mf_count, encoding, o);
    std::vector<std::vector<SparseEntry>> sparse;
    for (int letter : index.alphabet_) {
        sparse.push_back(sparse_entries(index.generator(letter)));
    }

    index.append(index.intern_key(identity(index.dim_)), kNoParent, 0);
    ComplexMatrix product;
    std::size_t layer_begin = 0;
    std::size_t layer_end = 1;
    while (layer_begin < layer_end) {
        for (std::size_t e = layer_begin; e < layer_end; e++) {
            ComplexMatrix current = index.element(e);
            for (std::size_t g = 0; g < sparse.size(); g++) {
                // Appending a letter applies it last: G * M.
                left_multiply(sparse[g], current, product);
                std::string key = index.intern_key(canonicalize_phase(product).matrix);
                if (index.lookup(key)) {
                    continue;
                }
                if (index.order() >= options.element_cap) {
                    throw ClosureOverflow(
                        "enumerate_image: closure exceeded " + std::to_string(options.element_cap) + " elements");
                }
                index.append(key, static_cast<std::uint32_t>(e), index.alphabet_[g]);
            }
        }
        layer_begin = layer_end;
        layer_end = index.order();
    }
    return index;
}

std::optional<BraidWord> synthesize(const ComplexMatrix &target, const GroupIndex &index) {
    auto dim = static_cast<Eigen::Index>(index.dim());
    if (target.rows() != dim || target.cols() != dim) {
        throw std::invalid_argument(
            "synthesize: target is " + std::to_string(target.rows()) + "x" + std::to_string(target.cols()) +
            " but the " + std::to_string(index.mf_count()) + "-MF " + std::string(to_string(index.encoding())) +
            " index is " + std::to_string(dim) + "x" + std::to_string(dim));
    }
    if (!is_unitary(target, 1e-9)) {
        throw std::invalid_argument("synthesize: target is not unitary");
    }
    auto element = index.find(target);
    if (!element) {
        return std::nullopt;
    }
    return index.word(*element);
}

std::optional<std::string> classify_pole(const Eigen::VectorXcd &state) {
    if (state.size() != 2) {
        throw std::invalid_argument("classify_pole: expected a single-qubit state");
    }
    const double h = 1.0 / std::sqrt(2.0);
    const Complex i{0.0, 1.0};
    const std::pair<const char *, Eigen::Vector2cd> poles[] = {
        {"+Z", Eigen::Vector2cd(1, 0)},
        {"-Z", Eigen::Vector2cd(0, 1)},
        {"+X", Eigen::Vector2cd(h, h)},
        {"-X", Eigen::Vector2cd(h, -h)},
        {"+Y", Eigen::Vector2cd(h, h * i)},
        {"-Y", Eigen::Vector2cd(h, -h * i)},
    };
    for (const auto &[name, pole] : poles) {
        if (std::abs(pole.dot(state)) >= 1.0 - kPoleTolerance) {
            return std::string(name);
        }
    }
    return std::nullopt;
}

PoleReport pole_reachability(const GroupIndex &index, bool use_inverses) {
    if (index.dim() != 2) {
        throw std::invalid_argument("pole_reachability: needs a single-qubit (4-MF dense) index");
    }
    static const std::vector<std::string> kOrder = {"+Z", "-Z", "+X", "-X", "+Y", "-Y"};
    std::vector<bool> reached(kOrder.size(), false);
    PoleReport report;
    report.elements = index.order();
    for (std::size_t e = 0; e < index.order(); e++) {
        ComplexMatrix u = index.element(e);
        if (use_inverses) {
            u = u.adjoint().eval();
        }
        auto pole = classify_pole(u.col(0));
        if (!pole) {
            report.off_pole++;
            continue;
        }
        auto at = std::find(kOrder.begin(), kOrder.end(), *pole) - kOrder.begin();
        reached[static_cast<std::size_t>(at)] = true;
    }
    for (std::size_t k = 0; k < kOrder.size(); k++) {
        if (reached[k]) {
            report.poles_reached.push_back(kOrder[k]);
        }
    }
    return report;
}

}  // namespace braidkit
