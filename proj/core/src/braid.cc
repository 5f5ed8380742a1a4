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

#include "braidkit/braid.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace braidkit {

namespace {

constexpr double kConjugationTolerance = 1e-10;

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') {
        s.remove_prefix(1);
    }
    while (!s.empty() && s.back() == ' ') {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace

Orientation parse_orientation(std::string_view text) {
    if (text == "+1" || text == "1" || text == "positive" || text == "+") {
        return Orientation::kPositive;
    }
    if (text == "-1" || text == "negative" || text == "-") {
        return Orientation::kNegative;
    }
    throw std::invalid_argument("orientation must be +1 or -1, got '" + std::string(text) + "'");
}

BraidWord::BraidWord(std::vector<int> letters, int mf_count) : letters_(std::move(letters)), mf_count_(mf_count) {
    if (mf_count < 2 || mf_count % 2 != 0 || mf_count > 2 * kMaxModes) {
        throw std::invalid_argument("braid word: MF count must be even and in [2, " + std::to_string(2 * kMaxModes) + "]");
    }
    for (int letter : letters_) {
        if (letter == 0 || std::abs(letter) > mf_count - 1) {
            throw std::invalid_argument(
                "braid word: letter " + std::to_string(letter) + " outside +-[1, " + std::to_string(mf_count - 1) + "]");
        }
    }
}

BraidWord BraidWord::parse(std::string_view text, int mf_count) {
    std::vector<int> letters;
    text = trim(text);
    while (!text.empty()) {
        auto comma = text.find(',');
        std::string_view item = trim(text.substr(0, comma));
        if (!item.empty() && item.front() == '+') {
            item.remove_prefix(1);
        }
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
            throw std::invalid_argument("braid word: cannot parse letter '" + std::string(item) + "'");
        }
        letters.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
        if (trim(text).empty()) {
            throw std::invalid_argument("braid word: trailing comma");
        }
    }
    return BraidWord(std::move(letters), mf_count);
}

BraidWord BraidWord::inverse() const {
    std::vector<int> out(letters_.rbegin(), letters_.rend());
    for (int &letter : out) {
        letter = -letter;
    }
    return BraidWord(std::move(out), mf_count_);
}

BraidWord BraidWord::then(const BraidWord &next) const {
    if (next.mf_count_ != mf_count_) {
        throw std::invalid_argument("braid word: cannot concatenate words over different MF counts");
    }
    std::vector<int> out = letters_;
    out.insert(out.end(), next.letters_.begin(), next.letters_.end());
    return BraidWord(std::move(out), mf_count_);
}

std::string BraidWord::str() const {
    std::string out;
    for (std::size_t k = 0; k < letters_.size(); k++) {
        if (k > 0) {
            out += ',';
        }
        out += std::to_string(letters_[k]);
    }
    return out;
}

ComplexMatrix generator_unitary(const PairingDefinition &def, int i, Orientation o) {
    if (i < 1 || i > def.mf_count() - 1) {
        throw std::out_of_range(
            "generator_unitary: index " + std::to_string(i) + " outside [1, " + std::to_string(def.mf_count() - 1) + "]");
    }
    ComplexMatrix product = gamma_matrix(def, i) * gamma_matrix(def, i + 1);
    ComplexMatrix u = identity(def.space().dim()) + static_cast<double>(sign_of(o)) * product;
    return u / std::sqrt(2.0);
}

ComplexMatrix word_unitary(const PairingDefinition &def, const BraidWord &w, Orientation o) {
    if (w.mf_count() != def.mf_count()) {
        throw std::invalid_argument(
            "word_unitary: word over " + std::to_string(w.mf_count()) + " MFs applied to a " +
            std::to_string(def.mf_count()) + "-MF definition");
    }
    std::vector<ComplexMatrix> cache(static_cast<std::size_t>(def.mf_count()));
    ComplexMatrix total = identity(def.space().dim());
    for (int letter : w.letters()) {
        auto &g = cache[static_cast<std::size_t>(std::abs(letter))];
        if (g.size() == 0) {
            g = generator_unitary(def, std::abs(letter), o);
        }
        if (letter > 0) {
            total = g * total;
        } else {
            total = g.adjoint() * total;
        }
    }
    return total;
}

std::vector<SignedIndex> conjugation_action(const PairingDefinition &def, const BraidWord &w, Orientation o) {
    ComplexMatrix u = word_unitary(def, w, o);
    const int n = def.mf_count();
    std::vector<ComplexMatrix> gammas;
    gammas.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; j++) {
        gammas.push_back(gamma_matrix(def, j));
    }
    std::vector<SignedIndex> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; k++) {
        ComplexMatrix image = u.adjoint() * gammas[static_cast<std::size_t>(k - 1)] * u;
        bool found = false;
        for (int j = 1; j <= n && !found; j++) {
            const auto &g = gammas[static_cast<std::size_t>(j - 1)];
            for (int sign : {1, -1}) {
                if (max_abs_diff(image, static_cast<double>(sign) * g) <= kConjugationTolerance) {
                    out.push_back({j, sign});
                    found = true;
                    break;
                }
            }
        }
        if (!found) {
            throw std::logic_error(
                "conjugate_gamma: image of gamma_" + std::to_string(k) + " under word '" + w.str() +
                "' is not a signed Majorana operator");
        }
    }
    return out;
}

SignedIndex conjugate_gamma(const PairingDefinition &def, const BraidWord &w, int k, Orientation o) {
    if (k < 1 || k > def.mf_count()) {
        throw std::out_of_range("conjugate_gamma: Majorana index " + std::to_string(k) + " outside [1, " + std::to_string(def.mf_count()) + "]");
    }
    return conjugation_action(def, w, o)[static_cast<std::size_t>(k - 1)];
}

bool BraidRelationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const RelationCheck &c) { return c.pass; });
}

double BraidRelationReport::max_deviation() const {
    double worst = 0.0;
    for (const auto &c : checks) {
        worst = std::max(worst, c.max_deviation);
    }
    return worst;
}

BraidRelationReport verify_braid_relations(const PairingDefinition &def, Orientation o, double tolerance) {
    if (def.modes() < 2) {
        throw std::invalid_argument("verify_braid_relations: need at least 4 MFs");
    }
    const int generators = def.mf_count() - 1;
    std::vector<ComplexMatrix> u;
    for (int i = 1; i <= generators; i++) {
        u.push_back(generator_unitary(def, i, o));
    }
    BraidRelationReport report;
    for (int i = 1; i <= generators; i++) {
        for (int j = i + 1; j <= generators; j++) {
            const auto &a = u[static_cast<std::size_t>(i - 1)];
            const auto &b = u[static_cast<std::size_t>(j - 1)];
            double dev;
            std::string name;
            if (j == i + 1) {
                dev = max_abs_diff(a * b * a, b * a * b);
                name = "U" + std::to_string(i) + "U" + std::to_string(j) + "U" + std::to_string(i) + "=U" +
                       std::to_string(j) + "U" + std::to_string(i) + "U" + std::to_string(j);
            } else {
                dev = max_abs_diff(a * b, b * a);
                name = "U" + std::to_string(i) + "U" + std::to_string(j) + "=U" + std::to_string(j) + "U" + std::to_string(i);
            }
            report.checks.push_back({std::move(name), dev <= tolerance, dev});
        }
    }
    return report;
}

}  // namespace braidkit
