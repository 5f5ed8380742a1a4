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

#include "braidkit/majorana.h"

#include <bit>
#include <charconv>
#include <stdexcept>

namespace braidkit {

namespace {

constexpr Complex kI{0.0, 1.0};

int parse_int(std::string_view text) {
    int value = 0;
    const char *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || text.empty()) {
        throw std::invalid_argument("pairing definition: bad integer '" + std::string(text) + "'");
    }
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace

FockSpace::FockSpace(int modes) : modes(modes) {
    if (modes < 1 || modes > kMaxModes) {
        throw std::invalid_argument("FockSpace: mode count must be in [1, " + std::to_string(kMaxModes) + "]");
    }
}

PairingDefinition::PairingDefinition(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
    if (pairs_.empty() || static_cast<int>(pairs_.size()) > kMaxModes) {
        throw std::invalid_argument("pairing definition: need between 1 and " + std::to_string(kMaxModes) + " pairs");
    }
    int n = mf_count();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const auto &[p, q] : pairs_) {
        for (int index : {p, q}) {
            if (index < 1 || index > n) {
                throw std::invalid_argument(
                    "pairing definition: Majorana index " + std::to_string(index) + " outside [1, " +
                    std::to_string(n) + "]");
            }
            if (seen[index]) {
                throw std::invalid_argument(
                    "pairing definition: Majorana index " + std::to_string(index) + " used twice");
            }
            seen[index] = true;
        }
    }
}

PairingDefinition PairingDefinition::adjacent(int modes) {
    if (modes < 1 || modes > kMaxModes) {
        throw std::invalid_argument("pairing definition: mode count must be in [1, " + std::to_string(kMaxModes) + "]");
    }
    std::vector<Pair> pairs;
    for (int k = 0; k < modes; k++) {
        pairs.emplace_back(2 * k + 1, 2 * k + 2);
    }
    return PairingDefinition(std::move(pairs));
}

PairingDefinition PairingDefinition::parse(std::string_view text) {
    std::vector<Pair> pairs;
    text = trim(text);
    while (!text.empty()) {
        auto comma = text.find(',');
        std::string_view item = trim(text.substr(0, comma));
        auto colon = item.find(':');
        if (colon == std::string_view::npos) {
            throw std::invalid_argument("pairing definition: expected 'p:q', got '" + std::string(item) + "'");
        }
        pairs.emplace_back(parse_int(trim(item.substr(0, colon))), parse_int(trim(item.substr(colon + 1))));
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
        if (trim(text).empty()) {
            throw std::invalid_argument("pairing definition: trailing comma");
        }
    }
    return PairingDefinition(std::move(pairs));
}

std::pair<int, bool> PairingDefinition::locate(int index) const {
    for (std::size_t k = 0; k < pairs_.size(); k++) {
        if (pairs_[k].first == index) {
            return {static_cast<int>(k) + 1, true};
        }
        if (pairs_[k].second == index) {
            return {static_cast<int>(k) + 1, false};
        }
    }
    throw std::out_of_range("Majorana index " + std::to_string(index) + " outside [1, " + std::to_string(mf_count()) + "]");
}

bool PairingDefinition::same_pair(int a, int b) const {
    return a != b && locate(a).first == locate(b).first;
}

std::string PairingDefinition::str() const {
    std::string out;
    for (const auto &[p, q] : pairs_) {
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(p) + ':' + std::to_string(q);
    }
    return out;
}

ComplexMatrix ladder_matrix(const FockSpace &space, int j) {
    if (j < 1 || j > space.modes) {
        throw std::out_of_range("ladder_matrix: mode " + std::to_string(j) + " outside [1, " + std::to_string(space.modes) + "]");
    }
    auto dim = static_cast<Eigen::Index>(space.dim());
    ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
    const unsigned bit = 1u << (space.modes - j);
    // Bits above `bit` are the modes k < j that a_j must anticommute past.
    const unsigned higher = ~((bit << 1) - 1u);
    for (unsigned state = 0; state < static_cast<unsigned>(dim); state++) {
        if ((state & bit) == 0) {
            continue;
        }
        double sign = (std::popcount(state & higher) % 2 == 0) ? 1.0 : -1.0;
        a(state ^ bit, state) = sign;
    }
    return a;
}

ComplexMatrix gamma_matrix(const PairingDefinition &def, int i) {
    if (i < 1 || i > def.mf_count()) {
        throw std::out_of_range("gamma_matrix: Majorana index " + std::to_string(i) + " outside [1, " + std::to_string(def.mf_count()) + "]");
    }
    auto [mode, is_first] = def.locate(i);
    ComplexMatrix a = ladder_matrix(def.space(), mode);
    ComplexMatrix a_dag = a.adjoint();
    if (is_first) {
        return a + a_dag;
    }
    return kI * (a_dag - a);
}

ComplexMatrix number_matrix(const PairingDefinition &def, int k) {
    if (k < 1 || k > def.modes()) {
        throw std::out_of_range("number_matrix: mode " + std::to_string(k) + " outside [1, " + std::to_string(def.modes()) + "]");
    }
    ComplexMatrix a = ladder_matrix(def.space(), k);
    return a.adjoint() * a;
}

ParityOperator parity_matrix(const PairingDefinition &def) {
    ComplexMatrix product = identity(def.space().dim());
    for (const auto &[p, q] : def.pairs()) {
        product = product * (kI * gamma_matrix(def, p) * gamma_matrix(def, q));
    }
    return {std::move(product), def.modes() % 2 == 0 ? 1 : -1};
}

}  // namespace braidkit
