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

#include "braidkit/closed_forms.h"

#include "braidkit/majorana.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace braidkit {

namespace {

constexpr Complex kI{0.0, 1.0};

ComplexMatrix make2(Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') {
        s.remove_prefix(1);
    }
    while (!s.empty() && s.back() == ' ') {
        s.remove_suffix(1);
    }
    return s;
}

double parse_number(std::string_view text) {
    std::string owned(trim(text));
    if (owned.empty()) {
        throw std::invalid_argument("named_gate: empty number");
    }
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(owned, &used);
    } catch (const std::exception &) {
        throw std::invalid_argument("named_gate: cannot parse number '" + owned + "'");
    }
    if (used != owned.size() || !std::isfinite(value)) {
        throw std::invalid_argument("named_gate: cannot parse number '" + owned + "'");
    }
    return value;
}

// "[-][coef*]pi[/denom]" or a plain number.
double parse_angle(std::string_view text) {
    text = trim(text);
    double sign = 1.0;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        sign = text.front() == '-' ? -1.0 : 1.0;
        text = trim(text.substr(1));
    }
    auto pi_at = text.find("pi");
    if (pi_at == std::string_view::npos) {
        return sign * parse_number(text);
    }
    double value = std::numbers::pi;
    std::string_view before = trim(text.substr(0, pi_at));
    std::string_view after = trim(text.substr(pi_at + 2));
    if (!before.empty()) {
        if (before.back() != '*') {
            throw std::invalid_argument("named_gate: expected 'k*pi', got '" + std::string(text) + "'");
        }
        before.remove_suffix(1);
        value *= parse_number(before);
    }
    if (!after.empty()) {
        if (after.front() != '/') {
            throw std::invalid_argument("named_gate: expected 'pi/k', got '" + std::string(text) + "'");
        }
        double denom = parse_number(after.substr(1));
        if (denom == 0.0) {
            throw std::invalid_argument("named_gate: division by zero in angle");
        }
        value /= denom;
    }
    return sign * value;
}

}  // namespace

GateFamilyQuery::GateFamilyQuery(int n_, int i_) : n(n_), i(i_) {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("closed_form: n must be even and >= 2, got " + std::to_string(n));
    }
    if (n + 2 > 2 * kMaxModes) {
        throw std::invalid_argument("closed_form: n too large, at most " + std::to_string(2 * kMaxModes - 2));
    }
    if (i < 1 || i > n + 1) {
        throw std::out_of_range("closed_form: braid index " + std::to_string(i) + " outside [1, " + std::to_string(n + 1) + "]");
    }
}

GateKind GateFamilyQuery::kind() const {
    bool odd = i % 2 == 1;
    if (i < n) {
        return odd ? GateKind::kOddNonancillary : GateKind::kEvenNonancillary;
    }
    return odd ? GateKind::kOddAncillary : GateKind::kEvenAncillary;
}

ComplexMatrix closed_form(const GateFamilyQuery &q) {
    const int qubits = q.data_qubits();
    const ComplexMatrix id = gates::I();
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    switch (q.kind()) {
        case GateKind::kOddNonancillary:
            return kron(kron(kron_power(id, (q.i - 1) / 2), gates::S()), kron_power(id, (q.n - q.i - 1) / 2));
        case GateKind::kEvenNonancillary: {
            ComplexMatrix xx = kron(gates::X(), gates::X());
            ComplexMatrix coupling = kron(kron(kron_power(id, q.i / 2 - 1), xx), kron_power(id, (q.n - q.i - 2) / 2));
            return (kron_power(id, qubits) + kI * coupling) * inv_sqrt2;
        }
        case GateKind::kEvenAncillary: {
            ComplexMatrix coupling = kron(kron_power(id, q.i / 2 - 1), gates::X());
            return (kron_power(id, qubits) + kI * coupling) * inv_sqrt2;
        }
        case GateKind::kOddAncillary: {
            if (q.n == 2) {
                return gates::S();
            }
            ComplexMatrix inner = closed_form(GateFamilyQuery(q.n - 2, q.i - 2));
            return direct_sum(inner, kI * inner.adjoint());
        }
    }
    throw std::logic_error("closed_form: unreachable");
}

namespace gates {

ComplexMatrix I() {
    return make2(1, 0, 0, 1);
}
ComplexMatrix X() {
    return make2(0, 1, 1, 0);
}
ComplexMatrix Y() {
    return make2(0, -kI, kI, 0);
}
ComplexMatrix Z() {
    return make2(1, 0, 0, -1);
}
ComplexMatrix S() {
    return make2(1, 0, 0, kI);
}
ComplexMatrix S_dag() {
    return make2(1, 0, 0, -kI);
}
ComplexMatrix T() {
    return make2(1, 0, 0, std::polar(1.0, std::numbers::pi / 4));
}
ComplexMatrix H() {
    return make2(1, 1, 1, -1) / std::sqrt(2.0);
}
ComplexMatrix Rx(double theta) {
    return std::cos(theta / 2) * I() - kI * std::sin(theta / 2) * X();
}
ComplexMatrix Ry(double theta) {
    return std::cos(theta / 2) * I() - kI * std::sin(theta / 2) * Y();
}

}  // namespace gates

ComplexMatrix named_gate(std::string_view name) {
    name = trim(name);
    if (name == "I") return gates::I();
    if (name == "X") return gates::X();
    if (name == "Y") return gates::Y();
    if (name == "Z") return gates::Z();
    if (name == "S") return gates::S();
    if (name == "Sdg" || name == "S†" || name == "S^dag") return gates::S_dag();
    if (name == "T") return gates::T();
    if (name == "H") return gates::H();
    for (std::string_view prefix : {"Rx(", "Ry("}) {
        if (name.starts_with(prefix) && name.ends_with(")")) {
            double theta = parse_angle(name.substr(prefix.size(), name.size() - prefix.size() - 1));
            return prefix == "Rx(" ? gates::Rx(theta) : gates::Ry(theta);
        }
    }
    throw std::invalid_argument("unknown gate name '" + std::string(name) + "'");
}

ComplexMatrix named_gate_product(std::string_view names) {
    ComplexMatrix out = identity(1);
    bool any = false;
    // Commas inside parentheses belong to an angle, not the factor list.
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t k = 0; k <= names.size(); k++) {
        char ch = k < names.size() ? names[k] : ',';
        if (ch == '(') depth++;
        if (ch == ')') depth--;
        if (ch == ',' && depth == 0) {
            out = kron(out, named_gate(names.substr(start, k - start)));
            any = true;
            start = k + 1;
        }
    }
    if (!any) {
        throw std::invalid_argument("named_gate_product: no gates given");
    }
    return out;
}

}  // namespace braidkit
