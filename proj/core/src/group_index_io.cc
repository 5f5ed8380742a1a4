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

// GroupIndex file format (JSON, one element per line):
//
//   {"format":"braidkit.group_index","version":1,"mf_count":4,"encoding":"dense",
//    "orientation":1,"grid":1e-08,"dim":2,"order":24,
//    "values":[[re,im],...],
//    "elements":[
//    [-1,0,"0001..."],
//    [parent,letter,"hex key"],
//    ...]}
//
// "values" maps entry codes to complex numbers. Each key is dim^2 codes written
// as two hex digits apiece, row-major. Element 0 is the identity with parent -1.

#include <cstdlib>
#include <istream>
#include <iterator>
#include <limits>
#include <ostream>

#include "braidkit/json_io.h"
#include "braidkit/synthesis.h"
#include "json.hpp"

namespace braidkit {

namespace {

constexpr const char *kFormat = "braidkit.group_index";
constexpr int kVersion = 1;

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw std::invalid_argument("group index: bad hex digit in key");
}

}  // namespace

void GroupIndex::save(std::ostream &out) const {
    static const char *kHex = "0123456789abcdef";
    out << "{\"format\":\"" << kFormat << "\",\"version\":" << kVersion << ",\"mf_count\":" << mf_count_
        << ",\"encoding\":\"" << to_string(encoding_) << "\",\"orientation\":" << sign_of(orientation_)
        << ",\"grid\":" << format_number(kGrid) << ",\"dim\":" << dim_ << ",\"order\":" << order() << ",\n\"values\":[";
    for (std::size_t k = 0; k < code_values_.size(); k++) {
        out << (k == 0 ? "" : ",") << '[' << format_number(code_values_[k].real()) << ','
            << format_number(code_values_[k].imag()) << ']';
    }
    out << "],\n\"elements\":[";
    for (std::size_t e = 0; e < order(); e++) {
        out << (e == 0 ? "\n[" : ",\n[");
        if (parent_[e] == std::numeric_limits<std::uint32_t>::max()) {
            out << -1;
        } else {
            out << parent_[e];
        }
        out << ',' << static_cast<int>(letter_[e]) << ",\"";
        for (char byte : key_at(e)) {
            auto b = static_cast<unsigned char>(byte);
            out << kHex[b >> 4] << kHex[b & 15];
        }
        out << "\"]";
    }
    out << "\n]}\n";
}

GroupIndex GroupIndex::load(std::istream &in) {
    using nlohmann::json;
    json j;
    try {
        j = json::parse(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("group index: ") + e.what());
    }
    try {
        if (j.value("format", "") != kFormat || j.value("version", 0) != kVersion) {
            throw std::invalid_argument("group index: not a braidkit.group_index v1 file");
        }
        if (j.at("grid").get<double>() != kGrid) {
            throw std::invalid_argument("group index: grid spacing does not match this build");
        }
        GroupIndex index(
            j.at("mf_count").get<int>(), parse_encoding(j.at("encoding").get<std::string>()),
            parse_orientation(std::to_string(j.at("orientation").get<int>())));
        if (j.at("dim").get<std::size_t>() != index.dim_) {
            throw std::invalid_argument("group index: 'dim' inconsistent with MF count and encoding");
        }
        for (const auto &v : j.at("values")) {
            Complex value{v.at(0).get<double>(), v.at(1).get<double>()};
            if (index.code_values_.size() > std::numeric_limits<std::uint8_t>::max()) {
                throw std::invalid_argument("group index: too many entry values");
            }
            auto code = static_cast<std::uint8_t>(index.code_values_.size());
            if (!index.codes_.emplace(grid_point(value), code).second) {
                throw std::invalid_argument("group index: two entry values share a grid point");
            }
            index.code_values_.push_back(value);
        }
        const auto &elements = j.at("elements");
        if (elements.size() != j.at("order").get<std::size_t>() || elements.empty()) {
            throw std::invalid_argument("group index: element count does not match 'order'");
        }
        const std::size_t width = index.dim_ * index.dim_;
        for (std::size_t e = 0; e < elements.size(); e++) {
            const auto &item = elements[e];
            long long parent = item.at(0).get<long long>();
            int letter = item.at(1).get<int>();
            const auto hex = item.at(2).get<std::string>();
            if ((e == 0) != (parent == -1) || parent >= static_cast<long long>(e)) {
                throw std::invalid_argument("group index: element " + std::to_string(e) + " has an invalid parent");
            }
            if (e > 0 && (letter == 0 || std::abs(letter) >= index.mf_count_)) {
                throw std::invalid_argument("group index: element " + std::to_string(e) + " has an invalid letter");
            }
            if (hex.size() != 2 * width) {
                throw std::invalid_argument("group index: element " + std::to_string(e) + " has a key of the wrong length");
            }
            std::string key(width, '\0');
            for (std::size_t k = 0; k < width; k++) {
                int code = hex_digit(hex[2 * k]) * 16 + hex_digit(hex[2 * k + 1]);
                if (static_cast<std::size_t>(code) >= index.code_values_.size()) {
                    throw std::invalid_argument("group index: key refers to an unknown entry value");
                }
                key[k] = static_cast<char>(code);
            }
            if (index.lookup(key)) {
                throw std::invalid_argument("group index: duplicate element key");
            }
            index.append(key, parent < 0 ? std::numeric_limits<std::uint32_t>::max() : static_cast<std::uint32_t>(parent), letter);
        }
        if (max_abs_diff(index.element(0), identity(index.dim_)) > 1e-12) {
            throw std::invalid_argument("group index: element 0 is not the identity");
        }
        return index;
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("group index: ") + e.what());
    }
}

}  // namespace braidkit
