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

#include "braidkit/json_io.h"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace braidkit {

namespace {

using nlohmann::json;

void write_complex(std::ostream &out, Complex v) {
    out << '[' << format_number(v.real()) << ',' << format_number(v.imag()) << ']';
}

void write_metadata(std::ostream &out, const MatrixMetadata &meta) {
    out << "{\"mf_count\":";
    if (meta.mf_count) {
        out << *meta.mf_count;
    } else {
        out << "null";
    }
    out << ",\"encoding\":";
    if (meta.encoding) {
        out << '"' << to_string(*meta.encoding) << '"';
    } else {
        out << "null";
    }
    out << ",\"orientation\":";
    if (meta.orientation) {
        out << sign_of(*meta.orientation);
    } else {
        out << "null";
    }
    out << ",\"definition\":";
    if (meta.definition) {
        out << '[';
        bool first = true;
        for (const auto &[p, q] : meta.definition->pairs()) {
            out << (first ? "" : ",") << '[' << p << ',' << q << ']';
            first = false;
        }
        out << ']';
    } else {
        out << "null";
    }
    out << ",\"global_phase_removed\":";
    if (meta.global_phase_removed) {
        write_complex(out, *meta.global_phase_removed);
    } else {
        out << "null";
    }
    out << '}';
}

double finite_number(const json &v, const char *what) {
    if (!v.is_number()) {
        throw std::invalid_argument(std::string("matrix json: ") + what + " must be a number");
    }
    double d = v.get<double>();
    if (!std::isfinite(d)) {
        throw std::invalid_argument(std::string("matrix json: ") + what + " is not finite");
    }
    return d;
}

Complex read_complex(const json &v, const char *what) {
    if (!v.is_array() || v.size() != 2) {
        throw std::invalid_argument(std::string("matrix json: ") + what + " must be a [re, im] pair");
    }
    return {finite_number(v[0], what), finite_number(v[1], what)};
}

MatrixDocument from_json(const json &j) {
    if (!j.is_object()) {
        throw std::invalid_argument("matrix json: document must be an object");
    }
    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 1) {
        throw std::invalid_argument("matrix json: missing or invalid 'dim'");
    }
    auto dim = static_cast<Eigen::Index>(j["dim"].get<long long>());
    if (dim > 4096) {
        throw std::invalid_argument("matrix json: 'dim' too large");
    }
    if (!j.contains("entries") || !j["entries"].is_array()) {
        throw std::invalid_argument("matrix json: missing 'entries' array");
    }
    const json &entries = j["entries"];
    if (static_cast<Eigen::Index>(entries.size()) != dim * dim) {
        throw std::invalid_argument(
            "matrix json: expected " + std::to_string(dim * dim) + " entries, got " + std::to_string(entries.size()));
    }
    MatrixDocument doc;
    doc.matrix.resize(dim, dim);
    for (Eigen::Index k = 0; k < dim * dim; k++) {
        doc.matrix(k / dim, k % dim) = read_complex(entries[static_cast<std::size_t>(k)], "entry");
    }
    if (j.contains("label") && j["label"].is_string()) {
        doc.label = j["label"].get<std::string>();
    }
    if (j.contains("metadata") && j["metadata"].is_object()) {
        const json &m = j["metadata"];
        if (m.contains("mf_count") && !m["mf_count"].is_null()) {
            doc.metadata.mf_count = m["mf_count"].get<int>();
        }
        if (m.contains("encoding") && !m["encoding"].is_null()) {
            doc.metadata.encoding = parse_encoding(m["encoding"].get<std::string>());
        }
        if (m.contains("orientation") && !m["orientation"].is_null()) {
            doc.metadata.orientation = parse_orientation(std::to_string(m["orientation"].get<int>()));
        }
        if (m.contains("definition") && !m["definition"].is_null()) {
            std::vector<PairingDefinition::Pair> pairs;
            for (const auto &p : m["definition"]) {
                if (!p.is_array() || p.size() != 2) {
                    throw std::invalid_argument("matrix json: definition entries must be [p, q] pairs");
                }
                pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
            }
            doc.metadata.definition = PairingDefinition(std::move(pairs));
        }
        if (m.contains("global_phase_removed") && !m["global_phase_removed"].is_null()) {
            doc.metadata.global_phase_removed = read_complex(m["global_phase_removed"], "global_phase_removed");
        }
    }
    return doc;
}

json parse(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("matrix json: ") + e.what());
    }
}

}  // namespace

std::string format_number(double value) {
    if (value == 0.0) {
        return "0";
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

void write_matrix_json(std::ostream &out, const MatrixDocument &doc) {
    out << '{';
    if (doc.label) {
        out << "\"label\":" << json(*doc.label).dump() << ',';
    }
    out << "\"dim\":" << doc.matrix.rows() << ",\"entries\":[";
    for (Eigen::Index r = 0; r < doc.matrix.rows(); r++) {
        for (Eigen::Index c = 0; c < doc.matrix.cols(); c++) {
            if (r != 0 || c != 0) {
                out << ',';
            }
            write_complex(out, doc.matrix(r, c));
        }
    }
    out << "],\"metadata\":";
    write_metadata(out, doc.metadata);
    out << '}';
}

void write_matrix_list_json(std::ostream &out, const std::vector<MatrixDocument> &docs) {
    out << '[';
    for (std::size_t k = 0; k < docs.size(); k++) {
        out << (k == 0 ? "\n" : ",\n");
        write_matrix_json(out, docs[k]);
    }
    out << "\n]";
}

MatrixDocument read_matrix_json(std::string_view text) {
    try {
        return from_json(parse(text));
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("matrix json: ") + e.what());
    }
}

std::vector<MatrixDocument> read_matrix_list_json(std::string_view text) {
    try {
        json j = parse(text);
        std::vector<MatrixDocument> out;
        if (j.is_array()) {
            for (const auto &item : j) {
                out.push_back(from_json(item));
            }
        } else {
            out.push_back(from_json(j));
        }
        return out;
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("matrix json: ") + e.what());
    }
}

}  // namespace braidkit
