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

#ifndef BRAIDKIT_JSON_IO_H
#define BRAIDKIT_JSON_IO_H

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidkit/braid.h"
#include "braidkit/encoding.h"
#include "braidkit/majorana.h"
#include "braidkit/matrix.h"

namespace braidkit {

struct MatrixMetadata {
    std::optional<int> mf_count;
    std::optional<Encoding> encoding;
    std::optional<Orientation> orientation;
    std::optional<PairingDefinition> definition;
    /// Set when the matrix was phase-canonicalized; original == phase * matrix.
    std::optional<Complex> global_phase_removed;
};

/// One matrix as exchanged on the command line and in files:
///
///   {"label":"U1","dim":2,"entries":[[re,im],...],"metadata":{"mf_count":4,
///    "encoding":"dense","orientation":1,"definition":[[1,2],[3,4]],
///    "global_phase_removed":null}}
///
/// Entries are row-major. "label" is omitted when absent. Every metadata key is
/// always written, with null for unknown values. Numbers use 17 significant digits.
struct MatrixDocument {
    ComplexMatrix matrix;
    MatrixMetadata metadata;
    std::optional<std::string> label;
};

/// %.17g, with negative zero written as 0.
std::string format_number(double value);

/// Writes one document on a single line, without a trailing newline.
void write_matrix_json(std::ostream &out, const MatrixDocument &doc);

/// JSON array of documents, one per line.
void write_matrix_list_json(std::ostream &out, const std::vector<MatrixDocument> &docs);

/// Parses a single document. Only "dim" and "entries" are required; metadata
/// keys may be missing or null. Throws std::invalid_argument on malformed input.
MatrixDocument read_matrix_json(std::string_view text);

/// Accepts either one document or an array of them.
std::vector<MatrixDocument> read_matrix_list_json(std::string_view text);

}  // namespace braidkit

#endif  // BRAIDKIT_JSON_IO_H
