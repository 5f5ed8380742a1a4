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

#include "cli.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "braidkit/braid.h"
#include "braidkit/closed_forms.h"
#include "braidkit/definition_transform.h"
#include "braidkit/encoding.h"
#include "braidkit/json_io.h"
#include "braidkit/majorana.h"
#include "braidkit/synthesis.h"

namespace braidkit::cli {

namespace {

constexpr int kMaxVerifyMf = 12;
constexpr const char *kNotRepresentable = "NOT_REPRESENTABLE";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TargetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string format_dev(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", value);
    return buf;
}

void check_mf(int mf, int max_mf) {
    if (mf < 2 || mf % 2 != 0 || mf > max_mf) {
        throw UsageError(
            "--mf must be an even number of Majoranas in [2, " + std::to_string(max_mf) + "], got " + std::to_string(mf));
    }
}

PairingDefinition definition_for(const std::string &text, int mf) {
    if (text.empty() || text == "adjacent") {
        return PairingDefinition::adjacent(mf / 2);
    }
    PairingDefinition def = PairingDefinition::parse(text);
    if (def.mf_count() != mf) {
        throw UsageError(
            "definition '" + text + "' covers " + std::to_string(def.mf_count()) + " MFs but --mf is " + std::to_string(mf));
    }
    return def;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw TargetError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// ---------------------------------------------------------------------------
// gate

struct GateOptions {
    std::string word;
    int mf = 0;
    std::string definition;
    std::string orientation = "+1";
    bool dense = false;
    bool odd_sector = false;
    bool canonical = false;
};

int cmd_gate(const GateOptions &opt, std::ostream &out) {
    check_mf(opt.mf, 2 * kMaxModes);
    PairingDefinition def = definition_for(opt.definition, opt.mf);
    Orientation o = parse_orientation(opt.orientation);
    BraidWord w = BraidWord::parse(opt.word, opt.mf);
    if (opt.odd_sector && !opt.dense) {
        throw UsageError("--odd-sector requires --dense");
    }

    MatrixDocument doc;
    doc.matrix = word_unitary(def, w, o);
    doc.metadata.encoding = Encoding::kSparse;
    if (opt.dense) {
        if (def.modes() < 2) {
            throw UsageError("--dense needs at least 4 MFs");
        }
        doc.matrix = dense_reduce(doc.matrix, def, opt.odd_sector ? Sector::kOdd : Sector::kEven);
        doc.metadata.encoding = Encoding::kDense;
    }
    if (opt.canonical) {
        PhaseCanonical c = canonicalize_phase(doc.matrix);
        doc.matrix = std::move(c.matrix);
        doc.metadata.global_phase_removed = c.phase;
    }
    doc.metadata.mf_count = opt.mf;
    doc.metadata.orientation = o;
    doc.metadata.definition = def;
    write_matrix_json(out, doc);
    out << '\n';
    return kOk;
}

// ---------------------------------------------------------------------------
// verify

struct SuiteLine {
    std::string suite;
    std::string check;
    bool pass;
    std::string detail;
};

void suite_anticommutation(int mf, std::vector<SuiteLine> &lines) {
    PairingDefinition def = PairingDefinition::adjacent(mf / 2);
    const auto dim = def.space().dim();
    const ComplexMatrix id = identity(dim);
    std::vector<ComplexMatrix> gammas;
    for (int i = 1; i <= mf; i++) {
        gammas.push_back(gamma_matrix(def, i));
    }
    double clifford = 0.0;
    double hermitian = 0.0;
    for (std::size_t i = 0; i < gammas.size(); i++) {
        hermitian = std::max(hermitian, max_abs_diff(gammas[i], gammas[i].adjoint()));
        for (std::size_t j = 0; j < gammas.size(); j++) {
            ComplexMatrix expected = (i == j ? 2.0 : 0.0) * id;
            clifford = std::max(clifford, max_abs_diff(gammas[i] * gammas[j] + gammas[j] * gammas[i], expected));
        }
    }
    double ladder = 0.0;
    double number = 0.0;
    const Complex i_unit{0.0, 1.0};
    for (int j = 1; j <= def.modes(); j++) {
        ComplexMatrix aj = ladder_matrix(def.space(), j);
        for (int k = 1; k <= def.modes(); k++) {
            ComplexMatrix ak = ladder_matrix(def.space(), k);
            ladder = std::max(ladder, (aj * ak + ak * aj).cwiseAbs().maxCoeff());
            ComplexMatrix expected = (j == k ? 1.0 : 0.0) * id;
            ladder = std::max(ladder, max_abs_diff(aj * ak.adjoint() + ak.adjoint() * aj, expected));
        }
        const auto &[p, q] = def.pairs()[static_cast<std::size_t>(j - 1)];
        ComplexMatrix via_gammas = 0.5 * (id + i_unit * gammas[static_cast<std::size_t>(p - 1)] * gammas[static_cast<std::size_t>(q - 1)]);
        number = std::max(number, max_abs_diff(number_matrix(def, j), via_gammas));
    }
    lines.push_back({"anticommutation", "{g_i,g_j}=2d_ij", clifford <= kAlgebraTolerance, "max_dev=" + format_dev(clifford)});
    lines.push_back({"anticommutation", "g_i hermitian", hermitian <= kAlgebraTolerance, "max_dev=" + format_dev(hermitian)});
    lines.push_back({"anticommutation", "fermion ladder", ladder <= kAlgebraTolerance, "max_dev=" + format_dev(ladder)});
    lines.push_back({"anticommutation", "n=(1+i g g)/2", number <= kAlgebraTolerance, "max_dev=" + format_dev(number)});
}

void suite_braid_relations(int mf, std::vector<SuiteLine> &lines) {
    if (mf < 4) {
        lines.push_back({"braid-relations", "skipped", true, "needs at least 4 MFs"});
        return;
    }
    PairingDefinition def = PairingDefinition::adjacent(mf / 2);
    for (Orientation o : {Orientation::kPositive, Orientation::kNegative}) {
        BraidRelationReport report = verify_braid_relations(def, o);
        std::string name = std::string("orientation ") + (o == Orientation::kPositive ? "+1" : "-1");
        lines.push_back(
            {"braid-relations", name, report.all_pass(),
             std::to_string(report.checks.size()) + " relations max_dev=" + format_dev(report.max_deviation())});
    }
}

void suite_parity_block(int mf, std::vector<SuiteLine> &lines) {
    PairingDefinition def = PairingDefinition::adjacent(mf / 2);
    ParitySectors sectors = parity_sector_indices(def);
    std::mt19937_64 rng(0x5eed0b7a1dULL);
    std::uniform_int_distribution<int> length_dist(0, 12);
    std::uniform_int_distribution<int> letter_dist(1, mf - 1);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    for (Orientation o : {Orientation::kPositive, Orientation::kNegative}) {
        double worst = 0.0;
        for (int trial = 0; trial < 100; trial++) {
            std::vector<int> letters(static_cast<std::size_t>(length_dist(rng)));
            for (int &l : letters) {
                l = letter_dist(rng) * (sign_dist(rng) == 0 ? 1 : -1);
            }
            ComplexMatrix u = word_unitary(def, BraidWord(std::move(letters), mf), o);
            worst = std::max(worst, cross_sector_mass(u, sectors));
        }
        std::string name = std::string("100 random words, orientation ") + (o == Orientation::kPositive ? "+1" : "-1");
        lines.push_back({"parity-block", name, worst <= 1e-14, "max_cross=" + format_dev(worst)});
    }
}

void suite_closed_form(int mf, std::vector<SuiteLine> &lines) {
    if (mf < 4) {
        lines.push_back({"closed-form", "skipped", true, "needs at least 4 MFs"});
        return;
    }
    const int n = mf - 2;
    PairingDefinition def = PairingDefinition::adjacent(mf / 2);
    for (int i = 1; i <= n + 1; i++) {
        ComplexMatrix closed = closed_form(GateFamilyQuery(n, i));
        ComplexMatrix reduced = dense_reduce(generator_unitary(def, i, Orientation::kPositive), def);
        OrientationMatch match = match_up_to_orientation(reduced, closed);
        std::string how = match == OrientationMatch::kDirect    ? "matches U_i"
                          : match == OrientationMatch::kAdjoint ? "matches U_i^dagger"
                                                                : "no match";
        lines.push_back({"closed-form", "U" + std::to_string(i), match != OrientationMatch::kNone, how});
    }
}

struct VerifyOptions {
    int mf = 0;
    std::vector<std::string> suites{"all"};
};

int cmd_verify(const VerifyOptions &opt, std::ostream &out) {
    check_mf(opt.mf, kMaxVerifyMf);
    std::vector<std::string> selected;
    for (const auto &s : opt.suites) {
        if (s == "all") {
            selected = verify_suite_names();
            break;
        }
        const auto &known = verify_suite_names();
        if (std::find(known.begin(), known.end(), s) == known.end()) {
            throw UsageError("unknown suite '" + s + "'");
        }
        if (std::find(selected.begin(), selected.end(), s) == selected.end()) {
            selected.push_back(s);
        }
    }
    std::vector<SuiteLine> lines;
    for (const auto &s : selected) {
        if (s == "anticommutation") suite_anticommutation(opt.mf, lines);
        if (s == "braid-relations") suite_braid_relations(opt.mf, lines);
        if (s == "parity-block") suite_parity_block(opt.mf, lines);
        if (s == "closed-form") suite_closed_form(opt.mf, lines);
    }
    bool all = true;
    out << "verify mf=" << opt.mf << '\n';
    for (const auto &line : lines) {
        all = all && line.pass;
        out << (line.pass ? "PASS " : "FAIL ") << line.suite << ": " << line.check << " (" << line.detail << ")\n";
    }
    out << "result: " << (all ? "PASS" : "FAIL") << " (" << lines.size() << " checks)\n";
    return all ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------------------
// synth / enumerate

struct IndexOptions {
    int mf = 4;
    std::string encoding = "dense";
    std::string orientation = "+1";
    std::string index_file;
    std::string save_index;
    std::size_t cap = EnumerationOptions{}.element_cap;
};

GroupIndex obtain_index(const IndexOptions &opt, bool mf_given) {
    if (!opt.index_file.empty()) {
        std::ifstream in(opt.index_file, std::ios::binary);
        if (!in) {
            throw UsageError("cannot open index file '" + opt.index_file + "'");
        }
        GroupIndex index = [&] {
            try {
                return GroupIndex::load(in);
            } catch (const std::invalid_argument &e) {
                throw UsageError(e.what());
            }
        }();
        if (mf_given && index.mf_count() != opt.mf) {
            throw UsageError(
                "index file covers " + std::to_string(index.mf_count()) + " MFs but --mf is " + std::to_string(opt.mf));
        }
        return index;
    }
    if (opt.mf != 4 && opt.mf != 6 && opt.mf != 8) {
        throw UsageError("enumeration supports --mf 4, 6 or 8");
    }
    return enumerate_image(opt.mf, parse_encoding(opt.encoding), parse_orientation(opt.orientation), {opt.cap});
}

void maybe_save(const GroupIndex &index, const std::string &path) {
    if (path.empty()) {
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw UsageError("cannot write index file '" + path + "'");
    }
    index.save(out);
}

struct SynthOptions {
    IndexOptions index;
    std::string target;
    std::string matrix_file;
};

ComplexMatrix load_target(const SynthOptions &opt) {
    if (opt.target.empty() == opt.matrix_file.empty()) {
        throw UsageError("give exactly one of --target or --matrix");
    }
    try {
        if (!opt.target.empty()) {
            return named_gate_product(opt.target);
        }
        return read_matrix_json(read_file(opt.matrix_file)).matrix;
    } catch (const std::invalid_argument &e) {
        throw TargetError(e.what());
    }
}

int cmd_synth(const SynthOptions &opt, bool mf_given, std::ostream &out, std::ostream &err) {
    ComplexMatrix target = load_target(opt);
    GroupIndex index = obtain_index(opt.index, mf_given);
    maybe_save(index, opt.index.save_index);
    std::optional<BraidWord> word;
    try {
        word = synthesize(target, index);
    } catch (const std::invalid_argument &e) {
        throw TargetError(e.what());
    }
    if (word) {
        out << word->str() << '\n';
    } else {
        out << kNotRepresentable << '\n';
        err << "target is not in the " << index.scope() << "\n";
    }
    return kOk;
}

struct EnumerateOptions {
    IndexOptions index;
    std::string out_file;
};

int cmd_enumerate(const EnumerateOptions &opt, std::ostream &out) {
    GroupIndex index = obtain_index(opt.index, false);
    maybe_save(index, opt.out_file);
    std::size_t longest = 0;
    for (std::size_t e = 0; e < index.order(); e++) {
        longest = std::max(longest, index.word(e).size());
    }
    out << "scope: " << index.scope() << '\n';
    out << "order: " << index.order() << '\n';
    out << "longest shortest word: " << longest << '\n';
    if (index.dim() == 2) {
        PoleReport poles = pole_reachability(index);
        out << "poles reached from |0>:";
        for (const auto &p : poles.poles_reached) {
            out << ' ' << p;
        }
        out << " (off-pole elements: " << poles.off_pole << ")\n";
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// transform

struct TransformOptions {
    int mf = 4;
    std::string from;
    std::string to;
    std::string orientation = "+1";
    std::string side = "left";
    bool dense = false;
    std::vector<std::string> gates;
};

int cmd_transform(const TransformOptions &opt, std::ostream &out, std::ostream &err) {
    check_mf(opt.mf, 2 * kMaxModes);
    PairingDefinition from = definition_for(opt.from, opt.mf);
    PairingDefinition to = definition_for(opt.to, opt.mf);
    Orientation o = parse_orientation(opt.orientation);
    ConjugationSide side;
    if (opt.side == "left") {
        side = ConjugationSide::kAdjointLeft;
    } else if (opt.side == "right") {
        side = ConjugationSide::kAdjointRight;
    } else {
        throw UsageError("--side must be 'left' (W^dagger G W) or 'right' (W G W^dagger)");
    }
    Encoding encoding = opt.dense ? Encoding::kDense : Encoding::kSparse;
    if (opt.dense && opt.mf < 4) {
        throw UsageError("--dense needs at least 4 MFs");
    }

    GateSet set = GateSet::generators(from, encoding, o);
    if (!opt.gates.empty()) {
        std::vector<LabeledGate> gates;
        for (const auto &item : opt.gates) {
            auto eq = item.find('=');
            std::string label = eq == std::string::npos ? item : item.substr(0, eq);
            std::string word_text = eq == std::string::npos ? item : item.substr(eq + 1);
            ComplexMatrix u = word_unitary(from, BraidWord::parse(word_text, opt.mf), o);
            if (opt.dense) {
                u = dense_reduce(u, from);
            }
            gates.push_back({label, std::move(u)});
        }
        set = GateSet(from, encoding, std::move(gates));
    }

    BraidWord w = repairing_braid(from, to);
    GateSet result = transform_gateset(set, w, o, side);
    err << "repairing word: " << (w.empty() ? "(empty)" : w.str()) << '\n';

    std::vector<MatrixDocument> docs;
    for (const auto &g : result.gates) {
        MatrixDocument doc;
        doc.label = g.label;
        doc.matrix = g.matrix;
        doc.metadata.mf_count = opt.mf;
        doc.metadata.encoding = encoding;
        doc.metadata.orientation = o;
        doc.metadata.definition = result.definition;
        docs.push_back(std::move(doc));
    }
    write_matrix_list_json(out, docs);
    out << '\n';
    return kOk;
}

}  // namespace

const std::vector<std::string> &verify_suite_names() {
    static const std::vector<std::string> kNames = {"anticommutation", "braid-relations", "parity-block", "closed-form"};
    return kNames;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"braidkit: Majorana braid gates, dense encoding, and braid-word synthesis"};
    app.require_subcommand(1);

    GateOptions gate;
    auto *gate_cmd = app.add_subcommand("gate", "Print the unitary of a braid word as matrix JSON");
    gate_cmd->add_option("--word", gate.word, "Comma-separated signed letters; the first letter acts first. Empty = identity");
    gate_cmd->add_option("--mf", gate.mf, "Number of Majoranas (even)")->required();
    gate_cmd->add_option("--definition", gate.definition, "Pairing such as 1:3,2:4 (default adjacent)");
    gate_cmd->add_option("--orientation", gate.orientation, "+1 or -1 (exponent sign)");
    gate_cmd->add_flag("--dense", gate.dense, "Reduce to the even-parity sector");
    gate_cmd->add_flag("--odd-sector", gate.odd_sector, "With --dense, keep the odd sector instead");
    gate_cmd->add_flag("--canonical", gate.canonical, "Divide out the global phase and report it");

    VerifyOptions verify;
    auto *verify_cmd = app.add_subcommand("verify", "Run algebra and structure checks; exit 1 on failure");
    verify_cmd->add_option("--mf", verify.mf, "Number of Majoranas (even, <= 12)")->required();
    verify_cmd->add_option("--suite", verify.suites, "all, anticommutation, braid-relations, parity-block, closed-form")
        ->delimiter(',');

    SynthOptions synth;
    auto *synth_cmd = app.add_subcommand("synth", "Find a shortest braid word for a target gate");
    auto *synth_mf = synth_cmd->add_option("--mf", synth.index.mf, "Number of Majoranas: 4, 6 or 8");
    synth_cmd->add_option("--target", synth.target, "Gate names, comma-separated tensor factors: X, S,I, Rx(-pi/2)");
    synth_cmd->add_option("--matrix", synth.matrix_file, "Matrix JSON file holding the target");
    synth_cmd->add_option("--encoding", synth.index.encoding, "dense or sparse");
    synth_cmd->add_option("--orientation", synth.index.orientation, "+1 or -1");
    synth_cmd->add_option("--index", synth.index.index_file, "Load a saved group index instead of enumerating");
    synth_cmd->add_option("--save-index", synth.index.save_index, "Write the group index used");
    synth_cmd->add_option("--cap", synth.index.cap, "Element cap for enumeration");

    EnumerateOptions enumerate;
    auto *enum_cmd = app.add_subcommand("enumerate", "Enumerate the projective braid image");
    enum_cmd->add_option("--mf", enumerate.index.mf, "Number of Majoranas: 4, 6 or 8");
    enum_cmd->add_option("--encoding", enumerate.index.encoding, "dense or sparse");
    enum_cmd->add_option("--orientation", enumerate.index.orientation, "+1 or -1");
    enum_cmd->add_option("--out", enumerate.out_file, "Write the group index file");
    enum_cmd->add_option("--cap", enumerate.index.cap, "Element cap");

    TransformOptions transform;
    auto *transform_cmd = app.add_subcommand("transform", "Conjugate a gate set into another pairing definition");
    transform_cmd->add_option("--mf", transform.mf, "Number of Majoranas (even)");
    transform_cmd->add_option("--from", transform.from, "Source pairing (default adjacent)");
    transform_cmd->add_option("--to", transform.to, "Target pairing, e.g. 1:3,2:4")->required();
    transform_cmd->add_option("--orientation", transform.orientation, "+1 or -1");
    transform_cmd->add_option("--side", transform.side, "left: W^dagger G W (default); right: W G W^dagger");
    transform_cmd->add_flag("--dense", transform.dense, "Transform dense-encoded gates");
    transform_cmd->add_option("--gate", transform.gates, "LABEL=WORD; repeatable. Default: every generator U1..");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (*gate_cmd) return cmd_gate(gate, out);
        if (*verify_cmd) return cmd_verify(verify, out);
        if (*synth_cmd) return cmd_synth(synth, synth_mf->count() > 0, out, err);
        if (*enum_cmd) return cmd_enumerate(enumerate, out);
        if (*transform_cmd) return cmd_transform(transform, out, err);
    } catch (const TargetError &e) {
        err << "error: " << e.what() << '\n';
        return kSynthesisInputError;
    } catch (const ClosureOverflow &e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    std::vector<const char *> argv{"braidkit"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace braidkit::cli
