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

#include <gtest/gtest.h>

#include <random>

#include "braidkit/encoding.h"
#include "support/oracles.h"

using namespace braidkit;

namespace {

const Complex kI{0, 1};
const double kR = 1 / std::sqrt(2.0);

}  // namespace

TEST(orientation, parse) {
    EXPECT_EQ(parse_orientation("+1"), Orientation::kPositive);
    EXPECT_EQ(parse_orientation("1"), Orientation::kPositive);
    EXPECT_EQ(parse_orientation("-1"), Orientation::kNegative);
    EXPECT_EQ(parse_orientation("negative"), Orientation::kNegative);
    EXPECT_THROW(parse_orientation("2"), std::invalid_argument);
    EXPECT_EQ(reversed(Orientation::kPositive), Orientation::kNegative);
}

TEST(braid_word, parse_and_print) {
    BraidWord w = BraidWord::parse("1,2,-3", 4);
    EXPECT_EQ(w.letters(), (std::vector<int>{1, 2, -3}));
    EXPECT_EQ(w.str(), "1,2,-3");
    EXPECT_EQ(BraidWord::parse(" +1 , -2 ", 4).letters(), (std::vector<int>{1, -2}));
    EXPECT_TRUE(BraidWord::parse("", 4).empty());
    EXPECT_EQ(BraidWord::identity(4).str(), "");
    EXPECT_EQ(w.inverse().str(), "3,-2,-1");
    EXPECT_EQ(w.then(w.inverse()).size(), 6u);
}

TEST(braid_word, rejects_invalid) {
    EXPECT_THROW(BraidWord::parse("0", 4), std::invalid_argument);
    EXPECT_THROW(BraidWord::parse("4", 4), std::invalid_argument);
    EXPECT_THROW(BraidWord::parse("-4", 4), std::invalid_argument);
    EXPECT_THROW(BraidWord::parse("1,,2", 4), std::invalid_argument);
    EXPECT_THROW(BraidWord::parse("a", 4), std::invalid_argument);
    EXPECT_THROW(BraidWord({1}, 3), std::invalid_argument);
}

TEST(generator_unitary, two_mf_ground_state_phase) {
    ComplexMatrix u = generator_unitary(PairingDefinition::adjacent(1), 1, Orientation::kPositive);
    Eigen::VectorXcd ket0 = Eigen::VectorXcd::Unit(2, 0);
    Eigen::VectorXcd out = u * ket0;
    EXPECT_NEAR(std::abs(out(0) - kR * Complex(1, 1)), 0, 1e-12);
    EXPECT_NEAR(std::abs(out(1)), 0, 1e-12);
}

TEST(generator_unitary, four_mf_even_braid) {
    ComplexMatrix expected(4, 4);
    expected << 1, 0, 0, kI, 0, 1, kI, 0, 0, kI, 1, 0, kI, 0, 0, 1;
    expected *= kR;
    EXPECT_LE(max_abs_diff(generator_unitary(PairingDefinition::adjacent(2), 2, Orientation::kPositive), expected), 1e-12);
}

TEST(generator_unitary, inverse_orientation) {
    for (int m = 1; m <= 4; m++) {
        PairingDefinition def = PairingDefinition::adjacent(m);
        for (int i = 1; i < 2 * m; i++) {
            ComplexMatrix prod = generator_unitary(def, i, Orientation::kPositive) * generator_unitary(def, i, Orientation::kNegative);
            EXPECT_LE(max_abs_diff(prod, identity(def.space().dim())), kAlgebraTolerance);
        }
    }
    EXPECT_THROW(generator_unitary(PairingDefinition::adjacent(2), 4, Orientation::kPositive), std::out_of_range);
    EXPECT_THROW(generator_unitary(PairingDefinition::adjacent(2), 0, Orientation::kPositive), std::out_of_range);
}

TEST(generator_unitary, matches_matrix_exponential) {
    for (const auto &def : {PairingDefinition::adjacent(1), PairingDefinition::adjacent(2), PairingDefinition::adjacent(3),
                            PairingDefinition::parse("1:4,2:3"), PairingDefinition::parse("1:3,2:5,4:6")}) {
        for (int i = 1; i < def.mf_count(); i++) {
            for (Orientation o : {Orientation::kPositive, Orientation::kNegative}) {
                ComplexMatrix gg = gamma_matrix(def, i) * gamma_matrix(def, i + 1);
                ComplexMatrix oracle = oracle::expm(sign_of(o) * (M_PI / 4) * gg);
                EXPECT_LE(max_abs_diff(generator_unitary(def, i, o), oracle), 1e-10) << def.str() << " i=" << i;
            }
        }
    }
}

TEST(word_unitary, small_identities) {
    PairingDefinition d1 = PairingDefinition::adjacent(1);
    PairingDefinition d2 = PairingDefinition::adjacent(2);
    EXPECT_EQ(word_unitary(d2, BraidWord::identity(4), Orientation::kPositive), identity(4));

    ComplexMatrix fourth = word_unitary(d1, BraidWord::parse("1,1,1,1", 2), Orientation::kPositive);
    EXPECT_TRUE(equal_up_to_phase(fourth, identity(2)));
    EXPECT_LE(max_abs_diff(fourth, -identity(2)), 1e-12);

    EXPECT_LE(max_abs_diff(word_unitary(d2, BraidWord::parse("2,-2", 4), Orientation::kPositive), identity(4)), 1e-15);
}

TEST(word_unitary, first_letter_acts_first) {
    PairingDefinition def = PairingDefinition::adjacent(2);
    ComplexMatrix u1 = generator_unitary(def, 1, Orientation::kPositive);
    ComplexMatrix u2 = generator_unitary(def, 2, Orientation::kPositive);
    EXPECT_LE(max_abs_diff(word_unitary(def, BraidWord::parse("1,2", 4), Orientation::kPositive), u2 * u1), 1e-15);
    EXPECT_LE(max_abs_diff(word_unitary(def, BraidWord::parse("-1,2", 4), Orientation::kPositive), u2 * u1.adjoint()), 1e-15);
}

TEST(word_unitary, inverse_word_and_reversed_orientation) {
    std::mt19937_64 rng(17);
    PairingDefinition def = PairingDefinition::adjacent(3);
    for (int trial = 0; trial < 50; trial++) {
        BraidWord w = oracle::random_word(rng, 6, 10);
        ComplexMatrix u = word_unitary(def, w, Orientation::kPositive);
        EXPECT_LE(max_abs_diff(word_unitary(def, w.inverse(), Orientation::kPositive), u.adjoint()), 1e-12);
        std::vector<int> flipped;
        for (int l : w.letters()) {
            flipped.push_back(-l);
        }
        EXPECT_LE(
            max_abs_diff(word_unitary(def, BraidWord(flipped, 6), Orientation::kNegative), u), 1e-12);
    }
}

TEST(word_unitary, unitarity_of_random_words) {
    std::mt19937_64 rng(3);
    for (int m = 1; m <= 5; m++) {
        PairingDefinition def = PairingDefinition::adjacent(m);
        for (int trial = 0; trial < 20; trial++) {
            BraidWord w = oracle::random_word(rng, 2 * m, 20);
            EXPECT_LE(unitarity_deviation(word_unitary(def, w, Orientation::kPositive)), kAlgebraTolerance);
        }
    }
}

TEST(word_unitary, parity_conservation) {
    std::mt19937_64 rng(11);
    for (int m = 1; m <= 5; m++) {
        PairingDefinition def = PairingDefinition::adjacent(m);
        ParitySectors sectors = parity_sector_indices(def);
        for (int trial = 0; trial < 30; trial++) {
            BraidWord w = oracle::random_word(rng, 2 * m, 12);
            EXPECT_LE(cross_sector_mass(word_unitary(def, w, Orientation::kNegative), sectors), 1e-14);
        }
    }
}

TEST(conjugate_gamma, single_generator_action) {
    PairingDefinition def = PairingDefinition::adjacent(2);
    BraidWord b1 = BraidWord::parse("1", 4);
    EXPECT_EQ(conjugate_gamma(def, b1, 1, Orientation::kPositive), (SignedIndex{2, 1}));
    EXPECT_EQ(conjugate_gamma(def, b1, 2, Orientation::kPositive), (SignedIndex{1, -1}));
    EXPECT_EQ(conjugate_gamma(def, b1, 3, Orientation::kPositive), (SignedIndex{3, 1}));
    EXPECT_EQ(conjugate_gamma(def, b1, 1, Orientation::kNegative), (SignedIndex{2, -1}));
    for (int k = 1; k <= 4; k++) {
        EXPECT_EQ(conjugate_gamma(def, BraidWord::identity(4), k, Orientation::kPositive), (SignedIndex{k, 1}));
    }
    EXPECT_THROW(conjugate_gamma(def, b1, 5, Orientation::kPositive), std::out_of_range);
}

TEST(conjugate_gamma, composes_per_letter) {
    // W = U_{l_n} ... U_{l_1}, so W^dagger g W applies the last letter's map first.
    std::mt19937_64 rng(5);
    PairingDefinition def = PairingDefinition::adjacent(3);
    for (int trial = 0; trial < 40; trial++) {
        BraidWord w = oracle::random_word(rng, 6, 8);
        for (Orientation o : {Orientation::kPositive, Orientation::kNegative}) {
            std::vector<SignedIndex> expected;
            for (int k = 1; k <= 6; k++) {
                SignedIndex s{k, 1};
                for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
                    SignedIndex step = conjugate_gamma(def, BraidWord({*it}, 6), s.index, o);
                    s = {step.index, s.sign * step.sign};
                }
                expected.push_back(s);
            }
            EXPECT_EQ(conjugation_action(def, w, o), expected) << w.str();
        }
    }
}

TEST(verify_braid_relations, all_pass) {
    for (int m = 2; m <= 5; m++) {
        for (Orientation o : {Orientation::kPositive, Orientation::kNegative}) {
            BraidRelationReport report = verify_braid_relations(PairingDefinition::adjacent(m), o);
            const int gens = 2 * m - 1;
            EXPECT_EQ(report.checks.size(), static_cast<std::size_t>((gens - 1) + (gens - 1) * (gens - 2) / 2));
            EXPECT_TRUE(report.all_pass());
            EXPECT_LE(report.max_deviation(), kAlgebraTolerance);
        }
    }
    EXPECT_THROW(verify_braid_relations(PairingDefinition::adjacent(1), Orientation::kPositive), std::invalid_argument);
}

TEST(verify_braid_relations, holds_for_other_definitions) {
    BraidRelationReport report = verify_braid_relations(PairingDefinition::parse("1:6,2:4,3:5"), Orientation::kPositive);
    EXPECT_TRUE(report.all_pass());
}
