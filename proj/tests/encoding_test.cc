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


#include "braidkit/encoding.h"

#include <gtest/gtest.h>

#include <random>

#include "braidkit/braid.h"
#include "support/oracles.h"

using namespace braidkit;

namespace {

const Complex kI{0, 1};
const double kR = 1 / std::sqrt(2.0);

ComplexMatrix diag2(Complex a, Complex b) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

}  // namespace

TEST(encoding, names) {
    EXPECT_EQ(to_string(Encoding::kDense), "dense");
    EXPECT_EQ(parse_encoding("sparse"), Encoding::kSparse);
    EXPECT_THROW(parse_encoding("compact"), std::invalid_argument);
    EXPECT_EQ(encoded_dim(Encoding::kSparse, 6), 8u);
    EXPECT_EQ(encoded_dim(Encoding::kDense, 6), 4u);
}

TEST(parity_sector_indices, small_systems) {
    ParitySectors s1 = parity_sector_indices(PairingDefinition::adjacent(1));
    EXPECT_EQ(s1.even, (std::vector<std::size_t>{0}));
    EXPECT_EQ(s1.odd, (std::vector<std::size_t>{1}));
    ParitySectors s2 = parity_sector_indices(PairingDefinition::adjacent(2));
    EXPECT_EQ(s2.even, (std::vector<std::size_t>{0, 3}));
    EXPECT_EQ(s2.odd, (std::vector<std::size_t>{1, 2}));
    ParitySectors s3 = parity_sector_indices(PairingDefinition::adjacent(3));
    EXPECT_EQ(s3.even.size(), 4u);
    EXPECT_EQ(s3.odd.size(), 4u);
    EXPECT_TRUE(std::is_sorted(s3.even.begin(), s3.even.end()));
}

TEST(encoded_gate, validates) {
    PairingDefinition def = PairingDefinition::adjacent(2);
    EXPECT_THROW(EncodedGate(identity(2), Encoding::kSparse, def), std::invalid_argument);
    EXPECT_THROW(EncodedGate(2.0 * identity(2), Encoding::kDense, def), std::invalid_argument);
    EXPECT_NO_THROW(EncodedGate(identity(2), Encoding::kDense, def));
}

TEST(dense_reduce, four_mf_gates) {
    PairingDefinition def = PairingDefinition::adjacent(2);
    ComplexMatrix expected(2, 2);
    expected << 1, kI, kI, 1;
    expected *= kR;
    ComplexMatrix u2 = generator_unitary(def, 2, Orientation::kPositive);
    EXPECT_LE(max_abs_diff(dense_reduce(u2, def), expected), 1e-12);

    ComplexMatrix s = diag2(1, kI);
    for (int i : {1, 3}) {
        ComplexMatrix reduced = dense_reduce(generator_unitary(def, i, Orientation::kPositive), def);
        EXPECT_NE(match_up_to_orientation(reduced, s), OrientationMatch::kNone);
    }
    EXPECT_EQ(dense_reduce(identity(4), def), identity(2));

    EncodedGate g(u2, Encoding::kSparse, def);
    EncodedGate d = dense_reduce(g);
    EXPECT_EQ(d.encoding, Encoding::kDense);
    EXPECT_EQ(d.matrix.rows(), 2);
}

TEST(dense_reduce, rejects_sector_mixing) {
    PairingDefinition def = PairingDefinition::adjacent(2);
    ComplexMatrix swap01 = ComplexMatrix::Zero(4, 4);
    swap01(0, 1) = swap01(1, 0) = swap01(2, 2) = swap01(3, 3) = 1;
    EXPECT_THROW(dense_reduce(swap01, def), std::invalid_argument);
    EXPECT_THROW(dense_reduce(EncodedGate(identity(2), Encoding::kDense, def)), std::invalid_argument);
}

TEST(dense_reduce, homomorphism_and_unitarity) {
    std::mt19937_64 rng(23);
    for (int m = 2; m <= 5; m++) {
        PairingDefinition def = PairingDefinition::adjacent(m);
        for (int trial = 0; trial < 10; trial++) {
            ComplexMatrix a = word_unitary(def, oracle::random_word(rng, 2 * m, 8), Orientation::kPositive);
            ComplexMatrix b = word_unitary(def, oracle::random_word(rng, 2 * m, 8), Orientation::kPositive);
            for (Sector sector : {Sector::kEven, Sector::kOdd}) {
                ComplexMatrix lhs = dense_reduce(a * b, def, sector);
                EXPECT_LE(max_abs_diff(lhs, dense_reduce(a, def, sector) * dense_reduce(b, def, sector)), 1e-12);
                EXPECT_LE(unitarity_deviation(lhs), 1e-12);
            }
        }
    }
}

TEST(cross_sector_mass, detects_leak) {
    PairingDefinition def = PairingDefinition::adjacent(2);
    ParitySectors sectors = parity_sector_indices(def);
    EXPECT_EQ(cross_sector_mass(identity(4), sectors), 0.0);
    ComplexMatrix m = identity(4);
    m(0, 1) = 0.25;
    EXPECT_EQ(cross_sector_mass(m, sectors), 0.25);
}

TEST(canonicalize_phase, examples) {
    Complex phase = std::polar(1.0, M_PI / 4);
    PhaseCanonical c = canonicalize_phase(phase * diag2(1, -kI));
    EXPECT_LE(max_abs_diff(c.matrix, diag2(1, -kI)), 1e-15);
    EXPECT_NEAR(std::abs(c.phase - phase), 0, 1e-15);

    PhaseCanonical same = canonicalize_phase(diag2(1, -kI));
    EXPECT_EQ(same.matrix, diag2(1, -kI));
    EXPECT_EQ(same.phase, Complex(1));

    EXPECT_THROW(canonicalize_phase(ComplexMatrix::Zero(2, 2)), std::invalid_argument);
}

TEST(canonicalize_phase, tie_break_and_well_defined) {
    // Equal magnitudes everywhere: the (0,0) entry is the pivot.
    ComplexMatrix h(2, 2);
    h << kI, kI, kI, -kI;
    PhaseCanonical c = canonicalize_phase(h);
    EXPECT_EQ(c.matrix(0, 0), Complex(1));
    EXPECT_EQ(c.matrix(1, 1), Complex(-1));

    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> angle(0, 2 * M_PI);
    for (int trial = 0; trial < 50; trial++) {
        ComplexMatrix u = oracle::random_clifford_like(rng, 2, 10);
        ComplexMatrix base = canonicalize_phase(u).matrix;
        ComplexMatrix rotated = canonicalize_phase(std::polar(1.0, angle(rng)) * u).matrix;
        EXPECT_LE(max_abs_diff(base, rotated), 1e-12);
        PhaseCanonical pc = canonicalize_phase(u);
        EXPECT_LE(max_abs_diff(pc.phase * pc.matrix, u), 1e-12);
    }
}

TEST(equal_up_to_phase, examples) {
    ComplexMatrix x = oracle::pauli('X');
    for (double theta : {M_PI / 4, 1.0, 2.7}) {
        EXPECT_TRUE(equal_up_to_phase(x, std::polar(1.0, theta) * x));
    }
    EXPECT_FALSE(equal_up_to_phase(diag2(1, kI), diag2(1, -kI)));
    EXPECT_FALSE(equal_up_to_phase(oracle::pauli('X'), oracle::pauli('Y')));
    EXPECT_THROW(equal_up_to_phase(identity(2), identity(4)), std::invalid_argument);
}

TEST(equal_up_to_phase, equivalence_relation) {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> angle(0, 2 * M_PI);
    std::vector<ComplexMatrix> samples;
    for (int k = 0; k < 40; k++) {
        samples.push_back(oracle::random_clifford_like(rng, 2, 6));
    }
    for (const auto &a : samples) {
        EXPECT_TRUE(equal_up_to_phase(a, a));
        ComplexMatrix b = std::polar(1.0, angle(rng)) * a;
        ComplexMatrix c = std::polar(1.0, angle(rng)) * b;
        EXPECT_TRUE(equal_up_to_phase(b, a));
        EXPECT_TRUE(equal_up_to_phase(a, c));
        for (const auto &other : samples) {
            EXPECT_EQ(equal_up_to_phase(a, other), equal_up_to_phase(other, a));
            if (equal_up_to_phase(a, other)) {
                EXPECT_TRUE(equal_up_to_phase(c, other));
            }
        }
    }
}

TEST(match_up_to_orientation, direct_and_adjoint) {
    ComplexMatrix s = diag2(1, kI);
    EXPECT_EQ(match_up_to_orientation(s, s), OrientationMatch::kDirect);
    EXPECT_EQ(match_up_to_orientation(s.adjoint(), s), OrientationMatch::kAdjoint);
    EXPECT_EQ(match_up_to_orientation(oracle::pauli('X'), s), OrientationMatch::kNone);
}
