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

#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "braidkit/closed_forms.h"
#include "braidkit/encoding.h"
#include "support/oracles.h"

using namespace braidkit;

namespace {

const Complex kI{0, 1};

const GroupIndex &dense4(Orientation o = Orientation::kPositive) {
    static const GroupIndex pos = enumerate_image(4, Encoding::kDense, Orientation::kPositive);
    static const GroupIndex neg = enumerate_image(4, Encoding::kDense, Orientation::kNegative);
    return o == Orientation::kPositive ? pos : neg;
}

const GroupIndex &dense6() {
    static const GroupIndex index = enumerate_image(6, Encoding::kDense, Orientation::kPositive);
    return index;
}

ComplexMatrix replay(const GroupIndex &index, const BraidWord &w) {
    PairingDefinition def = PairingDefinition::adjacent(index.mf_count() / 2);
    ComplexMatrix u = word_unitary(def, w, index.orientation());
    return index.encoding() == Encoding::kDense ? dense_reduce(u, def) : u;
}

/// Naive closure: keep a list of representatives and compare with
/// equal_up_to_phase, no hashing or rounding involved.
std::vector<ComplexMatrix> naive_closure(int mf, Orientation o) {
    PairingDefinition def = PairingDefinition::adjacent(mf / 2);
    std::vector<ComplexMatrix> gens;
    for (int i = 1; i < mf; i++) {
        ComplexMatrix g = dense_reduce(generator_unitary(def, i, o), def);
        gens.push_back(g);
        gens.push_back(g.adjoint());
    }
    std::vector<ComplexMatrix> seen{identity(gens[0].rows())};
    for (std::size_t k = 0; k < seen.size(); k++) {
        for (const auto &g : gens) {
            ComplexMatrix next = g * seen[k];
            bool known = false;
            for (const auto &s : seen) {
                if (equal_up_to_phase(s, next)) {
                    known = true;
                    break;
                }
            }
            if (!known) {
                seen.push_back(next);
            }
        }
    }
    return seen;
}

int alphabet_rank(int letter) {
    return 2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0);
}

bool lex_less(const std::vector<int> &a, const std::vector<int> &b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](int x, int y) { return alphabet_rank(x) < alphabet_rank(y); });
}

}  // namespace

TEST(enumerate_image, four_mf_matches_naive_closure) {
    for (Orientation o : {Orientation::kPositive, Orientation::kNegative}) {
        std::vector<ComplexMatrix> naive = naive_closure(4, o);
        const GroupIndex &index = dense4(o);
        EXPECT_EQ(index.order(), naive.size());
        for (const auto &m : naive) {
            EXPECT_TRUE(index.find(m).has_value());
        }
    }
}

TEST(enumerate_image, metadata) {
    const GroupIndex &index = dense4();
    EXPECT_EQ(index.mf_count(), 4);
    EXPECT_EQ(index.dim(), 2u);
    EXPECT_EQ(index.alphabet(), (std::vector<int>{1, -1, 2, -2, 3, -3}));
    EXPECT_TRUE(index.word(0).empty());
    EXPECT_EQ(index.element(0), identity(2));
    EXPECT_NE(index.scope().find("dense 4-MF"), std::string::npos);
    EXPECT_THROW(enumerate_image(10, Encoding::kDense, Orientation::kPositive), std::invalid_argument);
}

TEST(enumerate_image, contains_phase_gates) {
    EXPECT_TRUE(dense4().find(gates::S()).has_value());
    EXPECT_TRUE(dense4().find(gates::S_dag()).has_value());
}

TEST(enumerate_image, random_word_membership) {
    std::mt19937_64 rng(2024);
    for (const GroupIndex *index : {&dense4(), &dense6()}) {
        PairingDefinition def = PairingDefinition::adjacent(index->mf_count() / 2);
        int missing = 0;
        for (int trial = 0; trial < 10000; trial++) {
            BraidWord w = oracle::random_word(rng, index->mf_count(), 30);
            if (!index->find(dense_reduce(word_unitary(def, w, index->orientation()), def))) {
                missing++;
            }
        }
        EXPECT_EQ(missing, 0) << index->scope();
    }
}

TEST(enumerate_image, soundness) {
    for (const GroupIndex *index : {&dense4(), &dense6()}) {
        for (std::size_t e = 0; e < index->order(); e++) {
            ASSERT_TRUE(equal_up_to_phase(replay(*index, index->word(e)), index->element(e))) << e;
        }
    }
}

TEST(enumerate_image, completeness_at_fixpoint) {
    for (const GroupIndex *index : {&dense4(), &dense6()}) {
        for (std::size_t e = 0; e < index->order(); e++) {
            ComplexMatrix m = index->element(e);
            for (int letter : index->alphabet()) {
                ASSERT_TRUE(index->find(index->generator(letter) * m).has_value());
            }
        }
    }
}

TEST(enumerate_image, shortest_words_by_exhaustive_search) {
    // Every word of length <= 6 over the six letters; record the shortest,
    // lexicographically first word reaching each element.
    const GroupIndex &index = dense4();
    const std::vector<int> &alphabet = index.alphabet();
    std::map<std::size_t, std::vector<int>> best;
    std::vector<int> letters;
    std::function<void(const ComplexMatrix &, int)> walk = [&](const ComplexMatrix &m, int depth) {
        auto e = index.find(m);
        ASSERT_TRUE(e.has_value());
        auto it = best.find(*e);
        if (it == best.end() || letters.size() < it->second.size() ||
            (letters.size() == it->second.size() && lex_less(letters, it->second))) {
            best[*e] = letters;
        }
        if (depth == 6) {
            return;
        }
        for (int l : alphabet) {
            letters.push_back(l);
            walk(index.generator(l) * m, depth + 1);
            letters.pop_back();
        }
    };
    walk(identity(2), 0);
    ASSERT_EQ(best.size(), index.order());
    for (const auto &[e, word] : best) {
        EXPECT_EQ(index.word(e).letters(), word) << e;
    }
}

TEST(enumerate_image, orientation_duality) {
    const GroupIndex &pos = dense4(Orientation::kPositive);
    const GroupIndex &neg = dense4(Orientation::kNegative);
    ASSERT_EQ(pos.order(), neg.order());
    for (std::size_t e = 0; e < pos.order(); e++) {
        EXPECT_TRUE(neg.find(pos.element(e).adjoint()).has_value());
    }
}

TEST(enumerate_image, sparse_encoding) {
    GroupIndex sparse = enumerate_image(4, Encoding::kSparse, Orientation::kPositive);
    EXPECT_EQ(sparse.dim(), 4u);
    for (std::size_t e = 0; e < sparse.order(); e++) {
        ASSERT_TRUE(equal_up_to_phase(replay(sparse, sparse.word(e)), sparse.element(e)));
    }
    EXPECT_GE(sparse.order(), dense4().order());
}

TEST(enumerate_image, element_cap) {
    EXPECT_THROW(enumerate_image(6, Encoding::kDense, Orientation::kPositive, {100}), ClosureOverflow);
}

TEST(synthesize, examples) {
    const GroupIndex &index = dense4();
    auto ident = synthesize(identity(2), index);
    ASSERT_TRUE(ident.has_value());
    EXPECT_TRUE(ident->empty());

    auto s = synthesize(std::polar(1.0, 0.3) * gates::S(), index);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(s->size(), 1u);

    // X ~ (Rx(-pi/2))^2, and dense U_2 is Rx(-pi/2).
    ComplexMatrix rx = dense_reduce(generator_unitary(PairingDefinition::adjacent(2), 2, Orientation::kPositive),
                                    PairingDefinition::adjacent(2));
    EXPECT_TRUE(equal_up_to_phase(rx * rx, gates::X()));
    auto x = synthesize(gates::X(), index);
    ASSERT_TRUE(x.has_value());
    ASSERT_EQ(x->size(), 2u);
    EXPECT_EQ(x->letters()[0], x->letters()[1]);
    EXPECT_EQ(std::abs(x->letters()[0]) % 2, 0);

    EXPECT_FALSE(synthesize(gates::T(), index).has_value());
    EXPECT_FALSE(synthesize(gates::H() * gates::T(), index).has_value());
}

TEST(synthesize, replay_recovers_targets) {
    std::mt19937_64 rng(77);
    const GroupIndex &index = dense6();
    PairingDefinition def = PairingDefinition::adjacent(3);
    for (int trial = 0; trial < 200; trial++) {
        ComplexMatrix target = dense_reduce(word_unitary(def, oracle::random_word(rng, 6, 25), index.orientation()), def);
        auto w = synthesize(std::polar(1.0, 1.1 * trial) * target, index);
        ASSERT_TRUE(w.has_value());
        EXPECT_TRUE(equal_up_to_phase(replay(index, *w), target));
    }
}

TEST(synthesize, input_errors) {
    EXPECT_THROW(synthesize(identity(4), dense4()), std::invalid_argument);
    EXPECT_THROW(synthesize(2.0 * identity(2), dense4()), std::invalid_argument);
}

TEST(group_index, save_load_round_trip) {
    const GroupIndex &original = dense6();
    std::stringstream buf;
    original.save(buf);
    GroupIndex loaded = GroupIndex::load(buf);
    EXPECT_EQ(loaded.order(), original.order());
    EXPECT_EQ(loaded.mf_count(), 6);
    EXPECT_EQ(loaded.orientation(), original.orientation());
    for (std::size_t e = 0; e < original.order(); e += 37) {
        EXPECT_EQ(loaded.word(e), original.word(e));
        EXPECT_EQ(loaded.find(original.element(e)), std::optional<std::size_t>(e));
    }
    std::stringstream again;
    loaded.save(again);
    std::stringstream first;
    original.save(first);
    EXPECT_EQ(again.str(), first.str());
}

TEST(group_index, load_rejects_corruption) {
    std::stringstream buf;
    dense4().save(buf);
    const std::string good = buf.str();
    auto load = [](const std::string &text) {
        std::istringstream in(text);
        return GroupIndex::load(in);
    };
    EXPECT_NO_THROW(load(good));
    EXPECT_THROW(load("{}"), std::invalid_argument);
    EXPECT_THROW(load("not json"), std::invalid_argument);
    std::string wrong_order = good;
    wrong_order.replace(wrong_order.find("\"order\":24"), 10, "\"order\":25");
    EXPECT_THROW(load(wrong_order), std::invalid_argument);
    std::string wrong_format = good;
    wrong_format.replace(wrong_format.find("braidkit.group_index"), 5, "xxxxx");
    EXPECT_THROW(load(wrong_format), std::invalid_argument);
}

TEST(classify_pole, six_states) {
    const double r = 1 / std::sqrt(2.0);
    auto state = [](Complex a, Complex b) {
        Eigen::VectorXcd v(2);
        v << a, b;
        return v;
    };
    EXPECT_EQ(classify_pole(state(1, 0)), "+Z");
    EXPECT_EQ(classify_pole(state(0, kI)), "-Z");
    EXPECT_EQ(classify_pole(state(r, r)), "+X");
    EXPECT_EQ(classify_pole(state(r, -r)), "-X");
    EXPECT_EQ(classify_pole(kI * state(r, kI * r)), "+Y");
    EXPECT_EQ(classify_pole(state(r, -kI * r)), "-Y");
    EXPECT_FALSE(classify_pole(state(std::cos(0.3), std::sin(0.3))).has_value());
}

TEST(pole_reachability, six_poles_only) {
    for (Orientation o : {Orientation::kPositive, Orientation::kNegative}) {
        for (bool inverses : {false, true}) {
            PoleReport report = pole_reachability(dense4(o), inverses);
            EXPECT_TRUE(report.six_poles_only());
            EXPECT_EQ(report.elements, 24u);
        }
    }
    EXPECT_THROW(pole_reachability(dense6()), std::invalid_argument);
}
