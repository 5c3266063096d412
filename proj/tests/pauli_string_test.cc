// Copyright 2026 The pinstab Authors
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


#include "pinstab/pauli_string.h"

#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include "oracle.h"
#include "pinstab/rng.h"

namespace pinstab {
namespace {

TEST(PauliString, LabelRoundTrip) {
    for (const char *label : {"I", "X", "Y", "Z", "XYZI", "-ZZ", "IIIIIIIIY"}) {
        EXPECT_EQ(PauliString::from_label(label).to_label(), label);
    }
    EXPECT_EQ(PauliString::from_label("+XY").to_label(), "XY");
}

TEST(PauliString, LabelEncodesQubitZeroLeftmost) {
    const PauliString p = PauliString::from_label("XZY");
    EXPECT_EQ(p.x_mask(), 0b101u);
    EXPECT_EQ(p.z_mask(), 0b110u);
    EXPECT_EQ(p.at(0), 'X');
    EXPECT_EQ(p.at(1), 'Z');
    EXPECT_EQ(p.at(2), 'Y');
    EXPECT_EQ(p.weight(), 3u);
}

TEST(PauliString, RejectsBadInput) {
    EXPECT_THROW(PauliString::from_label(""), std::invalid_argument);
    EXPECT_THROW(PauliString::from_label("XQ"), std::invalid_argument);
    EXPECT_THROW(PauliString(0), std::invalid_argument);
    EXPECT_THROW(PauliString(65), std::invalid_argument);
    EXPECT_THROW(PauliString(2, 0b100, 0), std::invalid_argument);
    EXPECT_NO_THROW(PauliString(64, ~std::uint64_t{0}, ~std::uint64_t{0}));
}

TEST(PauliString, IdentityAndSign) {
    const PauliString id(3);
    EXPECT_TRUE(id.is_identity());
    EXPECT_EQ(id.to_label(), "III");
    const PauliString p = PauliString::from_label("-XY");
    EXPECT_EQ(p.sign(), -1);
    EXPECT_EQ(p.negated().to_label(), "XY");
    EXPECT_EQ(p.unsigned_part(), p.negated());
}

// a·b against the Kronecker matrices, phase included, for every signed pair on
// two qubits.
TEST(PauliString, MultiplyMatchesMatrices) {
    for (const auto &a0 : all_paulis(2)) {
        for (const auto &b0 : all_paulis(2)) {
            for (const auto &a : {a0, a0.negated()}) {
                for (const auto &b : {b0, b0.negated()}) {
                    const PauliProduct prod = multiply(a, b);
                    ASSERT_TRUE(prod.quarter_phase == 0 || prod.quarter_phase == 1);
                    const std::complex<double> phase = prod.quarter_phase ? std::complex<double>(0, 1) : 1.0;
                    const oracle::Mat expected = oracle::pauli(a) * oracle::pauli(b);
                    const oracle::Mat got = phase * oracle::pauli(prod.pauli);
                    EXPECT_LT((expected - got).cwiseAbs().maxCoeff(), 1e-12)
                        << a.to_label() << " * " << b.to_label();
                }
            }
        }
    }
}

TEST(PauliString, CommutesMatchesMatrices) {
    for (const auto &a : all_paulis(2)) {
        for (const auto &b : all_paulis(2)) {
            const oracle::Mat pa = oracle::pauli(a), pb = oracle::pauli(b);
            const bool expected = (pa * pb - pb * pa).cwiseAbs().maxCoeff() < 1e-12;
            EXPECT_EQ(commutes(a, b), expected) << a.to_label() << ", " << b.to_label();
        }
    }
}

TEST(PauliString, SizeMismatchThrows) {
    EXPECT_THROW(multiply(PauliString(2), PauliString(3)), std::invalid_argument);
    EXPECT_THROW(commutes(PauliString(2), PauliString(3)), std::invalid_argument);
}

TEST(PauliString, AllPaulisEnumeratesDistinctStrings) {
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto all = all_paulis(n);
        ASSERT_EQ(all.size(), std::size_t{1} << (2 * n));
        std::set<std::string> labels;
        for (const auto &p : all) labels.insert(p.to_label());
        EXPECT_EQ(labels.size(), all.size());
        EXPECT_TRUE(all.front().is_identity());
    }
    EXPECT_THROW(all_paulis(0), std::invalid_argument);
    EXPECT_THROW(all_paulis(13), std::invalid_argument);
}

TEST(PauliString, SampleUniformIsRoughlyUniform) {
    Rng rng(5);
    std::vector<int> counts(16, 0);
    const int draws = 16000;
    for (int i = 0; i < draws; ++i) {
        const PauliString p = sample_uniform(2, rng);
        EXPECT_FALSE(p.negative());
        ++counts[(p.x_mask() << 2) | p.z_mask()];
    }
    // Mean 1000, sd ≈ 31; 6 sd bounds.
    for (int c : counts) {
        EXPECT_GT(c, 810);
        EXPECT_LT(c, 1190);
    }
}

TEST(PauliString, SampleUniformUsesWideRegisters) {
    Rng rng(9);
    const PauliString p = sample_uniform(64, rng);
    EXPECT_GT(p.weight(), 32u);
}

TEST(Rng, DeterministicPerSeed) {
    Rng a(42), b(42), c(43);
    for (int i = 0; i < 10; ++i) {
        const auto va = a.next_u64();
        EXPECT_EQ(va, b.next_u64());
        EXPECT_NE(va, c.next_u64());
    }
}

TEST(Rng, Uniform01Range) {
    Rng r(1);
    double sum = 0;
    for (int i = 0; i < 100000; ++i) {
        const double u = r.uniform01();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
    }
    EXPECT_NEAR(sum / 100000, 0.5, 0.005);
}

TEST(Rng, DeriveSeedSeparatesTags) {
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 100; ++i) {
        seen.insert(derive_seed(7, {i}));
        seen.insert(derive_seed(7, {i, 0}));
    }
    EXPECT_EQ(seen.size(), 200u);
    EXPECT_EQ(derive_seed(7, {1, 2}), derive_seed(7, {1, 2}));
    EXPECT_NE(derive_seed(7, {1, 2}), derive_seed(7, {2, 1}));
    EXPECT_NE(derive_seed(7, {1}), derive_seed(8, {1}));
}

}  // namespace
}  // namespace pinstab
