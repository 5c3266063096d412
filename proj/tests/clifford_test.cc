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


#include "pinstab/clifford.h"

#include <gtest/gtest.h>

#include <stdexcept>

#include "oracle.h"
#include "pinstab/rng.h"

namespace pinstab {
namespace {

// U†PU from the oracle must equal the tableau image as a signed matrix.
void expect_matches_oracle(const Circuit &c, const PauliString &p, const PauliString &image) {
    const double dev = (oracle::heisenberg(c, p) - oracle::pauli(image)).cwiseAbs().maxCoeff();
    EXPECT_LT(dev, 1e-12) << p.to_label() << " -> " << image.to_label();
}

PauliString conj1(GateKind k, const char *label) {
    PauliString p = PauliString::from_label(label);
    conjugate_by_gate(Gate{k, 0}, p);
    return p;
}

TEST(Clifford, SingleQubitRules) {
    EXPECT_EQ(conj1(GateKind::H, "X").to_label(), "Z");
    EXPECT_EQ(conj1(GateKind::H, "Z").to_label(), "X");
    EXPECT_EQ(conj1(GateKind::H, "Y").to_label(), "-Y");
    EXPECT_EQ(conj1(GateKind::S, "X").to_label(), "-Y");
    EXPECT_EQ(conj1(GateKind::S, "Y").to_label(), "X");
    EXPECT_EQ(conj1(GateKind::S, "Z").to_label(), "Z");
    EXPECT_EQ(conj1(GateKind::Sdg, "X").to_label(), "Y");
    EXPECT_EQ(conj1(GateKind::Sdg, "Y").to_label(), "-X");
    EXPECT_EQ(conj1(GateKind::X, "Z").to_label(), "-Z");
    EXPECT_EQ(conj1(GateKind::Z, "Y").to_label(), "-Y");
}

TEST(Clifford, EveryGateOnEveryPauliMatchesOracle) {
    for (GateKind k : {GateKind::H, GateKind::S, GateKind::Sdg, GateKind::X, GateKind::Y, GateKind::Z}) {
        for (std::uint32_t q = 0; q < 2; ++q) {
            Circuit c(2);
            c.append(k, q);
            for (const auto &p : all_paulis(2)) {
                PauliString image = p;
                conjugate_by_gate(c.gates()[0], image);
                expect_matches_oracle(c, p, image);
            }
        }
    }
    for (auto [a, b] : {std::pair{0u, 1u}, std::pair{1u, 0u}}) {
        Circuit c(2);
        c.append(GateKind::CNOT, a, b);
        for (const auto &p : all_paulis(2)) {
            PauliString image = p;
            conjugate_by_gate(c.gates()[0], image);
            expect_matches_oracle(c, p, image);
            expect_matches_oracle(c, p.negated(), [&] {
                PauliString m = p.negated();
                conjugate_by_gate(c.gates()[0], m);
                return m;
            }());
        }
    }
}

TEST(Clifford, RejectsTGates) {
    PauliString p = PauliString::from_label("X");
    EXPECT_THROW(conjugate_by_gate(Gate{GateKind::T, 0}, p), std::invalid_argument);
    Circuit c(1);
    c.append(GateKind::Tdg, 0);
    EXPECT_THROW(tableau_from_circuit(c), std::invalid_argument);
}

TEST(CliffordTableau, RandomCircuitsMatchOracle) {
    Rng rng(17);
    for (std::size_t n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            const Circuit c = random_clifford_circuit(n, 30, rng);
            const CliffordTableau t = tableau_from_circuit(c);
            EXPECT_TRUE(t.is_symplectic());
            for (const auto &p : all_paulis(n)) {
                expect_matches_oracle(c, p, t.conjugate(p));
                expect_matches_oracle(c, p.negated(), conjugate_pauli(t, p.negated()));
            }
        }
    }
}

TEST(CliffordTableau, ComposesLikeCircuits) {
    Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const Circuit a = random_clifford_circuit(3, 20, rng);
        const Circuit b = random_clifford_circuit(3, 20, rng);
        Circuit ab = a;
        ab.extend(b);
        EXPECT_EQ(tableau_from_circuit(a).then(tableau_from_circuit(b)), tableau_from_circuit(ab));
    }
}

TEST(CliffordTableau, IdentityAndInverse) {
    Rng rng(29);
    const Circuit c = random_clifford_circuit(3, 25, rng);
    const CliffordTableau t = tableau_from_circuit(c);
    EXPECT_EQ(t.then(tableau_from_circuit(c.inverse())), CliffordTableau::identity(3));
    EXPECT_EQ(tableau_from_circuit(Circuit(3)), CliffordTableau::identity(3));
}

TEST(CliffordTableau, WideRegister) {
    // Not checkable densely; the image must keep commutation relations.
    Rng rng(31);
    const Circuit c = random_clifford_circuit(64, 400, rng);
    const CliffordTableau t = tableau_from_circuit(c);
    EXPECT_TRUE(t.is_symplectic());
    for (int i = 0; i < 20; ++i) {
        const PauliString a = sample_uniform(64, rng), b = sample_uniform(64, rng);
        EXPECT_EQ(commutes(t.conjugate(a), t.conjugate(b)), commutes(a, b));
    }
}

TEST(CliffordTableau, SizeMismatchThrows) {
    EXPECT_THROW(conjugate_pauli(CliffordTableau::identity(2), PauliString(3)), std::invalid_argument);
}

}  // namespace
}  // namespace pinstab
