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


#include "pinstab/otoc.h"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "oracle.h"
#include "pinstab/errors.h"
#include "pinstab/rng.h"

namespace pinstab {
namespace {

TEST(OtocBackend, NamesRoundTrip) {
    for (OtocBackend b : {OtocBackend::automatic, OtocBackend::tableau, OtocBackend::propagation, OtocBackend::dense,
                          OtocBackend::protocol}) {
        EXPECT_EQ(parse_backend(backend_name(b)), b);
    }
    EXPECT_FALSE(parse_backend("gpu").has_value());
}

TEST(OtocEvaluator, AutomaticResolution) {
    EXPECT_EQ(OtocEvaluator(build_vk(4, 1)).backend(), OtocBackend::propagation);
    Circuit clifford(4);
    clifford.append(GateKind::H, 0).append(GateKind::CNOT, 0, 3);
    EXPECT_EQ(OtocEvaluator(clifford).backend(), OtocBackend::tableau);
    PropagationOptions tiny;
    tiny.max_terms = 2;
    EXPECT_EQ(OtocEvaluator(build_uk(4, 4), OtocBackend::automatic, tiny).backend(), OtocBackend::dense);
    EXPECT_THROW(OtocEvaluator(build_uk(20, 4), OtocBackend::automatic, tiny), InfeasibleError);
}

TEST(OtocEvaluator, ExplicitBackendCaps) {
    EXPECT_THROW(OtocEvaluator(build_uk(2, 1), OtocBackend::tableau), InfeasibleError);
    EXPECT_THROW(OtocEvaluator(Circuit(13), OtocBackend::dense), InfeasibleError);
    EXPECT_THROW(OtocEvaluator(Circuit(kProtocolMaxQubits + 1), OtocBackend::protocol), InfeasibleError);
}

TEST(OtocEvaluator, AllBackendsMatchOracle) {
    Rng rng(53);
    for (std::size_t n = 1; n <= 3; ++n) {
        for (std::size_t t = 0; t <= 3; ++t) {
            const Circuit c = random_clifford_t_circuit(n, 12, t, rng);
            std::vector<OtocEvaluator> evals;
            for (OtocBackend b : {OtocBackend::propagation, OtocBackend::dense, OtocBackend::protocol}) {
                evals.emplace_back(c, b);
            }
            if (t == 0) evals.emplace_back(c, OtocBackend::tableau);
            for (int i = 0; i < 20; ++i) {
                const PauliString p1 = sample_uniform(n, rng), p2 = sample_uniform(n, rng);
                const auto expected = oracle::otoc(c, p1, p2);
                ASSERT_NEAR(expected.imag(), 0.0, 1e-12);
                for (const auto &e : evals) {
                    EXPECT_NEAR(e(p1, p2), expected.real(), 1e-10)
                        << backend_name(e.backend()) << " " << p1.to_label() << "," << p2.to_label();
                }
            }
        }
    }
}

TEST(OtocEvaluator, EvaluateRowMatchesPointwise) {
    const Circuit c = build_vk(3, 2);
    const auto p2s = all_paulis(3);
    std::vector<double> row(p2s.size());
    for (OtocBackend b : {OtocBackend::propagation, OtocBackend::dense}) {
        const OtocEvaluator e(c, b);
        const PauliString p1 = PauliString::from_label("XYZ");
        e.evaluate_row(p1, p2s, row);
        for (std::size_t i = 0; i < p2s.size(); ++i) EXPECT_EQ(row[i], e(p1, p2s[i]));
    }
}

TEST(OtocEvaluator, SizeMismatchThrows) {
    const OtocEvaluator e(build_uk(2, 1));
    EXPECT_THROW(e(PauliString(3), PauliString(2)), std::invalid_argument);
}

TEST(Otoc, SingleTValues) {
    const Circuit t = build_uk(1, 1);
    const auto p = [](const char *l) { return PauliString::from_label(l); };
    EXPECT_NEAR(otoc_exact(t, p("X"), p("X")), 0.0, 1e-15);
    EXPECT_NEAR(otoc_exact(t, p("X"), p("Z")), -1.0, 1e-15);
    EXPECT_NEAR(otoc_exact(t, p("Z"), p("X")), -1.0, 1e-15);
    EXPECT_NEAR(otoc_exact(t, p("I"), p("Y")), 1.0, 1e-15);
}

TEST(Protocol, ExpectationEqualsOtoc) {
    Rng rng(59);
    for (std::size_t n = 1; n <= 3; ++n) {
        const Circuit c = random_clifford_t_circuit(n, 10, 2, rng);
        for (int i = 0; i < 10; ++i) {
            const PauliString p1 = sample_uniform(n, rng), p2 = sample_uniform(n, rng);
            EXPECT_NEAR(protocol_expectation(c, p1, p2), oracle::otoc(c, p1, p2).real(), 1e-10);
        }
    }
    EXPECT_THROW(protocol_expectation(Circuit(6), PauliString(6), PauliString(6)), InfeasibleError);
}

TEST(Shots, MeanConvergesAndNoiseContracts) {
    Rng rng(61);
    const int m = 200000;
    EXPECT_NEAR(sample_protocol_shots(0.5, m, 0.0, rng), 0.5, 0.01);
    EXPECT_NEAR(sample_protocol_shots(0.5, m, 0.2, rng), 0.4, 0.01);
    EXPECT_NEAR(sample_protocol_shots(-1.0, m, 0.0, rng), -1.0, 1e-15);
    EXPECT_THROW(sample_protocol_shots(1.5, 10, 0.0, rng), std::domain_error);
}

TEST(Shots, ShotEstimateDeterministicPerSeed) {
    const Circuit c = build_vk(2, 1);
    const PauliString p1 = PauliString::from_label("XY"), p2 = PauliString::from_label("ZX");
    ShotConfig cfg;
    cfg.shots = 1000;
    cfg.seed = 4;
    const double a = protocol_shot_estimate(c, p1, p2, cfg);
    EXPECT_EQ(a, protocol_shot_estimate(c, p1, p2, cfg));
    EXPECT_NEAR(a, otoc_exact(c, p1, p2), 0.2);
    cfg.shots = 0;
    EXPECT_THROW(protocol_shot_estimate(c, p1, p2, cfg), std::invalid_argument);
    cfg.shots = 10;
    cfg.noise = 1.0;
    EXPECT_THROW(protocol_shot_estimate(c, p1, p2, cfg), std::invalid_argument);
}

TEST(Shots, Budget) {
    EXPECT_EQ(otoc_shot_budget(0.1, 0.05, 1.0), 300u);
    EXPECT_EQ(otoc_shot_budget(0.1, 0.05, 0.5), 1199u);
    EXPECT_EQ(otoc_shot_budget(0.5, 0.05, 1.0), 12u);
    EXPECT_EQ(otoc_shot_budget(0.1, 0.05, -1.0), 300u);
    EXPECT_THROW(otoc_shot_budget(0.1, 0.05, 0.0), std::domain_error);
    EXPECT_THROW(otoc_shot_budget(0.0, 0.05, 1.0), std::invalid_argument);
    EXPECT_THROW(otoc_shot_budget(0.1, 1.0, 1.0), std::invalid_argument);
}

}  // namespace
}  // namespace pinstab
