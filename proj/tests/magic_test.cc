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


#include "pinstab/magic.h"

#include <gtest/gtest.h>
#include <omp.h>

#include <cmath>
#include <stdexcept>

#include "oracle.h"
#include "pinstab/errors.h"
#include "pinstab/rng.h"

namespace pinstab {
namespace {

const double kLn43 = std::log(4.0 / 3.0);

TEST(Instability, SingleTBruteForce) {
    const Circuit t = build_uk(1, 1);
    EXPECT_NEAR(oracle::mean_abs_otoc(t), 0.75, 1e-12);
    const InstabilityResult r = instability_exact(t);
    EXPECT_EQ(r.mode, InstabilityMode::exact_exhaustive);
    EXPECT_NEAR(r.mean_abs_otoc, 0.75, 1e-12);
    EXPECT_NEAR(r.value, kLn43, 1e-12);
    EXPECT_FALSE(r.pairs.has_value());
}

TEST(Instability, ExhaustiveMatchesOracleDefinition) {
    Rng rng(67);
    for (std::size_t n = 1; n <= 2; ++n) {
        for (int trial = 0; trial < 3; ++trial) {
            const Circuit c = random_clifford_t_circuit(n, 10, 2, rng);
            const double expected = oracle::mean_abs_otoc(c);
            EXPECT_NEAR(instability_exact(c).mean_abs_otoc, expected, 1e-12);
            EXPECT_NEAR(instability_exact(c, ExactMethod::exhaustive, OtocBackend::dense).mean_abs_otoc, expected,
                        1e-12);
        }
    }
}

TEST(Instability, UkScalesWithTCount) {
    for (std::size_t n = 1; n <= kExhaustiveMaxQubits; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            EXPECT_NEAR(instability_exact(build_uk(n, k)).value, k * kLn43, 1e-9) << n << " " << k;
        }
    }
    for (std::size_t k = 0; k <= 10; ++k) {
        const InstabilityResult r = instability_exact(build_uk(10, k));
        EXPECT_EQ(r.mode, InstabilityMode::exact_analytic);
        EXPECT_NEAR(r.value, k * kLn43, 1e-9);
        EXPECT_NEAR(r.mean_abs_otoc, std::pow(0.75, static_cast<double>(k)), 1e-12);
    }
}

TEST(Instability, AnalyticAgreesWithExhaustive) {
    Rng rng(71);
    for (int trial = 0; trial < 5; ++trial) {
        Circuit c(3);
        for (int g = 0; g < 12; ++g) {
            const auto q = static_cast<std::uint32_t>(rng.next_u64() % 3);
            const GateKind k = (g % 3 == 0) ? GateKind::T : (g % 3 == 1 ? GateKind::H : GateKind::S);
            c.append(k, q);
        }
        EXPECT_NEAR(instability_exact(c, ExactMethod::analytic).value,
                    instability_exact(c, ExactMethod::exhaustive).value, 1e-9);
    }
}

TEST(Instability, ExactMethodsRefuseWhatTheyCannotDo) {
    EXPECT_THROW(instability_exact(build_uk(4, 1), ExactMethod::exhaustive), InfeasibleError);
    EXPECT_THROW(instability_exact(build_vk(4, 1), ExactMethod::analytic), InfeasibleError);
    EXPECT_THROW(instability_exact(build_vk(4, 1)), InfeasibleError);
}

TEST(Instability, CliffordIsZero) {
    Rng rng(73);
    const Circuit c = random_clifford_circuit(3, 40, rng);
    EXPECT_EQ(instability_exact(c).value, 0.0);
}

TEST(Kernels, ParallelMatchesSerialBitwise) {
    Rng rng(79);
    const auto pairs = sample_pairs(6, 300, rng);
    const OtocEvaluator eval(build_vk(6, 4));
    for (std::uint64_t shots : {std::uint64_t{0}, std::uint64_t{64}}) {
        EstimateConfig cfg;
        cfg.shots = shots;
        cfg.noise = shots ? 0.1 : 0.0;
        const double serial = mean_abs_otoc_serial(eval, pairs, cfg, 5);
        for (int threads : {1, 2, 4, 7}) {
            omp_set_num_threads(threads);
            EXPECT_EQ(mean_abs_otoc(eval, pairs, cfg, 5), serial) << threads << " threads, M=" << shots;
        }
    }
    const OtocEvaluator small(build_vk(3, 2));
    const double serial = exhaustive_mean_abs_otoc_serial(small);
    for (int threads : {1, 3, 8}) {
        omp_set_num_threads(threads);
        EXPECT_EQ(exhaustive_mean_abs_otoc(small), serial);
    }
}

TEST(Kernels, EmptyPairsRejected) {
    const OtocEvaluator eval(build_uk(2, 1));
    EXPECT_THROW(mean_abs_otoc(eval, {}, EstimateConfig{}, 1), std::invalid_argument);
    EXPECT_THROW(mean_abs_otoc_serial(eval, {}, EstimateConfig{}, 1), std::invalid_argument);
}

TEST(Kernels, ExceptionsPropagateOutOfParallelRegion) {
    const OtocEvaluator eval(build_uk(2, 1));
    std::vector<PauliPair> pairs(40, PauliPair{PauliString(2), PauliString(2)});
    pairs[17] = PauliPair{PauliString(3), PauliString(3)};
    EXPECT_THROW(mean_abs_otoc(eval, pairs, EstimateConfig{}, 1), std::invalid_argument);
}

TEST(Kernels, PairRecordsMatchKernel) {
    Rng rng(83);
    const auto pairs = sample_pairs(5, 200, rng);
    const OtocEvaluator eval(build_vk(5, 3));
    for (std::uint64_t shots : {std::uint64_t{0}, std::uint64_t{100}}) {
        EstimateConfig cfg;
        cfg.shots = shots;
        cfg.noise = 0.05;
        const auto records = pair_records(eval, pairs, cfg, 9);
        ASSERT_EQ(records.size(), pairs.size());
        double acc = 0;
        for (std::size_t i = 0; i < records.size(); ++i) {
            EXPECT_EQ(records[i].p1, pairs[i].first);
            EXPECT_EQ(records[i].exact, eval(pairs[i].first, pairs[i].second));
            EXPECT_EQ(records[i].shots, shots);
            if (shots == 0) EXPECT_EQ(records[i].estimate, 0.95 * records[i].exact);
            acc += std::abs(records[i].estimate);
        }
        EXPECT_EQ(acc / 200, mean_abs_otoc_serial(eval, pairs, cfg, 9));
    }
}

TEST(Estimate, FullEnumerationReproducesExact) {
    const Circuit c = build_vk(2, 1);
    std::vector<PauliPair> pairs;
    for (const auto &a : all_paulis(2)) {
        for (const auto &b : all_paulis(2)) pairs.push_back({a, b});
    }
    const InstabilityResult r = instability_from_pairs(c, pairs, EstimateConfig{}, 3);
    EXPECT_NEAR(r.value, instability_exact(c).value, 1e-12);
    EXPECT_EQ(r.mode, InstabilityMode::estimated);
    EXPECT_EQ(r.pairs, 256u);
}

TEST(Estimate, DeterministicPerSeedAndRecordsProvenance) {
    const Circuit c = build_uk(10, 5);
    EstimateConfig cfg;
    const InstabilityResult a = instability_estimate(c, 200, cfg, 11);
    const InstabilityResult b = instability_estimate(c, 200, cfg, 11);
    const InstabilityResult other = instability_estimate(c, 200, cfg, 12);
    EXPECT_EQ(a.value, b.value);
    EXPECT_NE(a.value, other.value);
    EXPECT_EQ(a.pairs, 200u);
    EXPECT_EQ(a.seed, 11u);
    EXPECT_FALSE(a.shots.has_value());
    EXPECT_EQ(a.rng, "mt19937_64");
    EXPECT_EQ(a.backend, "propagation");
}

TEST(Estimate, ShotsAndNoise) {
    EstimateConfig cfg;
    cfg.shots = 20000;
    cfg.noise = 0.2;
    const InstabilityResult r = instability_estimate(Circuit(2), 50, cfg, 1);
    EXPECT_EQ(r.shots, 20000u);
    EXPECT_NEAR(r.value, -std::log(0.8), 0.02);
    cfg.noise = 1.0;
    EXPECT_THROW(instability_estimate(Circuit(2), 50, cfg, 1), std::invalid_argument);
    EXPECT_THROW(instability_estimate(Circuit(2), 0, EstimateConfig{}, 1), std::invalid_argument);
}

TEST(Estimate, CollapsedMeanRaises) {
    EXPECT_THROW(instability_from_mean(0.0), EstimationError);
    EXPECT_THROW(instability_from_mean(1e-300), EstimationError);
    EXPECT_EQ(instability_from_mean(1.0), 0.0);
    EXPECT_NEAR(instability_from_mean(0.75), kLn43, 1e-15);
}

TEST(Budget, PauliSampleBudgetValues) {
    const auto n = [](double eta, double delta, double inst) {
        return pauli_sample_budget(BudgetRequest{.eta = eta, .delta = delta, .instability_guess = inst});
    };
    EXPECT_EQ(n(0.05, 0.05, 0), 630u);
    EXPECT_EQ(n(0.05, 0.05, kLn43), 1120u);
    EXPECT_EQ(n(0.05, 0.05, 2 * kLn43), 1991u);
    // Independent closed form: ln(1/δ) / (2 (1 - e^{-η})²).
    const double direct = std::log(20.0) / (2 * std::pow(1 - std::exp(-0.05), 2));
    EXPECT_NEAR(pauli_sample_budget_real(BudgetRequest{}), direct, 1e-9 * direct);
}

TEST(Budget, GrowthPerTGate) {
    for (int k = 0; k < 8; ++k) {
        const double a = pauli_sample_budget_real(BudgetRequest{.instability_guess = k * kLn43});
        const double b = pauli_sample_budget_real(BudgetRequest{.instability_guess = (k + 1) * kLn43});
        EXPECT_NEAR(b / a, 16.0 / 9.0, 1e-12);
    }
}

TEST(Budget, RejectsBadRequests) {
    EXPECT_THROW(pauli_sample_budget(BudgetRequest{.eta = 0}), std::invalid_argument);
    EXPECT_THROW(pauli_sample_budget(BudgetRequest{.delta = 1}), std::invalid_argument);
    EXPECT_THROW(pauli_sample_budget(BudgetRequest{.instability_guess = -1}), std::invalid_argument);
    EXPECT_THROW(pauli_sample_budget(BudgetRequest{.instability_guess = 40}), InfeasibleError);
}

TEST(Noise, AdjustedInstability) {
    EXPECT_NEAR(noise_adjusted_instability(0.0, 0.1), -std::log(0.9), 1e-12);
    EXPECT_NEAR(noise_adjusted_instability(3 * kLn43, 0.25), 3 * kLn43 + std::log(4.0 / 3.0), 1e-12);
    EXPECT_EQ(noise_adjusted_instability(1.5, 0.0), 1.5);
    EXPECT_THROW(noise_adjusted_instability(0.0, 1.0), std::invalid_argument);
    EXPECT_THROW(noise_adjusted_instability(0.0, -0.1), std::invalid_argument);
}

}  // namespace
}  // namespace pinstab
