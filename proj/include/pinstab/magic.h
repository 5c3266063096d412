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

// Pauli instability I(U) = -ln E_{P1,P2} |OTOC(U, P1, P2)|, its sampled
// estimator I_N, and the sample-budget calculators. All logarithms are
// natural; I(T) = ln(4/3).

#ifndef PINSTAB_MAGIC_H
#define PINSTAB_MAGIC_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pinstab/circuit.h"
#include "pinstab/otoc.h"
#include "pinstab/pauli_string.h"

namespace pinstab {

class Rng;

/// Exhaustive evaluation touches 16^n pairs; capped at n = 3.
inline constexpr std::size_t kExhaustiveMaxQubits = 3;

enum class InstabilityMode { exact_exhaustive, exact_analytic, estimated };
std::string_view mode_name(InstabilityMode m);

struct InstabilityResult {
    double value = 0;  // −ln(mean_abs_otoc), natural-log units
    InstabilityMode mode = InstabilityMode::exact_exhaustive;
    std::optional<std::uint64_t> pairs;  // N, absent for exact modes
    std::optional<std::uint64_t> shots;  // M, absent when OTOCs are exact
    std::optional<std::uint64_t> seed;
    double mean_abs_otoc = 1;
    double noise = 0;
    std::string backend;
    std::string rng;
};

enum class ExactMethod { automatic, exhaustive, analytic };

/// Exact I(U).
///
/// `exhaustive` averages |OTOC| over all 16^n pairs and needs n ≤ 3.
/// `analytic` requires a tensor product of single-qubit circuits (no CNOT) and
/// sums per-qubit exhaustive values, which additivity makes exact.
/// `automatic` tries exhaustive, then analytic. Throws InfeasibleError when
/// neither applies.
InstabilityResult instability_exact(const Circuit &c, ExactMethod method = ExactMethod::automatic,
                                    OtocBackend backend = OtocBackend::automatic);

struct PauliPair {
    PauliString first;
    PauliString second;
};

/// `count` pairs with both strings drawn independently and uniformly.
std::vector<PauliPair> sample_pairs(std::size_t n, std::size_t count, Rng &rng);

/// How per-pair OTOCs are obtained inside the estimator.
struct EstimateConfig {
    OtocBackend backend = OtocBackend::automatic;
    std::uint64_t shots = 0;  // 0: exact OTOC; otherwise M protocol shots per pair
    double noise = 0.0;       // global depolarizing λ; contracts OTOC by (1-λ)
    PropagationOptions propagation{};

    void validate() const;
};

// Averaging kernels. The OpenMP versions store per-item values and reduce
// them in index order, so they return bit-identical results to the serial
// references regardless of thread count or schedule. Pair i uses the shot
// stream derive_seed(seed, {i}).

double mean_abs_otoc(const OtocEvaluator &eval, std::span<const PauliPair> pairs, const EstimateConfig &cfg,
                     std::uint64_t seed);
double mean_abs_otoc_serial(const OtocEvaluator &eval, std::span<const PauliPair> pairs, const EstimateConfig &cfg,
                            std::uint64_t seed);

/// (1/16^n) Σ_{P1,P2} |OTOC|, parallel over P1.
double exhaustive_mean_abs_otoc(const OtocEvaluator &eval);
double exhaustive_mean_abs_otoc_serial(const OtocEvaluator &eval);

/// One evaluated pair. `estimate` is the signed quantity whose magnitude
/// enters the mean: (1-λ)·exact when shots == 0, else the shot mean drawn
/// from the stream `seed`.
struct PairRecord {
    PauliString p1;
    PauliString p2;
    double exact = 0;
    double estimate = 0;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
};

/// Per-pair records consistent with mean_abs_otoc for the same arguments.
std::vector<PairRecord> pair_records(const OtocEvaluator &eval, std::span<const PauliPair> pairs,
                                     const EstimateConfig &cfg, std::uint64_t seed);

/// Seed handed to the averaging kernel by instability_estimate and
/// instability_from_pairs for a given estimator seed.
std::uint64_t pair_stream_seed(std::uint64_t estimate_seed);

/// −ln(mean); throws EstimationError when mean is below machine epsilon.
double instability_from_mean(double mean);

/// I_N(U) over N freshly sampled pairs.
InstabilityResult instability_estimate(const Circuit &c, std::uint64_t num_pairs, const EstimateConfig &cfg,
                                       std::uint64_t seed);

/// Same estimator over caller-supplied pairs (e.g. a full enumeration).
InstabilityResult instability_from_pairs(const Circuit &c, std::span<const PauliPair> pairs,
                                         const EstimateConfig &cfg, std::uint64_t seed);

struct BudgetRequest {
    double eta = 0.05;  // additive error target
    double delta = 0.05;
    double instability_guess = 0;

    void validate() const;
};

/// e^{2I} · ln(1/δ) / (2 (1 - e^{-η})²) before rounding. Uses the sign
/// g = -1, which yields the larger of the two possible budgets.
double pauli_sample_budget_real(const BudgetRequest &req);
std::uint64_t pauli_sample_budget(const BudgetRequest &req);

/// I − ln(1 − λ). Throws std::invalid_argument unless 0 ≤ λ < 1.
double noise_adjusted_instability(double value, double lambda);

}  // namespace pinstab

#endif
