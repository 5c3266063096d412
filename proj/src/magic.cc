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

#include <array>
#include <cfloat>
#include <cmath>
#include <exception>
#include <stdexcept>

#include "pinstab/errors.h"
#include "pinstab/rng.h"

namespace pinstab {

namespace {

constexpr std::array<std::string_view, 3> kModeNames = {"exact-exhaustive", "exact-analytic", "estimated"};

PairRecord pair_record(const OtocEvaluator &eval, const PauliPair &pair, const EstimateConfig &cfg,
                       std::uint64_t seed, std::size_t index) {
    PairRecord r{pair.first, pair.second, eval(pair.first, pair.second), 0.0, cfg.shots, derive_seed(seed, {index})};
    if (cfg.shots == 0) {
        r.estimate = (1.0 - cfg.noise) * r.exact;
    } else {
        Rng rng(r.seed);
        r.estimate = sample_protocol_shots(r.exact, cfg.shots, cfg.noise, rng);
    }
    return r;
}

double pair_value(const OtocEvaluator &eval, const PauliPair &pair, const EstimateConfig &cfg, std::uint64_t seed,
                  std::size_t index) {
    return std::abs(pair_record(eval, pair, cfg, seed, index).estimate);
}

double ordered_mean(const std::vector<double> &values, double denom) {
    double acc = 0;
    for (double v : values) acc += v;
    return acc / denom;
}

// Runs body(i) for i in [0, count) on the OpenMP team. The first exception
// thrown by any iteration is rethrown after the loop.
template <typename Body>
void parallel_for(std::size_t count, Body &&body) {
    std::exception_ptr error;
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(pinstab_parallel_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace

std::string_view mode_name(InstabilityMode m) { return kModeNames[static_cast<std::size_t>(m)]; }

std::vector<PauliPair> sample_pairs(std::size_t n, std::size_t count, Rng &rng) {
    std::vector<PauliPair> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        PauliString a = sample_uniform(n, rng);
        PauliString b = sample_uniform(n, rng);
        out.push_back({a, b});
    }
    return out;
}

void EstimateConfig::validate() const {
    if (!(noise >= 0.0 && noise < 1.0)) throw std::invalid_argument("EstimateConfig: noise must lie in [0, 1)");
}

double mean_abs_otoc(const OtocEvaluator &eval, std::span<const PauliPair> pairs, const EstimateConfig &cfg,
                     std::uint64_t seed) {
    if (pairs.empty()) throw std::invalid_argument("mean_abs_otoc: no pairs");
    std::vector<double> values(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t i) { values[i] = pair_value(eval, pairs[i], cfg, seed, i); });
    return ordered_mean(values, static_cast<double>(pairs.size()));
}

double mean_abs_otoc_serial(const OtocEvaluator &eval, std::span<const PauliPair> pairs, const EstimateConfig &cfg,
                            std::uint64_t seed) {
    if (pairs.empty()) throw std::invalid_argument("mean_abs_otoc: no pairs");
    std::vector<double> values(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) values[i] = pair_value(eval, pairs[i], cfg, seed, i);
    return ordered_mean(values, static_cast<double>(pairs.size()));
}

namespace {

double exhaustive_row(const OtocEvaluator &eval, const std::vector<PauliString> &all, std::size_t i,
                      std::vector<double> &scratch) {
    eval.evaluate_row(all[i], all, scratch);
    double acc = 0;
    for (double v : scratch) acc += std::abs(v);
    return acc;
}

}  // namespace

double exhaustive_mean_abs_otoc(const OtocEvaluator &eval) {
    const std::vector<PauliString> all = all_paulis(eval.circuit().num_qubits());
    std::vector<double> rows(all.size());
    parallel_for(all.size(), [&](std::size_t i) {
        std::vector<double> scratch(all.size());
        rows[i] = exhaustive_row(eval, all, i, scratch);
    });
    const double count = static_cast<double>(all.size());
    return ordered_mean(rows, count * count);
}

double exhaustive_mean_abs_otoc_serial(const OtocEvaluator &eval) {
    const std::vector<PauliString> all = all_paulis(eval.circuit().num_qubits());
    std::vector<double> rows(all.size());
    std::vector<double> scratch(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) rows[i] = exhaustive_row(eval, all, i, scratch);
    const double count = static_cast<double>(all.size());
    return ordered_mean(rows, count * count);
}

double instability_from_mean(double mean) {
    if (!(mean >= DBL_EPSILON)) {
        throw EstimationError("mean |OTOC| is below machine epsilon; instability is unbounded");
    }
    return mean >= 1.0 ? 0.0 : -std::log(mean);
}

namespace {

InstabilityResult exhaustive(const Circuit &c, OtocBackend backend) {
    if (c.num_qubits() > kExhaustiveMaxQubits) {
        throw InfeasibleError("instability_exact: exhaustive mode needs n <= " + std::to_string(kExhaustiveMaxQubits));
    }
    OtocEvaluator eval(c, backend);
    InstabilityResult r;
    r.mode = InstabilityMode::exact_exhaustive;
    r.mean_abs_otoc = exhaustive_mean_abs_otoc(eval);
    r.value = instability_from_mean(r.mean_abs_otoc);
    r.backend = std::string(backend_name(eval.backend()));
    return r;
}

InstabilityResult analytic(const Circuit &c, OtocBackend backend) {
    std::vector<Circuit> factors(c.num_qubits(), Circuit(1));
    for (const Gate &g : c.gates()) {
        if (is_two_qubit(g.kind)) {
            throw InfeasibleError("instability_exact: analytic mode needs a product of single-qubit circuits");
        }
        factors[g.q0].append(g.kind, 0);
    }
    InstabilityResult r;
    r.mode = InstabilityMode::exact_analytic;
    r.value = 0;
    r.mean_abs_otoc = 1;
    for (const Circuit &f : factors) {
        if (f.empty()) continue;
        InstabilityResult part = exhaustive(f, backend);
        r.value += part.value;
        r.mean_abs_otoc *= part.mean_abs_otoc;
        r.backend = part.backend;
    }
    if (r.backend.empty()) r.backend = "tableau";
    return r;
}

}  // namespace

InstabilityResult instability_exact(const Circuit &c, ExactMethod method, OtocBackend backend) {
    switch (method) {
        case ExactMethod::exhaustive:
            return exhaustive(c, backend);
        case ExactMethod::analytic:
            return analytic(c, backend);
        case ExactMethod::automatic:
            if (c.num_qubits() <= kExhaustiveMaxQubits) return exhaustive(c, backend);
            return analytic(c, backend);
    }
    throw std::logic_error("instability_exact: unknown method");
}

std::vector<PairRecord> pair_records(const OtocEvaluator &eval, std::span<const PauliPair> pairs,
                                     const EstimateConfig &cfg, std::uint64_t seed) {
    std::vector<PairRecord> out(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t i) { out[i] = pair_record(eval, pairs[i], cfg, seed, i); });
    return out;
}

std::uint64_t pair_stream_seed(std::uint64_t estimate_seed) { return derive_seed(estimate_seed, {0x5307}); }

InstabilityResult instability_from_pairs(const Circuit &c, std::span<const PauliPair> pairs,
                                         const EstimateConfig &cfg, std::uint64_t seed) {
    cfg.validate();
    OtocEvaluator eval(c, cfg.backend, cfg.propagation);
    InstabilityResult r;
    r.mode = InstabilityMode::estimated;
    r.pairs = pairs.size();
    if (cfg.shots > 0) r.shots = cfg.shots;
    r.seed = seed;
    r.noise = cfg.noise;
    r.backend = std::string(backend_name(eval.backend()));
    r.rng = std::string(Rng::kAlgorithm);
    r.mean_abs_otoc = mean_abs_otoc(eval, pairs, cfg, pair_stream_seed(seed));
    r.value = instability_from_mean(r.mean_abs_otoc);
    return r;
}

InstabilityResult instability_estimate(const Circuit &c, std::uint64_t num_pairs, const EstimateConfig &cfg,
                                       std::uint64_t seed) {
    if (num_pairs < 1) throw std::invalid_argument("instability_estimate: need at least one pair");
    Rng rng(seed);
    const auto pairs = sample_pairs(c.num_qubits(), num_pairs, rng);
    return instability_from_pairs(c, pairs, cfg, seed);
}

void BudgetRequest::validate() const {
    if (!(eta > 0.0 && std::isfinite(eta))) throw std::invalid_argument("BudgetRequest: eta must be > 0");
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("BudgetRequest: delta must lie in (0, 1)");
    if (!(instability_guess >= 0.0 && std::isfinite(instability_guess))) {
        throw std::invalid_argument("BudgetRequest: instability guess must be finite and >= 0");
    }
}

double pauli_sample_budget_real(const BudgetRequest &req) {
    req.validate();
    const double gap = -std::expm1(-req.eta);  // 1 - e^{-η}
    const double f = std::log(1.0 / req.delta) / (2.0 * gap * gap);
    return std::exp(2.0 * req.instability_guess) * f;
}

std::uint64_t pauli_sample_budget(const BudgetRequest &req) {
    const double n = std::ceil(pauli_sample_budget_real(req));
    if (n > 9.0e18) throw InfeasibleError("pauli_sample_budget: budget overflows 64-bit count");
    return static_cast<std::uint64_t>(n);
}

double noise_adjusted_instability(double value, double lambda) {
    if (!(lambda >= 0.0 && lambda < 1.0)) {
        throw std::invalid_argument("noise_adjusted_instability: lambda must lie in [0, 1)");
    }
    return value - std::log1p(-lambda);
}

}  // namespace pinstab
