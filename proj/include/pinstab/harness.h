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

#ifndef PINSTAB_HARNESS_H
#define PINSTAB_HARNESS_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pinstab/circuit.h"
#include "pinstab/otoc.h"

namespace pinstab {

enum class Family { Uk, Vk };
std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// U_k or V_k.
Circuit build_family(Family f, std::size_t n, std::size_t k);

/// Header of the per-run CSV. Columns are never reordered.
inline constexpr std::string_view kSweepCsvHeader = "family,n,k,rep,estimate,exact,N,M,lambda,seed,ms";

struct SweepConfig {
    Family family = Family::Uk;
    std::size_t n = 10;
    std::size_t k_min = 0;
    std::size_t k_max = 9;
    std::uint64_t pauli_samples = 500;
    std::uint64_t otoc_shots = 0;  // 0: exact per-pair OTOCs
    std::size_t repeats = 5;
    std::uint64_t seed = 1;
    double noise = 0.0;
    OtocBackend backend = OtocBackend::automatic;

    void validate() const;
};

struct SweepRow {
    Family family;
    std::size_t n;
    std::size_t k;
    std::size_t rep;
    double estimate;  // +inf when the mean |OTOC| collapsed to zero
    std::optional<double> exact;
    std::uint64_t pauli_samples;
    std::uint64_t otoc_shots;
    double noise;
    std::uint64_t seed;
    double ms;
};

struct SweepSummary {
    std::size_t k;
    std::size_t count;
    double mean;
    double stddev;  // sample standard deviation (n-1)
    double std_error;
    std::optional<double> exact;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::vector<SweepSummary> summary;
};

/// Seed for one (k, rep) cell; independent of evaluation order.
std::uint64_t cell_seed(std::uint64_t master, Family f, std::size_t k, std::size_t rep);

SweepResult run_sweep(const SweepConfig &cfg);

std::vector<SweepSummary> summarize(std::span<const SweepRow> rows);

/// Shortest round-trip decimal form.
std::string format_double(double v);

void write_sweep_csv(std::ostream &os, std::span<const SweepRow> rows);
void write_summary_csv(std::ostream &os, const SweepConfig &cfg, std::span<const SweepSummary> summary);
void write_sweep_svg(std::ostream &os, const SweepConfig &cfg, const SweepResult &result);

struct BudgetRow {
    std::size_t t_gates;
    double instability;
    double budget_real;
    std::uint64_t budget;
    double growth;  // budget_real ratio to the previous row (16/9 for T gates)
};

/// Pauli sample budgets for I = k·ln(4/3), k = 0..k_max.
std::vector<BudgetRow> pauli_budget_table(double eta, double delta, std::size_t k_max);

}  // namespace pinstab

#endif
