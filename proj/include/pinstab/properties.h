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

#ifndef PINSTAB_PROPERTIES_H
#define PINSTAB_PROPERTIES_H

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pinstab/clifford.h"
#include "pinstab/pauli_string.h"

namespace pinstab {

struct SuiteResult {
    std::string name;
    bool passed = true;
    double worst_deviation = 0;
    double tolerance = 0;
    std::size_t checks = 0;
    std::string detail{};  // first failure, if any

    void record(double deviation, const std::string &what);
};

struct VerifyReport {
    std::vector<SuiteResult> suites;

    bool all_passed() const;
    /// `suite=<name> status=PASS|FAIL checks=<k> max_dev=<d> tol=<t>` lines,
    /// then a `summary` line.
    std::string to_text() const;
};

using ConjugateFn = std::function<PauliString(const CliffordTableau &, const PauliString &)>;

struct VerifyOptions {
    std::size_t faithfulness_trials = 50;
    std::size_t invariance_trials = 20;
    std::size_t agreement_circuits = 10;
    std::size_t sampled_pairs = 100;
    /// Replaces CliffordTableau::conjugate in the agreement suite; used to
    /// inject faults in tests.
    ConjugateFn conjugate;
};

// Monotone axioms, exhaustive at n ≤ 3.
SuiteResult check_faithfulness(std::uint64_t seed, std::size_t trials);
SuiteResult check_invariance(std::uint64_t seed, std::size_t trials);
SuiteResult check_additivity();
SuiteResult check_t_scaling();

/// Tableau conjugation against dense U†PU (sign-exact) for random Clifford
/// circuits at n ≤ 3, and tableau/propagation/dense/protocol OTOC agreement
/// on all 256 pairs of random n = 2 Clifford+T circuits.
SuiteResult check_backend_agreement(std::uint64_t seed, const VerifyOptions &opts);

/// Propagation/dense (and protocol or tableau where they apply) on sampled
/// pairs for n ≤ 6, t_count ≤ 6.
SuiteResult check_sampled_backend_agreement(std::uint64_t seed, const VerifyOptions &opts);

/// Faithfulness, invariance, additivity and T-gate scaling.
VerifyReport verify_monotone_properties(std::uint64_t seed, const VerifyOptions &opts = {});

/// Everything above plus the backend-agreement suites.
VerifyReport verify_all(std::uint64_t seed, const VerifyOptions &opts = {});

}  // namespace pinstab

#endif
