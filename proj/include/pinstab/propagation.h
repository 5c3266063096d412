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

#ifndef PINSTAB_PROPAGATION_H
#define PINSTAB_PROPAGATION_H

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pinstab/circuit.h"
#include "pinstab/pauli_string.h"

namespace pinstab {

/// Real combination Σ c_i P_i of unsigned Pauli strings; each P_i's sign is
/// folded into c_i. Terms are kept sorted by (x_mask, z_mask).
class PauliSum {
   public:
    struct Term {
        std::uint64_t x;
        std::uint64_t z;
        double coefficient;
    };

    explicit PauliSum(const PauliString &p);

    std::size_t num_qubits() const { return n_; }
    std::size_t size() const { return terms_.size(); }
    std::span<const Term> terms() const { return terms_; }

    /// Coefficient of the unsigned string p (0 when absent).
    double coefficient(const PauliString &p) const;

    /// Σ c_i². Equals 1 for any U†PU.
    double norm_squared() const;

    /// One `label: coefficient` line per term.
    std::string to_text() const;

   private:
    friend class Propagator;
    PauliSum(std::size_t n, std::vector<Term> terms) : n_(n), terms_(std::move(terms)) {}
    std::size_t n_;
    std::vector<Term> terms_;
};

struct PropagationOptions {
    /// Live term cap; exceeding it throws BudgetExceededError.
    std::size_t max_terms = std::size_t{1} << 22;
    /// Merged coefficients with smaller magnitude are dropped.
    double drop_tolerance = 1e-14;
};

/// Exact U† p U for a Clifford+T circuit. Gates are consumed from the last
/// one backwards; each T or Tdg splits terms carrying X or Y on its qubit.
PauliSum propagate(const Circuit &c, const PauliString &p, const PropagationOptions &opts = {});

/// OTOC(U, P1, P2) = Σ_i c_i² χ(P_i, P2) for w = U† P1 U, χ = +1 when P_i
/// commutes with P2 and -1 otherwise.
double otoc_from_sum(const PauliSum &w, const PauliString &p2);

}  // namespace pinstab

#endif
