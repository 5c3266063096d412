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

#ifndef PINSTAB_OTOC_H
#define PINSTAB_OTOC_H

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "pinstab/circuit.h"
#include "pinstab/clifford.h"
#include "pinstab/dense.h"
#include "pinstab/pauli_string.h"
#include "pinstab/propagation.h"

namespace pinstab {

class Rng;

enum class OtocBackend { automatic, tableau, propagation, dense, protocol };

std::string_view backend_name(OtocBackend b);
std::optional<OtocBackend> parse_backend(std::string_view name);

/// Largest system size accepted by the interferometric protocol simulator
/// (2n+1 qubits of state vector).
inline constexpr std::size_t kProtocolMaxQubits = 5;

/// Evaluates OTOC(U, P1, P2) = (1/2^n) tr(U†P1U P2 U†P1U P2) for one circuit.
///
/// Construction resolves the backend and precomputes what it needs (tableau
/// or dense unitary). `automatic` picks tableau for Clifford circuits, then
/// propagation when 2^t_count fits the term budget, then dense within the
/// dense cap. Throws InfeasibleError when the requested backend cannot run.
///
/// Const member functions are safe to call concurrently.
class OtocEvaluator {
   public:
    explicit OtocEvaluator(const Circuit &c, OtocBackend backend = OtocBackend::automatic,
                           PropagationOptions prop = {});

    OtocBackend backend() const { return backend_; }
    const Circuit &circuit() const { return circuit_; }

    double operator()(const PauliString &p1, const PauliString &p2) const;

    /// OTOC of p1 against each entry of p2s, reusing the evolved p1.
    void evaluate_row(const PauliString &p1, std::span<const PauliString> p2s, std::span<double> out) const;

   private:
    Circuit circuit_;
    OtocBackend backend_;
    PropagationOptions prop_;
    std::optional<CliffordTableau> tableau_;
    std::optional<Eigen::MatrixXcd> unitary_;
};

double otoc_exact(const Circuit &c, const PauliString &p1, const PauliString &p2,
                  OtocBackend backend = OtocBackend::automatic);

/// ⟨X_C⟩ of the interferometric circuit: control in |+⟩, n Bell pairs between
/// reference and system registers, then U, c-P1, U†, c-P2 applied twice to the
/// system. Only the Pauli insertions are controlled. Throws InfeasibleError for
/// n > kProtocolMaxQubits.
double protocol_expectation(const Circuit &c, const PauliString &p1, const PauliString &p2);

struct ShotConfig {
    std::uint64_t shots = 500;
    double noise = 0.0;  // global depolarizing strength λ in [0, 1)
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument unless shots ≥ 1 and 0 ≤ noise < 1.
    void validate() const;
};

/// Mean of `shots` ±1 outcomes with P(+1) = (1 + (1-λ)·otoc)/2.
double sample_protocol_shots(double otoc, std::uint64_t shots, double noise, Rng &rng);

/// Shot-level estimate of (1-λ)·OTOC(U, P1, P2), deterministic per cfg.seed.
double protocol_shot_estimate(const Circuit &c, const PauliString &p1, const PauliString &p2, const ShotConfig &cfg);

/// ⌈ln(1/δ) / (γ² · otoc²)⌉ shots to reach relative error γ with probability
/// at least 1-δ. Throws std::domain_error when otoc is 0.
std::uint64_t otoc_shot_budget(double gamma, double delta, double otoc);

}  // namespace pinstab

#endif
