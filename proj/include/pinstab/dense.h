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

#ifndef PINSTAB_DENSE_H
#define PINSTAB_DENSE_H

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "pinstab/circuit.h"
#include "pinstab/pauli_string.h"

namespace pinstab {

using cplx = std::complex<double>;

/// Largest n for which a 2^n x 2^n unitary is built (≈256 MiB at n = 12).
inline constexpr std::size_t kDenseMaxQubits = 12;
/// Largest register a state vector may span.
inline constexpr std::size_t kStateVectorMaxQubits = 14;

/// Amplitudes over n qubits; basis index bit q is qubit q.
class StateVector {
   public:
    /// |0…0⟩. Throws InfeasibleError above kStateVectorMaxQubits.
    explicit StateVector(std::size_t n);

    std::size_t num_qubits() const { return n_; }
    std::span<cplx> amplitudes() { return amps_; }
    std::span<const cplx> amplitudes() const { return amps_; }

    /// Applies g to the qubits `offset + g.q0` (and `offset + g.q1`).
    void apply(const Gate &g, std::size_t offset = 0);
    void apply(const Circuit &c, std::size_t offset = 0);

    /// Applies p on qubits [offset, offset + p.n), restricted to basis states
    /// whose `control` bit is set when control is given.
    void apply_pauli(const PauliString &p, std::size_t offset = 0, std::optional<std::size_t> control = {});

    /// ⟨ψ|X_q|ψ⟩.
    double expectation_x(std::size_t q) const;

    double norm_squared() const;

   private:
    std::size_t n_;
    std::vector<cplx> amps_;
};

/// Product of gate matrices in application order. Throws InfeasibleError when
/// n exceeds kDenseMaxQubits.
Eigen::MatrixXcd dense_unitary(const Circuit &c);

/// 2^n x 2^n matrix of p (including its sign).
Eigen::MatrixXcd pauli_matrix(const PauliString &p);

/// (1/2^n) tr(W P2 W P2) for W = U† P1 U, returned as a complex number so the
/// imaginary part can be checked.
cplx otoc_dense_complex(const Eigen::MatrixXcd &u, const PauliString &p1, const PauliString &p2);

}  // namespace pinstab

#endif
