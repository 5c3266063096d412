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

#ifndef PINSTAB_CLIFFORD_H
#define PINSTAB_CLIFFORD_H

#include <vector>

#include "pinstab/circuit.h"
#include "pinstab/pauli_string.h"

namespace pinstab {

/// p ← G† p G for a single Clifford gate. Throws std::invalid_argument for T/Tdg.
void conjugate_by_gate(const Gate &g, PauliString &p);

/// Mask-level form of conjugate_by_gate; returns true when the sign flips.
/// No validation: g must be Clifford and in range.
bool conjugate_masks_by_gate(const Gate &g, std::uint64_t &x, std::uint64_t &z);

/// Images of the generators X_q and Z_q under P ↦ U† P U.
class CliffordTableau {
   public:
    static CliffordTableau identity(std::size_t n);

    std::size_t num_qubits() const { return x_images_.size(); }
    const PauliString &x_image(std::size_t q) const { return x_images_[q]; }
    const PauliString &z_image(std::size_t q) const { return z_images_[q]; }

    /// Returns ±P' = U† p U, assembled from generator images.
    PauliString conjugate(const PauliString &p) const;

    /// Images obey the generator commutation relations.
    bool is_symplectic() const;

    /// Tableau of this circuit followed by `next`, i.e. of the unitary V·U
    /// where this = U and next = V.
    CliffordTableau then(const CliffordTableau &next) const;

    bool operator==(const CliffordTableau &) const = default;

   private:
    CliffordTableau(std::vector<PauliString> xs, std::vector<PauliString> zs)
        : x_images_(std::move(xs)), z_images_(std::move(zs)) {}
    friend CliffordTableau tableau_from_circuit(const Circuit &c);
    std::vector<PauliString> x_images_;
    std::vector<PauliString> z_images_;
};

/// Throws std::invalid_argument when c contains T or Tdg.
CliffordTableau tableau_from_circuit(const Circuit &c);

/// Free-function form of CliffordTableau::conjugate; throws on size mismatch.
PauliString conjugate_pauli(const CliffordTableau &t, const PauliString &p);

}  // namespace pinstab

#endif
