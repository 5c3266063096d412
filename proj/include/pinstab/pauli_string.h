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

#ifndef PINSTAB_PAULI_STRING_H
#define PINSTAB_PAULI_STRING_H

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pinstab {

class Rng;

/// Maximum number of qubits a PauliString can address (one 64-bit word per mask).
inline constexpr std::size_t kMaxQubits = 64;

inline constexpr std::uint64_t low_mask(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

/// Hermitian n-qubit Pauli operator `sign * P_0 ⊗ P_1 ⊗ ... ⊗ P_{n-1}`.
///
/// Qubit q is bit q of both masks. A qubit carries X when only its x bit is
/// set, Z when only its z bit is set, and Y when both are set. The sign is
/// always +1 or -1; complex phases never live here (see PauliProduct).
class PauliString {
   public:
    PauliString() = default;

    /// Identity on n qubits.
    explicit PauliString(std::size_t n);

    /// Throws std::invalid_argument if n is outside [1, 64] or a mask has bits
    /// beyond n.
    PauliString(std::size_t n, std::uint64_t x_mask, std::uint64_t z_mask, bool negative = false);

    /// Parses {I,X,Y,Z}^n with qubit 0 leftmost. An optional leading '+' or
    /// '-' sets the sign.
    static PauliString from_label(std::string_view label);

    /// Inverse of from_label. A negative sign is rendered as a leading '-'.
    std::string to_label() const;

    std::size_t num_qubits() const { return n_; }
    std::uint64_t x_mask() const { return x_; }
    std::uint64_t z_mask() const { return z_; }
    int sign() const { return negative_ ? -1 : 1; }
    bool negative() const { return negative_; }

    bool is_identity() const { return (x_ | z_) == 0; }
    std::size_t weight() const { return static_cast<std::size_t>(std::popcount(x_ | z_)); }

    /// Same masks, sign forced to +1.
    PauliString unsigned_part() const { return PauliString(n_, x_, z_, false); }
    PauliString negated() const { return PauliString(n_, x_, z_, !negative_); }

    /// Single-qubit letter at qubit q: one of 'I', 'X', 'Y', 'Z'.
    char at(std::size_t q) const;

    bool operator==(const PauliString &) const = default;

   private:
    std::size_t n_ = 0;
    std::uint64_t x_ = 0;
    std::uint64_t z_ = 0;
    bool negative_ = false;
};

/// a·b = i^quarter_phase · pauli, with quarter_phase in {0, 1}.
///
/// The i^2 part of the raw phase is folded into pauli's sign, so a result with
/// quarter_phase == 1 means the product is anti-Hermitian.
struct PauliProduct {
    PauliString pauli;
    int quarter_phase = 0;
};

PauliProduct multiply(const PauliString &a, const PauliString &b);

/// Symplectic inner product test. Throws std::invalid_argument on size mismatch.
bool commutes(const PauliString &a, const PauliString &b);

/// Uniform over the 4^n unsigned Pauli strings.
PauliString sample_uniform(std::size_t n, Rng &rng);

/// All 4^n unsigned Pauli strings in (x_mask, z_mask) lexicographic order,
/// z varying fastest. n ≤ 12.
std::vector<PauliString> all_paulis(std::size_t n);

}  // namespace pinstab

#endif
