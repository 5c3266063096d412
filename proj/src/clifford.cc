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

#include "pinstab/clifford.h"

#include <stdexcept>

namespace pinstab {

bool conjugate_masks_by_gate(const Gate &g, std::uint64_t &x, std::uint64_t &z) {
    const std::uint64_t a = std::uint64_t{1} << g.q0;
    const bool xa = x & a;
    const bool za = z & a;
    switch (g.kind) {
        case GateKind::H:
            // X <-> Z, Y -> -Y
            if (xa != za) {
                x ^= a;
                z ^= a;
            }
            return xa && za;
        case GateKind::S:
            // S† X S = -Y, S† Y S = X
            if (xa) z ^= a;
            return xa && !za;
        case GateKind::Sdg:
            // S X S† = Y, S Y S† = -X
            if (xa) z ^= a;
            return xa && za;
        case GateKind::X:
            return za;
        case GateKind::Y:
            return xa != za;
        case GateKind::Z:
            return xa;
        case GateKind::CNOT: {
            const std::uint64_t b = std::uint64_t{1} << g.q1;
            const bool xb = x & b;
            const bool zb = z & b;
            if (xa) x ^= b;
            if (zb) z ^= a;
            return xa && zb && (xb == za);
        }
        case GateKind::T:
        case GateKind::Tdg:
            break;
    }
    return false;
}

void conjugate_by_gate(const Gate &g, PauliString &p) {
    if (!is_clifford(g.kind)) {
        throw std::invalid_argument("conjugate_by_gate: T/Tdg is not a Clifford gate");
    }
    if (g.q0 >= p.num_qubits() || (is_two_qubit(g.kind) && g.q1 >= p.num_qubits())) {
        throw std::invalid_argument("conjugate_by_gate: qubit index out of range");
    }
    std::uint64_t x = p.x_mask();
    std::uint64_t z = p.z_mask();
    bool flip = conjugate_masks_by_gate(g, x, z);
    p = PauliString(p.num_qubits(), x, z, p.negative() != flip);
}

CliffordTableau CliffordTableau::identity(std::size_t n) {
    std::vector<PauliString> xs, zs;
    xs.reserve(n);
    zs.reserve(n);
    for (std::size_t q = 0; q < n; ++q) {
        xs.emplace_back(n, std::uint64_t{1} << q, 0);
        zs.emplace_back(n, 0, std::uint64_t{1} << q);
    }
    return CliffordTableau(std::move(xs), std::move(zs));
}

CliffordTableau tableau_from_circuit(const Circuit &c) {
    if (!c.is_clifford()) {
        throw std::invalid_argument("tableau_from_circuit: circuit contains T/Tdg gates");
    }
    CliffordTableau t = CliffordTableau::identity(c.num_qubits());
    // U†PU with U = G_m···G_1 conjugates by G_m first.
    auto gates = c.gates();
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        for (auto &img : t.x_images_) conjugate_by_gate(*it, img);
        for (auto &img : t.z_images_) conjugate_by_gate(*it, img);
    }
    return t;
}

PauliString CliffordTableau::conjugate(const PauliString &p) const {
    const std::size_t n = num_qubits();
    if (p.num_qubits() != n) {
        throw std::invalid_argument("CliffordTableau::conjugate: size mismatch");
    }
    // p = sign · i^{#Y} · Π_q X_q^{x_q} Z_q^{z_q}, since Y = iXZ.
    PauliString acc(n);
    int phase = std::popcount(p.x_mask() & p.z_mask()) & 3;
    for (std::size_t q = 0; q < n; ++q) {
        if ((p.x_mask() >> q) & 1) {
            auto r = multiply(acc, x_images_[q]);
            acc = r.pauli;
            phase += r.quarter_phase;
        }
        if ((p.z_mask() >> q) & 1) {
            auto r = multiply(acc, z_images_[q]);
            acc = r.pauli;
            phase += r.quarter_phase;
        }
    }
    phase &= 3;
    if (phase & 1) {
        throw std::logic_error("CliffordTableau::conjugate: non-Hermitian image, tableau is corrupt");
    }
    bool neg = acc.negative() != p.negative();
    if (phase == 2) neg = !neg;
    return PauliString(n, acc.x_mask(), acc.z_mask(), neg);
}

bool CliffordTableau::is_symplectic() const {
    const std::size_t n = num_qubits();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (!commutes(x_images_[a], x_images_[b])) return false;
            if (!commutes(z_images_[a], z_images_[b])) return false;
            if (commutes(x_images_[a], z_images_[b]) == (a == b)) return false;
        }
    }
    return true;
}

CliffordTableau CliffordTableau::then(const CliffordTableau &next) const {
    if (next.num_qubits() != num_qubits()) {
        throw std::invalid_argument("CliffordTableau::then: size mismatch");
    }
    std::vector<PauliString> xs, zs;
    xs.reserve(num_qubits());
    zs.reserve(num_qubits());
    for (std::size_t q = 0; q < num_qubits(); ++q) {
        xs.push_back(conjugate(next.x_images_[q]));
        zs.push_back(conjugate(next.z_images_[q]));
    }
    return CliffordTableau(std::move(xs), std::move(zs));
}

PauliString conjugate_pauli(const CliffordTableau &t, const PauliString &p) { return t.conjugate(p); }

}  // namespace pinstab
