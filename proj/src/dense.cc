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

#include "pinstab/dense.h"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pinstab/errors.h"

namespace pinstab {

namespace {

using Mat2 = std::array<cplx, 4>;  // row-major

Mat2 gate_matrix(GateKind kind) {
    constexpr double r = std::numbers::sqrt2 / 2;
    const cplx i{0, 1};
    const cplx w = std::polar(1.0, std::numbers::pi / 4);
    switch (kind) {
        case GateKind::H:
            return {r, r, r, -r};
        case GateKind::S:
            return {1, 0, 0, i};
        case GateKind::Sdg:
            return {1, 0, 0, -i};
        case GateKind::T:
            return {1, 0, 0, w};
        case GateKind::Tdg:
            return {1, 0, 0, std::conj(w)};
        case GateKind::X:
            return {0, 1, 1, 0};
        case GateKind::Y:
            return {0, -i, i, 0};
        case GateKind::Z:
            return {1, 0, 0, -1};
        case GateKind::CNOT:
            break;
    }
    throw std::logic_error("gate_matrix: CNOT is not a single-qubit gate");
}

void apply_gate(std::span<cplx> amps, const Gate &g, std::size_t offset) {
    const std::size_t dim = amps.size();
    const std::size_t a = std::size_t{1} << (g.q0 + offset);
    if (g.kind == GateKind::CNOT) {
        const std::size_t b = std::size_t{1} << (g.q1 + offset);
        for (std::size_t k = 0; k < dim; ++k) {
            if ((k & a) && !(k & b)) std::swap(amps[k], amps[k | b]);
        }
        return;
    }
    const Mat2 m = gate_matrix(g.kind);
    for (std::size_t k = 0; k < dim; ++k) {
        if (k & a) continue;
        const cplx v0 = amps[k];
        const cplx v1 = amps[k | a];
        amps[k] = m[0] * v0 + m[1] * v1;
        amps[k | a] = m[2] * v0 + m[3] * v1;
    }
}

void check_register(std::size_t n, std::size_t offset, std::size_t total) {
    if (offset + n > total) throw std::invalid_argument("StateVector: register exceeds state size");
}

}  // namespace

StateVector::StateVector(std::size_t n) : n_(n) {
    if (n > kStateVectorMaxQubits) {
        throw InfeasibleError("StateVector: " + std::to_string(n) + " qubits exceeds cap of " +
                              std::to_string(kStateVectorMaxQubits));
    }
    amps_.assign(std::size_t{1} << n, cplx{0, 0});
    amps_[0] = 1;
}

void StateVector::apply(const Gate &g, std::size_t offset) {
    check_register(g.kind == GateKind::CNOT ? std::max(g.q0, g.q1) + 1 : g.q0 + 1, offset, n_);
    apply_gate(amps_, g, offset);
}

void StateVector::apply(const Circuit &c, std::size_t offset) {
    check_register(c.num_qubits(), offset, n_);
    for (const Gate &g : c.gates()) apply_gate(amps_, g, offset);
}

void StateVector::apply_pauli(const PauliString &p, std::size_t offset, std::optional<std::size_t> control) {
    check_register(p.num_qubits(), offset, n_);
    const std::size_t x = static_cast<std::size_t>(p.x_mask()) << offset;
    const std::size_t z = static_cast<std::size_t>(p.z_mask()) << offset;
    const std::size_t cmask = control ? std::size_t{1} << *control : 0;
    // P|k⟩ = sign · i^{#Y} · (-1)^{|z ∧ k|} |k ⊕ x⟩
    static constexpr std::array<cplx, 4> kIPow = {cplx{1, 0}, cplx{0, 1}, cplx{-1, 0}, cplx{0, -1}};
    const cplx base = kIPow[std::popcount(p.x_mask() & p.z_mask()) & 3] * static_cast<double>(p.sign());
    std::vector<cplx> out(amps_);
    for (std::size_t k = 0; k < amps_.size(); ++k) {
        if (cmask && !(k & cmask)) continue;
        const double parity = (std::popcount(z & k) & 1) ? -1.0 : 1.0;
        out[k ^ x] = base * parity * amps_[k];
    }
    amps_ = std::move(out);
}

double StateVector::expectation_x(std::size_t q) const {
    const std::size_t m = std::size_t{1} << q;
    double acc = 0;
    for (std::size_t k = 0; k < amps_.size(); ++k) {
        if (k & m) continue;
        acc += 2 * std::real(std::conj(amps_[k]) * amps_[k | m]);
    }
    return acc;
}

double StateVector::norm_squared() const {
    double acc = 0;
    for (const cplx &a : amps_) acc += std::norm(a);
    return acc;
}

Eigen::MatrixXcd dense_unitary(const Circuit &c) {
    const std::size_t n = c.num_qubits();
    if (n > kDenseMaxQubits) {
        throw InfeasibleError("dense_unitary: " + std::to_string(n) + " qubits exceeds dense cap of " +
                              std::to_string(kDenseMaxQubits));
    }
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        std::span<cplx> column(u.col(j).data(), static_cast<std::size_t>(dim));
        for (const Gate &g : c.gates()) apply_gate(column, g, 0);
    }
    return u;
}

Eigen::MatrixXcd pauli_matrix(const PauliString &p) {
    if (p.num_qubits() > kDenseMaxQubits) {
        throw InfeasibleError("pauli_matrix: qubit count exceeds dense cap");
    }
    const std::size_t dim = std::size_t{1} << p.num_qubits();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    static constexpr std::array<cplx, 4> kIPow = {cplx{1, 0}, cplx{0, 1}, cplx{-1, 0}, cplx{0, -1}};
    const cplx base = kIPow[std::popcount(p.x_mask() & p.z_mask()) & 3] * static_cast<double>(p.sign());
    for (std::size_t c = 0; c < dim; ++c) {
        const double parity = (std::popcount(p.z_mask() & c) & 1) ? -1.0 : 1.0;
        m(static_cast<Eigen::Index>(c ^ p.x_mask()), static_cast<Eigen::Index>(c)) = base * parity;
    }
    return m;
}

cplx otoc_dense_complex(const Eigen::MatrixXcd &u, const PauliString &p1, const PauliString &p2) {
    if (p1.num_qubits() != p2.num_qubits() || (Eigen::Index{1} << p1.num_qubits()) != u.rows()) {
        throw std::invalid_argument("otoc_dense: size mismatch");
    }
    const Eigen::MatrixXcd w = u.adjoint() * (pauli_matrix(p1) * u);
    const Eigen::MatrixXcd a = w * pauli_matrix(p2);
    return a.cwiseProduct(a.transpose()).sum() / static_cast<double>(u.rows());
}

}  // namespace pinstab
