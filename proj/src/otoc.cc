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

#include "pinstab/otoc.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "pinstab/errors.h"
#include "pinstab/rng.h"

namespace pinstab {

namespace {

constexpr std::array<std::string_view, 5> kBackendNames = {"auto", "tableau", "propagation", "dense", "protocol"};

void check_sizes(const Circuit &c, const PauliString &p1, const PauliString &p2) {
    if (p1.num_qubits() != c.num_qubits() || p2.num_qubits() != c.num_qubits()) {
        throw std::invalid_argument("OTOC: Pauli sizes must match the circuit");
    }
}

OtocBackend resolve(const Circuit &c, OtocBackend requested, const PropagationOptions &prop) {
    const std::size_t n = c.num_qubits();
    const std::size_t t = c.t_count();
    const bool fits_terms = t < 63 && (std::uint64_t{1} << t) <= prop.max_terms;
    switch (requested) {
        case OtocBackend::automatic:
            if (t == 0) return OtocBackend::tableau;
            if (fits_terms) return OtocBackend::propagation;
            if (n <= kDenseMaxQubits) return OtocBackend::dense;
            throw InfeasibleError("OTOC: no feasible backend (t_count " + std::to_string(t) + ", n " +
                                  std::to_string(n) + ")");
        case OtocBackend::tableau:
            if (t != 0) throw InfeasibleError("OTOC: tableau backend requires a Clifford circuit");
            return requested;
        case OtocBackend::propagation:
            return requested;
        case OtocBackend::dense:
            if (n > kDenseMaxQubits) {
                throw InfeasibleError("OTOC: dense backend capped at " + std::to_string(kDenseMaxQubits) + " qubits");
            }
            return requested;
        case OtocBackend::protocol:
            if (n > kProtocolMaxQubits) {
                throw InfeasibleError("OTOC: protocol backend capped at " + std::to_string(kProtocolMaxQubits) +
                                      " qubits");
            }
            return requested;
    }
    throw std::logic_error("unreachable backend");
}

double commute_sign(const PauliString &a, const PauliString &b) { return commutes(a, b) ? 1.0 : -1.0; }

}  // namespace

std::string_view backend_name(OtocBackend b) { return kBackendNames[static_cast<std::size_t>(b)]; }

std::optional<OtocBackend> parse_backend(std::string_view name) {
    for (std::size_t i = 0; i < kBackendNames.size(); ++i) {
        if (name == kBackendNames[i]) return static_cast<OtocBackend>(i);
    }
    if (name == "automatic") return OtocBackend::automatic;
    return std::nullopt;
}

OtocEvaluator::OtocEvaluator(const Circuit &c, OtocBackend backend, PropagationOptions prop)
    : circuit_(c), backend_(resolve(c, backend, prop)), prop_(prop) {
    if (backend_ == OtocBackend::tableau) tableau_ = tableau_from_circuit(circuit_);
    if (backend_ == OtocBackend::dense) unitary_ = dense_unitary(circuit_);
}

double OtocEvaluator::operator()(const PauliString &p1, const PauliString &p2) const {
    double out = 0;
    evaluate_row(p1, std::span<const PauliString>(&p2, 1), std::span<double>(&out, 1));
    return out;
}

void OtocEvaluator::evaluate_row(const PauliString &p1, std::span<const PauliString> p2s,
                                 std::span<double> out) const {
    if (out.size() != p2s.size()) throw std::invalid_argument("evaluate_row: output size mismatch");
    for (const auto &p2 : p2s) check_sizes(circuit_, p1, p2);
    switch (backend_) {
        case OtocBackend::tableau: {
            // W = ±P' is a single Pauli, so W P2 W P2 = χ(P', P2)·I.
            const PauliString w = tableau_->conjugate(p1);
            for (std::size_t i = 0; i < p2s.size(); ++i) out[i] = commute_sign(w, p2s[i]);
            return;
        }
        case OtocBackend::propagation: {
            const PauliSum w = propagate(circuit_, p1, prop_);
            for (std::size_t i = 0; i < p2s.size(); ++i) out[i] = otoc_from_sum(w, p2s[i]);
            return;
        }
        case OtocBackend::dense:
            for (std::size_t i = 0; i < p2s.size(); ++i) {
                out[i] = std::clamp(otoc_dense_complex(*unitary_, p1, p2s[i]).real(), -1.0, 1.0);
            }
            return;
        case OtocBackend::protocol:
            for (std::size_t i = 0; i < p2s.size(); ++i) {
                out[i] = std::clamp(protocol_expectation(circuit_, p1, p2s[i]), -1.0, 1.0);
            }
            return;
        case OtocBackend::automatic:
            break;
    }
    throw std::logic_error("OtocEvaluator: unresolved backend");
}

double otoc_exact(const Circuit &c, const PauliString &p1, const PauliString &p2, OtocBackend backend) {
    check_sizes(c, p1, p2);
    return OtocEvaluator(c, backend)(p1, p2);
}

double protocol_expectation(const Circuit &c, const PauliString &p1, const PauliString &p2) {
    check_sizes(c, p1, p2);
    const std::size_t n = c.num_qubits();
    if (n > kProtocolMaxQubits) {
        throw InfeasibleError("protocol_expectation: n = " + std::to_string(n) + " exceeds cap of " +
                              std::to_string(kProtocolMaxQubits));
    }
    // Layout: system [0, n), reference [n, 2n), control 2n.
    const auto sys = std::uint32_t{0};
    const auto ref = static_cast<std::uint32_t>(n);
    const auto control = static_cast<std::uint32_t>(2 * n);
    StateVector sv(2 * n + 1);
    sv.apply(Gate{GateKind::H, control});
    for (std::uint32_t q = 0; q < n; ++q) {
        sv.apply(Gate{GateKind::H, ref + q});
        sv.apply(Gate{GateKind::CNOT, ref + q, sys + q});
    }
    const Circuit u_dag = c.inverse();
    for (int round = 0; round < 2; ++round) {
        sv.apply(c, sys);
        sv.apply_pauli(p1, sys, control);
        sv.apply(u_dag, sys);
        sv.apply_pauli(p2, sys, control);
    }
    return sv.expectation_x(control);
}

void ShotConfig::validate() const {
    if (shots < 1) throw std::invalid_argument("ShotConfig: shots must be >= 1");
    if (!(noise >= 0.0 && noise < 1.0)) throw std::invalid_argument("ShotConfig: noise must lie in [0, 1)");
}

double sample_protocol_shots(double otoc, std::uint64_t shots, double noise, Rng &rng) {
    if (!(std::abs(otoc) <= 1.0 + 1e-9)) {
        throw std::domain_error("sample_protocol_shots: |OTOC| exceeds 1 (" + std::to_string(otoc) + ")");
    }
    if (shots < 1) throw std::invalid_argument("sample_protocol_shots: shots must be >= 1");
    if (!(noise >= 0.0 && noise < 1.0)) throw std::invalid_argument("sample_protocol_shots: noise must lie in [0, 1)");
    const double p_plus = std::clamp((1.0 + (1.0 - noise) * otoc) / 2.0, 0.0, 1.0);
    std::uint64_t plus = 0;
    if (p_plus == 1.0) {
        plus = shots;
    } else if (p_plus > 0.0) {
        for (std::uint64_t s = 0; s < shots; ++s) plus += rng.bernoulli(p_plus);
    }
    return (2.0 * static_cast<double>(plus) - static_cast<double>(shots)) / static_cast<double>(shots);
}

double protocol_shot_estimate(const Circuit &c, const PauliString &p1, const PauliString &p2, const ShotConfig &cfg) {
    cfg.validate();
    Rng rng(cfg.seed);
    return sample_protocol_shots(otoc_exact(c, p1, p2), cfg.shots, cfg.noise, rng);
}

std::uint64_t otoc_shot_budget(double gamma, double delta, double otoc) {
    if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("otoc_shot_budget: gamma must lie in (0, 1)");
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("otoc_shot_budget: delta must lie in (0, 1)");
    if (!(std::abs(otoc) <= 1.0)) throw std::invalid_argument("otoc_shot_budget: |otoc| must be <= 1");
    if (otoc == 0.0) {
        throw std::domain_error("otoc_shot_budget: budget diverges for OTOC = 0");
    }
    const double m = std::ceil(std::log(1.0 / delta) / (gamma * gamma * otoc * otoc));
    if (m > 9.0e18) throw InfeasibleError("otoc_shot_budget: budget overflows 64-bit count");
    return static_cast<std::uint64_t>(m);
}

}  // namespace pinstab
