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

#include "pinstab/properties.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "pinstab/dense.h"
#include "pinstab/magic.h"
#include "pinstab/otoc.h"
#include "pinstab/propagation.h"
#include "pinstab/rng.h"

namespace pinstab {

namespace {

const double kLn43 = std::log(4.0 / 3.0);

double exhaustive_value(const Circuit &c) { return instability_exact(c, ExactMethod::exhaustive).value; }

// True when some generator evolves into more than one Pauli term.
bool spreads_paulis(const Circuit &c) {
    const std::size_t n = c.num_qubits();
    for (std::size_t q = 0; q < n; ++q) {
        if (propagate(c, PauliString(n, std::uint64_t{1} << q, 0)).size() > 1) return true;
        if (propagate(c, PauliString(n, 0, std::uint64_t{1} << q)).size() > 1) return true;
    }
    return false;
}

Circuit single_qubit(std::initializer_list<GateKind> gates, std::string name) {
    Circuit c(1, std::move(name));
    for (GateKind g : gates) c.append(g, 0);
    return c;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

}  // namespace

void SuiteResult::record(double deviation, const std::string &what) {
    ++checks;
    if (!(deviation <= worst_deviation)) worst_deviation = deviation;
    if (!(deviation <= tolerance)) {
        if (passed) detail = what + " deviates by " + fmt(deviation);
        passed = false;
    }
}

bool VerifyReport::all_passed() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult &s) { return s.passed; });
}

std::string VerifyReport::to_text() const {
    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto &s : suites) {
        os << "suite=" << s.name << " status=" << (s.passed ? "PASS" : "FAIL") << " checks=" << s.checks
           << " max_dev=" << fmt(s.worst_deviation) << " tol=" << fmt(s.tolerance);
        if (!s.passed) {
            ++failed;
            os << " detail=\"" << s.detail << "\"";
        }
        os << '\n';
    }
    os << "summary status=" << (failed == 0 ? "PASS" : "FAIL") << " suites=" << suites.size() << " failed=" << failed
       << '\n';
    return os.str();
}

SuiteResult check_faithfulness(std::uint64_t seed, std::size_t trials) {
    SuiteResult r{.name = "faithfulness", .tolerance = 1e-12};
    Rng rng(derive_seed(seed, {1}));
    for (std::size_t i = 0; i < trials; ++i) {
        Circuit c = random_clifford_circuit(2, 20, rng);
        r.record(std::abs(exhaustive_value(c)), "Clifford circuit #" + std::to_string(i));
    }
    // Non-Clifford circuits must be strictly positive; T-containing circuits
    // that collapse to a Clifford (e.g. T·T = S) must give zero.
    for (std::size_t i = 0; i < trials; ++i) {
        Circuit c = random_clifford_t_circuit(2, 8, 1 + i % 3, rng);
        const double value = exhaustive_value(c);
        if (spreads_paulis(c)) {
            r.record(value > 1e-9 ? 0.0 : 1.0, "non-Clifford circuit #" + std::to_string(i) + " not positive");
        } else {
            r.record(std::abs(value), "effectively Clifford circuit #" + std::to_string(i));
        }
    }
    return r;
}

SuiteResult check_invariance(std::uint64_t seed, std::size_t trials) {
    SuiteResult r{.name = "invariance", .tolerance = 1e-9};
    Rng rng(derive_seed(seed, {2}));
    Circuit t_on_two(2, "T⊗I");
    t_on_two.append(GateKind::T, 0);
    for (const Circuit &u : {t_on_two, build_vk(2, 1)}) {
        const double base = exhaustive_value(u);
        for (std::size_t i = 0; i < trials; ++i) {
            // V1·U·V2: V2 acts first in time.
            Circuit dressed = random_clifford_circuit(2, 15, rng);
            dressed.extend(u);
            dressed.extend(random_clifford_circuit(2, 15, rng));
            r.record(std::abs(exhaustive_value(dressed) - base), u.name() + " dressing #" + std::to_string(i));
        }
    }
    return r;
}

SuiteResult check_additivity() {
    SuiteResult r{.name = "additivity", .tolerance = 1e-9};
    // Operator products, rightmost applied first.
    const std::vector<Circuit> singles = {
        single_qubit({GateKind::T}, "T"),
        single_qubit({GateKind::T, GateKind::H}, "HT"),
        single_qubit({GateKind::H, GateKind::T, GateKind::S}, "STH"),
    };
    for (const Circuit &a : singles) {
        for (const Circuit &b : singles) {
            const double joint = exhaustive_value(a.tensor(b));
            r.record(std::abs(joint - exhaustive_value(a) - exhaustive_value(b)), a.name() + "⊗" + b.name());
        }
    }
    // An entangling factor next to a single-qubit one.
    const Circuit v = build_vk(2, 1);
    for (const Circuit &a : singles) {
        const double joint = exhaustive_value(v.tensor(a));
        r.record(std::abs(joint - exhaustive_value(v) - exhaustive_value(a)), "V1(2)⊗" + a.name());
    }
    return r;
}

SuiteResult check_t_scaling() {
    SuiteResult r{.name = "t_scaling", .tolerance = 1e-9};
    for (std::size_t n = 1; n <= kExhaustiveMaxQubits; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            const double v = instability_exact(build_uk(n, k), ExactMethod::exhaustive).value;
            r.record(std::abs(v - static_cast<double>(k) * kLn43),
                     "U_k n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    }
    for (std::size_t k = 0; k <= 10; ++k) {
        const double v = instability_exact(build_uk(10, k), ExactMethod::analytic).value;
        r.record(std::abs(v - static_cast<double>(k) * kLn43), "analytic U_k n=10 k=" + std::to_string(k));
    }
    // Every placement of k T gates among 3 wires.
    for (std::uint32_t subset = 0; subset < 8; ++subset) {
        Circuit c(3);
        for (std::uint32_t q = 0; q < 3; ++q) {
            if (subset & (1u << q)) c.append(GateKind::T, q);
        }
        const double v = exhaustive_value(c);
        r.record(std::abs(v - std::popcount(subset) * kLn43), "T placement mask " + std::to_string(subset));
    }
    // Permuted U_2 wires on n=3.
    std::vector<std::uint32_t> perm = {0, 1, 2};
    const Circuit u2 = build_uk(3, 2);
    do {
        r.record(std::abs(exhaustive_value(u2.permuted(perm)) - 2 * kLn43), "permuted U_2");
    } while (std::next_permutation(perm.begin(), perm.end()));
    return r;
}

namespace {

void compare_tableau_to_dense(SuiteResult &r, const Circuit &c, const ConjugateFn &conj) {
    const CliffordTableau t = tableau_from_circuit(c);
    const Eigen::MatrixXcd u = dense_unitary(c);
    for (const PauliString &p : all_paulis(c.num_qubits())) {
        const PauliString image = conj ? conj(t, p) : t.conjugate(p);
        const Eigen::MatrixXcd expected = u.adjoint() * pauli_matrix(p) * u;
        const double dev = (expected - pauli_matrix(image)).cwiseAbs().maxCoeff();
        r.record(dev, "tableau image of " + p.to_label() + " is " + image.to_label());
    }
}

void compare_backends(SuiteResult &r, const Circuit &c, std::span<const PauliPair> pairs) {
    std::vector<OtocEvaluator> evals;
    evals.emplace_back(c, OtocBackend::dense);
    evals.emplace_back(c, OtocBackend::propagation);
    if (c.num_qubits() <= kProtocolMaxQubits) evals.emplace_back(c, OtocBackend::protocol);
    if (c.is_clifford()) evals.emplace_back(c, OtocBackend::tableau);
    for (const auto &pair : pairs) {
        std::vector<double> values;
        for (const auto &e : evals) values.push_back(e(pair.first, pair.second));
        const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
        r.record(*hi - *lo, "pair (" + pair.first.to_label() + ", " + pair.second.to_label() + ") n=" +
                                std::to_string(c.num_qubits()) + " t=" + std::to_string(c.t_count()));
    }
}

}  // namespace

SuiteResult check_backend_agreement(std::uint64_t seed, const VerifyOptions &opts) {
    SuiteResult r{.name = "backend_agreement", .tolerance = 1e-9};
    Rng rng(derive_seed(seed, {3}));
    for (std::size_t n = 1; n <= 3; ++n) {
        for (int i = 0; i < 4; ++i) compare_tableau_to_dense(r, random_clifford_circuit(n, 25, rng), opts.conjugate);
    }
    const auto all = all_paulis(2);
    std::vector<PauliPair> pairs;
    for (const auto &a : all) {
        for (const auto &b : all) pairs.push_back({a, b});
    }
    for (std::size_t i = 0; i < opts.agreement_circuits; ++i) {
        compare_backends(r, random_clifford_t_circuit(2, 12, i % 4, rng), pairs);
    }
    return r;
}

SuiteResult check_sampled_backend_agreement(std::uint64_t seed, const VerifyOptions &opts) {
    SuiteResult r{.name = "sampled_backend_agreement", .tolerance = 1e-9};
    Rng rng(derive_seed(seed, {4}));
    for (std::size_t n = 1; n <= 6; ++n) {
        const std::size_t t = std::min<std::size_t>(n, 6);
        const Circuit c = random_clifford_t_circuit(n, 6 * n, t, rng);
        const auto pairs = sample_pairs(n, opts.sampled_pairs, rng);
        compare_backends(r, c, pairs);
    }
    return r;
}

VerifyReport verify_monotone_properties(std::uint64_t seed, const VerifyOptions &opts) {
    VerifyReport report;
    report.suites.push_back(check_faithfulness(seed, opts.faithfulness_trials));
    report.suites.push_back(check_invariance(seed, opts.invariance_trials));
    report.suites.push_back(check_additivity());
    report.suites.push_back(check_t_scaling());
    return report;
}

VerifyReport verify_all(std::uint64_t seed, const VerifyOptions &opts) {
    VerifyReport report = verify_monotone_properties(seed, opts);
    report.suites.push_back(check_backend_agreement(seed, opts));
    report.suites.push_back(check_sampled_backend_agreement(seed, opts));
    return report;
}

}  // namespace pinstab
