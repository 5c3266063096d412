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

#include "pinstab/circuit.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pinstab/pauli_string.h"
#include "pinstab/rng.h"

namespace pinstab {

namespace {

constexpr std::array<std::string_view, 9> kNames = {"H", "S", "Sdg", "CNOT", "T", "Tdg", "X", "Y", "Z"};

bool iequals(std::string_view a, std::string_view b) {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
           });
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::uint64_t parse_index(std::string_view tok, std::size_t line_no) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw std::invalid_argument("circuit text line " + std::to_string(line_no) + ": bad integer '" +
                                    std::string(tok) + "'");
    }
    return v;
}

}  // namespace

std::string_view gate_name(GateKind kind) { return kNames[static_cast<std::size_t>(kind)]; }

std::optional<GateKind> parse_gate_name(std::string_view name) {
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (iequals(name, kNames[i])) return static_cast<GateKind>(i);
    }
    if (iequals(name, "CX")) return GateKind::CNOT;
    return std::nullopt;
}

GateKind inverse_kind(GateKind kind) {
    switch (kind) {
        case GateKind::S:
            return GateKind::Sdg;
        case GateKind::Sdg:
            return GateKind::S;
        case GateKind::T:
            return GateKind::Tdg;
        case GateKind::Tdg:
            return GateKind::T;
        default:
            return kind;
    }
}

Circuit::Circuit(std::size_t n, std::string name) : n_(n), name_(std::move(name)) {
    if (n == 0 || n > kMaxQubits) {
        throw std::invalid_argument("Circuit: qubit count must be in [1, 64]");
    }
}

Circuit &Circuit::append(GateKind kind, std::uint32_t q0, std::uint32_t q1) {
    if (q0 >= n_ || (is_two_qubit(kind) && q1 >= n_)) {
        throw std::invalid_argument("Circuit::append: qubit index out of range for " + std::string(gate_name(kind)));
    }
    if (is_two_qubit(kind) && q0 == q1) {
        throw std::invalid_argument("Circuit::append: CNOT control equals target");
    }
    gates_.push_back(Gate{kind, q0, is_two_qubit(kind) ? q1 : 0});
    return *this;
}

Circuit &Circuit::extend(const Circuit &other) {
    if (other.n_ != n_) throw std::invalid_argument("Circuit::extend: qubit count mismatch");
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

std::size_t Circuit::t_count() const {
    return static_cast<std::size_t>(std::count_if(gates_.begin(), gates_.end(), [](const Gate &g) {
        return !pinstab::is_clifford(g.kind);
    }));
}

Circuit Circuit::inverse() const {
    Circuit out(n_, name_.empty() ? std::string{} : name_ + "_dag");
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        out.gates_.push_back(Gate{inverse_kind(it->kind), it->q0, it->q1});
    }
    return out;
}

Circuit Circuit::permuted(std::span<const std::uint32_t> perm) const {
    if (perm.size() != n_) throw std::invalid_argument("Circuit::permuted: permutation size mismatch");
    std::uint64_t seen = 0;
    for (std::uint32_t q : perm) {
        if (q >= n_ || (seen >> q & 1)) throw std::invalid_argument("Circuit::permuted: not a permutation");
        seen |= std::uint64_t{1} << q;
    }
    Circuit out(n_, name_);
    for (const Gate &g : gates_) {
        out.append(g.kind, perm[g.q0], is_two_qubit(g.kind) ? perm[g.q1] : 0);
    }
    return out;
}

Circuit Circuit::tensor(const Circuit &other) const {
    Circuit out(n_ + other.n_);
    out.gates_ = gates_;
    auto shift = static_cast<std::uint32_t>(n_);
    for (const Gate &g : other.gates_) {
        out.append(g.kind, g.q0 + shift, is_two_qubit(g.kind) ? g.q1 + shift : 0);
    }
    return out;
}

std::string Circuit::to_text() const {
    std::ostringstream os;
    if (!name_.empty()) os << "# " << name_ << "\n";
    os << "qubits " << n_ << "\n";
    for (const Gate &g : gates_) {
        os << gate_name(g.kind) << ' ' << g.q0;
        if (is_two_qubit(g.kind)) os << ' ' << g.q1;
        os << '\n';
    }
    return os.str();
}

Circuit Circuit::from_text(std::string_view text, std::optional<std::size_t> default_qubits) {
    std::optional<std::size_t> declared;
    std::vector<Gate> gates;
    std::uint64_t max_index = 0;
    std::size_t line_no = 0;
    while (!text.empty()) {
        std::size_t eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tok = split_ws(line);
        if (tok.empty()) continue;
        if (iequals(tok[0], "qubits")) {
            if (tok.size() != 2) throw std::invalid_argument("circuit text line " + std::to_string(line_no) + ": expected `qubits N`");
            declared = parse_index(tok[1], line_no);
            continue;
        }
        auto kind = parse_gate_name(tok[0]);
        if (!kind) {
            throw std::invalid_argument("circuit text line " + std::to_string(line_no) + ": unknown gate '" +
                                        std::string(tok[0]) + "'");
        }
        std::size_t arity = is_two_qubit(*kind) ? 2 : 1;
        if (tok.size() != arity + 1) {
            throw std::invalid_argument("circuit text line " + std::to_string(line_no) + ": " +
                                        std::string(gate_name(*kind)) + " takes " + std::to_string(arity) +
                                        " qubit index(es)");
        }
        std::uint64_t a = parse_index(tok[1], line_no);
        std::uint64_t b = arity == 2 ? parse_index(tok[2], line_no) : 0;
        if (a >= kMaxQubits || b >= kMaxQubits) {
            throw std::invalid_argument("circuit text line " + std::to_string(line_no) + ": qubit index too large");
        }
        max_index = std::max({max_index, a, b});
        gates.push_back(Gate{*kind, static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
    }
    std::size_t n = declared ? *declared : default_qubits ? *default_qubits : static_cast<std::size_t>(max_index + 1);
    Circuit c(n);
    for (const Gate &g : gates) c.append(g);
    return c;
}

Circuit read_circuit_file(const std::string &path, std::optional<std::size_t> default_qubits) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open circuit file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    Circuit c = Circuit::from_text(ss.str(), default_qubits);
    c.set_name(path);
    return c;
}

Circuit build_uk(std::size_t n, std::size_t k) {
    if (k > n) throw std::invalid_argument("build_uk: k must not exceed n");
    Circuit c(n, "Uk");
    for (std::uint32_t q = 0; q < k; ++q) c.append(GateKind::T, q);
    return c;
}

Circuit build_vk(std::size_t n, std::size_t k) {
    if (k < 1 || k > n) throw std::invalid_argument("build_vk: need 1 <= k <= n");
    Circuit c(n, "Vk");
    const auto nq = static_cast<std::uint32_t>(n);
    for (std::uint32_t layer = 0; layer < k; ++layer) {
        for (std::uint32_t q = 0; q < nq; ++q) c.append(GateKind::H, q);
        for (std::uint32_t q = 0; q + 1 < nq; q += 2) c.append(GateKind::CNOT, q, q + 1);
        for (std::uint32_t q = 1; q + 1 < nq; q += 2) c.append(GateKind::CNOT, q, q + 1);
        for (std::uint32_t q = 0; q < nq; ++q) c.append(GateKind::S, q);
        c.append(GateKind::T, layer);
    }
    return c;
}

namespace {

Gate random_clifford_gate(std::size_t n, Rng &rng) {
    static constexpr std::array<GateKind, 7> kinds = {GateKind::H, GateKind::S, GateKind::Sdg, GateKind::CNOT,
                                                      GateKind::X, GateKind::Y, GateKind::Z};
    GateKind kind;
    do {
        kind = kinds[rng.next_u64() % kinds.size()];
    } while (kind == GateKind::CNOT && n < 2);
    auto q0 = static_cast<std::uint32_t>(rng.next_u64() % n);
    std::uint32_t q1 = 0;
    if (kind == GateKind::CNOT) {
        q1 = static_cast<std::uint32_t>((q0 + 1 + rng.next_u64() % (n - 1)) % n);
    }
    return Gate{kind, q0, q1};
}

}  // namespace

Circuit random_clifford_circuit(std::size_t n, std::size_t num_gates, Rng &rng) {
    Circuit c(n, "random_clifford");
    for (std::size_t i = 0; i < num_gates; ++i) c.append(random_clifford_gate(n, rng));
    return c;
}

Circuit random_clifford_t_circuit(std::size_t n, std::size_t num_clifford, std::size_t t_count, Rng &rng) {
    std::vector<Gate> gates;
    gates.reserve(num_clifford + t_count);
    for (std::size_t i = 0; i < num_clifford; ++i) gates.push_back(random_clifford_gate(n, rng));
    for (std::size_t i = 0; i < t_count; ++i) {
        GateKind kind = (rng.next_u64() & 1) ? GateKind::T : GateKind::Tdg;
        auto q = static_cast<std::uint32_t>(rng.next_u64() % n);
        auto pos = static_cast<std::ptrdiff_t>(rng.next_u64() % (gates.size() + 1));
        gates.insert(gates.begin() + pos, Gate{kind, q, 0});
    }
    Circuit c(n, "random_clifford_t");
    for (const Gate &g : gates) c.append(g);
    return c;
}

}  // namespace pinstab
