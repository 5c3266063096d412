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

#ifndef PINSTAB_CIRCUIT_H
#define PINSTAB_CIRCUIT_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pinstab {

class Rng;

enum class GateKind : std::uint8_t { H, S, Sdg, CNOT, T, Tdg, X, Y, Z };

std::string_view gate_name(GateKind kind);
std::optional<GateKind> parse_gate_name(std::string_view name);

inline bool is_clifford(GateKind kind) { return kind != GateKind::T && kind != GateKind::Tdg; }
inline bool is_two_qubit(GateKind kind) { return kind == GateKind::CNOT; }

/// Kind whose matrix is the adjoint of `kind`'s.
GateKind inverse_kind(GateKind kind);

struct Gate {
    GateKind kind;
    std::uint32_t q0;      // target, or control for CNOT
    std::uint32_t q1 = 0;  // CNOT target

    bool operator==(const Gate &) const = default;
};

/// Ordered gate list on n qubits. Gates apply left to right in time, so the
/// unitary is U = G_m ··· G_2 G_1.
class Circuit {
   public:
    explicit Circuit(std::size_t n, std::string name = {});

    /// Throws std::invalid_argument for out-of-range or repeated qubits.
    Circuit &append(GateKind kind, std::uint32_t q0, std::uint32_t q1 = 0);
    Circuit &append(const Gate &g) { return append(g.kind, g.q0, g.q1); }
    Circuit &extend(const Circuit &other);

    std::size_t num_qubits() const { return n_; }
    std::span<const Gate> gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }
    const std::string &name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    std::size_t t_count() const;
    bool is_clifford() const { return t_count() == 0; }

    /// Circuit implementing U†.
    Circuit inverse() const;

    /// Relabels qubit q to perm[q].
    Circuit permuted(std::span<const std::uint32_t> perm) const;

    /// Places this circuit on qubits [0, n) and `other` on [n, n + other.n).
    Circuit tensor(const Circuit &other) const;

    /// Text form: a `qubits N` header followed by one gate per line, e.g.
    /// `T 0` or `CNOT 0 1`.
    std::string to_text() const;

    /// Parses the text form. Blank lines and `#` comments are ignored. When
    /// the `qubits` header is absent, `default_qubits` is used, or else the
    /// largest referenced index plus one.
    static Circuit from_text(std::string_view text, std::optional<std::size_t> default_qubits = {});

    bool operator==(const Circuit &other) const { return n_ == other.n_ && gates_ == other.gates_; }

   private:
    std::size_t n_;
    std::vector<Gate> gates_;
    std::string name_;
};

Circuit read_circuit_file(const std::string &path, std::optional<std::size_t> default_qubits = {});

/// T on qubits 0..k-1 and nothing else.
Circuit build_uk(std::size_t n, std::size_t k);

/// k layers; layer i is H on every qubit, CNOT on (0,1),(2,3),..., CNOT on
/// (1,2),(3,4),..., S on every qubit, then T on qubit i-1.
Circuit build_vk(std::size_t n, std::size_t k);

/// Uniformly drawn gates from {H, S, Sdg, CNOT, X, Y, Z}; CNOT only when n ≥ 2.
Circuit random_clifford_circuit(std::size_t n, std::size_t num_gates, Rng &rng);

/// Random Clifford circuit with exactly `t_count` T/Tdg gates inserted at
/// random positions and qubits.
Circuit random_clifford_t_circuit(std::size_t n, std::size_t num_clifford, std::size_t t_count, Rng &rng);

}  // namespace pinstab

#endif
