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

#include "pinstab/pauli_string.h"

#include <stdexcept>

#include "pinstab/rng.h"

namespace pinstab {

namespace {

void check_qubits(std::size_t n) {
    if (n == 0 || n > kMaxQubits) {
        throw std::invalid_argument("PauliString: qubit count must be in [1, 64], got " +
                                    std::to_string(n));
    }
}

void check_same_size(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("Pauli size mismatch: " + std::to_string(a.num_qubits()) +
                                    " vs " + std::to_string(b.num_qubits()));
    }
}

}  // namespace

PauliString::PauliString(std::size_t n) : n_(n) { check_qubits(n); }

PauliString::PauliString(std::size_t n, std::uint64_t x_mask, std::uint64_t z_mask, bool negative)
    : n_(n), x_(x_mask), z_(z_mask), negative_(negative) {
    check_qubits(n);
    if (((x_ | z_) & ~low_mask(n)) != 0) {
        throw std::invalid_argument("PauliString: mask has bits beyond qubit count");
    }
}

PauliString PauliString::from_label(std::string_view label) {
    bool negative = false;
    if (!label.empty() && (label.front() == '+' || label.front() == '-')) {
        negative = label.front() == '-';
        label.remove_prefix(1);
    }
    if (label.empty()) {
        throw std::invalid_argument("PauliString::from_label: empty label");
    }
    if (label.size() > kMaxQubits) {
        throw std::invalid_argument("PauliString::from_label: more than 64 qubits");
    }
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (std::size_t q = 0; q < label.size(); ++q) {
        std::uint64_t bit = std::uint64_t{1} << q;
        switch (label[q]) {
            case 'I':
                break;
            case 'X':
                x |= bit;
                break;
            case 'Y':
                x |= bit;
                z |= bit;
                break;
            case 'Z':
                z |= bit;
                break;
            default:
                throw std::invalid_argument(std::string("PauliString::from_label: illegal character '") +
                                            label[q] + "'");
        }
    }
    return PauliString(label.size(), x, z, negative);
}

char PauliString::at(std::size_t q) const {
    bool x = (x_ >> q) & 1;
    bool z = (z_ >> q) & 1;
    return "IZXY"[(x << 1) | z];
}

std::string PauliString::to_label() const {
    std::string out;
    out.reserve(n_ + 1);
    if (negative_) out.push_back('-');
    for (std::size_t q = 0; q < n_; ++q) out.push_back(at(q));
    return out;
}

PauliProduct multiply(const PauliString &a, const PauliString &b) {
    check_same_size(a, b);
    const std::uint64_t ax = a.x_mask(), az = a.z_mask();
    const std::uint64_t bx = b.x_mask(), bz = b.z_mask();
    const std::uint64_t a_x = ax & ~az, a_y = ax & az, a_z = az & ~ax;
    const std::uint64_t b_x = bx & ~bz, b_y = bx & bz, b_z = bz & ~bx;
    // Per qubit: XY = iZ, YZ = iX, ZX = iY and the reversed orders give -i.
    const std::uint64_t plus = (a_x & b_y) | (a_y & b_z) | (a_z & b_x);
    const std::uint64_t minus = (a_x & b_z) | (a_y & b_x) | (a_z & b_y);
    int phase = (std::popcount(plus) - std::popcount(minus)) & 3;
    bool negative = a.negative() != b.negative();
    if (phase >= 2) {
        negative = !negative;
        phase -= 2;
    }
    return PauliProduct{PauliString(a.num_qubits(), ax ^ bx, az ^ bz, negative), phase};
}

bool commutes(const PauliString &a, const PauliString &b) {
    check_same_size(a, b);
    std::uint64_t anti = (a.x_mask() & b.z_mask()) ^ (a.z_mask() & b.x_mask());
    return (std::popcount(anti) & 1) == 0;
}

PauliString sample_uniform(std::size_t n, Rng &rng) {
    const std::uint64_t mask = low_mask(n);
    std::uint64_t x = rng.next_u64() & mask;
    std::uint64_t z = rng.next_u64() & mask;
    return PauliString(n, x, z);
}

std::vector<PauliString> all_paulis(std::size_t n) {
    if (n == 0 || n > 12) {
        throw std::invalid_argument("all_paulis: n must be in [1, 12]");
    }
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<PauliString> out;
    out.reserve(count * count);
    for (std::uint64_t x = 0; x < count; ++x) {
        for (std::uint64_t z = 0; z < count; ++z) {
            out.emplace_back(n, x, z);
        }
    }
    return out;
}

}  // namespace pinstab
