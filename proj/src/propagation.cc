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

#include "pinstab/propagation.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "pinstab/clifford.h"
#include "pinstab/errors.h"

namespace pinstab {

namespace {

struct KeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t> &k) const {
        return std::hash<std::uint64_t>{}(k.first * 0x9E3779B97F4A7C15ULL ^ (k.second + 0x7F4A7C159E3779B9ULL));
    }
};

bool key_less(const PauliSum::Term &a, const PauliSum::Term &b) {
    return a.x != b.x ? a.x < b.x : a.z < b.z;
}

std::uint64_t term_bound(std::size_t t_count) {
    return t_count >= 63 ? std::uint64_t{1} << 63 : std::uint64_t{1} << t_count;
}

}  // namespace

PauliSum::PauliSum(const PauliString &p)
    : n_(p.num_qubits()), terms_{Term{p.x_mask(), p.z_mask(), static_cast<double>(p.sign())}} {}

double PauliSum::coefficient(const PauliString &p) const {
    Term probe{p.x_mask(), p.z_mask(), 0};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), probe, key_less);
    if (it != terms_.end() && it->x == probe.x && it->z == probe.z) return it->coefficient;
    return 0;
}

double PauliSum::norm_squared() const {
    double acc = 0;
    for (const Term &t : terms_) acc += t.coefficient * t.coefficient;
    return acc;
}

std::string PauliSum::to_text() const {
    std::string out;
    char buf[32];
    for (const Term &t : terms_) {
        out += PauliString(n_, t.x, t.z).to_label();
        out += ": ";
        auto res = std::to_chars(buf, buf + sizeof buf, t.coefficient);
        out.append(buf, res.ptr);
        out += '\n';
    }
    return out;
}

class Propagator {
   public:
    Propagator(const Circuit &c, const PropagationOptions &opts) : circuit_(c), opts_(opts) {}

    PauliSum run(const PauliString &p) {
        if (p.num_qubits() != circuit_.num_qubits()) {
            throw std::invalid_argument("propagate: Pauli size does not match circuit");
        }
        std::vector<PauliSum::Term> terms{{p.x_mask(), p.z_mask(), static_cast<double>(p.sign())}};
        auto gates = circuit_.gates();
        for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
            if (is_clifford(it->kind)) {
                for (auto &t : terms) {
                    if (conjugate_masks_by_gate(*it, t.x, t.z)) t.coefficient = -t.coefficient;
                }
            } else {
                terms = split_on_t(terms, *it);
            }
        }
        std::sort(terms.begin(), terms.end(), key_less);
        return PauliSum(circuit_.num_qubits(), std::move(terms));
    }

   private:
    // T† X T = (X - Y)/√2, T† Y T = (X + Y)/√2
    // T X T† = (X + Y)/√2, T Y T† = (Y - X)/√2
    std::vector<PauliSum::Term> split_on_t(const std::vector<PauliSum::Term> &terms, const Gate &g) {
        constexpr double r = std::numbers::sqrt2 / 2;
        const std::uint64_t bit = std::uint64_t{1} << g.q0;
        const bool dagger = g.kind == GateKind::Tdg;
        std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, double, KeyHash> merged;
        merged.reserve(terms.size() * 2);
        std::vector<std::pair<std::uint64_t, std::uint64_t>> order;
        order.reserve(terms.size() * 2);
        auto add = [&](std::uint64_t x, std::uint64_t z, double c) {
            auto [pos, inserted] = merged.try_emplace({x, z}, 0.0);
            if (inserted) order.push_back({x, z});
            pos->second += c;
        };
        for (const auto &t : terms) {
            if (!(t.x & bit)) {
                add(t.x, t.z, t.coefficient);
                continue;
            }
            const bool is_y = t.z & bit;
            const double c = t.coefficient * r;
            double to_x, to_y;
            if (!dagger) {
                to_x = c;
                to_y = is_y ? c : -c;
            } else {
                to_x = is_y ? -c : c;
                to_y = c;
            }
            add(t.x, t.z & ~bit, to_x);
            add(t.x, t.z | bit, to_y);
        }
        std::vector<PauliSum::Term> out;
        out.reserve(order.size());
        for (const auto &k : order) {
            double c = merged[k];
            if (std::abs(c) >= opts_.drop_tolerance) out.push_back({k.first, k.second, c});
        }
        if (out.size() > opts_.max_terms) {
            throw BudgetExceededError("propagate: " + std::to_string(out.size()) + " live terms exceed budget of " +
                                          std::to_string(opts_.max_terms) + " (bound 2^t_count = " +
                                          std::to_string(term_bound(circuit_.t_count())) + ")",
                                      term_bound(circuit_.t_count()));
        }
        return out;
    }

    const Circuit &circuit_;
    PropagationOptions opts_;
};

PauliSum propagate(const Circuit &c, const PauliString &p, const PropagationOptions &opts) {
    return Propagator(c, opts).run(p);
}

double otoc_from_sum(const PauliSum &w, const PauliString &p2) {
    if (w.num_qubits() != p2.num_qubits()) {
        throw std::invalid_argument("otoc_from_sum: size mismatch");
    }
    const std::uint64_t px = p2.x_mask();
    const std::uint64_t pz = p2.z_mask();
    double acc = 0;
    for (const auto &t : w.terms()) {
        const bool anti = std::popcount((t.x & pz) ^ (t.z & px)) & 1;
        const double sq = t.coefficient * t.coefficient;
        acc += anti ? -sq : sq;
    }
    return std::clamp(acc, -1.0, 1.0);
}

}  // namespace pinstab
