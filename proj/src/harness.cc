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

#include "pinstab/harness.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>

#include "pinstab/errors.h"
#include "pinstab/magic.h"
#include "pinstab/rng.h"

namespace pinstab {

std::string_view family_name(Family f) { return f == Family::Uk ? "Uk" : "Vk"; }

std::optional<Family> parse_family(std::string_view name) {
    if (name == "Uk" || name == "uk" || name == "U") return Family::Uk;
    if (name == "Vk" || name == "vk" || name == "V") return Family::Vk;
    return std::nullopt;
}

Circuit build_family(Family f, std::size_t n, std::size_t k) {
    return f == Family::Uk ? build_uk(n, k) : build_vk(n, k);
}

void SweepConfig::validate() const {
    if (n < 1 || n > kMaxQubits) throw std::invalid_argument("sweep: n must lie in [1, 64]");
    if (k_min > k_max) throw std::invalid_argument("sweep: k-min exceeds k-max");
    if (k_max > n) throw std::invalid_argument("sweep: k-max exceeds n");
    if (family == Family::Vk && k_min < 1) throw std::invalid_argument("sweep: Vk needs k >= 1");
    if (repeats < 1) throw std::invalid_argument("sweep: repeats must be >= 1");
    if (pauli_samples < 1) throw std::invalid_argument("sweep: pauli-samples must be >= 1");
    if (!(noise >= 0.0 && noise < 1.0)) throw std::invalid_argument("sweep: lambda must lie in [0, 1)");
}

std::uint64_t cell_seed(std::uint64_t master, Family f, std::size_t k, std::size_t rep) {
    return derive_seed(master, {static_cast<std::uint64_t>(f) + 1, k, rep});
}

namespace {

std::optional<double> exact_if_available(const Circuit &c) {
    try {
        return instability_exact(c).value;
    } catch (const InfeasibleError &) {
        return std::nullopt;
    }
}

}  // namespace

SweepResult run_sweep(const SweepConfig &cfg) {
    cfg.validate();
    EstimateConfig est{.backend = cfg.backend, .shots = cfg.otoc_shots, .noise = cfg.noise};
    SweepResult result;
    for (std::size_t k = cfg.k_min; k <= cfg.k_max; ++k) {
        const Circuit c = build_family(cfg.family, cfg.n, k);
        const std::optional<double> exact = exact_if_available(c);
        for (std::size_t rep = 0; rep < cfg.repeats; ++rep) {
            const std::uint64_t seed = cell_seed(cfg.seed, cfg.family, k, rep);
            const auto start = std::chrono::steady_clock::now();
            double estimate;
            try {
                estimate = instability_estimate(c, cfg.pauli_samples, est, seed).value;
            } catch (const EstimationError &) {
                estimate = std::numeric_limits<double>::infinity();
            }
            const double ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            result.rows.push_back(SweepRow{cfg.family, cfg.n, k, rep, estimate, exact, cfg.pauli_samples,
                                           cfg.otoc_shots, cfg.noise, seed, ms});
        }
    }
    result.summary = summarize(result.rows);
    return result;
}

std::vector<SweepSummary> summarize(std::span<const SweepRow> rows) {
    std::map<std::size_t, std::vector<const SweepRow *>> by_k;
    for (const auto &r : rows) by_k[r.k].push_back(&r);
    std::vector<SweepSummary> out;
    for (const auto &[k, group] : by_k) {
        double sum = 0;
        for (const auto *r : group) sum += r->estimate;
        const auto count = static_cast<double>(group.size());
        const double mean = sum / count;
        double sq = 0;
        for (const auto *r : group) sq += (r->estimate - mean) * (r->estimate - mean);
        const double sd = group.size() > 1 ? std::sqrt(sq / (count - 1)) : 0.0;
        out.push_back(SweepSummary{k, group.size(), mean, sd, sd / std::sqrt(count), group.front()->exact});
    }
    return out;
}

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace {

std::string format_ms(double ms) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, ms, std::chars_format::fixed, 3);
    return std::string(buf, res.ptr);
}

}  // namespace

void write_sweep_csv(std::ostream &os, std::span<const SweepRow> rows) {
    os << kSweepCsvHeader << '\n';
    for (const auto &r : rows) {
        os << family_name(r.family) << ',' << r.n << ',' << r.k << ',' << r.rep << ',' << format_double(r.estimate)
           << ',' << (r.exact ? format_double(*r.exact) : "") << ',' << r.pauli_samples << ',' << r.otoc_shots << ','
           << format_double(r.noise) << ',' << r.seed << ',' << format_ms(r.ms) << '\n';
    }
}

void write_summary_csv(std::ostream &os, const SweepConfig &cfg, std::span<const SweepSummary> summary) {
    os << "family,n,k,repeats,mean,stddev,stderr,exact,label\n";
    const std::string_view label = cfg.noise > 0 ? "simulated-noise" : "noiseless";
    for (const auto &s : summary) {
        os << family_name(cfg.family) << ',' << cfg.n << ',' << s.k << ',' << s.count << ',' << format_double(s.mean)
           << ',' << format_double(s.stddev) << ',' << format_double(s.std_error) << ','
           << (s.exact ? format_double(*s.exact) : "") << ',' << label << '\n';
    }
}

void write_sweep_svg(std::ostream &os, const SweepConfig &cfg, const SweepResult &result) {
    constexpr double W = 640, H = 420, L = 60, R = 20, T = 40, B = 50;
    double y_max = 0.1;
    for (const auto &r : result.rows) {
        if (std::isfinite(r.estimate)) y_max = std::max(y_max, r.estimate);
        if (r.exact) y_max = std::max(y_max, *r.exact);
    }
    y_max *= 1.1;
    const double k_lo = static_cast<double>(cfg.k_min);
    const double k_hi = std::max(static_cast<double>(cfg.k_max), k_lo + 1);
    auto px = [&](double k) { return L + (k - k_lo) / (k_hi - k_lo) * (W - L - R); };
    auto py = [&](double v) { return H - B - v / y_max * (H - T - B); };
    auto num = [](double v) {
        char buf[32];
        auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
        return std::string(buf, res.ptr);
    };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << W / 2 << "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
       << family_name(cfg.family) << ", n=" << cfg.n << ", N=" << cfg.pauli_samples << ", M=" << cfg.otoc_shots
       << ", lambda=" << format_double(cfg.noise) << (cfg.noise > 0 ? " (simulated-noise)" : "") << "</text>\n";
    os << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
    for (std::size_t k = cfg.k_min; k <= cfg.k_max; ++k) {
        const double x = px(static_cast<double>(k));
        os << "<text x=\"" << num(x) << "\" y=\"" << H - B + 18 << "\" text-anchor=\"middle\" font-size=\"11\">" << k
           << "</text>\n";
    }
    for (int i = 0; i <= 4; ++i) {
        const double v = y_max * i / 4;
        os << "<text x=\"" << L - 6 << "\" y=\"" << num(py(v) + 4) << "\" text-anchor=\"end\" font-size=\"11\">"
           << num(v) << "</text>\n";
    }
    os << "<text x=\"" << W / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\" font-size=\"12\">k</text>\n";

    std::string exact_pts, mean_pts;
    for (const auto &s : result.summary) {
        const double x = px(static_cast<double>(s.k));
        if (s.exact) exact_pts += num(x) + "," + num(py(*s.exact)) + " ";
        if (std::isfinite(s.mean)) mean_pts += num(x) + "," + num(py(s.mean)) + " ";
    }
    if (!exact_pts.empty()) {
        os << "<polyline fill=\"none\" stroke=\"black\" stroke-dasharray=\"4 3\" points=\"" << exact_pts << "\"/>\n";
    }
    os << "<polyline fill=\"none\" stroke=\"steelblue\" points=\"" << mean_pts << "\"/>\n";
    for (const auto &r : result.rows) {
        if (!std::isfinite(r.estimate)) continue;
        os << "<circle cx=\"" << num(px(static_cast<double>(r.k))) << "\" cy=\"" << num(py(r.estimate))
           << "\" r=\"2.5\" fill=\"steelblue\" fill-opacity=\"0.5\"/>\n";
    }
    os << "</svg>\n";
}

std::vector<BudgetRow> pauli_budget_table(double eta, double delta, std::size_t k_max) {
    std::vector<BudgetRow> out;
    const double ln43 = std::log(4.0 / 3.0);
    for (std::size_t k = 0; k <= k_max; ++k) {
        BudgetRequest req{.eta = eta, .delta = delta, .instability_guess = static_cast<double>(k) * ln43};
        const double real = pauli_sample_budget_real(req);
        const double growth = out.empty() ? 1.0 : real / out.back().budget_real;
        out.push_back(BudgetRow{k, req.instability_guess, real, pauli_sample_budget(req), growth});
    }
    return out;
}

}  // namespace pinstab
