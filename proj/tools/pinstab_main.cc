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

// pinstab: command-line harness.
//
// Exit codes: 0 success, 1 usage error, 2 suite failure, 3 infeasible
// budget or size cap.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pinstab/circuit.h"
#include "pinstab/errors.h"
#include "pinstab/harness.h"
#include "pinstab/magic.h"
#include "pinstab/otoc.h"
#include "pinstab/properties.h"
#include "pinstab/rng.h"

namespace {

using namespace pinstab;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSuiteFailure = 2;
constexpr int kExitInfeasible = 3;

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct CircuitArgs {
    std::string circuit_file;
    std::string family;
    std::size_t n = 0;
    std::size_t k = 0;

    void add_to(CLI::App *cmd) {
        cmd->add_option("--circuit", circuit_file, "Circuit text file (one gate per line)");
        cmd->add_option("--family", family, "Circuit family: Uk or Vk");
        cmd->add_option("--n", n, "Qubit count");
        cmd->add_option("--k", k, "T gates (Uk) or layers (Vk)");
    }

    Circuit build() const {
        if (!circuit_file.empty()) {
            return read_circuit_file(circuit_file, n > 0 ? std::optional<std::size_t>(n) : std::nullopt);
        }
        if (family.empty() || n == 0) throw UsageError("need --circuit FILE or --family with --n and --k");
        auto f = parse_family(family);
        if (!f) throw UsageError("unknown family '" + family + "' (expected Uk or Vk)");
        return build_family(*f, n, k);
    }
};

OtocBackend backend_or_throw(const std::string &name) {
    auto b = parse_backend(name);
    if (!b) throw UsageError("unknown backend '" + name + "'");
    return *b;
}

void print_result(const InstabilityResult &r) {
    std::cout << std::setprecision(15);
    std::cout << "value=" << format_double(r.value) << '\n';
    std::cout << "mode=" << mode_name(r.mode) << '\n';
    std::cout << "mean_abs_otoc=" << format_double(r.mean_abs_otoc) << '\n';
    std::cout << "backend=" << r.backend << '\n';
    if (r.pairs) std::cout << "N=" << *r.pairs << '\n';
    if (r.shots) std::cout << "M=" << *r.shots << '\n';
    if (r.seed) std::cout << "seed=" << *r.seed << '\n';
    if (!r.rng.empty()) std::cout << "rng=" << r.rng << '\n';
    if (r.mode == InstabilityMode::estimated) std::cout << "lambda=" << format_double(r.noise) << '\n';
}

// ---- sweep ----

struct SweepArgs {
    std::string family = "Uk";
    SweepConfig cfg;
    std::string backend = "auto";
    std::string out;
    std::string svg;
};

int run_sweep_cmd(SweepArgs &args) {
    auto f = parse_family(args.family);
    if (!f) throw UsageError("unknown family '" + args.family + "'");
    args.cfg.family = *f;
    args.cfg.backend = backend_or_throw(args.backend);
    const SweepResult result = run_sweep(args.cfg);

    if (args.out.empty()) {
        write_sweep_csv(std::cout, result.rows);
        write_summary_csv(std::cerr, args.cfg, result.summary);
    } else {
        std::ofstream csv(args.out);
        if (!csv) throw std::runtime_error("cannot write " + args.out);
        write_sweep_csv(csv, result.rows);
        const std::string summary_path = args.out + ".summary.csv";
        std::ofstream summary(summary_path);
        if (!summary) throw std::runtime_error("cannot write " + summary_path);
        write_summary_csv(summary, args.cfg, result.summary);
        write_summary_csv(std::cout, args.cfg, result.summary);
    }
    if (!args.svg.empty()) {
        std::ofstream svg(args.svg);
        if (!svg) throw std::runtime_error("cannot write " + args.svg);
        write_sweep_svg(svg, args.cfg, result);
    }
    return kExitOk;
}

// ---- budget ----

struct BudgetArgs {
    std::string mode = "pauli";
    std::optional<double> eta;
    std::optional<double> gamma;
    double delta = 0.05;
    double instability = 0.0;
    std::optional<double> otoc;
    std::size_t k_max = 10;
};

int run_budget_cmd(const BudgetArgs &a) {
    std::cout << std::setprecision(12);
    if (a.mode == "otoc") {
        if (!a.gamma || !a.otoc) throw UsageError("otoc mode needs --gamma and --otoc");
        const std::uint64_t m = otoc_shot_budget(*a.gamma, a.delta, *a.otoc);
        std::cout << "M=" << m << '\n';
        return kExitOk;
    }
    if (a.mode != "pauli") throw UsageError("--mode must be pauli or otoc");
    double eta;
    if (a.eta) {
        eta = *a.eta;
    } else if (a.gamma) {
        if (!(a.instability > 0)) throw UsageError("--gamma needs a positive --instability");
        eta = *a.gamma * a.instability;
    } else {
        throw UsageError("pauli mode needs --eta or --gamma");
    }
    BudgetRequest req{.eta = eta, .delta = a.delta, .instability_guess = a.instability};
    std::cout << "N=" << pauli_sample_budget(req) << '\n';
    std::cout << "eta=" << format_double(eta) << " delta=" << format_double(a.delta)
              << " instability=" << format_double(a.instability) << '\n';
    std::cout << "growth_per_T_gate=" << format_double(16.0 / 9.0) << '\n';
    std::cout << "t_gates,instability,N_real,N,growth\n";
    for (const auto &row : pauli_budget_table(eta, a.delta, a.k_max)) {
        std::cout << row.t_gates << ',' << format_double(row.instability) << ',' << format_double(row.budget_real)
                  << ',' << row.budget << ',' << format_double(row.growth) << '\n';
    }
    return kExitOk;
}

// ---- verify ----

int run_verify_cmd(std::uint64_t seed) {
    const VerifyReport report = verify_all(seed);
    std::cout << report.to_text();
    return report.all_passed() ? kExitOk : kExitSuiteFailure;
}

// ---- protocol-check ----

struct ProtocolArgs {
    std::size_t n = 2;
    std::string circuit_file;
    std::size_t pairs = 50;
    std::uint64_t seed = 1;
    std::string p1;
    std::string p2;
};

int run_protocol_cmd(const ProtocolArgs &a) {
    if (a.n > kProtocolMaxQubits) {
        throw InfeasibleError("protocol-check: n = " + std::to_string(a.n) + " exceeds cap of " +
                              std::to_string(kProtocolMaxQubits));
    }
    const Circuit c = a.circuit_file.empty() ? Circuit(a.n) : read_circuit_file(a.circuit_file, a.n);
    if (c.num_qubits() != a.n) throw UsageError("circuit qubit count does not match --n");
    std::vector<PauliPair> pairs;
    if (!a.p1.empty() || !a.p2.empty()) {
        if (a.p1.empty() || a.p2.empty()) throw UsageError("--p1 and --p2 go together");
        pairs.push_back({PauliString::from_label(a.p1), PauliString::from_label(a.p2)});
    } else {
        Rng rng(a.seed);
        pairs = sample_pairs(a.n, a.pairs, rng);
    }
    double worst = 0;
    std::cout << std::setprecision(15);
    std::cout << "p1,p2,protocol,exact,deviation\n";
    for (const auto &pair : pairs) {
        const double proto = protocol_expectation(c, pair.first, pair.second);
        const double exact = otoc_exact(c, pair.first, pair.second);
        const double dev = std::abs(proto - exact);
        worst = std::max(worst, dev);
        std::cout << pair.first.to_label() << ',' << pair.second.to_label() << ',' << format_double(proto) << ','
                  << format_double(exact) << ',' << format_double(dev) << '\n';
    }
    std::cout << "pairs=" << pairs.size() << " max_deviation=" << format_double(worst) << '\n';
    return worst <= 1e-9 ? kExitOk : kExitSuiteFailure;
}

// ---- exact / estimate ----

struct ExactArgs {
    CircuitArgs circuit;
    std::string method = "auto";
    std::string backend = "auto";
};

int run_exact_cmd(const ExactArgs &a) {
    ExactMethod method;
    if (a.method == "auto") {
        method = ExactMethod::automatic;
    } else if (a.method == "exhaustive") {
        method = ExactMethod::exhaustive;
    } else if (a.method == "analytic") {
        method = ExactMethod::analytic;
    } else {
        throw UsageError("--method must be auto, exhaustive or analytic");
    }
    print_result(instability_exact(a.circuit.build(), method, backend_or_throw(a.backend)));
    return kExitOk;
}

struct EstimateArgs {
    CircuitArgs circuit;
    std::uint64_t pauli_samples = 500;
    std::uint64_t otoc_shots = 0;
    double noise = 0.0;
    std::uint64_t seed = 1;
    std::string backend = "auto";
    std::string pairs_out;
};

int run_estimate_cmd(const EstimateArgs &a) {
    EstimateConfig cfg{.backend = backend_or_throw(a.backend), .shots = a.otoc_shots, .noise = a.noise};
    const Circuit c = a.circuit.build();
    if (a.pauli_samples < 1) throw UsageError("--pauli-samples must be >= 1");
    if (a.pairs_out.empty()) {
        print_result(instability_estimate(c, a.pauli_samples, cfg, a.seed));
        return kExitOk;
    }
    // Same pair draw as instability_estimate, so the records match the value.
    Rng rng(a.seed);
    const auto pairs = sample_pairs(c.num_qubits(), a.pauli_samples, rng);
    cfg.validate();
    const auto records =
        pair_records(OtocEvaluator(c, cfg.backend, cfg.propagation), pairs, cfg, pair_stream_seed(a.seed));
    std::ofstream out(a.pairs_out);
    if (!out) throw std::runtime_error("cannot write " + a.pairs_out);
    out << "p1,p2,exact,estimate,M,seed\n";
    for (const auto &r : records) {
        out << r.p1.to_label() << ',' << r.p2.to_label() << ',' << format_double(r.exact) << ','
            << format_double(r.estimate) << ',' << r.shots << ',' << r.seed << '\n';
    }
    print_result(instability_from_pairs(c, pairs, cfg, a.seed));
    return kExitOk;
}

// Flags from a `key=value` file (blank lines and # comments ignored) are
// appended unless the same flag already appears on the command line.
std::vector<std::string> expand_config(std::vector<std::string> args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw UsageError("--config needs a file");
            path = args[i + 1];
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i + 2));
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
            break;
        }
    }
    if (path.empty()) return args;
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config " + path);
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::vector<std::string> extra;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw UsageError("config line without '=': " + line);
        std::string key = trim(line.substr(0, eq));
        while (!key.empty() && key.front() == '-') key.erase(0, 1);
        const std::string flag = "--" + key;
        const bool given = std::any_of(args.begin(), args.end(), [&](const std::string &a) {
            return a == flag || a.rfind(flag + "=", 0) == 0;
        });
        if (!given) {
            extra.push_back(flag);
            extra.push_back(trim(line.substr(eq + 1)));
        }
    }
    args.insert(args.end(), extra.begin(), extra.end());
    return args;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Pauli instability of Clifford+T circuits: exact values, estimates, budgets and checks"};
    app.require_subcommand(1);
    app.footer("Every subcommand accepts --config FILE with key=value lines; command-line flags take precedence.");

    SweepArgs sweep;
    auto *sweep_cmd = app.add_subcommand("sweep", "Estimate I_N over a k sweep of the Uk or Vk family");
    sweep_cmd->add_option("--family", sweep.family, "Uk or Vk")->capture_default_str();
    sweep_cmd->add_option("--n", sweep.cfg.n, "Qubit count")->capture_default_str();
    sweep_cmd->add_option("--k-min", sweep.cfg.k_min, "First k")->capture_default_str();
    sweep_cmd->add_option("--k-max", sweep.cfg.k_max, "Last k")->capture_default_str();
    sweep_cmd->add_option("--pauli-samples", sweep.cfg.pauli_samples, "Pauli pairs N")->capture_default_str();
    sweep_cmd->add_option("--otoc-shots", sweep.cfg.otoc_shots, "Shots per OTOC M (0 = exact)")->capture_default_str();
    sweep_cmd->add_option("--repeats", sweep.cfg.repeats, "Repeats per k")->capture_default_str();
    sweep_cmd->add_option("--seed", sweep.cfg.seed, "Master seed")->capture_default_str();
    sweep_cmd->add_option("--lambda", sweep.cfg.noise, "Global depolarizing strength")->capture_default_str();
    sweep_cmd->add_option("--backend", sweep.backend, "auto|tableau|propagation|dense|protocol")->capture_default_str();
    sweep_cmd->add_option("--out", sweep.out, "CSV output path (stdout when absent)");
    sweep_cmd->add_option("--svg", sweep.svg, "SVG plot output path");

    BudgetArgs budget;
    auto *budget_cmd = app.add_subcommand("budget", "Pauli-pair or OTOC-shot sample budgets");
    budget_cmd->add_option("--mode", budget.mode, "pauli or otoc")->capture_default_str();
    budget_cmd->add_option("--eta", budget.eta, "Additive error on I (pauli mode)");
    budget_cmd->add_option("--gamma", budget.gamma, "Relative error");
    budget_cmd->add_option("--delta", budget.delta, "Failure probability")->capture_default_str();
    budget_cmd->add_option("--instability", budget.instability, "Instability guess (pauli mode)")
        ->capture_default_str();
    budget_cmd->add_option("--otoc", budget.otoc, "OTOC value (otoc mode)");
    budget_cmd->add_option("--k-max", budget.k_max, "Rows in the per-T-gate table")->capture_default_str();

    std::uint64_t verify_seed = 1;
    auto *verify_cmd = app.add_subcommand("verify", "Run the monotone-property and backend-agreement suites");
    verify_cmd->add_option("--seed", verify_seed, "Seed")->capture_default_str();

    ProtocolArgs protocol;
    auto *protocol_cmd = app.add_subcommand("protocol-check", "Compare the interferometric protocol with exact OTOCs");
    protocol_cmd->add_option("--n", protocol.n, "Qubit count (<= 5)")->capture_default_str();
    protocol_cmd->add_option("--circuit", protocol.circuit_file, "Circuit text file");
    protocol_cmd->add_option("--pairs", protocol.pairs, "Random pairs")->capture_default_str();
    protocol_cmd->add_option("--seed", protocol.seed, "Seed")->capture_default_str();
    protocol_cmd->add_option("--p1", protocol.p1, "Explicit P1 label");
    protocol_cmd->add_option("--p2", protocol.p2, "Explicit P2 label");

    ExactArgs exact;
    auto *exact_cmd = app.add_subcommand("exact", "Exact Pauli instability");
    exact.circuit.add_to(exact_cmd);
    exact_cmd->add_option("--method", exact.method, "auto|exhaustive|analytic")->capture_default_str();
    exact_cmd->add_option("--backend", exact.backend, "OTOC backend")->capture_default_str();

    EstimateArgs estimate;
    auto *estimate_cmd = app.add_subcommand("estimate", "Sampled Pauli instability I_N");
    estimate.circuit.add_to(estimate_cmd);
    estimate_cmd->add_option("--pauli-samples", estimate.pauli_samples, "Pauli pairs N")->capture_default_str();
    estimate_cmd->add_option("--otoc-shots", estimate.otoc_shots, "Shots per OTOC M (0 = exact)")
        ->capture_default_str();
    estimate_cmd->add_option("--lambda", estimate.noise, "Global depolarizing strength")->capture_default_str();
    estimate_cmd->add_option("--seed", estimate.seed, "Seed")->capture_default_str();
    estimate_cmd->add_option("--backend", estimate.backend, "OTOC backend")->capture_default_str();
    estimate_cmd->add_option("--pairs-out", estimate.pairs_out, "CSV of per-pair OTOC records");

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        args = expand_config(std::move(args));
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*sweep_cmd) return run_sweep_cmd(sweep);
        if (*budget_cmd) return run_budget_cmd(budget);
        if (*verify_cmd) return run_verify_cmd(verify_seed);
        if (*protocol_cmd) return run_protocol_cmd(protocol);
        if (*exact_cmd) return run_exact_cmd(exact);
        if (*estimate_cmd) return run_estimate_cmd(estimate);
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InfeasibleError &e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const std::domain_error &e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const EstimationError &e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
