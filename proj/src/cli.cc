// Copyright 2026 The rqc Authors
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

#include "rqc/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rqc/encoding.h"
#include "rqc/library.h"
#include "rqc/simulator.h"
#include "rqc/synth.h"
#include "rqc/text_io.h"
#include "rqc/transpiler.h"
#include "rqc/verify.h"

namespace rqc::cli {

namespace {

struct Config {
    std::string level = "g";
    double phi = default_phi();
    double eps = 1e-3;
    std::uint64_t k_max = 1'000'000;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::uint64_t init = 0;
    std::string out;
    double theta = 0;
    std::string input;

    SynthConfig synth() const { return {phi, eps, k_max}; }
};

// Thrown for unreadable input so it maps onto the parse-error exit code.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string &path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Circuit load(const Config &cfg) {
    return parse_circuit(read_input(cfg.input));
}

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string g15(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

std::string bits(std::size_t index, std::size_t n) {
    std::string s(n, '0');
    for (std::size_t q = 0; q < n; q++) {
        if ((index >> q) & 1) {
            s[n - 1 - q] = '1';
        }
    }
    return s;
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    f << text;
}

int cmd_transpile(const Config &cfg, std::ostream &out) {
    auto level = level_from_name(cfg.level);
    if (!level) {
        throw CLI::ValidationError("--level", "expected real, f or g");
    }
    Circuit c = load(cfg);
    TranspileResult tr = transpile(c, *level, cfg.synth());
    std::string text = emit_circuit(tr.circuit);
    if (cfg.out.empty()) {
        out << text;
    } else {
        write_text_file(cfg.out, text);
    }
    std::istringstream report(tr.report.to_text());
    for (std::string line; std::getline(report, line);) {
        out << "# " << line << '\n';
    }
    return kOk;
}

int cmd_run(const Config &cfg, std::ostream &out) {
    Circuit c = load(cfg);
    bool all_real = std::all_of(c.gates.begin(), c.gates.end(), [](const Gate &g) { return is_real(g); });
    Distribution d;
    if (all_real) {
        d = distribution(run_real(c, RealState::basis(c.num_qubits, cfg.init)));
    } else {
        d = distribution(run_complex(c, init_basis(c.num_qubits, cfg.init)));
    }
    out << "# engine: " << (all_real ? "real" : "complex") << '\n';
    if (cfg.shots == 0) {
        for (std::size_t i = 0; i < d.probabilities.size(); i++) {
            out << i << ' ' << bits(i, c.num_qubits) << ' ' << g15(d.probabilities[i]) << '\n';
        }
    } else {
        auto counts = sample(d, cfg.shots, cfg.seed);
        for (std::size_t i = 0; i < counts.size(); i++) {
            out << i << ' ' << bits(i, c.num_qubits) << ' ' << counts[i] << '\n';
        }
    }
    return kOk;
}

int cmd_verify(const Config &cfg, std::ostream &out, const Hooks &hooks) {
    Circuit c = load(cfg);
    VerifyOptions opts;
    opts.synth = cfg.synth();
    opts.tamper = hooks.tamper;
    VerificationReport rep = verify_circuit(c, cfg.init, opts);
    out << rep.to_text();
    return rep.pass ? kOk : kVerifyFailed;
}

int cmd_synth(const Config &cfg, std::ostream &out) {
    SynthesisResult r = synthesize(cfg.theta, cfg.synth());
    out << "theta: " << g17(cfg.theta) << '\n';
    out << "phi: " << g17(cfg.phi) << '\n';
    out << "k: " << r.k << '\n';
    out << "achieved: " << g17(r.achieved) << '\n';
    out << "error: " << g17(r.error) << '\n';
    out << "gate_error: " << g17(synthesis_error_to_gate_error(r.error)) << '\n';
    return kOk;
}

struct BenchRow {
    std::string name;
    Circuit circuit;
    // Marked outcome whose probability is reported, if any.
    std::optional<std::size_t> marked;
};

int cmd_bench(const Config &cfg, std::ostream &out) {
    using Clock = std::chrono::steady_clock;
    std::vector<BenchRow> suite;
    std::mt19937_64 rng(cfg.seed);
    for (std::size_t n = 2; n <= 8; n++) {
        suite.push_back({"random-" + std::to_string(n), random_circuit(n, 4 * n, rng), std::nullopt});
    }
    suite.push_back({"qft-3", qft_circuit(3), std::nullopt});
    suite.push_back({"grover-2", grover2_circuit(3), 3});

    char line[512];
    std::snprintf(line, sizeof(line), "%-10s %3s %5s %6s %6s %6s %9s %7s %12s %12s %10s %9s %9s %9s %s\n", "circuit",
                  "n", "in", "l1", "l1_bnd", "l2", "l3", "max_k", "budget", "realized", "p_marked", "t_l1_ms",
                  "t_l2_ms", "t_l3_ms", "verify");
    out << line;
    bool all_pass = true;
    for (const BenchRow &row : suite) {
        double ms[3] = {};
        std::size_t counts[3] = {};
        TranspileReport l1_report;
        double p_marked = 1.0;
        std::uint64_t max_k = 0;
        int idx = 0;
        for (LoweringLevel level : {LoweringLevel::RealEncoded, LoweringLevel::FOnly, LoweringLevel::GOnly}) {
            auto t0 = Clock::now();
            TranspileResult tr = transpile(row.circuit, level, cfg.synth());
            RealState final_state = run_real(tr.circuit, encode(init_basis(row.circuit.num_qubits, 0), tr.layout));
            ms[idx] = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
            counts[idx] = tr.circuit.gates.size();
            if (level == LoweringLevel::RealEncoded) {
                l1_report = tr.report;
            }
            if (level == LoweringLevel::GOnly) {
                max_k = tr.report.max_k;
            }
            if (row.marked) {
                p_marked = std::min(p_marked, marginal_distribution(final_state, tr.layout).probabilities[*row.marked]);
            }
            idx++;
        }
        VerifyOptions opts;
        opts.synth = cfg.synth();
        VerificationReport rep = verify_circuit(row.circuit, 0, opts);
        all_pass = all_pass && rep.pass;
        std::snprintf(line, sizeof(line),
                      "%-10s %3zu %5zu %6zu %6zu %6zu %9zu %7llu %12.4e %12.4e %10s %9.2f %9.2f %9.2f %s\n",
                      row.name.c_str(), row.circuit.num_qubits, row.circuit.gates.size(), counts[0],
                      l1_report.l1_bound, counts[1], counts[2], static_cast<unsigned long long>(max_k), rep.budget,
                      rep.realized, row.marked ? g15(p_marked).c_str() : "-", ms[0], ms[1], ms[2],
                      rep.pass ? "PASS" : "FAIL");
        out << line;
    }
    return all_pass ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, const Hooks &hooks) {
    CLI::App app{"Real-amplitude circuit transpiler and simulator", "rqc"};
    app.set_config("--config", "", "Read flags from a `key = value` file; command-line flags win");
    app.require_subcommand(1);

    Config cfg;
    app.add_option("--level", cfg.level, "Lowering level: real, f or g")->capture_default_str();
    app.add_option("--phi", cfg.phi, "Angle of the fixed gate G = F(phi)")->capture_default_str();
    app.add_option("--eps", cfg.eps, "Maximum angular error per synthesized gate")->capture_default_str();
    app.add_option("--k-max", cfg.k_max, "Largest repetition count tried by synthesis")->capture_default_str();
    app.add_option("--shots", cfg.shots, "Samples to draw; 0 prints exact probabilities")->capture_default_str();
    app.add_option("--seed", cfg.seed, "Seed for sampling and the bench suite")->capture_default_str();
    app.add_option("--init", cfg.init, "Initial computational basis state")->capture_default_str();
    app.add_option("--out", cfg.out, "Write the transpiled circuit here instead of stdout");
    app.add_option("--theta", cfg.theta, "Target angle for synth");

    auto *transpile_cmd = app.add_subcommand("transpile", "Lower a circuit to real, F-only or G-only form");
    auto *run_cmd = app.add_subcommand("run", "Simulate a circuit and print its outcome distribution");
    auto *verify_cmd = app.add_subcommand("verify", "Check every lowering against the complex reference");
    auto *synth_cmd = app.add_subcommand("synth", "Find k with k*phi close to theta");
    auto *bench_cmd = app.add_subcommand("bench", "Run the built-in circuit suite");
    for (auto *sub : {transpile_cmd, run_cmd, verify_cmd}) {
        sub->fallthrough();
        sub->add_option("input", cfg.input, "Input .rqc file, or - for stdin")->required();
    }
    synth_cmd->fallthrough();
    bench_cmd->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        if (synth_cmd->parsed() && app.count("--theta") == 0) {
            throw CLI::RequiredError("--theta");
        }
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err);
    }

    try {
        if (transpile_cmd->parsed()) {
            return cmd_transpile(cfg, out);
        }
        if (run_cmd->parsed()) {
            return cmd_run(cfg, out);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(cfg, out, hooks);
        }
        if (synth_cmd->parsed()) {
            return cmd_synth(cfg, out);
        }
        return cmd_bench(cfg, out);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err);
    } catch (const ParseError &e) {
        err << cfg.input << ":" << e.line() << ":" << e.column() << ": " << e.message() << '\n';
        return e.kind() == ParseError::Kind::Validation ? kValidationError : kParseError;
    } catch (const InputError &e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const NotReachable &e) {
        err << "error: " << e.what() << '\n';
        return kNotReachable;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kValidationError;
    }
}

}  // namespace rqc::cli
