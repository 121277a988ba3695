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

#include "rqc/transpiler.h"

#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "rqc/simulator.h"
#include "rqc/text_io.h"
#include "rqc/zyz.h"

namespace rqc {

std::string_view level_name(LoweringLevel level) {
    switch (level) {
        case LoweringLevel::RealEncoded:
            return "real";
        case LoweringLevel::FOnly:
            return "f";
        case LoweringLevel::GOnly:
            return "g";
    }
    return "?";
}

std::optional<LoweringLevel> level_from_name(std::string_view name) {
    if (name == "real" || name == "L1") {
        return LoweringLevel::RealEncoded;
    }
    if (name == "f" || name == "L2") {
        return LoweringLevel::FOnly;
    }
    if (name == "g" || name == "L3") {
        return LoweringLevel::GOnly;
    }
    return std::nullopt;
}

namespace {

// Rz(c), Ry(b), Rz(a) in temporal order, skipping exact-zero angles.
void append_rotations(std::vector<Gate> &out, QubitIndex q, const ZyzAngles &z) {
    if (z.c != 0) {
        out.push_back(rz(q, z.c));
    }
    if (z.b != 0) {
        out.push_back(ry(q, z.b));
    }
    if (z.a != 0) {
        out.push_back(rz(q, z.a));
    }
}

// Template frame: control is qubit 1, target is qubit 0, so the register's
// basis index matches gate_matrix's local index 2*control + target.
constexpr QubitIndex kTplControl = 1;
constexpr QubitIndex kTplTarget = 0;

// For CZ, `basis` = A with A [[0,-1],[1,0]] A^dag = -iZ; conjugating the
// F(pi/2) block this way and adding Rz(pi/2) on the control gives
// diag(1, 1, 1, -1). For CX the basis is H*A, which turns -iZ into -iX.
std::vector<Gate> build_expansion(GateKind kind) {
    const Complex i{0, 1};
    const double r = std::sqrt(0.5);
    Matrix basis(2, {r, -i * r, r, i * r});
    if (kind == GateKind::CX) {
        basis = gate_matrix(make_gate(GateKind::H, 0)) * basis;
    }
    std::vector<Gate> seq;
    append_rotations(seq, kTplTarget, zyz_decompose(basis.adjoint()));
    seq.push_back(f_gate(kTplControl, kTplTarget, kPi / 2));
    append_rotations(seq, kTplTarget, zyz_decompose(basis));
    seq.push_back(rz(kTplControl, kPi / 2));

    const Matrix want = gate_matrix(make_gate(kind, kTplControl, kTplTarget));
    Matrix got = circuit_unitary(Circuit(2, seq));
    Complex ratio = want(0, 0) / got(0, 0);
    if (std::fabs(std::arg(ratio)) > 1e-15) {
        seq.push_back(gphase(std::arg(ratio)));
        got = circuit_unitary(Circuit(2, seq));
    }
    double err = max_abs_diff(got, want);
    if (!(err <= 1e-12)) {
        throw std::logic_error("controlled-gate expansion for '" + std::string(gate_info(kind).mnemonic) +
                               "' does not reproduce its matrix (error " + std::to_string(err) + ")");
    }
    return seq;
}

}  // namespace

const std::vector<Gate> &controlled_expansion_template(GateKind kind) {
    static const std::vector<Gate> cx = build_expansion(GateKind::CX);
    static const std::vector<Gate> cz = build_expansion(GateKind::CZ);
    switch (kind) {
        case GateKind::CX:
            return cx;
        case GateKind::CZ:
            return cz;
        default:
            throw std::invalid_argument("no fixed expansion for this gate kind");
    }
}

std::vector<Gate> controlled_expansion(GateKind kind, QubitIndex control, QubitIndex target) {
    std::vector<Gate> out = controlled_expansion_template(kind);
    for (Gate &g : out) {
        for (std::size_t k = 0; k < g.num_qubits(); k++) {
            g.qubits[k] = g.qubits[k] == kTplControl ? control : target;
        }
    }
    return out;
}

Circuit normalize_pass(const Circuit &c) {
    Circuit out(c.num_qubits);
    out.name = c.name;
    for (const Gate &g : c.gates) {
        switch (g.kind) {
            case GateKind::Rz:
            case GateKind::Ry:
            case GateKind::F:
            case GateKind::GPhase:
                out.gates.push_back(g);
                break;
            case GateKind::CX:
            case GateKind::CZ: {
                auto seq = controlled_expansion(g.kind, g.control(), g.target());
                out.gates.insert(out.gates.end(), seq.begin(), seq.end());
                break;
            }
            default: {
                ZyzAngles z = zyz_normalize(g);
                append_rotations(out.gates, g.qubits[0], z);
                if (z.alpha != 0) {
                    out.gates.push_back(gphase(z.alpha));
                }
                break;
            }
        }
    }
    return out;
}

Circuit encode_pass(const Circuit &normalized, const EncodedLayout &layout, EncodeOptions opts) {
    if (normalized.num_qubits != layout.num_data()) {
        throw std::invalid_argument("encode_pass: circuit register does not match layout");
    }
    const QubitIndex ri = layout.ri_ancilla();
    Circuit out(layout.num_data() + 1);
    out.name = normalized.name;
    out.gates.reserve(normalized.gates.size());
    for (std::size_t k = 0; k < normalized.gates.size(); k++) {
        const Gate &g = normalized.gates[k];
        switch (g.kind) {
            case GateKind::Rz:
                out.gates.push_back(f_gate(g.qubits[0], ri, g.angle.radians()));
                break;
            case GateKind::Ry:
            case GateKind::F:
                out.gates.push_back(g);
                break;
            case GateKind::GPhase:
                out.gates.push_back(global_phase_gate(g.angle.radians(), layout));
                break;
            default:
                if (opts.pass_through_real && is_real(g)) {
                    out.gates.push_back(g);
                    break;
                }
                throw std::invalid_argument("encode_pass: '" + std::string(gate_info(g.kind).mnemonic) +
                                            "' at gate " + std::to_string(k) + " is not in {rz, ry, f, gphase}");
        }
    }
    return out;
}

Circuit lower_ry_pass(const Circuit &l1, const EncodedLayout &layout) {
    if (!layout.work_ancilla()) {
        throw std::invalid_argument("lower_ry_pass: layout has no work ancilla");
    }
    if (l1.num_qubits != layout.num_data() + 1) {
        throw std::invalid_argument("lower_ry_pass: circuit is not over data + R-I ancilla");
    }
    const QubitIndex work = *layout.work_ancilla();
    Circuit out(layout.total_qubits());
    out.name = l1.name;
    out.gates.reserve(l1.gates.size());
    for (std::size_t k = 0; k < l1.gates.size(); k++) {
        const Gate &g = l1.gates[k];
        if (g.kind == GateKind::Ry) {
            out.gates.push_back(f_gate(work, g.qubits[0], g.angle.radians()));
        } else if (g.kind == GateKind::F) {
            out.gates.push_back(g);
        } else {
            throw std::invalid_argument("lower_ry_pass: '" + std::string(gate_info(g.kind).mnemonic) + "' at gate " +
                                        std::to_string(k) + " is not an L1 gate");
        }
    }
    return out;
}

GateNotReachable::GateNotReachable(std::size_t gate_index, double theta, const NotReachable &cause)
    : NotReachable(cause), gate_index_(gate_index), theta_(theta) {
    message_ = "synthesis failed for F(" + format_angle(theta) + ") at gate " + std::to_string(gate_index) + ": " +
               cause.what();
}

std::size_t l1_gate_bound(const Circuit &input, std::size_t phase_items) {
    std::size_t bound = phase_items;
    for (const Gate &g : input.gates) {
        switch (g.kind) {
            case GateKind::CX:
            case GateKind::CZ: {
                const auto &tpl = controlled_expansion_template(g.kind);
                for (const Gate &e : tpl) {
                    bound += e.kind == GateKind::GPhase ? 0 : 1;
                }
                break;
            }
            case GateKind::F:
                bound += 1;
                break;
            case GateKind::GPhase:
                break;
            default:
                bound += 3;
        }
    }
    return bound;
}

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string TranspileReport::to_text() const {
    std::string s;
    auto line = [&](std::string_view key, const std::string &value) {
        s += key;
        s += ": ";
        s += value;
        s += '\n';
    };
    line("level", std::string(level_name(level)));
    line("input_gates", std::to_string(input_gates));
    line("normalized_gates", std::to_string(normalized_gates));
    line("phase_items", std::to_string(phase_items));
    line("l1_gates", std::to_string(l1_gates));
    line("l1_gate_bound", std::to_string(l1_bound));
    if (l2_gates) {
        line("l2_gates", std::to_string(*l2_gates));
    }
    if (l3_gates) {
        line("l3_gates", std::to_string(*l3_gates));
    }
    line("output_qubits", std::to_string(output_qubits));
    line("ri_ancilla", std::to_string(ri_ancilla));
    line("work_ancilla", work_ancilla ? std::to_string(*work_ancilla) : "none");
    if (phi) {
        line("phi", fmt_double(*phi));
        line("synthesized_gates", std::to_string(synthesized.size()));
        line("max_k", std::to_string(max_k));
        line("budget", fmt_double(total_budget));
        for (std::size_t i = 0; i < synthesized.size(); i++) {
            const auto &sg = synthesized[i];
            line("synth." + std::to_string(i),
                 "gate=" + std::to_string(sg.l2_index) + " theta=" + fmt_double(sg.theta) +
                     " k=" + std::to_string(sg.k) + " error=" + fmt_double(sg.error));
        }
    }
    return s;
}

TranspileResult transpile(const Circuit &c, LoweringLevel level, const SynthConfig &cfg) {
    require_valid(c);
    if (level == LoweringLevel::GOnly) {
        cfg.check();
    }
    const EncodedLayout base(c.num_qubits);
    const EncodedLayout layout(c.num_qubits, level != LoweringLevel::RealEncoded);

    TranspileReport report;
    report.level = level;
    report.input_gates = c.gates.size();

    Circuit normalized = normalize_pass(c);
    report.normalized_gates = normalized.gates.size();
    for (const Gate &g : normalized.gates) {
        report.phase_items += g.kind == GateKind::GPhase ? 1 : 0;
    }
    report.l1_bound = l1_gate_bound(c, report.phase_items);

    Circuit out = encode_pass(normalized, base);
    report.l1_gates = out.gates.size();
    if (level != LoweringLevel::RealEncoded) {
        out = lower_ry_pass(out, layout);
        report.l2_gates = out.gates.size();
    }
    if (level == LoweringLevel::GOnly) {
        report.phi = cfg.phi;
        std::map<double, SynthesisResult> cache;
        Circuit g_only(out.num_qubits);
        g_only.name = out.name;
        std::vector<double> errors;
        for (std::size_t k = 0; k < out.gates.size(); k++) {
            const Gate &g = out.gates[k];
            const double theta = g.angle.radians();
            auto it = cache.find(theta);
            if (it == cache.end()) {
                try {
                    it = cache.emplace(theta, synthesize(theta, cfg)).first;
                } catch (const NotReachable &e) {
                    throw GateNotReachable(k, theta, e);
                }
            }
            const SynthesisResult &r = it->second;
            report.synthesized.push_back({k, theta, r.k, r.error});
            report.max_k = std::max(report.max_k, r.k);
            errors.push_back(r.error);
            g_only.gates.insert(g_only.gates.end(), r.k, f_gate(g.control(), g.target(), cfg.phi));
        }
        report.total_budget = budget(errors);
        out = std::move(g_only);
        report.l3_gates = out.gates.size();
    }
    report.ri_ancilla = layout.ri_ancilla();
    report.work_ancilla = layout.work_ancilla();
    report.output_qubits = out.num_qubits;
    return {std::move(out), std::move(report), layout};
}

}  // namespace rqc
