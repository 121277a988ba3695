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

#include "rqc/verify.h"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "rqc/encoding.h"
#include "rqc/text_io.h"

namespace rqc {

double tv_distance(const Distribution &p, const Distribution &q) {
    if (p.probabilities.size() != q.probabilities.size()) {
        throw std::invalid_argument("tv_distance: distributions have different outcome counts");
    }
    double acc = 0;
    for (std::size_t i = 0; i < p.probabilities.size(); i++) {
        acc += std::fabs(p.probabilities[i] - q.probabilities[i]);
    }
    return acc / 2;
}

std::string circuit_digest(const Circuit &c) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : emit_circuit(c)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

// Structural check of a lowered circuit; returns an empty string when fine.
std::string structure_problem(const Circuit &c, LoweringLevel level, double phi) {
    for (std::size_t k = 0; k < c.gates.size(); k++) {
        const Gate &g = c.gates[k];
        const std::string at = " at gate " + std::to_string(k);
        if (!is_real(g)) {
            return "non-real gate" + at;
        }
        if (level != LoweringLevel::RealEncoded && g.kind != GateKind::F) {
            return "non-F gate" + at;
        }
        if (level == LoweringLevel::GOnly && g.angle.radians() != phi) {
            return "gate angle differs from phi" + at;
        }
    }
    return {};
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6e", v);
    return buf;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

VerificationReport verify_circuit(const Circuit &c, std::uint64_t init, const VerifyOptions &opts) {
    require_valid(c);
    VerificationReport rep;
    rep.digest = circuit_digest(c);
    rep.num_qubits = c.num_qubits;
    rep.input_gates = c.gates.size();
    rep.init = init;
    rep.synth = opts.synth;

    const ComplexState input = init_basis(c.num_qubits, init);
    const ComplexState reference = run_complex(c, input);
    const Distribution ref_dist = distribution(reference);

    rep.pass = true;
    for (LoweringLevel level : {LoweringLevel::RealEncoded, LoweringLevel::FOnly, LoweringLevel::GOnly}) {
        TranspileResult tr = transpile(c, level, opts.synth);
        if (opts.tamper) {
            opts.tamper(level, tr.circuit);
        }
        StageResult st;
        st.level = level;
        st.gates = tr.circuit.gates.size();
        st.qubits = tr.circuit.num_qubits;
        const bool exact = level != LoweringLevel::GOnly;
        if (!exact) {
            rep.budget = tr.report.total_budget;
        }
        st.threshold = exact ? kExactStageTolerance : rep.budget + kExactStageTolerance;

        st.reason = structure_problem(tr.circuit, level, opts.synth.phi);
        if (st.reason.empty()) {
            RealState out = run_real(tr.circuit, encode(input, tr.layout));
            st.l2 = l2_distance(decode(out, tr.layout), reference);
            try {
                st.tv = tv_distance(marginal_distribution(out, tr.layout), ref_dist);
            } catch (const WorkAncillaLeak &e) {
                st.tv = 1.0;
                st.reason = e.what();
            }
            if (st.reason.empty()) {
                if (!(st.l2 <= st.threshold)) {
                    st.reason = exact ? "l2 distance above tolerance" : "budget violated";
                } else if (exact && !(st.tv <= kExactStageTolerance)) {
                    st.reason = "tv distance above tolerance";
                }
            }
        } else {
            st.l2 = NAN;
            st.tv = NAN;
        }
        if (!exact) {
            rep.realized = st.l2;
        }
        st.pass = st.reason.empty();
        rep.pass = rep.pass && st.pass;
        rep.stages.push_back(std::move(st));
    }
    return rep;
}

std::string VerificationReport::to_text() const {
    std::string s;
    auto line = [&](const std::string &key, const std::string &value) { s += key + ": " + value + "\n"; };
    line("digest", digest);
    line("qubits", std::to_string(num_qubits));
    line("input_gates", std::to_string(input_gates));
    line("init", std::to_string(init));
    line("phi", fmt17(synth.phi));
    line("eps", fmt17(synth.eps));
    line("k_max", std::to_string(synth.k_max));
    for (const StageResult &st : stages) {
        const std::string p = std::string(level_name(st.level)) + ".";
        line(p + "gates", std::to_string(st.gates));
        line(p + "qubits", std::to_string(st.qubits));
        line(p + "l2", fmt(st.l2));
        line(p + "tv", fmt(st.tv));
        line(p + "tv_within_2l2", st.tv <= 2 * st.l2 + 1e-15 ? "yes" : "no");
        line(p + "threshold", fmt(st.threshold));
        line(p + "status", st.pass ? "PASS" : "FAIL (" + st.reason + ")");
    }
    line("budget", fmt(budget));
    line("realized", fmt(realized));
    line("result", pass ? "PASS" : "FAIL");
    return s;
}

}  // namespace rqc
