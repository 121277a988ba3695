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

#include "rqc/library.h"

#include <stdexcept>
#include <vector>

namespace rqc {

namespace {

void controlled_phase(Circuit &c, QubitIndex control, QubitIndex target, double lambda) {
    c.append(rz(control, lambda / 2));
    c.append(make_gate(GateKind::CX, control, target));
    c.append(rz(target, -lambda / 2));
    c.append(make_gate(GateKind::CX, control, target));
    c.append(rz(target, lambda / 2));
}

void swap(Circuit &c, QubitIndex a, QubitIndex b) {
    c.append(make_gate(GateKind::CX, a, b));
    c.append(make_gate(GateKind::CX, b, a));
    c.append(make_gate(GateKind::CX, a, b));
}

}  // namespace

Circuit qft_circuit(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("qft_circuit: need at least one qubit");
    }
    Circuit c(n);
    c.name = "qft-" + std::to_string(n);
    for (std::size_t j = n; j-- > 0;) {
        c.append(make_gate(GateKind::H, static_cast<QubitIndex>(j)));
        for (std::size_t m = 0; m < j; m++) {
            double lambda = kTwoPi / static_cast<double>(std::size_t{1} << (j - m + 1));
            controlled_phase(c, static_cast<QubitIndex>(m), static_cast<QubitIndex>(j), lambda);
        }
    }
    for (std::size_t j = 0; j < n / 2; j++) {
        swap(c, static_cast<QubitIndex>(j), static_cast<QubitIndex>(n - 1 - j));
    }
    return c;
}

Circuit grover2_circuit(unsigned marked) {
    if (marked > 3) {
        throw std::invalid_argument("grover2_circuit: marked state must be in 0..3");
    }
    Circuit c(2);
    c.name = "grover-2";
    auto both = [&](GateKind k) {
        c.append(make_gate(k, 0));
        c.append(make_gate(k, 1));
    };
    both(GateKind::H);
    // Oracle: phase flip on |marked>.
    for (QubitIndex q = 0; q < 2; q++) {
        if (!((marked >> q) & 1)) {
            c.append(make_gate(GateKind::X, q));
        }
    }
    c.append(make_gate(GateKind::CZ, 0, 1));
    for (QubitIndex q = 0; q < 2; q++) {
        if (!((marked >> q) & 1)) {
            c.append(make_gate(GateKind::X, q));
        }
    }
    // Diffusion about the uniform superposition.
    both(GateKind::H);
    both(GateKind::X);
    c.append(make_gate(GateKind::CZ, 0, 1));
    both(GateKind::X);
    both(GateKind::H);
    return c;
}

Circuit random_circuit(std::size_t n, std::size_t num_gates, std::mt19937_64 &rng) {
    if (n == 0) {
        throw std::invalid_argument("random_circuit: need at least one qubit");
    }
    std::vector<GateKind> kinds;
    for (GateKind k : kAllGateKinds) {
        if (gate_info(k).num_qubits < 2 || n >= 2) {
            kinds.push_back(k);
        }
    }
    std::uniform_int_distribution<std::size_t> pick_kind(0, kinds.size() - 1);
    std::uniform_int_distribution<QubitIndex> pick_qubit(0, static_cast<QubitIndex>(n - 1));
    std::uniform_real_distribution<double> pick_angle(-kTwoPi, kTwoPi);

    Circuit c(n);
    for (std::size_t i = 0; i < num_gates; i++) {
        Gate g;
        g.kind = kinds[pick_kind(rng)];
        if (g.has_angle()) {
            g.angle = Angle(pick_angle(rng));
        }
        if (g.num_qubits() >= 1) {
            g.qubits[0] = pick_qubit(rng);
        }
        if (g.num_qubits() == 2) {
            do {
                g.qubits[1] = pick_qubit(rng);
            } while (g.qubits[1] == g.qubits[0]);
        }
        c.append(g);
    }
    return c;
}

}  // namespace rqc
