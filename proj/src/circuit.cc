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

#include "rqc/circuit.h"

#include <cmath>
#include <stdexcept>

namespace rqc {

std::vector<Violation> validate(const Circuit &c) {
    std::vector<Violation> out;
    if (c.num_qubits == 0) {
        out.push_back({Violation::Kind::BadRegister, 0, "register must have at least one qubit"});
    }
    for (std::size_t k = 0; k < c.gates.size(); k++) {
        const Gate &g = c.gates[k];
        const std::string at = " at gate " + std::to_string(k);
        if (g.has_angle() && !std::isfinite(g.angle.radians())) {
            out.push_back({Violation::Kind::NonFiniteAngle, k, "non-finite angle" + at});
        }
        for (std::size_t i = 0; i < g.num_qubits(); i++) {
            if (g.qubits[i] >= c.num_qubits) {
                out.push_back({Violation::Kind::OperandOutOfRange, k,
                               "operand out of range" + at + " (qubit " + std::to_string(g.qubits[i]) +
                                   " in a " + std::to_string(c.num_qubits) + "-qubit register)"});
                break;
            }
        }
        if (g.num_qubits() == 2 && g.qubits[0] == g.qubits[1]) {
            out.push_back({Violation::Kind::DuplicateOperands, k, "duplicate operands" + at});
        }
    }
    return out;
}

void require_valid(const Circuit &c) {
    auto v = validate(c);
    if (!v.empty()) {
        throw std::invalid_argument(v.front().message);
    }
}

}  // namespace rqc
