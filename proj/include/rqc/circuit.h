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

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rqc/gate.h"

namespace rqc {

/// An ordered gate list over `num_qubits` qubits. Gates apply left to right.
/// Qubit 0 is the least significant bit of a basis-state index.
struct Circuit {
    std::size_t num_qubits = 1;
    std::vector<Gate> gates;
    std::string name;

    Circuit() = default;
    explicit Circuit(std::size_t n, std::vector<Gate> g = {}) : num_qubits(n), gates(std::move(g)) {}

    Circuit &append(const Gate &g) {
        gates.push_back(g);
        return *this;
    }

    // Structural equality; the name is metadata and is not compared.
    friend bool operator==(const Circuit &a, const Circuit &b) {
        return a.num_qubits == b.num_qubits && a.gates == b.gates;
    }
};

struct Violation {
    enum class Kind { OperandOutOfRange, DuplicateOperands, NonFiniteAngle, BadRegister };
    Kind kind;
    std::size_t gate_index;
    std::string message;
};

/// Checks every gate against the register. Returns an empty list when the
/// circuit is valid.
std::vector<Violation> validate(const Circuit &c);

/// Throws std::invalid_argument with the first violation's message.
void require_valid(const Circuit &c);

}  // namespace rqc
