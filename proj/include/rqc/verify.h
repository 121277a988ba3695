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

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rqc/circuit.h"
#include "rqc/simulator.h"
#include "rqc/synth.h"
#include "rqc/transpiler.h"

namespace rqc {

/// Distance threshold for the exact stages (L1, L2).
inline constexpr double kExactStageTolerance = 1e-9;

/// Half the l1 distance between two distributions over the same outcomes.
double tv_distance(const Distribution &p, const Distribution &q);

struct StageResult {
    LoweringLevel level;
    std::size_t gates = 0;
    std::size_t qubits = 0;
    double l2 = 0;   // || decode(real final) - complex final ||
    double tv = 0;   // TV(marginal, reference distribution)
    double threshold = 0;
    bool pass = false;
    std::string reason;  // empty on pass
};

struct VerificationReport {
    std::string digest;
    std::size_t num_qubits = 0;
    std::size_t input_gates = 0;
    std::uint64_t init = 0;
    SynthConfig synth;
    std::vector<StageResult> stages;
    double budget = 0;   // L3 error budget
    double realized = 0; // L3 l2 distance
    bool pass = false;

    std::string to_text() const;
};

struct VerifyOptions {
    SynthConfig synth;
    /// Test hook: mutate a transpiled circuit before it is simulated.
    std::function<void(LoweringLevel, Circuit &)> tamper;
};

/// Runs the circuit on the complex engine from |init>, lowers it to every
/// level, runs each lowering on the real engine from the encoded input (work
/// ancilla in |1>), and compares. L1 and L2 must agree within
/// kExactStageTolerance; L3 must stay within its synthesis budget (plus the
/// same floating-point allowance).
///
/// Propagates GateNotReachable from synthesis.
VerificationReport verify_circuit(const Circuit &c, std::uint64_t init, const VerifyOptions &opts = {});

/// FNV-1a over the canonical text, as 16 hex digits.
std::string circuit_digest(const Circuit &c);

}  // namespace rqc
