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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rqc/circuit.h"
#include "rqc/encoding.h"
#include "rqc/synth.h"

namespace rqc {

/// How far a circuit is lowered.
///  - RealEncoded (L1): real gates only, data qubits plus the R-I ancilla.
///  - FOnly (L2): F gates only, plus a work ancilla held in |1>.
///  - GOnly (L3): only F(phi) for the configured phi.
enum class LoweringLevel { RealEncoded, FOnly, GOnly };

std::string_view level_name(LoweringLevel level);
/// Accepts "real", "f", "g" (and "L1", "L2", "L3").
std::optional<LoweringLevel> level_from_name(std::string_view name);

/// Replaces every single-qubit gate by its ZYZ expansion (plus a GPhase for
/// the scalar factor) and CX/CZ by fixed expansions over {Rz, Ry, F(pi/2),
/// GPhase}. Rz, Ry, F and GPhase pass through. The output's unitary equals
/// the input's, global phase included.
Circuit normalize_pass(const Circuit &c);

/// The fixed CX or CZ expansion on the given operands. Built once and checked
/// against the gate's 4x4 matrix; a mismatch is a std::logic_error.
const std::vector<Gate> &controlled_expansion_template(GateKind kind);
std::vector<Gate> controlled_expansion(GateKind kind, QubitIndex control, QubitIndex target);

struct EncodeOptions {
    /// Allow any real gate through unchanged instead of rejecting kinds
    /// outside {Rz, Ry, F, GPhase}.
    bool pass_through_real = false;
};

/// Rewrites a normalized circuit into the encoded register:
///   Rz(t)@q    -> F(t)[q -> R-I ancilla]
///   Ry(t)@q    -> Ry(t)@q
///   F(t)[c,t]  -> F(t)[c,t]
///   GPhase(a)  -> Ry(a)@R-I ancilla
Circuit encode_pass(const Circuit &normalized, const EncodedLayout &layout, EncodeOptions opts = {});

/// Ry(t)@q -> F(t)[work -> q]. Input must be an L1 circuit over {Ry, F};
/// the layout must have a work ancilla.
Circuit lower_ry_pass(const Circuit &l1, const EncodedLayout &layout);

/// Synthesis failure for one gate of the circuit being lowered to L3.
class GateNotReachable : public NotReachable {
  public:
    GateNotReachable(std::size_t gate_index, double theta, const NotReachable &cause);
    std::size_t gate_index() const { return gate_index_; }
    double theta() const { return theta_; }
    const char *what() const noexcept override { return message_.c_str(); }

  private:
    std::size_t gate_index_;
    double theta_;
    std::string message_;
};

struct SynthesizedGate {
    std::size_t l2_index;
    double theta;
    std::uint64_t k;
    double error;
};

struct TranspileReport {
    LoweringLevel level = LoweringLevel::RealEncoded;
    std::size_t input_gates = 0;
    std::size_t normalized_gates = 0;
    /// Normalized-circuit GPhase items.
    std::size_t phase_items = 0;
    /// Linear bound on the L1 gate count (see l1_gate_bound).
    std::size_t l1_bound = 0;
    std::size_t l1_gates = 0;
    std::optional<std::size_t> l2_gates;
    std::optional<std::size_t> l3_gates;
    QubitIndex ri_ancilla = 0;
    std::optional<QubitIndex> work_ancilla;
    std::size_t output_qubits = 0;

    // Populated at L3 only.
    std::optional<double> phi;
    std::vector<SynthesizedGate> synthesized;
    std::uint64_t max_k = 0;
    double total_budget = 0;

    /// Lines of `key: value`, stable order.
    std::string to_text() const;
};

/// 3 per front-end single-qubit gate, the fixed expansion size per CX/CZ
/// (1 per F), plus the phase items.
std::size_t l1_gate_bound(const Circuit &input, std::size_t phase_items);

struct TranspileResult {
    Circuit circuit;
    TranspileReport report;
    EncodedLayout layout;
};

/// normalize -> encode -> (L2+) lower Ry -> (L3) replace each F(t) by
/// F(phi) repeated k times. Throws std::invalid_argument for invalid input and
/// GateNotReachable when synthesis fails.
TranspileResult transpile(const Circuit &c, LoweringLevel level, const SynthConfig &cfg = {});

}  // namespace rqc
