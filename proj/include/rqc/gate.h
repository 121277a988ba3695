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
#include <concepts>
#include <cstdint>
#include <optional>
#include <string_view>

#include "rqc/angle.h"
#include "rqc/matrix.h"

namespace rqc {

using QubitIndex = std::uint32_t;

enum class GateKind : std::uint8_t {
    X,
    Y,
    Z,
    H,
    S,
    Sdg,
    T,
    Tdg,
    Rx,
    Ry,
    Rz,
    CX,
    CZ,
    F,
    GPhase,
};

inline constexpr std::array<GateKind, 15> kAllGateKinds = {
    GateKind::X,  GateKind::Y,  GateKind::Z,  GateKind::H,  GateKind::S,
    GateKind::Sdg, GateKind::T, GateKind::Tdg, GateKind::Rx, GateKind::Ry,
    GateKind::Rz, GateKind::CX, GateKind::CZ, GateKind::F,  GateKind::GPhase,
};

struct GateInfo {
    std::string_view mnemonic;
    std::uint8_t num_qubits;
    bool has_angle;
};

const GateInfo &gate_info(GateKind kind);
std::optional<GateKind> gate_kind_from_mnemonic(std::string_view mnemonic);

/// One gate application. Two-qubit kinds list control then target.
///
/// Gates are plain values; validity against a register is checked by
/// validate(Circuit) rather than at construction, so the parser and tests can
/// build malformed gates and have them reported.
struct Gate {
    GateKind kind = GateKind::X;
    Angle angle;
    std::array<QubitIndex, 2> qubits{};

    std::uint8_t num_qubits() const { return gate_info(kind).num_qubits; }
    bool has_angle() const { return gate_info(kind).has_angle; }
    QubitIndex control() const { return qubits[0]; }
    QubitIndex target() const { return qubits[1]; }

    friend bool operator==(const Gate &a, const Gate &b);
};

Gate make_gate(GateKind kind, QubitIndex q);
Gate make_gate(GateKind kind, QubitIndex q, double angle);
Gate make_gate(GateKind kind, QubitIndex control, QubitIndex target);
Gate make_gate(GateKind kind, QubitIndex control, QubitIndex target, double angle);

/// Two integer operands always name two qubits, never a qubit and an angle.
template <std::integral I>
Gate make_gate(GateKind kind, I control, I target) {
    return make_gate(kind, static_cast<QubitIndex>(control), static_cast<QubitIndex>(target));
}

inline Gate rz(QubitIndex q, double t) { return make_gate(GateKind::Rz, q, t); }
inline Gate ry(QubitIndex q, double t) { return make_gate(GateKind::Ry, q, t); }
inline Gate f_gate(QubitIndex control, QubitIndex target, double t) {
    return make_gate(GateKind::F, control, target, t);
}
Gate gphase(double alpha);

/// The gate's unitary. Single-qubit gates give 2x2, two-qubit gates 4x4 with
/// local basis index 2*control_bit + target_bit, GPhase gives 1x1.
///
/// Rz(t) = diag(1, e^{it}) and Ry(t) = [[cos t, -sin t], [sin t, cos t]] are
/// full-angle forms, and F(t) is the identity on control=0 and Ry(t) on
/// control=1. Rx is the textbook exp(-i t X / 2).
///
/// Phases that are exact multiples of pi (see multiple_of_pi) evaluate to
/// exactly +-1, so a gate classified as real by is_real() has no imaginary
/// part at all.
Matrix gate_matrix(const Gate &g);

/// 2x2 action on the target when the control is |1>. Only for CX, CZ, F.
Matrix controlled_block(const Gate &g);

bool is_real(const Gate &g);

}  // namespace rqc
