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

#include "rqc/gate.h"

#include <cmath>
#include <stdexcept>

namespace rqc {

namespace {

constexpr std::array<GateInfo, kAllGateKinds.size()> kGateTable = {{
    {"x", 1, false},
    {"y", 1, false},
    {"z", 1, false},
    {"h", 1, false},
    {"s", 1, false},
    {"sdg", 1, false},
    {"t", 1, false},
    {"tdg", 1, false},
    {"rx", 1, true},
    {"ry", 1, true},
    {"rz", 1, true},
    {"cx", 2, false},
    {"cz", 2, false},
    {"f", 2, true},
    {"gphase", 0, true},
}};

// e^{it}, exact when t is a multiple of pi.
Complex unit_phase(double t) {
    if (auto n = multiple_of_pi(t)) {
        return (*n % 2 == 0) ? 1.0 : -1.0;
    }
    return std::polar(1.0, t);
}

Matrix m2(Complex a, Complex b, Complex c, Complex d) {
    return Matrix(2, {a, b, c, d});
}

Matrix rotation(double t) {
    double c = std::cos(t);
    double s = std::sin(t);
    return m2(c, -s, s, c);
}

}  // namespace

const GateInfo &gate_info(GateKind kind) {
    return kGateTable[static_cast<std::size_t>(kind)];
}

std::optional<GateKind> gate_kind_from_mnemonic(std::string_view mnemonic) {
    for (GateKind k : kAllGateKinds) {
        if (gate_info(k).mnemonic == mnemonic) {
            return k;
        }
    }
    return std::nullopt;
}

bool operator==(const Gate &a, const Gate &b) {
    if (a.kind != b.kind) {
        return false;
    }
    if (a.has_angle() && a.angle != b.angle) {
        return false;
    }
    for (std::size_t i = 0; i < a.num_qubits(); i++) {
        if (a.qubits[i] != b.qubits[i]) {
            return false;
        }
    }
    return true;
}

Gate make_gate(GateKind kind, QubitIndex q) {
    return Gate{kind, Angle{}, {q, 0}};
}

Gate make_gate(GateKind kind, QubitIndex q, double angle) {
    return Gate{kind, Angle(angle), {q, 0}};
}

Gate make_gate(GateKind kind, QubitIndex control, QubitIndex target) {
    return Gate{kind, Angle{}, {control, target}};
}

Gate make_gate(GateKind kind, QubitIndex control, QubitIndex target, double angle) {
    return Gate{kind, Angle(angle), {control, target}};
}

Gate gphase(double alpha) {
    return Gate{GateKind::GPhase, Angle(alpha), {0, 0}};
}

Matrix controlled_block(const Gate &g) {
    switch (g.kind) {
        case GateKind::CX:
            return m2(0, 1, 1, 0);
        case GateKind::CZ:
            return m2(1, 0, 0, -1);
        case GateKind::F:
            return rotation(g.angle.radians());
        default:
            throw std::invalid_argument("controlled_block: not a controlled gate");
    }
}

Matrix gate_matrix(const Gate &g) {
    const double t = g.angle.radians();
    const Complex i{0, 1};
    const double r = std::sqrt(0.5);
    switch (g.kind) {
        case GateKind::X:
            return m2(0, 1, 1, 0);
        case GateKind::Y:
            return m2(0, -i, i, 0);
        case GateKind::Z:
            return m2(1, 0, 0, -1);
        case GateKind::H:
            return m2(r, r, r, -r);
        case GateKind::S:
            return m2(1, 0, 0, i);
        case GateKind::Sdg:
            return m2(1, 0, 0, -i);
        case GateKind::T:
            return m2(1, 0, 0, std::polar(1.0, kPi / 4));
        case GateKind::Tdg:
            return m2(1, 0, 0, std::polar(1.0, -kPi / 4));
        case GateKind::Rx: {
            if (auto n = multiple_of_pi(t / 2)) {
                double sign = (*n % 2 == 0) ? 1.0 : -1.0;
                return m2(sign, 0, 0, sign);
            }
            double c = std::cos(t / 2);
            double s = std::sin(t / 2);
            return m2(c, -i * s, -i * s, c);
        }
        case GateKind::Ry:
            return rotation(t);
        case GateKind::Rz:
            return m2(1, 0, 0, unit_phase(t));
        case GateKind::CX:
        case GateKind::CZ:
        case GateKind::F: {
            Matrix m = Matrix::identity(4);
            Matrix b = controlled_block(g);
            m(2, 2) = b(0, 0);
            m(2, 3) = b(0, 1);
            m(3, 2) = b(1, 0);
            m(3, 3) = b(1, 1);
            return m;
        }
        case GateKind::GPhase:
            return Matrix(1, {unit_phase(t)});
    }
    throw std::logic_error("unhandled gate kind");
}

bool is_real(const Gate &g) {
    switch (g.kind) {
        case GateKind::X:
        case GateKind::Z:
        case GateKind::H:
        case GateKind::Ry:
        case GateKind::CX:
        case GateKind::CZ:
        case GateKind::F:
            return true;
        case GateKind::Y:
        case GateKind::S:
        case GateKind::Sdg:
        case GateKind::T:
        case GateKind::Tdg:
            return false;
        case GateKind::Rx:
            return multiple_of_pi(g.angle.radians() / 2).has_value();
        case GateKind::Rz:
        case GateKind::GPhase:
            return multiple_of_pi(g.angle.radians()).has_value();
    }
    return false;
}

}  // namespace rqc
