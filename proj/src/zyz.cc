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

#include "rqc/zyz.h"

#include <cmath>
#include <stdexcept>

namespace rqc {

namespace {

// Below this magnitude a matrix entry is treated as structurally zero.
constexpr double kZeroEntry = 1e-14;

// Maps an angle into (-pi, pi].
double principal(double t) {
    double w = std::remainder(t, kTwoPi);
    return w <= -kPi ? w + kTwoPi : w;
}

ZyzAngles principal(ZyzAngles z) {
    z.alpha = principal(z.alpha);
    z.a = principal(z.a);
    z.c = principal(z.c);
    return z;
}

}  // namespace

ZyzAngles zyz_decompose(const Matrix &u) {
    if (u.dim() != 2) {
        throw std::invalid_argument("zyz_decompose expects a 2x2 matrix");
    }
    const double diag = std::abs(u(0, 0));
    const double off = std::abs(u(1, 0));
    ZyzAngles z;
    if (off < kZeroEntry) {
        z.alpha = std::arg(u(0, 0));
        z.a = std::arg(u(1, 1)) - z.alpha;
        return principal(z);
    }
    if (diag < kZeroEntry) {
        z.b = kPi / 2;
        z.alpha = std::arg(u(1, 0));
        z.c = std::arg(-u(0, 1)) - z.alpha;
        return principal(z);
    }
    z.b = std::atan2(off, diag);
    z.alpha = std::arg(u(0, 0));
    z.a = std::arg(u(1, 0)) - z.alpha;
    z.c = std::arg(-u(0, 1)) - z.alpha;
    return principal(z);
}

ZyzAngles zyz_normalize(const Gate &g) {
    if (g.num_qubits() != 1) {
        throw std::invalid_argument("zyz_normalize expects a single-qubit gate");
    }
    switch (g.kind) {
        case GateKind::Ry:
            return {0, 0, g.angle.radians(), 0};
        case GateKind::Rz:
            return {0, g.angle.radians(), 0, 0};
        default:
            return zyz_decompose(gate_matrix(g));
    }
}

Matrix zyz_matrix(const ZyzAngles &z) {
    Matrix m = gate_matrix(rz(0, z.a)) * gate_matrix(ry(0, z.b)) * gate_matrix(rz(0, z.c));
    return m * std::polar(1.0, z.alpha);
}

}  // namespace rqc
