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

#include "rqc/gate.h"
#include "rqc/matrix.h"

namespace rqc {

/// U = e^{i alpha} * Rz(a) * Ry(b) * Rz(c), with Rz(c) applied first.
struct ZyzAngles {
    double alpha = 0;
    double a = 0;
    double b = 0;
    double c = 0;
};

/// Decomposes an arbitrary 2x2 unitary.
///
/// b is chosen in [0, pi/2] so that cos b = |u00| and sin b = |u10|. When the
/// off-diagonal vanishes, b = c = 0 and the relative phase goes into a. When
/// the diagonal vanishes, b = pi/2 and a = 0.
ZyzAngles zyz_decompose(const Matrix &u);

/// zyz_decompose of the gate's matrix, except that Ry and Rz are returned
/// as their own trivial decompositions.
ZyzAngles zyz_normalize(const Gate &g);

Matrix zyz_matrix(const ZyzAngles &z);

}  // namespace rqc
