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
#include <random>

#include "rqc/circuit.h"

namespace rqc {

/// QFT|x> = 2^{-n/2} sum_y e^{2 pi i x y / 2^n} |y>, built from H, CX and Rz
/// (controlled phases expanded) with the final qubit-order swaps as CX
/// triples.
Circuit qft_circuit(std::size_t n);

/// One Grover iteration on two qubits marking `marked` (0..3). Starting from
/// |00> it ends in |marked> with probability 1.
Circuit grover2_circuit(unsigned marked);

/// Uniformly random gates from the full front-end set (F and GPhase
/// included), angles uniform in [-2pi, 2pi). Two-qubit kinds only appear
/// when n >= 2.
Circuit random_circuit(std::size_t n, std::size_t num_gates, std::mt19937_64 &rng);

}  // namespace rqc
