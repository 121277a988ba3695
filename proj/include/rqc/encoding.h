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
#include <optional>
#include <stdexcept>

#include "rqc/gate.h"
#include "rqc/simulator.h"

namespace rqc {

/// Register layout of an encoded (real-amplitude) circuit.
///
/// Data qubits keep their indices 0..num_data-1. The R-I ancilla sits at
/// index num_data with |R> = |0> and |I> = |1>, so amplitude
/// (j, R) lives at index j and (j, I) at index j + 2^num_data. The work
/// ancilla, when present, is at num_data + 1 and is prepared in |1>.
class EncodedLayout {
  public:
    explicit EncodedLayout(std::size_t num_data, bool with_work_ancilla = false);

    std::size_t num_data() const { return num_data_; }
    QubitIndex ri_ancilla() const { return static_cast<QubitIndex>(num_data_); }
    std::optional<QubitIndex> work_ancilla() const { return work_; }
    std::size_t total_qubits() const { return num_data_ + (work_ ? 2 : 1); }

    EncodedLayout with_work() const { return EncodedLayout(num_data_, true); }

  private:
    std::size_t num_data_;
    std::optional<QubitIndex> work_;
};

class WorkAncillaLeak : public std::runtime_error {
  public:
    explicit WorkAncillaLeak(double leaked)
        : std::runtime_error("work-ancilla leaked: probability " + std::to_string(leaked) + " on |0>"),
          leaked_(leaked) {}
    double leaked() const { return leaked_; }

  private:
    double leaked_;
};

/// Probability mass allowed on work-ancilla |0> before a state is rejected.
inline constexpr double kWorkLeakTolerance = 1e-9;

/// Splits every amplitude into its real part on |R> and imaginary part on |I>.
RealState encode(const ComplexState &s);

/// encode() into the layout's full register, with the work ancilla (if any)
/// in |1>.
RealState encode(const ComplexState &s, const EncodedLayout &layout);

/// Inverse of encode: psi_j = a_{j,R} + i a_{j,I}. With a work ancilla, reads
/// the work = |1> slice.
ComplexState decode(const RealState &s, const EncodedLayout &layout);

/// P(j) summed over the ancillas. Throws WorkAncillaLeak if the work
/// ancilla carries more than kWorkLeakTolerance probability on |0>.
Distribution marginal_distribution(const RealState &s, const EncodedLayout &layout);

/// Probability of the work ancilla being |0>; zero without a work ancilla.
double work_ancilla_leak(const RealState &s, const EncodedLayout &layout);

/// Ry(alpha) on the R-I ancilla, which maps encode(s) to encode(e^{i alpha} s).
Gate global_phase_gate(double alpha, const EncodedLayout &layout);

}  // namespace rqc
