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
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rqc/circuit.h"
#include "rqc/gate.h"
#include "rqc/matrix.h"

namespace rqc {

/// Statevector over `num_qubits` qubits with amplitudes of type T.
/// Amplitude i belongs to the basis state whose bit q is qubit q.
template <typename T>
class BasicState {
  public:
    using value_type = T;

    explicit BasicState(std::size_t num_qubits)
        : num_qubits_(num_qubits), amps_(std::size_t{1} << num_qubits) {}
    BasicState(std::size_t num_qubits, std::vector<T> amplitudes);

    /// |basis_index>. Throws std::out_of_range if the index does not fit.
    static BasicState basis(std::size_t num_qubits, std::uint64_t basis_index);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t size() const { return amps_.size(); }
    std::span<T> amplitudes() { return amps_; }
    std::span<const T> amplitudes() const { return amps_; }
    T &operator[](std::size_t i) { return amps_[i]; }
    const T &operator[](std::size_t i) const { return amps_[i]; }

    double norm() const;

    friend bool operator==(const BasicState &, const BasicState &) = default;

  private:
    std::size_t num_qubits_;
    std::vector<T> amps_;
};

using ComplexState = BasicState<Complex>;
/// Real amplitudes only; there is nowhere to store an imaginary part.
using RealState = BasicState<double>;

/// Outcome probabilities in basis order.
struct Distribution {
    std::vector<double> probabilities;
};

class SimulationError : public std::runtime_error {
  public:
    SimulationError(std::string message, std::size_t gate_index = npos)
        : std::runtime_error(std::move(message)), gate_index_(gate_index) {}
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t gate_index() const { return gate_index_; }

  private:
    std::size_t gate_index_;
};

ComplexState init_basis(std::size_t num_qubits, std::uint64_t basis_index);

/// In-place gate application. Operands must be inside the register.
void apply_in_place(ComplexState &s, const Gate &g);
/// Throws SimulationError("non-real gate in real engine") if !is_real(g).
void apply_in_place(RealState &s, const Gate &g);

ComplexState apply_complex(ComplexState s, const Gate &g);
RealState apply_real(RealState s, const Gate &g);

/// Left-to-right fold of the gate list. The register sizes of the circuit and
/// the state must agree. Errors carry the index of the failing gate.
ComplexState run_complex(const Circuit &c, ComplexState init);
RealState run_real(const Circuit &c, RealState init);

Distribution distribution(const ComplexState &s);
Distribution distribution(const RealState &s);

/// Counts per outcome for `shots` inverse-CDF draws, seeded deterministically.
std::vector<std::uint64_t> sample(const Distribution &d, std::uint64_t shots, std::uint64_t seed);

/// Unitary of a whole circuit, column j being run_complex on |j>. Only
/// sensible for small registers.
Matrix circuit_unitary(const Circuit &c);

/// Euclidean distance between two states of equal size.
double l2_distance(const ComplexState &a, const ComplexState &b);

}  // namespace rqc
