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

#include "rqc/simulator.h"

#include <algorithm>
#include <cmath>
#include <random>

namespace rqc {

template <typename T>
BasicState<T>::BasicState(std::size_t num_qubits, std::vector<T> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
    if (amps_.size() != (std::size_t{1} << num_qubits)) {
        throw std::invalid_argument("amplitude count must be 2^num_qubits");
    }
}

template <typename T>
BasicState<T> BasicState<T>::basis(std::size_t num_qubits, std::uint64_t basis_index) {
    if (num_qubits >= 64 || basis_index >= (std::uint64_t{1} << num_qubits)) {
        throw std::out_of_range("basis index " + std::to_string(basis_index) + " out of range for " +
                                std::to_string(num_qubits) + " qubits");
    }
    BasicState s(num_qubits);
    s.amps_[basis_index] = T(1);
    return s;
}

template <typename T>
double BasicState<T>::norm() const {
    double acc = 0;
    for (const T &a : amps_) {
        acc += std::norm(a);
    }
    return std::sqrt(acc);
}

template class BasicState<Complex>;
template class BasicState<double>;

namespace {

inline std::size_t insert_zero_bit(std::size_t k, std::size_t bit) {
    std::size_t low = k & ((std::size_t{1} << bit) - 1);
    return ((k >> bit) << (bit + 1)) | low;
}

template <typename T, typename M>
void kernel_1q(std::span<T> amps, std::size_t q, M m00, M m01, M m10, M m11) {
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
        for (std::size_t j = base; j < base + stride; j++) {
            T a0 = amps[j];
            T a1 = amps[j + stride];
            amps[j] = m00 * a0 + m01 * a1;
            amps[j + stride] = m10 * a0 + m11 * a1;
        }
    }
}

// Acts with the 2x2 block on the target wherever the control bit is set.
template <typename T, typename M>
void kernel_controlled(std::span<T> amps, std::size_t control, std::size_t target, M m00, M m01, M m10, M m11) {
    const std::size_t lo = std::min(control, target);
    const std::size_t hi = std::max(control, target);
    const std::size_t cmask = std::size_t{1} << control;
    const std::size_t tmask = std::size_t{1} << target;
    const std::size_t quarter = amps.size() >> 2;
    for (std::size_t k = 0; k < quarter; k++) {
        std::size_t i0 = insert_zero_bit(insert_zero_bit(k, lo), hi) | cmask;
        std::size_t i1 = i0 | tmask;
        T a0 = amps[i0];
        T a1 = amps[i1];
        amps[i0] = m00 * a0 + m01 * a1;
        amps[i1] = m10 * a0 + m11 * a1;
    }
}

template <typename T, typename Extract>
void apply_gate(std::span<T> amps, std::size_t num_qubits, const Gate &g, Extract extract) {
    for (std::size_t i = 0; i < g.num_qubits(); i++) {
        if (g.qubits[i] >= num_qubits) {
            throw SimulationError("operand out of range");
        }
    }
    if (g.kind == GateKind::GPhase) {
        auto p = extract(gate_matrix(g)(0, 0));
        for (T &a : amps) {
            a *= p;
        }
        return;
    }
    if (g.num_qubits() == 1) {
        Matrix m = gate_matrix(g);
        kernel_1q(amps, g.qubits[0], extract(m(0, 0)), extract(m(0, 1)), extract(m(1, 0)), extract(m(1, 1)));
        return;
    }
    if (g.qubits[0] == g.qubits[1]) {
        throw SimulationError("duplicate operands");
    }
    if (g.kind == GateKind::F) {
        // Hot path for synthesized circuits: avoid building a Matrix.
        double c = std::cos(g.angle.radians());
        double s = std::sin(g.angle.radians());
        kernel_controlled(amps, g.control(), g.target(), c, -s, s, c);
        return;
    }
    Matrix b = controlled_block(g);
    kernel_controlled(amps, g.control(), g.target(), extract(b(0, 0)), extract(b(0, 1)), extract(b(1, 0)),
                      extract(b(1, 1)));
}

template <typename State>
void check_register(const Circuit &c, const State &s) {
    if (c.num_qubits != s.num_qubits()) {
        throw SimulationError("circuit has " + std::to_string(c.num_qubits) + " qubits but state has " +
                              std::to_string(s.num_qubits()));
    }
}

}  // namespace

ComplexState init_basis(std::size_t num_qubits, std::uint64_t basis_index) {
    return ComplexState::basis(num_qubits, basis_index);
}

void apply_in_place(ComplexState &s, const Gate &g) {
    apply_gate(s.amplitudes(), s.num_qubits(), g, [](Complex v) { return v; });
}

void apply_in_place(RealState &s, const Gate &g) {
    if (!is_real(g)) {
        throw SimulationError("non-real gate in real engine: " + std::string(gate_info(g.kind).mnemonic));
    }
    // is_real guarantees every matrix entry has an exactly zero imaginary part.
    apply_gate(s.amplitudes(), s.num_qubits(), g, [](Complex v) { return v.real(); });
}

ComplexState apply_complex(ComplexState s, const Gate &g) {
    apply_in_place(s, g);
    return s;
}

RealState apply_real(RealState s, const Gate &g) {
    apply_in_place(s, g);
    return s;
}

namespace {

template <typename State>
State run(const Circuit &c, State s) {
    check_register(c, s);
    for (std::size_t k = 0; k < c.gates.size(); k++) {
        try {
            apply_in_place(s, c.gates[k]);
        } catch (const SimulationError &e) {
            throw SimulationError(std::string(e.what()) + " at gate " + std::to_string(k), k);
        }
    }
    return s;
}

}  // namespace

ComplexState run_complex(const Circuit &c, ComplexState init) {
    return run(c, std::move(init));
}

RealState run_real(const Circuit &c, RealState init) {
    return run(c, std::move(init));
}

Distribution distribution(const ComplexState &s) {
    Distribution d;
    d.probabilities.reserve(s.size());
    for (const Complex &a : s.amplitudes()) {
        d.probabilities.push_back(std::norm(a));
    }
    return d;
}

Distribution distribution(const RealState &s) {
    Distribution d;
    d.probabilities.reserve(s.size());
    for (double a : s.amplitudes()) {
        d.probabilities.push_back(a * a);
    }
    return d;
}

std::vector<std::uint64_t> sample(const Distribution &d, std::uint64_t shots, std::uint64_t seed) {
    const auto &p = d.probabilities;
    std::vector<std::uint64_t> counts(p.size(), 0);
    if (p.empty() || shots == 0) {
        return counts;
    }
    std::vector<double> cdf(p.size());
    double acc = 0;
    for (std::size_t i = 0; i < p.size(); i++) {
        acc += p[i];
        cdf[i] = acc;
    }
    const double total = acc;
    // Last outcome with nonzero weight; absorbs draws that land past the
    // rounded-down end of the CDF.
    std::size_t last = p.size() - 1;
    while (last > 0 && p[last] <= 0) {
        last--;
    }
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < shots; s++) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        std::size_t idx = std::min(static_cast<std::size_t>(it - cdf.begin()), last);
        counts[idx]++;
    }
    return counts;
}

Matrix circuit_unitary(const Circuit &c) {
    const std::size_t dim = std::size_t{1} << c.num_qubits;
    Matrix u(dim);
    for (std::size_t col = 0; col < dim; col++) {
        ComplexState s = run_complex(c, init_basis(c.num_qubits, col));
        for (std::size_t row = 0; row < dim; row++) {
            u(row, col) = s[row];
        }
    }
    return u;
}

double l2_distance(const ComplexState &a, const ComplexState &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("l2_distance: state size mismatch");
    }
    double acc = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        acc += std::norm(a[i] - b[i]);
    }
    return std::sqrt(acc);
}

}  // namespace rqc
