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

#include "rqc/encoding.h"

namespace rqc {

EncodedLayout::EncodedLayout(std::size_t num_data, bool with_work_ancilla) : num_data_(num_data) {
    if (num_data == 0) {
        throw std::invalid_argument("encoded layout needs at least one data qubit");
    }
    if (with_work_ancilla) {
        work_ = static_cast<QubitIndex>(num_data + 1);
    }
}

RealState encode(const ComplexState &s) {
    return encode(s, EncodedLayout(s.num_qubits()));
}

RealState encode(const ComplexState &s, const EncodedLayout &layout) {
    if (s.num_qubits() != layout.num_data()) {
        throw std::invalid_argument("encode: state does not match layout");
    }
    RealState out(layout.total_qubits());
    const std::size_t dim = s.size();
    const std::size_t offset = layout.work_ancilla() ? (std::size_t{1} << *layout.work_ancilla()) : 0;
    for (std::size_t j = 0; j < dim; j++) {
        out[offset + j] = s[j].real();
        out[offset + dim + j] = s[j].imag();
    }
    return out;
}

ComplexState decode(const RealState &s, const EncodedLayout &layout) {
    if (s.num_qubits() != layout.total_qubits()) {
        throw std::invalid_argument("decode: state does not match layout");
    }
    ComplexState out(layout.num_data());
    const std::size_t dim = out.size();
    const std::size_t offset = layout.work_ancilla() ? (std::size_t{1} << *layout.work_ancilla()) : 0;
    for (std::size_t j = 0; j < dim; j++) {
        out[j] = Complex(s[offset + j], s[offset + dim + j]);
    }
    return out;
}

double work_ancilla_leak(const RealState &s, const EncodedLayout &layout) {
    if (!layout.work_ancilla()) {
        return 0.0;
    }
    const std::size_t half = std::size_t{1} << *layout.work_ancilla();
    double leaked = 0;
    for (std::size_t i = 0; i < half; i++) {
        leaked += s[i] * s[i];
    }
    return leaked;
}

Distribution marginal_distribution(const RealState &s, const EncodedLayout &layout) {
    if (s.num_qubits() != layout.total_qubits()) {
        throw std::invalid_argument("marginal_distribution: state does not match layout");
    }
    double leaked = work_ancilla_leak(s, layout);
    if (leaked > kWorkLeakTolerance) {
        throw WorkAncillaLeak(leaked);
    }
    const std::size_t dim = std::size_t{1} << layout.num_data();
    Distribution d;
    d.probabilities.assign(dim, 0.0);
    for (std::size_t i = 0; i < s.size(); i++) {
        d.probabilities[i & (dim - 1)] += s[i] * s[i];
    }
    return d;
}

Gate global_phase_gate(double alpha, const EncodedLayout &layout) {
    return ry(layout.ri_ancilla(), alpha);
}

}  // namespace rqc
