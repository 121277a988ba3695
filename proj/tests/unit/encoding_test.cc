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

#include <doctest.h>

#include <random>

#include "../support/oracles.h"
#include "rqc/encoding.h"

using namespace rqc;
using rqc::testing::random_state;

TEST_CASE("encode: (|0> + i|1>)/sqrt2 -> (|0>|R> + |1>|I>)/sqrt2") {
    const double r = 1 / std::sqrt(2.0);
    RealState e = encode(ComplexState(1, {r, Complex(0, r)}));
    REQUIRE(e.num_qubits() == 2);
    // Index = j + 2 * (R-I bit).
    CHECK(e[0b00] == r);  // |0>|R>
    CHECK(e[0b01] == 0);  // |1>|R>
    CHECK(e[0b10] == 0);  // |0>|I>
    CHECK(e[0b11] == r);  // |1>|I>
    CHECK(encode(init_basis(1, 0)) == RealState::basis(2, 0));
}

TEST_CASE("decode inverts encode") {
    const double r = 1 / std::sqrt(2.0);
    EncodedLayout layout(1);
    ComplexState d = decode(RealState(2, {r, 0, 0, r}), layout);
    CHECK(d[0] == Complex(r, 0));
    CHECK(d[1] == Complex(0, r));
    ComplexState i_j = decode(RealState::basis(3, 0b110), EncodedLayout(2));
    CHECK(i_j[0b10] == Complex(0, 1));

    std::mt19937_64 rng(20);
    for (int i = 0; i < 1000; i++) {
        std::size_t n = 1 + i % 5;
        ComplexState s = random_state(n, rng);
        RealState e = encode(s);
        CHECK(decode(e, EncodedLayout(n)) == s);
        CHECK(std::fabs(e.norm() - s.norm()) <= 1e-15);
        CHECK(encode(decode(e, EncodedLayout(n))) == e);
    }
}

TEST_CASE("layout with work ancilla") {
    EncodedLayout layout(3, true);
    CHECK(layout.ri_ancilla() == 3);
    CHECK(layout.work_ancilla() == 4u);
    CHECK(layout.total_qubits() == 5);

    std::mt19937_64 rng(21);
    ComplexState s = random_state(3, rng);
    RealState e = encode(s, layout);
    CHECK(work_ancilla_leak(e, layout) == 0);
    CHECK(decode(e, layout) == s);
}

TEST_CASE("marginal distribution matches the data-qubit distribution") {
    const double r = 1 / std::sqrt(2.0);
    Distribution d = marginal_distribution(encode(ComplexState(1, {r, Complex(0, r)})), EncodedLayout(1));
    CHECK(d.probabilities[0] == doctest::Approx(0.5));
    CHECK(d.probabilities[1] == doctest::Approx(0.5));

    Distribution point = marginal_distribution(RealState::basis(3, 0b010), EncodedLayout(2));
    CHECK(point.probabilities == std::vector<double>{0, 0, 1, 0});

    std::mt19937_64 rng(22);
    for (int i = 0; i < 200; i++) {
        std::size_t n = 1 + i % 5;
        EncodedLayout layout(n, i % 2 == 0);
        ComplexState s = random_state(n, rng);
        Distribution m = marginal_distribution(encode(s, layout), layout);
        Distribution want = distribution(s);
        for (std::size_t j = 0; j < want.probabilities.size(); j++) {
            CHECK(std::fabs(m.probabilities[j] - want.probabilities[j]) <= 1e-12);
        }
    }
}

TEST_CASE("marginal distribution flags a leaked work ancilla") {
    EncodedLayout layout(1, true);
    RealState bad = RealState::basis(3, 0b000);  // work ancilla in |0>
    CHECK_THROWS_AS(marginal_distribution(bad, layout), WorkAncillaLeak);
}

TEST_CASE("global_phase_gate maps encode(s) to encode(e^{i alpha} s)") {
    EncodedLayout layout(1);
    Gate zero = global_phase_gate(0, layout);
    RealState e0 = encode(init_basis(1, 1));
    CHECK(apply_real(e0, zero) == e0);

    RealState rotated = apply_real(encode(init_basis(1, 0)), global_phase_gate(kPi / 2, layout));
    CHECK(std::fabs(rotated[0b00]) < 1e-16);
    CHECK(rotated[0b10] == doctest::Approx(1.0));

    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> angle(-10, 10);
    for (int i = 0; i < 200; i++) {
        std::size_t n = 1 + i % 4;
        EncodedLayout lay(n);
        ComplexState s = random_state(n, rng);
        double alpha = angle(rng);
        ComplexState got = decode(apply_real(encode(s), global_phase_gate(alpha, lay)), lay);
        ComplexState want = s;
        for (std::size_t j = 0; j < want.size(); j++) {
            want[j] *= std::polar(1.0, alpha);
        }
        CHECK(rqc::testing::max_abs_diff(got, want) <= 1e-12);
    }
}
