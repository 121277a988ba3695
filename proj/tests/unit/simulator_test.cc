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

#include <cmath>
#include <random>

#include "../support/oracles.h"
#include "rqc/library.h"
#include "rqc/simulator.h"

using namespace rqc;
using rqc::testing::random_state;

namespace {

std::vector<Complex> amplitudes(const ComplexState &s) {
    return {s.amplitudes().begin(), s.amplitudes().end()};
}

}  // namespace

TEST_CASE("init_basis follows the qubit-0-is-LSB convention") {
    CHECK(init_basis(1, 0)[0] == Complex(1));
    ComplexState s = init_basis(2, 3);
    CHECK(s[3] == Complex(1));
    ComplexState t = init_basis(3, 5);
    CHECK(t[0b101] == Complex(1));
    CHECK(t.norm() == 1.0);
    CHECK_THROWS_AS(init_basis(2, 4), std::out_of_range);
}

TEST_CASE("F(pi/2) acts on |10> and |11> as displayed") {
    // Control is qubit 1 and target qubit 0, so basis |c t> is index 2c + t.
    Gate f = f_gate(1, 0, kPi / 2);
    ComplexState a = apply_complex(init_basis(2, 0b10), f);
    CHECK(std::abs(a[0b11] - Complex(1)) < 1e-15);
    CHECK(std::abs(a[0b10]) < 1e-15);
    ComplexState b = apply_complex(init_basis(2, 0b11), f);
    CHECK(std::abs(b[0b10] - Complex(-1)) < 1e-15);
    CHECK(std::abs(b[0b11]) < 1e-15);
}

TEST_CASE("Rz adds tau to the |1> phase") {
    const double tau = 0.83;
    const double r = 1 / std::sqrt(2.0);
    ComplexState s(1, {r, r});
    ComplexState out = apply_complex(s, rz(0, tau));
    CHECK(std::abs(out[0] - r) < 1e-15);
    CHECK(std::abs(out[1] - std::polar(r, tau)) < 1e-15);
}

TEST_CASE("real engine: F(phi) on |10> and H on |0>") {
    const double phi = 2 * M_PI * (std::sqrt(5.0) - 1) / 2;
    RealState s = apply_real(RealState::basis(2, 0b10), f_gate(1, 0, phi));
    CHECK(s[0b10] == doctest::Approx(std::cos(phi)).epsilon(1e-15));
    CHECK(s[0b11] == doctest::Approx(std::sin(phi)).epsilon(1e-15));
    RealState h = apply_real(RealState::basis(1, 0), make_gate(GateKind::H, 0));
    CHECK(h[0] == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(h[1] == doctest::Approx(1 / std::sqrt(2.0)));
}

TEST_CASE("real engine rejects non-real gates") {
    RealState s = RealState::basis(1, 0);
    CHECK_THROWS_WITH_AS(apply_real(s, rz(0, kPi / 4)), doctest::Contains("non-real gate in real engine"),
                         SimulationError);
    Circuit c(1, {make_gate(GateKind::H, 0), make_gate(GateKind::S, 0)});
    try {
        run_real(c, s);
        FAIL("expected an error");
    } catch (const SimulationError &e) {
        CHECK(e.gate_index() == 1);
    }
}

TEST_CASE("run: empty circuit, involution, QFT") {
    ComplexState s = init_basis(2, 1);
    CHECK(run_complex(Circuit(2), s) == s);

    Circuit hh(1, {make_gate(GateKind::H, 0), make_gate(GateKind::H, 0)});
    ComplexState back = run_complex(hh, init_basis(1, 0));
    CHECK(std::abs(back[0] - Complex(1)) < 1e-12);
    CHECK(std::abs(back[1]) < 1e-12);

    Distribution d = distribution(run_complex(qft_circuit(3), init_basis(3, 0)));
    for (double p : d.probabilities) {
        CHECK(p == doctest::Approx(0.125).epsilon(1e-9));
    }
}

TEST_CASE("QFT amplitudes match the analytic transform") {
    for (std::size_t n = 1; n <= 4; n++) {
        const std::size_t dim = std::size_t{1} << n;
        Circuit qft = qft_circuit(n);
        for (std::size_t x = 0; x < dim; x++) {
            ComplexState out = run_complex(qft, init_basis(n, x));
            for (std::size_t y = 0; y < dim; y++) {
                Complex want = std::polar(1 / std::sqrt(double(dim)), 2 * M_PI * double(x * y) / double(dim));
                CHECK(std::abs(out[y] - want) < 1e-12);
            }
        }
    }
}

TEST_CASE("engines agree with the dense-matrix oracle") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; trial++) {
        std::size_t n = 1 + trial % 4;
        Circuit c = random_circuit(n, 25, rng);
        ComplexState init = random_state(n, rng);
        ComplexState got = run_complex(c, init);
        auto want = rqc::testing::mat_vec(rqc::testing::reference_unitary(c), amplitudes(init));
        for (std::size_t i = 0; i < want.size(); i++) {
            CHECK(std::abs(got[i] - want[i]) < 1e-12);
        }
    }
}

TEST_CASE("engine agreement on real circuits") {
    std::mt19937_64 rng(6);
    const std::vector<GateKind> real_kinds = {GateKind::X, GateKind::Z, GateKind::H, GateKind::Ry,
                                              GateKind::CX, GateKind::CZ, GateKind::F};
    for (int trial = 0; trial < 50; trial++) {
        std::size_t n = 2 + trial % 4;
        Circuit c(n);
        std::uniform_int_distribution<std::size_t> kind(0, real_kinds.size() - 1);
        std::uniform_int_distribution<QubitIndex> q(0, static_cast<QubitIndex>(n - 1));
        std::uniform_real_distribution<double> angle(-7, 7);
        for (int i = 0; i < 40; i++) {
            Gate g;
            g.kind = real_kinds[kind(rng)];
            g.angle = Angle(g.has_angle() ? angle(rng) : 0.0);
            g.qubits[0] = q(rng);
            do {
                g.qubits[1] = q(rng);
            } while (g.num_qubits() == 2 && g.qubits[1] == g.qubits[0]);
            c.append(g);
        }
        std::uint64_t basis = rng() % (std::uint64_t{1} << n);
        ComplexState cs = run_complex(c, init_basis(n, basis));
        RealState rs = run_real(c, RealState::basis(n, basis));
        for (std::size_t i = 0; i < cs.size(); i++) {
            CHECK(std::fabs(cs[i].real() - rs[i]) <= 1e-12);
            CHECK(std::fabs(cs[i].imag()) <= 1e-12);
        }
    }
}

TEST_CASE("norm preservation over long circuits") {
    std::mt19937_64 rng(7);
    Circuit c = random_circuit(5, 1000, rng);
    ComplexState s = run_complex(c, random_state(5, rng));
    CHECK(std::fabs(s.norm() - 1) <= 1e-9);
}

TEST_CASE("linearity") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> coef(-2, 2);
    for (int trial = 0; trial < 30; trial++) {
        Circuit c = random_circuit(3, 1, rng);
        const Gate &g = c.gates[0];
        ComplexState s1 = random_state(3, rng), s2 = random_state(3, rng);
        double a = coef(rng), b = coef(rng);
        ComplexState mix(3);
        for (std::size_t i = 0; i < mix.size(); i++) {
            mix[i] = a * s1[i] + b * s2[i];
        }
        ComplexState lhs = apply_complex(mix, g);
        ComplexState r1 = apply_complex(s1, g), r2 = apply_complex(s2, g);
        for (std::size_t i = 0; i < lhs.size(); i++) {
            CHECK(std::abs(lhs[i] - (a * r1[i] + b * r2[i])) <= 1e-12);
        }
    }
}

TEST_CASE("single-qubit kernels touch only the operand's pairs") {
    std::mt19937_64 rng(9);
    ComplexState s = random_state(4, rng);
    // Zero every amplitude except indices 0b0000 and 0b0100, then act on qubit 1.
    for (std::size_t i = 0; i < s.size(); i++) {
        if (i != 0b0000 && i != 0b0100) {
            s[i] = 0;
        }
    }
    ComplexState out = apply_complex(s, make_gate(GateKind::H, 1));
    for (std::size_t i = 0; i < out.size(); i++) {
        bool in_orbit = (i & ~std::size_t{0b0010}) == 0b0000 || (i & ~std::size_t{0b0010}) == 0b0100;
        if (!in_orbit) {
            CHECK(out[i] == Complex(0));
        }
    }
}

TEST_CASE("distribution") {
    const double r = 1 / std::sqrt(2.0);
    Distribution d = distribution(ComplexState(1, {r, Complex(0, r)}));
    CHECK(d.probabilities[0] == doctest::Approx(0.5));
    CHECK(d.probabilities[1] == doctest::Approx(0.5));
    CHECK(distribution(init_basis(2, 3)).probabilities == std::vector<double>{0, 0, 0, 1});

    std::mt19937_64 rng(10);
    for (int i = 0; i < 20; i++) {
        ComplexState s = random_state(4, rng);
        Distribution p = distribution(s);
        double sum = 0;
        for (std::size_t j = 0; j < s.size(); j++) {
            CHECK(p.probabilities[j] == doctest::Approx(std::norm(s[j])).epsilon(1e-14));
            sum += p.probabilities[j];
        }
        CHECK(std::fabs(sum - 1) <= 1e-12);
    }
}

TEST_CASE("sample") {
    auto point = sample(Distribution{{1.0}}, 100, 3);
    CHECK(point == std::vector<std::uint64_t>{100});

    Distribution uniform{{0.25, 0.25, 0.25, 0.25}};
    const std::uint64_t shots = 1'000'000;
    auto counts = sample(uniform, shots, 42);
    std::uint64_t total = 0;
    // Binomial(10^6, 1/4): sigma = sqrt(10^6 * 0.25 * 0.75).
    const double sigma = std::sqrt(shots * 0.25 * 0.75);
    for (auto c : counts) {
        CHECK(std::fabs(double(c) - 250000.0) <= 4 * sigma);
        total += c;
    }
    CHECK(total == shots);
    CHECK(sample(uniform, 1000, 7) == sample(uniform, 1000, 7));
    CHECK(sample(Distribution{{0.0, 1.0, 0.0}}, 50, 1) == std::vector<std::uint64_t>{0, 50, 0});
}
