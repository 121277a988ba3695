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

#include "rqc/library.h"
#include "rqc/text_io.h"

using namespace rqc;

TEST_CASE("parse: single rz") {
    Circuit c = parse_circuit("qubits 1\nrz 0 3.141592653589793");
    CHECK(c == Circuit(1, {rz(0, 3.141592653589793)}));
}

TEST_CASE("parse: F(pi/2) lists control then target") {
    Circuit c = parse_circuit("qubits 2\nf 0 1 1.5707963267948966");
    REQUIRE(c.gates.size() == 1);
    CHECK(c.gates[0].kind == GateKind::F);
    CHECK(c.gates[0].control() == 0);
    CHECK(c.gates[0].target() == 1);
    CHECK(c.gates[0].angle.radians() == kPi / 2);
}

TEST_CASE("parse: comments, blank lines, CRLF and tabs") {
    Circuit c = parse_circuit("# header comment\r\n\r\nqubits 3   # three\r\n\th 2\r\ncx 0 1 # bell\r\ngphase -0.25\r\n");
    CHECK(c.num_qubits == 3);
    REQUIRE(c.gates.size() == 3);
    CHECK(c.gates[0] == make_gate(GateKind::H, 2));
    CHECK(c.gates[1] == make_gate(GateKind::CX, 0, 1));
    CHECK(c.gates[2] == gphase(-0.25));
}

TEST_CASE("parse errors carry line, column and kind") {
    struct Case {
        const char *text;
        std::size_t line;
        std::size_t column;
        ParseError::Kind kind;
    };
    const Case cases[] = {
        {"qubits 2\ncx 0", 2, 5, ParseError::Kind::Syntax},
        {"qubits 2\nfoo 0", 2, 1, ParseError::Kind::Syntax},
        {"h 0\nqubits 1", 1, 1, ParseError::Kind::Syntax},
        {"", 1, 1, ParseError::Kind::Syntax},
        {"qubits 1\nqubits 1", 2, 1, ParseError::Kind::Syntax},
        {"qubits 1\nrz 0 1.5e", 2, 6, ParseError::Kind::Syntax},
        {"qubits 1\nrz 0 pi/2", 2, 6, ParseError::Kind::Syntax},
        {"qubits 0", 1, 8, ParseError::Kind::Syntax},
        {"qubits 2\nh -1", 2, 3, ParseError::Kind::Syntax},
        {"qubits 3\nf 0 3 0.5", 2, 5, ParseError::Kind::Validation},
        {"qubits 2\ncx 1 1", 2, 6, ParseError::Kind::Validation},
        {"qubits 1\nry 0 nan", 2, 6, ParseError::Kind::Validation},
        {"qubits 1\nh 0 0.5", 2, 5, ParseError::Kind::Syntax},
    };
    for (const Case &tc : cases) {
        CAPTURE(tc.text);
        try {
            parse_circuit(tc.text);
            FAIL("expected a parse error");
        } catch (const ParseError &e) {
            CHECK(e.line() == tc.line);
            CHECK(e.column() == tc.column);
            CHECK(e.kind() == tc.kind);
        }
    }
}

TEST_CASE("first error wins") {
    try {
        parse_circuit("qubits 1\nbogus\nrz 0 x");
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("emit: canonical form") {
    CHECK(emit_circuit(Circuit(1, {ry(0, 0.5)})) == "qubits 1\nry 0 0.5\n");
    CHECK(emit_circuit(Circuit(2, {f_gate(0, 1, kPi / 2)})) == "qubits 2\nf 0 1 1.5707963267948966\n");
    CHECK(emit_circuit(Circuit(3)) == "qubits 3\n");
}

TEST_CASE("round trip and canonical idempotence on random circuits") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; i++) {
        Circuit c = random_circuit(1 + i % 6, i % 25, rng);
        std::string text = emit_circuit(c);
        Circuit back = parse_circuit(text);
        CHECK(back == c);
        CHECK(emit_circuit(back) == text);
    }
}
