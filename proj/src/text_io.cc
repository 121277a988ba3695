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

#include "rqc/text_io.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <vector>

namespace rqc {

ParseError::ParseError(Kind kind, std::size_t line, std::size_t column, std::string message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column),
      message_(std::move(message)) {}

namespace {

struct Token {
    std::string_view text;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
            i++;
        }
        if (i >= line.size() || line[i] == '#') {
            break;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '#') {
            i++;
        }
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

template <typename T>
std::optional<T> parse_number(std::string_view s) {
    T value{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return value;
}

class Parser {
  public:
    Circuit run(std::string_view text) {
        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t nl = text.find('\n', pos);
            std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
            if (!line.empty() && line.back() == '\r') {
                line.remove_suffix(1);
            }
            line_no++;
            statement(line_no, tokenize(line), line.size());
            if (nl == std::string_view::npos) {
                break;
            }
            pos = nl + 1;
        }
        if (!have_header_) {
            throw ParseError(ParseError::Kind::Syntax, 1, 1, "missing 'qubits <n>' header");
        }
        return std::move(circuit_);
    }

  private:
    [[noreturn]] void syntax(std::size_t line, std::size_t column, std::string msg) {
        throw ParseError(ParseError::Kind::Syntax, line, column, std::move(msg));
    }
    [[noreturn]] void invalid(std::size_t line, std::size_t column, std::string msg) {
        throw ParseError(ParseError::Kind::Validation, line, column, std::move(msg));
    }

    void statement(std::size_t line, const std::vector<Token> &toks, std::size_t line_len) {
        if (toks.empty()) {
            return;
        }
        const Token &head = toks[0];
        if (head.text == "qubits") {
            if (have_header_) {
                syntax(line, head.column, "duplicate 'qubits' header");
            }
            if (toks.size() != 2) {
                syntax(line, toks.size() > 2 ? toks[2].column : line_len + 1, "'qubits' takes exactly one argument");
            }
            auto n = parse_number<std::size_t>(toks[1].text);
            if (!n || *n == 0) {
                syntax(line, toks[1].column, "qubit count must be a positive integer");
            }
            circuit_.num_qubits = *n;
            have_header_ = true;
            return;
        }
        auto kind = gate_kind_from_mnemonic(head.text);
        if (!kind) {
            syntax(line, head.column, "unknown mnemonic '" + std::string(head.text) + "'");
        }
        if (!have_header_) {
            syntax(line, head.column, "first statement must be 'qubits <n>'");
        }
        const GateInfo &info = gate_info(*kind);
        const std::size_t expected = info.num_qubits + (info.has_angle ? 1 : 0);
        const std::size_t got = toks.size() - 1;
        if (got != expected) {
            std::size_t col = got > expected ? toks[expected + 1].column : line_len + 1;
            syntax(line, col,
                   "'" + std::string(info.mnemonic) + "' expects " + std::to_string(info.num_qubits) +
                       " operand(s)" + (info.has_angle ? " and an angle" : "") + ", got " + std::to_string(got) +
                       " argument(s)");
        }

        Gate g;
        g.kind = *kind;
        for (std::size_t i = 0; i < info.num_qubits; i++) {
            const Token &t = toks[1 + i];
            auto q = parse_number<QubitIndex>(t.text);
            if (!q) {
                syntax(line, t.column, "malformed qubit index '" + std::string(t.text) + "'");
            }
            if (*q >= circuit_.num_qubits) {
                invalid(line, t.column,
                        "operand out of range: qubit " + std::to_string(*q) + " in a " +
                            std::to_string(circuit_.num_qubits) + "-qubit register");
            }
            g.qubits[i] = *q;
        }
        if (info.num_qubits == 2 && g.qubits[0] == g.qubits[1]) {
            invalid(line, toks[2].column, "duplicate operands");
        }
        if (info.has_angle) {
            const Token &t = toks.back();
            auto v = parse_number<double>(t.text);
            if (!v) {
                syntax(line, t.column, "malformed angle '" + std::string(t.text) + "'");
            }
            if (!std::isfinite(*v)) {
                invalid(line, t.column, "non-finite angle '" + std::string(t.text) + "'");
            }
            g.angle = Angle(*v);
        }
        circuit_.gates.push_back(g);
    }

    Circuit circuit_;
    bool have_header_ = false;
};

}  // namespace

Circuit parse_circuit(std::string_view text) {
    return Parser().run(text);
}

std::string format_angle(double radians) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", radians);
    return buf;
}

std::string emit_circuit(const Circuit &c) {
    std::string out = "qubits " + std::to_string(c.num_qubits) + "\n";
    for (const Gate &g : c.gates) {
        const GateInfo &info = gate_info(g.kind);
        out += info.mnemonic;
        for (std::size_t i = 0; i < info.num_qubits; i++) {
            out += ' ';
            out += std::to_string(g.qubits[i]);
        }
        if (info.has_angle) {
            out += ' ';
            out += format_angle(g.angle.radians());
        }
        out += '\n';
    }
    return out;
}

}  // namespace rqc
