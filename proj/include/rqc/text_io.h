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
#include <stdexcept>
#include <string>
#include <string_view>

#include "rqc/circuit.h"

namespace rqc {

/// Error from parse(). Line and column are 1-based and point at the
/// offending token.
class ParseError : public std::runtime_error {
  public:
    /// Syntax errors are malformed text. Validation errors are well-formed
    /// statements that describe an invalid circuit (operand out of range,
    /// duplicate operands, non-finite angle).
    enum class Kind { Syntax, Validation };

    ParseError(Kind kind, std::size_t line, std::size_t column, std::string message);

    Kind kind() const { return kind_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string &message() const { return message_; }

  private:
    Kind kind_;
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

/// Parses the line-oriented `.rqc` format:
///
///     # comment
///     qubits 3
///     h 0
///     cx 0 1
///     rz 2 0.785398163397448
///     f 1 2 1.5707963267948966
///     gphase 3.14
///
/// Throws ParseError on the first problem found.
Circuit parse_circuit(std::string_view text);

/// Canonical text: header, one gate per line, angles with 17 significant
/// digits, LF line endings.
std::string emit_circuit(const Circuit &c);

/// `%.17g`: enough digits that the text reads back as the same double.
std::string format_angle(double radians);

}  // namespace rqc
