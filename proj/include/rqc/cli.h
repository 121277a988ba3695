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

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "rqc/circuit.h"
#include "rqc/transpiler.h"

namespace rqc::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kParseError = 1,
    kValidationError = 2,
    kNotReachable = 3,
    kVerifyFailed = 4,
};

/// In-process hooks for tests.
struct Hooks {
    /// Passed through to verify_circuit's tamper hook.
    std::function<void(LoweringLevel, Circuit &)> tamper;
};

/// Runs `rqc <subcommand> ...`. `args` excludes the program name. Returns the
/// process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, const Hooks &hooks = {});

}  // namespace rqc::cli
