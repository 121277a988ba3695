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

#include <cstdint>
#include <span>
#include <stdexcept>

#include "rqc/angle.h"

namespace rqc {

/// 2pi times the fractional part of the golden ratio. Its continued fraction
/// is all ones, which spreads {k phi mod 2pi} as evenly as possible.
double default_phi();

struct SynthConfig {
    double phi = default_phi();
    double eps = 1e-3;
    std::uint64_t k_max = 1'000'000;

    /// Throws std::invalid_argument unless phi is finite, eps > 0, k_max >= 1.
    void check() const;
};

/// F(theta) ~ G^k = F(k phi mod 2pi).
struct SynthesisResult {
    std::uint64_t k = 0;
    double achieved = 0;  // k phi mod 2pi, in [0, 2pi)
    double error = 0;     // circular distance from achieved to theta
};

class NotReachable : public std::runtime_error {
  public:
    NotReachable(std::uint64_t best_k, double best_error);
    std::uint64_t best_k() const { return best_k_; }
    double best_error() const { return best_error_; }

  private:
    std::uint64_t best_k_;
    double best_error_;
};

/// Smallest k in [1, k_max] whose k phi mod 2pi lies within eps of theta.
///
/// Scans k incrementally with a double-double accumulator and re-anchors it
/// against an extended-precision k phi mod 2pi every 2^16 steps. Throws
/// NotReachable with the closest k seen when no k qualifies.
SynthesisResult synthesize(double theta, const SynthConfig &cfg);

/// k phi mod 2pi evaluated directly in extended precision, in [0, 2pi).
double multiple_mod_two_pi(std::uint64_t k, double phi);

/// Operator-norm distance between F(theta) and F(theta + delta): 2|sin(delta/2)|.
double synthesis_error_to_gate_error(double delta);

/// Sum of synthesis_error_to_gate_error over the per-gate angular errors.
/// Bounds the l2 distance between exact and synthesized circuit outputs.
double budget(std::span<const double> angular_errors);

}  // namespace rqc
