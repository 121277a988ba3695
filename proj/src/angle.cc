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

#include "rqc/angle.h"

#include <stdexcept>
#include <string>

namespace rqc {

Angle::Angle(double radians) : radians_(radians) {
    if (!std::isfinite(radians)) {
        throw std::invalid_argument("angle must be finite, got " + std::to_string(radians));
    }
}

double wrap_two_pi(double radians) {
    double r = std::fmod(radians, kTwoPi);
    if (r < 0) {
        r += kTwoPi;
    }
    // fmod of a tiny negative number can round back up to exactly 2pi.
    if (r >= kTwoPi) {
        r = 0.0;
    }
    return r;
}

double circular_distance(double a, double b) {
    double d = wrap_two_pi(a - b);
    return d > kPi ? kTwoPi - d : d;
}

std::optional<long long> multiple_of_pi(double radians) {
    double n = std::nearbyint(radians / kPi);
    if (std::fabs(n) > 1e15) {
        return std::nullopt;
    }
    double tol = 2e-15 * std::fmax(1.0, std::fabs(radians));
    if (std::fabs(radians - n * kPi) <= tol) {
        return static_cast<long long>(n);
    }
    return std::nullopt;
}

}  // namespace rqc
