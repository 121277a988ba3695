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

#include <cmath>
#include <numbers>
#include <optional>

namespace rqc {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// A rotation angle in radians.
///
/// The value is stored exactly as given (no wrapping into [0, 2pi)), so
/// circuits round-trip through text bit-for-bit. Use circular_distance()
/// when two angles should be compared as points on the circle.
class Angle {
  public:
    constexpr Angle() = default;
    /// Throws std::invalid_argument for NaN or infinite values.
    explicit Angle(double radians);

    constexpr double radians() const { return radians_; }

    friend constexpr bool operator==(Angle, Angle) = default;

  private:
    double radians_ = 0.0;
};

/// Reduces an angle into [0, 2pi).
double wrap_two_pi(double radians);

/// Distance between two angles measured around the circle, in [0, pi].
double circular_distance(double a, double b);

/// If `radians` is an integer multiple of pi up to a few ulps (relative to its
/// magnitude), returns that integer.
std::optional<long long> multiple_of_pi(double radians);

}  // namespace rqc
