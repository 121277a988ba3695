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

#include "rqc/synth.h"

#include <cmath>
#include <string>

namespace rqc {

namespace {

#if defined(__SIZEOF_FLOAT128__)
using Wide = __float128;
#else
using Wide = long double;
#endif

// 2pi as an unevaluated double-double sum.
constexpr double kTwoPiHi = 6.283185307179586;
constexpr double kTwoPiLo = 2.4492935982947064e-16;

const Wide kTwoPiWide = Wide(kTwoPiHi) + Wide(kTwoPiLo);

struct DoubleDouble {
    double hi = 0;
    double lo = 0;
};

inline DoubleDouble two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline DoubleDouble fast_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline DoubleDouble add(DoubleDouble x, DoubleDouble y) {
    DoubleDouble s = two_sum(x.hi, y.hi);
    return fast_two_sum(s.hi, s.lo + x.lo + y.lo);
}

inline DoubleDouble negate(DoubleDouble x) {
    return {-x.hi, -x.lo};
}

inline bool less(DoubleDouble x, DoubleDouble y) {
    return x.hi < y.hi || (x.hi == y.hi && x.lo < y.lo);
}

DoubleDouble to_dd(Wide w) {
    double hi = static_cast<double>(w);
    double lo = static_cast<double>(w - Wide(hi));
    return fast_two_sum(hi, lo);
}

Wide wide_mod_two_pi(Wide x) {
    long long n = static_cast<long long>(x / kTwoPiWide);
    Wide r = x - Wide(n) * kTwoPiWide;
    while (r < 0) {
        r += kTwoPiWide;
    }
    while (r >= kTwoPiWide) {
        r -= kTwoPiWide;
    }
    return r;
}

Wide wide_multiple(std::uint64_t k, double phi) {
    return wide_mod_two_pi(Wide(k) * Wide(phi));
}

constexpr DoubleDouble kTwoPiDd{kTwoPiHi, kTwoPiLo};

// Circular distance between two points already reduced into [0, 2pi).
double circle_gap(DoubleDouble x, DoubleDouble t) {
    DoubleDouble d = add(x, negate(t));
    if (d.hi < 0) {
        d = add(d, kTwoPiDd);
    }
    DoubleDouble other = add(kTwoPiDd, negate(d));
    DoubleDouble m = less(other, d) ? other : d;
    return m.hi + m.lo;
}

constexpr std::uint64_t kReanchorPeriod = std::uint64_t{1} << 16;

}  // namespace

double default_phi() {
    return kTwoPi * (std::sqrt(5.0) - 1.0) / 2.0;
}

void SynthConfig::check() const {
    if (!std::isfinite(phi)) {
        throw std::invalid_argument("phi must be finite");
    }
    if (!(eps > 0) || !std::isfinite(eps)) {
        throw std::invalid_argument("eps must be a positive real");
    }
    if (k_max < 1) {
        throw std::invalid_argument("k_max must be at least 1");
    }
}

NotReachable::NotReachable(std::uint64_t best_k, double best_error)
    : std::runtime_error("no k within the search limit reaches the target; best k = " + std::to_string(best_k) +
                         " with error " + std::to_string(best_error)),
      best_k_(best_k),
      best_error_(best_error) {}

double multiple_mod_two_pi(std::uint64_t k, double phi) {
    return static_cast<double>(wide_multiple(k, phi));
}

SynthesisResult synthesize(double theta, const SynthConfig &cfg) {
    cfg.check();
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("theta must be finite");
    }
    const DoubleDouble target = to_dd(wide_mod_two_pi(Wide(theta)));
    const DoubleDouble step = to_dd(wide_multiple(1, cfg.phi));

    DoubleDouble x;
    std::uint64_t best_k = 0;
    double best_err = INFINITY;
    for (std::uint64_t k = 1; k <= cfg.k_max; k++) {
        if (k % kReanchorPeriod == 0) {
            x = to_dd(wide_multiple(k, cfg.phi));
        } else {
            x = add(x, step);
            if (!less(x, kTwoPiDd)) {
                x = add(x, negate(kTwoPiDd));
            }
        }
        double err = circle_gap(x, target);
        if (err <= cfg.eps) {
            return {k, wrap_two_pi(x.hi + x.lo), err};
        }
        if (err < best_err) {
            best_err = err;
            best_k = k;
        }
    }
    throw NotReachable(best_k, best_err);
}

double synthesis_error_to_gate_error(double delta) {
    return 2.0 * std::fabs(std::sin(delta / 2.0));
}

double budget(std::span<const double> angular_errors) {
    double total = 0;
    for (double d : angular_errors) {
        total += synthesis_error_to_gate_error(d);
    }
    return total;
}

}  // namespace rqc
