// Copyright 2026 The smoq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "smoq/angles.hpp"

#include <cmath>

namespace smoq {

double canonical_angle(double theta) noexcept {
    // Leave in-range values bit-exact.
    if (theta >= -kPi && theta < kPi) {
        return theta;
    }
    double r = std::fmod(theta + kPi, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    double out = r - kPi;
    // fmod can land exactly on the upper edge after rounding.
    if (out >= kPi) {
        out -= kTwoPi;
    }
    if (out < -kPi) {
        out = -kPi;
    }
    return out;
}

double angle_difference(double a, double b) noexcept { return canonical_angle(a - b); }

} // namespace smoq
