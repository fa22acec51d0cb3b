// Copyright 2026 The covbell Authors
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
#include <random>

#include "covbell/observables.hpp"

namespace covbell::testing {

inline Vec3 random_unit(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    Vec3 v;
    do {
        v = Vec3(gauss(rng), gauss(rng), gauss(rng));
    } while (v.norm() < 1e-6);
    return v.normalized();
}

inline MeasurementAxis random_axis(std::mt19937_64& rng) { return MeasurementAxis(random_unit(rng)); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Amplitudes random_amplitudes(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    Amplitudes a;
    for (int i = 0; i < 4; ++i) a[i] = Complex(gauss(rng), gauss(rng));
    return a.normalized();
}

/// On-shell momentum of a unit-mass particle with random direction and
/// rapidity in [0, max_rapidity].
inline FourVector random_momentum(std::mt19937_64& rng, double mass = 1.0, double max_rapidity = 5.0) {
    return ParticleKinematics(mass, random_unit(rng), uniform(rng, 0.0, max_rapidity)).momentum();
}

}  // namespace covbell::testing
