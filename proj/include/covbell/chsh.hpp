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

#include <array>
#include <optional>
#include <string_view>

#include "covbell/observables.hpp"

namespace covbell {

enum class ObservableKind { Covariant, CzachorClosedForm };

std::string_view to_string(ObservableKind kind);

/// Tsirelson bound 2 sqrt(2).
inline constexpr double kTsirelsonBound = 2.8284271247461903;

struct ChshSetting {
    MeasurementAxis a1;
    MeasurementAxis a2;
    MeasurementAxis b1;
    MeasurementAxis b2;
};

/// Order of ChshReport::correlations.
enum CorrelationIndex { kA1B1 = 0, kA1B2 = 1, kA2B1 = 2, kA2B2 = 3 };

struct ChshReport {
    ObservableKind observable = ObservableKind::Covariant;
    double value = 0.0;
    /// E(a1,b1), E(a1,b2), E(a2,b1), E(a2,b2). Absent for the Czachor curve,
    /// which is only known in closed form.
    std::optional<std::array<double, 4>> correlations;
    double omega = 0.0;
    std::optional<double> beta;
    std::optional<double> delta;
};

/// C = E(a1,b1) + E(a1,b2) + E(a2,b1) - E(a2,b2) for the covariant observable
/// on the boosted Bell state with Wigner angle `omega`.
ChshReport chsh_value(BellKind kind, const ChshSetting& setting, double omega,
                      const Tolerances& tol = kDefaultTolerances);

/// Same as chsh_value with Omega derived from the observer boost speed and
/// particle rapidity (boost along x, momenta along +z and -z).
ChshReport chsh_value_in_frame(BellKind kind, const ChshSetting& setting, double beta, double delta,
                               const Tolerances& tol = kDefaultTolerances);

/// Closed-form Czachor-observable CHSH value for the singlet.
ChshReport czachor_report(double beta, double delta);

/// Maximal-violation axes in the x-y plane; b1 = y and b2 = x for every state.
ChshSetting canonical_axes(BellKind kind);

/// Largest CHSH value attainable on a state with correlation matrix t:
/// 2 sqrt(s1^2 + s2^2) over its two largest singular values.
double horodecki_max(const CorrelationMatrix& t);

struct OptimizerSeed {
    Vec3 a1{0.8, 0.36, 0.48};
    Vec3 a2{-0.28, 0.96, 0.0};
};

struct OptimizedSetting {
    ChshSetting setting;
    double value = 0.0;
    double horodecki_bound = 0.0;
    int iterations = 0;
};

inline constexpr int kOptimizerMaxIterations = 100;
inline constexpr double kOptimizerStopChange = 1e-12;

/// Alternating (seesaw) maximisation of the CHSH functional over the four
/// axes for a fixed correlation matrix. Each half-step is the exact optimum
/// for the other pair held fixed:
///   b1 ~ T^T (a1 + a2), b2 ~ T^T (a1 - a2), a1 ~ T (b1 + b2), a2 ~ T (b1 - b2).
/// A vanishing direction (e.g. from a seed with a1 = a2) is replaced by a
/// fixed unit vector orthogonal to its partner.
/// Throws ConvergenceError when the value still moves after the iteration
/// budget.
OptimizedSetting optimize_axes(const CorrelationMatrix& t, const OptimizerSeed& seed = {});

/// Optimiser applied to the boosted Bell state with Wigner angle `omega`.
OptimizedSetting optimize_axes(BellKind kind, double omega, const OptimizerSeed& seed = {},
                               const Tolerances& tol = kDefaultTolerances);

struct CriticalBeta {
    double beta = 0.0;
    double chsh = 0.0;
    /// |C(beta)| - 2
    double residual = 0.0;
};

inline constexpr int kCriticalBetaScanPoints = 10000;
inline constexpr double kCriticalBetaTolerance = 1e-10;
inline constexpr double kCriticalBetaMaxResidual = 1e-8;

/// Smallest beta in (0, 1) at which the Czachor CHSH curve reaches |C| = 2.
/// The crossing is bracketed on the grid beta_i = i / kCriticalBetaScanPoints
/// and refined by bisection. Throws NoCrossingError when |C| > 2 at every
/// grid point.
CriticalBeta critical_beta(double delta);

}  // namespace covbell
