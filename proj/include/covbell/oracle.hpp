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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "covbell/observables.hpp"

namespace covbell {

/// Outcome of comparing a closed form against an independent brute-force
/// computation.
struct OracleReport {
    std::string quantity;
    std::string parameters;
    double closed_form = 0.0;
    double brute_force = 0.0;
    double abs_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

inline constexpr double kWignerAngleOracleTolerance = 1e-10;
inline constexpr double kBoostedStateOracleTolerance = 1e-12;
inline constexpr double kExpectationOracleTolerance = 1e-10;

/// Reference frame used by every oracle: observer boost beta along +x, unit
/// mass particles with rapidity delta along +z and -z.
struct CanonicalFrame {
    LorentzMatrix boost;
    FourVector momentum_a;
    FourVector momentum_b;
    LorentzMatrix little_group_a;
    LorentzMatrix little_group_b;
};

CanonicalFrame canonical_frame(double beta, double delta, const Tolerances& tol = kDefaultTolerances);

/// Closed-form Wigner angle against the angle about y extracted from
/// L^-1(Lambda p) Lambda L(p).
OracleReport oracle_wigner_angle(double beta, double delta, double tolerance = kWignerAngleOracleTolerance);

/// Closed-form boosted Bell state against D(W_a) (x) D(W_b) applied to the
/// rest-frame Bell state. abs_error is the largest amplitude deviation;
/// closed_form is 1 and brute_force the overlap |<analytic|pipeline>|.
OracleReport oracle_boosted_state(BellKind kind, double beta, double delta,
                                  double tolerance = kBoostedStateOracleTolerance);

/// Closed-form correlation against <psi'| M(a_R) (x) M(b_R) |psi'> with the
/// axes rotated by the spatial blocks of the little-group elements and the
/// operator assembled as an explicit 4x4 matrix.
OracleReport oracle_expectation(BellKind kind, const MeasurementAxis& a, const MeasurementAxis& b, double beta,
                                double delta, double tolerance = kExpectationOracleTolerance);

enum class VerifyGrid { Full, Coarse };

struct VerifyConfig {
    VerifyGrid grid = VerifyGrid::Full;
    /// Replaces every per-oracle tolerance when set.
    std::optional<double> tolerance;
    std::uint64_t seed = 20040817;
};

struct VerifyGridSize {
    int wigner_side;
    int state_side;
    int expectation_trials;
};

VerifyGridSize grid_size(VerifyGrid grid);

struct VerificationSummary {
    std::vector<OracleReport> reports;
    bool all_pass() const;
    std::size_t failures() const;
};

/// Runs every oracle over its grid: Wigner angle on beta x delta, boosted
/// states for all four Bell kinds, and random-axis expectation values.
/// Ranges are beta in [0, 0.99] and delta in [0, 5].
VerificationSummary run_verification(const VerifyConfig& config = {});

/// Evenly spaced points lo, ..., hi (count >= 2).
std::vector<double> linspace(double lo, double hi, int count);

}  // namespace covbell
