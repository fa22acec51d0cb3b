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

#include "covbell/oracle.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace covbell;
using covbell::testing::random_axis;
using covbell::testing::uniform;

TEST(oracle_wigner_angle, no_boost) {
    const OracleReport r = oracle_wigner_angle(0.0, 2.0);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.closed_form, 0.0);
    EXPECT_NEAR(r.brute_force, 0.0, 1e-15);
}

TEST(oracle_wigner_angle, unit_rapidities) {
    const OracleReport r = oracle_wigner_angle(std::tanh(1.0), 1.0);
    EXPECT_TRUE(r.pass);
    EXPECT_NEAR(r.closed_form, 0.42078396163807291, 1e-12);
    EXPECT_NEAR(r.brute_force, 0.42078396163807291, 1e-10);
    EXPECT_EQ(r.tolerance, kWignerAngleOracleTolerance);
}

TEST(oracle_wigner_angle, grid_passes) {
    for (double beta : linspace(0.0, 0.99, 50)) {
        for (double delta : linspace(0.0, 5.0, 50)) {
            const OracleReport r = oracle_wigner_angle(beta, delta);
            ASSERT_TRUE(r.pass) << r.parameters << " err=" << r.abs_error;
        }
    }
}

TEST(oracle_boosted_state, invariant_state_has_no_deviation) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        const OracleReport r = oracle_boosted_state(BellKind::PhiMinus, uniform(rng, 0.0, 0.99), uniform(rng, 0.0, 5.0));
        ASSERT_TRUE(r.pass);
        ASSERT_LE(r.abs_error, 1e-12);
        ASSERT_NEAR(r.brute_force, 1.0, 1e-12);
    }
}

TEST(oracle_boosted_state, phi_plus_fast_frame) {
    const OracleReport r = oracle_boosted_state(BellKind::PhiPlus, 0.9, 2.0);
    EXPECT_TRUE(r.pass) << r.abs_error;
    EXPECT_EQ(r.quantity, "boosted_state:phi+");
}

TEST(oracle_boosted_state, all_kinds_on_grid) {
    for (BellKind kind : kAllBellKinds) {
        for (double beta : linspace(0.0, 0.99, 20)) {
            for (double delta : linspace(0.0, 5.0, 20)) {
                const OracleReport r = oracle_boosted_state(kind, beta, delta);
                ASSERT_TRUE(r.pass) << r.quantity << " " << r.parameters << " err=" << r.abs_error;
            }
        }
    }
}

TEST(oracle_expectation, singlet_along_z) {
    const MeasurementAxis z(0, 0, 1);
    for (double beta : {0.0, 0.5, 0.95}) {
        const OracleReport r = oracle_expectation(BellKind::PsiMinus, z, z, beta, 1.3);
        EXPECT_TRUE(r.pass);
        EXPECT_NEAR(r.closed_form, -1.0, 1e-15);
        EXPECT_NEAR(r.brute_force, -1.0, 1e-10);
    }
}

TEST(oracle_expectation, rest_frame_textbook_values) {
    const MeasurementAxis x(1, 0, 0);
    const MeasurementAxis y(0, 1, 0);
    const MeasurementAxis z(0, 0, 1);
    // No boost: <xx>, <yy>, <zz> of each Bell state.
    EXPECT_NEAR(oracle_expectation(BellKind::PhiPlus, y, y, 0.0, 0.0).brute_force, -1.0, 1e-15);
    EXPECT_NEAR(oracle_expectation(BellKind::PhiMinus, x, x, 0.0, 0.0).brute_force, -1.0, 1e-15);
    EXPECT_NEAR(oracle_expectation(BellKind::PsiPlus, z, z, 0.0, 0.0).brute_force, -1.0, 1e-15);
    EXPECT_NEAR(oracle_expectation(BellKind::PsiMinus, x, x, 0.0, 0.0).brute_force, -1.0, 1e-15);
    EXPECT_NEAR(oracle_expectation(BellKind::PsiPlus, x, x, 0.0, 3.0).brute_force, 1.0, 1e-15);
}

TEST(oracle_expectation, random_trials) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 1000; ++trial) {
        const OracleReport r = oracle_expectation(kAllBellKinds[trial % 4], random_axis(rng), random_axis(rng),
                                                  uniform(rng, 0.0, 0.99), uniform(rng, 0.0, 5.0));
        ASSERT_TRUE(r.pass) << r.quantity << " " << r.parameters << " err=" << r.abs_error;
    }
}

TEST(OracleReport, pass_iff_within_tolerance) {
    const OracleReport strict = oracle_wigner_angle(0.8, 3.0, 0.0);
    EXPECT_EQ(strict.pass, strict.abs_error <= 0.0);
    const OracleReport loose = oracle_wigner_angle(0.8, 3.0, 1.0);
    EXPECT_TRUE(loose.pass);
}

TEST(run_verification, default_suite_passes) {
    const VerificationSummary summary = run_verification();
    const VerifyGridSize size = grid_size(VerifyGrid::Full);
    EXPECT_EQ(summary.reports.size(),
              static_cast<std::size_t>(size.wigner_side * size.wigner_side +
                                       4 * size.state_side * size.state_side + size.expectation_trials));
    EXPECT_TRUE(summary.all_pass());
    EXPECT_EQ(summary.failures(), 0u);
}

TEST(run_verification, coarse_grid_same_verdict) {
    VerifyConfig config;
    config.grid = VerifyGrid::Coarse;
    const VerificationSummary summary = run_verification(config);
    EXPECT_LT(summary.reports.size(), run_verification().reports.size());
    EXPECT_TRUE(summary.all_pass());
}

TEST(run_verification, impossible_tolerance_fails) {
    VerifyConfig config;
    config.grid = VerifyGrid::Coarse;
    config.tolerance = 1e-16;
    const VerificationSummary summary = run_verification(config);
    EXPECT_FALSE(summary.all_pass());
    EXPECT_GT(summary.failures(), 0u);
}

TEST(run_verification, deterministic) {
    VerifyConfig config;
    config.grid = VerifyGrid::Coarse;
    const auto first = run_verification(config);
    const auto second = run_verification(config);
    ASSERT_EQ(first.reports.size(), second.reports.size());
    for (std::size_t i = 0; i < first.reports.size(); ++i) {
        ASSERT_EQ(first.reports[i].parameters, second.reports[i].parameters);
        ASSERT_EQ(first.reports[i].abs_error, second.reports[i].abs_error);
    }
}

TEST(linspace, endpoints_and_count) {
    const auto v = linspace(0.0, 0.99, 100);
    ASSERT_EQ(v.size(), 100u);
    EXPECT_EQ(v.front(), 0.0);
    EXPECT_EQ(v.back(), 0.99);
    EXPECT_THROW(linspace(0.0, 1.0, 1), DomainError);
}
