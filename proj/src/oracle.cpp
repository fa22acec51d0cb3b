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

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace covbell {
namespace {

constexpr double kBetaMax = 0.99;
constexpr double kDeltaMax = 5.0;

std::string frame_label(double beta, double delta) {
    std::ostringstream out;
    out.precision(17);
    out << "beta=" << beta << " delta=" << delta;
    return out.str();
}

OracleReport make_report(std::string quantity, std::string parameters, double closed_form, double brute_force,
                         double abs_error, double tolerance) {
    return OracleReport{std::move(quantity), std::move(parameters), closed_form, brute_force,
                        abs_error,           tolerance,             abs_error <= tolerance};
}

// Explicit Kronecker product of two 2x2 blocks.
Eigen::Matrix4cd kron(const Spinor2Matrix& a, const Spinor2Matrix& b) {
    Eigen::Matrix4cd out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return out;
}

// sigma . v written out component by component.
Spinor2Matrix spin_operator(const Vec3& v) {
    return v.x() * pauli_x() + v.y() * pauli_y() + v.z() * pauli_z();
}

TwoQubitState pipeline_state(BellKind kind, const CanonicalFrame& frame) {
    const Spinor2Matrix d_a = su2_from_rotation(extract_rotation(frame.little_group_a));
    const Spinor2Matrix d_b = su2_from_rotation(extract_rotation(frame.little_group_b));
    return boost_state(bell_state(kind, frame.momentum_a, frame.momentum_b), d_a, d_b);
}

Vec3 random_unit(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    Vec3 v;
    do {
        v = Vec3(gauss(rng), gauss(rng), gauss(rng));
    } while (v.norm() < 1e-6);
    return v.normalized();
}

}  // namespace

CanonicalFrame canonical_frame(double beta, double delta, const Tolerances& tol) {
    const double mass = 1.0;
    const LorentzMatrix boost = boost_matrix(BoostParams::from_beta(beta, Vec3::UnitX()));
    const FourVector p_a = ParticleKinematics(mass, Vec3::UnitZ(), delta).momentum();
    const FourVector p_b = parity(p_a);
    return CanonicalFrame{boost, p_a, p_b, little_group_element(boost, p_a, mass, tol),
                          little_group_element(boost, p_b, mass, tol)};
}

OracleReport oracle_wigner_angle(double beta, double delta, double tolerance) {
    const double closed = wigner_angle_closed_form(rapidity_from_beta(beta), delta);
    const WignerRotation r = extract_rotation(canonical_frame(beta, delta).little_group_a);
    // Signed angle about +y; a tilted axis shows up as a reduced projection.
    const double brute = r.angle() * r.axis().y();
    return make_report("wigner_angle", frame_label(beta, delta), closed, brute, std::abs(closed - brute), tolerance);
}

OracleReport oracle_boosted_state(BellKind kind, double beta, double delta, double tolerance) {
    const double omega = wigner_angle_closed_form(rapidity_from_beta(beta), delta);
    const TwoQubitState analytic = boosted_bell_analytic(kind, omega);
    const TwoQubitState pipeline = pipeline_state(kind, canonical_frame(beta, delta));
    return make_report("boosted_state:" + std::string(to_string(kind)), frame_label(beta, delta), 1.0,
                       std::abs(analytic.inner(pipeline)), analytic.max_amplitude_deviation(pipeline), tolerance);
}

OracleReport oracle_expectation(BellKind kind, const MeasurementAxis& a, const MeasurementAxis& b, double beta,
                                double delta, double tolerance) {
    const CanonicalFrame frame = canonical_frame(beta, delta);
    const TwoQubitState boosted = pipeline_state(kind, frame);
    const Vec3 a_rotated = frame.little_group_a.spatial_block() * a.vector();
    const Vec3 b_rotated = frame.little_group_b.spatial_block() * b.vector();
    const Eigen::Matrix4cd op = kron(spin_operator(a_rotated), spin_operator(b_rotated));
    const Complex value = boosted.amplitudes().dot(op * boosted.amplitudes());

    const double closed = correlation_closed_form(kind, a, b);
    std::ostringstream params;
    params.precision(17);
    params << frame_label(beta, delta) << " a=(" << a.x() << "," << a.y() << "," << a.z() << ") b=(" << b.x()
           << "," << b.y() << "," << b.z() << ")";
    const double error = std::max(std::abs(closed - value.real()), std::abs(value.imag()));
    return make_report("expectation:" + std::string(to_string(kind)), params.str(), closed, value.real(), error,
                       tolerance);
}

VerifyGridSize grid_size(VerifyGrid grid) {
    switch (grid) {
        case VerifyGrid::Full: return {50, 20, 1000};
        case VerifyGrid::Coarse: return {10, 5, 100};
    }
    return {50, 20, 1000};
}

bool VerificationSummary::all_pass() const {
    return std::all_of(reports.begin(), reports.end(), [](const OracleReport& r) { return r.pass; });
}

std::size_t VerificationSummary::failures() const {
    return static_cast<std::size_t>(
        std::count_if(reports.begin(), reports.end(), [](const OracleReport& r) { return !r.pass; }));
}

std::vector<double> linspace(double lo, double hi, int count) {
    if (count < 2) throw DomainError("linspace: need at least two points");
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / (count - 1);
    }
    out.back() = hi;
    return out;
}

VerificationSummary run_verification(const VerifyConfig& config) {
    const VerifyGridSize size = grid_size(config.grid);
    const auto tol_or = [&](double fallback) { return config.tolerance.value_or(fallback); };
    VerificationSummary summary;

    for (double beta : linspace(0.0, kBetaMax, size.wigner_side)) {
        for (double delta : linspace(0.0, kDeltaMax, size.wigner_side)) {
            summary.reports.push_back(oracle_wigner_angle(beta, delta, tol_or(kWignerAngleOracleTolerance)));
        }
    }
    for (BellKind kind : kAllBellKinds) {
        for (double beta : linspace(0.0, kBetaMax, size.state_side)) {
            for (double delta : linspace(0.0, kDeltaMax, size.state_side)) {
                summary.reports.push_back(
                    oracle_boosted_state(kind, beta, delta, tol_or(kBoostedStateOracleTolerance)));
            }
        }
    }
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> beta_dist(0.0, kBetaMax);
    std::uniform_real_distribution<double> delta_dist(0.0, kDeltaMax);
    for (int trial = 0; trial < size.expectation_trials; ++trial) {
        const BellKind kind = kAllBellKinds[static_cast<std::size_t>(trial) % kAllBellKinds.size()];
        const MeasurementAxis a(random_unit(rng));
        const MeasurementAxis b(random_unit(rng));
        const double beta = beta_dist(rng);
        const double delta = delta_dist(rng);
        summary.reports.push_back(
            oracle_expectation(kind, a, b, beta, delta, tol_or(kExpectationOracleTolerance)));
    }
    return summary;
}

}  // namespace covbell
