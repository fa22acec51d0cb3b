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

#include "covbell/chsh.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace covbell {
namespace {

constexpr double kH = 1.0 / std::numbers::sqrt2;

Vec3 unit_or_orthogonal(const Vec3& v, const Vec3& partner) {
    const double n = v.norm();
    if (n > 1e-12) return v / n;
    Vec3 w = partner.cross(Vec3::UnitX());
    if (w.norm() < 1e-6) w = partner.cross(Vec3::UnitY());
    if (w.norm() < 1e-12) return Vec3::UnitZ();
    return w.normalized();
}

double chsh_bilinear(const Mat3& t, const Vec3& a1, const Vec3& a2, const Vec3& b1, const Vec3& b2) {
    return a1.dot(t * (b1 + b2)) + a2.dot(t * (b1 - b2));
}

}  // namespace

std::string_view to_string(ObservableKind kind) {
    switch (kind) {
        case ObservableKind::Covariant: return "covariant";
        case ObservableKind::CzachorClosedForm: return "czachor";
    }
    return "?";
}

ChshReport chsh_value(BellKind kind, const ChshSetting& setting, double omega, const Tolerances& tol) {
    const TwoQubitState boosted = boosted_bell_analytic(kind, omega);
    const std::array<double, 4> e{correlation_numeric(boosted, setting.a1, setting.b1, omega, tol),
                                  correlation_numeric(boosted, setting.a1, setting.b2, omega, tol),
                                  correlation_numeric(boosted, setting.a2, setting.b1, omega, tol),
                                  correlation_numeric(boosted, setting.a2, setting.b2, omega, tol)};
    ChshReport report;
    report.observable = ObservableKind::Covariant;
    report.value = e[kA1B1] + e[kA1B2] + e[kA2B1] - e[kA2B2];
    report.correlations = e;
    report.omega = omega;
    if (std::abs(report.value) > kTsirelsonBound + tol.consistency) {
        throw ConsistencyError("chsh_value: value " + std::to_string(report.value) + " exceeds the Tsirelson bound");
    }
    return report;
}

ChshReport chsh_value_in_frame(BellKind kind, const ChshSetting& setting, double beta, double delta,
                               const Tolerances& tol) {
    const double omega = wigner_angle_closed_form(rapidity_from_beta(beta), delta);
    ChshReport report = chsh_value(kind, setting, omega, tol);
    report.beta = beta;
    report.delta = delta;
    return report;
}

ChshReport czachor_report(double beta, double delta) {
    ChshReport report;
    report.observable = ObservableKind::CzachorClosedForm;
    report.value = czachor_chsh(beta, delta);
    report.omega = wigner_angle_closed_form(rapidity_from_beta(beta), delta);
    report.beta = beta;
    report.delta = delta;
    return report;
}

ChshSetting canonical_axes(BellKind kind) {
    const MeasurementAxis b1(0.0, 1.0, 0.0);
    const MeasurementAxis b2(1.0, 0.0, 0.0);
    switch (kind) {
        case BellKind::PhiPlus: return {{kH, -kH, 0.0}, {-kH, -kH, 0.0}, b1, b2};
        case BellKind::PhiMinus: return {{-kH, kH, 0.0}, {kH, kH, 0.0}, b1, b2};
        case BellKind::PsiPlus: return {{kH, kH, 0.0}, {-kH, kH, 0.0}, b1, b2};
        case BellKind::PsiMinus: break;
    }
    return {{-kH, -kH, 0.0}, {kH, -kH, 0.0}, b1, b2};
}

double horodecki_max(const CorrelationMatrix& t) {
    const Vec3 s = t.singular_values();
    return 2.0 * std::sqrt(s[0] * s[0] + s[1] * s[1]);
}

OptimizedSetting optimize_axes(const CorrelationMatrix& t, const OptimizerSeed& seed) {
    const Mat3& m = t.matrix();
    Vec3 a1 = unit_or_orthogonal(seed.a1, Vec3::UnitZ());
    Vec3 a2 = unit_or_orthogonal(seed.a2, a1);
    Vec3 b1;
    Vec3 b2;

    double previous = 0.0;
    for (int iteration = 1; iteration <= kOptimizerMaxIterations; ++iteration) {
        b1 = unit_or_orthogonal(m.transpose() * (a1 + a2), Vec3::UnitZ());
        b2 = unit_or_orthogonal(m.transpose() * (a1 - a2), b1);
        a1 = unit_or_orthogonal(m * (b1 + b2), Vec3::UnitZ());
        a2 = unit_or_orthogonal(m * (b1 - b2), a1);
        const double value = chsh_bilinear(m, a1, a2, b1, b2);
        if (iteration > 1 && std::abs(value - previous) < kOptimizerStopChange) {
            return OptimizedSetting{
                ChshSetting{MeasurementAxis(a1), MeasurementAxis(a2), MeasurementAxis(b1), MeasurementAxis(b2)},
                value, horodecki_max(t), iteration};
        }
        previous = value;
    }
    throw ConvergenceError("optimize_axes: no convergence after " + std::to_string(kOptimizerMaxIterations) +
                           " iterations");
}

OptimizedSetting optimize_axes(BellKind kind, double omega, const OptimizerSeed& seed, const Tolerances& tol) {
    return optimize_axes(correlation_matrix_of(boosted_bell_analytic(kind, omega), tol), seed);
}

CriticalBeta critical_beta(double delta) {
    if (!(delta >= 0.0) || !std::isfinite(delta)) {
        throw DomainError("critical_beta: particle rapidity must be finite and non-negative");
    }
    const auto excess = [delta](double beta) { return std::abs(czachor_chsh(beta, delta)) - 2.0; };

    double lo = 0.0;
    double hi = -1.0;
    for (int i = 1; i < kCriticalBetaScanPoints; ++i) {
        const double beta = static_cast<double>(i) / kCriticalBetaScanPoints;
        if (excess(beta) <= 0.0) {
            hi = beta;
            break;
        }
        lo = beta;
    }
    if (hi < 0.0) {
        throw NoCrossingError("critical_beta: |C| stays above 2 for every scanned beta at delta = " +
                              std::to_string(delta));
    }

    // Invariant: excess(lo) > 0 >= excess(hi).
    while (hi - lo > kCriticalBetaTolerance) {
        const double mid = 0.5 * (lo + hi);
        (excess(mid) > 0.0 ? lo : hi) = mid;
    }
    CriticalBeta result;
    result.beta = 0.5 * (lo + hi);
    result.chsh = czachor_chsh(result.beta, delta);
    result.residual = std::abs(result.chsh) - 2.0;
    if (std::abs(result.residual) > kCriticalBetaMaxResidual) {
        throw ConsistencyError("critical_beta: bisection residual " + std::to_string(result.residual) +
                               " above tolerance");
    }
    return result;
}

}  // namespace covbell
