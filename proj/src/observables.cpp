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

#include "covbell/observables.hpp"

#include <cmath>

namespace covbell {

MeasurementAxis::MeasurementAxis(const Vec3& v, const Tolerances& tol) : v_(v) {
    if (!v.allFinite() || std::abs(v.norm() - 1.0) > tol.construction) {
        throw DomainError("MeasurementAxis: axis must be a unit vector");
    }
}

MeasurementAxis MeasurementAxis::normalized(const Vec3& v) {
    const double n = v.norm();
    if (!std::isfinite(n) || n == 0.0) throw DomainError("MeasurementAxis: cannot normalise a zero vector");
    return MeasurementAxis(Vec3(v / n));
}

Spinor2Matrix CovariantObservable::matrix() const { return observable_matrix(axis_); }

Vec3 CorrelationMatrix::singular_values() const {
    return Eigen::JacobiSVD<Mat3>(t_).singularValues();
}

MeasurementAxis rotate_axis_a(const MeasurementAxis& a, double omega) {
    const double c = std::cos(omega);
    const double s = std::sin(omega);
    return MeasurementAxis(Vec3(a.x() * c + a.z() * s, a.y(), -a.x() * s + a.z() * c));
}

MeasurementAxis rotate_axis_b(const MeasurementAxis& b, double omega) {
    const double c = std::cos(omega);
    const double s = std::sin(omega);
    return MeasurementAxis(Vec3(b.x() * c - b.z() * s, b.y(), b.x() * s + b.z() * c));
}

Spinor2Matrix observable_matrix(const MeasurementAxis& a) { return pauli_dot(a.vector()); }

Complex expectation(const TwoQubitState& state, const Spinor2Matrix& op_a, const Spinor2Matrix& op_b) {
    // With psi_ij = amplitude(2i + j): <A (x) B> = tr(psi^dagger A psi B^T).
    Eigen::Matrix2cd psi;
    psi << state.amplitude(0), state.amplitude(1), state.amplitude(2), state.amplitude(3);
    return (psi.adjoint() * op_a * psi * op_b.transpose()).trace();
}

double correlation_numeric(const TwoQubitState& state, const MeasurementAxis& a, const MeasurementAxis& b,
                           double omega, const Tolerances& tol) {
    const Complex e = expectation(state, observable_matrix(rotate_axis_a(a, omega)),
                                  observable_matrix(rotate_axis_b(b, omega)));
    if (std::abs(e.imag()) > tol.imaginary_residual) {
        throw ConsistencyError("correlation_numeric: expectation value has imaginary part " +
                               std::to_string(e.imag()));
    }
    return e.real();
}

double correlation_closed_form(BellKind kind, const MeasurementAxis& a, const MeasurementAxis& b) {
    const double xx = a.x() * b.x();
    const double yy = a.y() * b.y();
    const double zz = a.z() * b.z();
    switch (kind) {
        case BellKind::PhiPlus: return xx - yy + zz;
        case BellKind::PhiMinus: return -xx + yy + zz;
        case BellKind::PsiPlus: return xx + yy - zz;
        case BellKind::PsiMinus: return -xx - yy - zz;
    }
    return 0.0;
}

CorrelationMatrix correlation_matrix_of(const TwoQubitState& state, const Tolerances& tol) {
    const std::array<Spinor2Matrix, 3> sigma{pauli_x(), pauli_y(), pauli_z()};
    Mat3 t;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const Complex e = expectation(state, sigma[i], sigma[j]);
            if (std::abs(e.imag()) > tol.imaginary_residual) {
                throw ConsistencyError("correlation_matrix_of: non-real correlation");
            }
            t(i, j) = e.real();
        }
    }
    return CorrelationMatrix(t);
}

double cos_double_angle_from_tangent(double tan_omega) {
    if (std::abs(tan_omega) <= 1.0) {
        const double t2 = tan_omega * tan_omega;
        return (1.0 - t2) / (1.0 + t2);
    }
    const double inv2 = 1.0 / (tan_omega * tan_omega);
    return (inv2 - 1.0) / (inv2 + 1.0);
}

double czachor_chsh(double beta, double delta) {
    if (!(delta >= 0.0) || !std::isfinite(delta)) {
        throw DomainError("czachor_chsh: particle rapidity must be finite and non-negative");
    }
    const double alpha = rapidity_from_beta(beta);
    const double cos_2omega = cos_double_angle_from_tangent(wigner_angle_tangent(alpha, delta));
    return 2.0 / std::sqrt(2.0 - beta * beta) * (std::sqrt(1.0 - beta * beta) + cos_2omega);
}

}  // namespace covbell
