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

#include "covbell/lorentz.hpp"
#include "covbell/spinstate.hpp"

namespace covbell {

/// Spatial part of a rest-frame measurement four-axis a^mu = (0, a), |a| = 1.
class MeasurementAxis {
public:
    /// Requires |v| = 1 within `tol.construction`.
    explicit MeasurementAxis(const Vec3& v, const Tolerances& tol = kDefaultTolerances);
    MeasurementAxis(double x, double y, double z) : MeasurementAxis(Vec3(x, y, z)) {}

    static MeasurementAxis normalized(const Vec3& v);

    const Vec3& vector() const { return v_; }
    double x() const { return v_.x(); }
    double y() const { return v_.y(); }
    double z() const { return v_.z(); }

private:
    Vec3 v_;
};

/// Rest-frame reduction of the covariant observable 2 a^mu W_mu / m, i.e.
/// 2 a.S = a.sigma.
class CovariantObservable {
public:
    explicit CovariantObservable(const MeasurementAxis& axis) : axis_(axis) {}
    const MeasurementAxis& axis() const { return axis_; }
    Spinor2Matrix matrix() const;

private:
    MeasurementAxis axis_;
};

/// T_ij = <sigma_i (x) sigma_j>
class CorrelationMatrix {
public:
    explicit CorrelationMatrix(const Mat3& t) : t_(t) {}
    const Mat3& matrix() const { return t_; }
    double operator()(int i, int j) const { return t_(i, j); }
    /// Descending.
    Vec3 singular_values() const;

private:
    Mat3 t_;
};

/// Axis seen by the first particle (momentum +z) after a Wigner rotation by
/// omega about y: (a_x cos + a_z sin, a_y, -a_x sin + a_z cos).
MeasurementAxis rotate_axis_a(const MeasurementAxis& a, double omega);

/// Axis seen by the second particle (momentum -z), opposite sense:
/// (b_x cos - b_z sin, b_y, b_x sin + b_z cos).
MeasurementAxis rotate_axis_b(const MeasurementAxis& b, double omega);

/// a . sigma: Hermitian, traceless, squares to the identity.
Spinor2Matrix observable_matrix(const MeasurementAxis& a);

/// <A (x) B> on a two-qubit state for arbitrary single-particle operators.
Complex expectation(const TwoQubitState& state, const Spinor2Matrix& op_a, const Spinor2Matrix& op_b);

/// <state| (a_R . sigma) (x) (b_R . sigma) |state>, the boosted observable
/// O'(a, b) = O(a_R, b_R) measured on an already boosted state. Throws
/// ConsistencyError when the imaginary residual exceeds
/// `tol.imaginary_residual`.
double correlation_numeric(const TwoQubitState& state, const MeasurementAxis& a, const MeasurementAxis& b,
                           double omega, const Tolerances& tol = kDefaultTolerances);

/// Frame-independent expectation values of O(a, b) on the four Bell states:
///   phi+:  a_x b_x - a_y b_y + a_z b_z
///   phi-: -a_x b_x + a_y b_y + a_z b_z
///   psi+:  a_x b_x + a_y b_y - a_z b_z
///   psi-: -a . b
double correlation_closed_form(BellKind kind, const MeasurementAxis& a, const MeasurementAxis& b);

CorrelationMatrix correlation_matrix_of(const TwoQubitState& state, const Tolerances& tol = kDefaultTolerances);

/// cos(2 Omega) from tan(Omega) without forming the angle.
double cos_double_angle_from_tangent(double tan_omega);

/// CHSH value of the singlet under the non-covariant (Czachor) spin
/// observable with the canonical singlet axes:
///   C = 2 / sqrt(2 - beta^2) * (sqrt(1 - beta^2) + cos(2 Omega)),
/// Omega the Wigner angle for boost rapidity artanh(beta) and particle
/// rapidity delta. Tends to 4 sech^2(delta) - 2 as beta -> 1.
double czachor_chsh(double beta, double delta);

}  // namespace covbell
