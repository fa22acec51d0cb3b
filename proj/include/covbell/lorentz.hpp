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

#include <Eigen/Dense>

#include "covbell/errors.hpp"
#include "covbell/tolerances.hpp"

namespace covbell {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;

/// Minkowski metric diag(+1, -1, -1, -1).
Mat4 minkowski_metric();

/// Energy-momentum (or spacetime) four-vector with signature (+,-,-,-),
/// natural units c = 1.
class FourVector {
public:
    FourVector() = default;
    FourVector(double t, double x, double y, double z) : v_(t, x, y, z) {}
    FourVector(double t, const Vec3& spatial) : v_(t, spatial.x(), spatial.y(), spatial.z()) {}
    explicit FourVector(const Vec4& v) : v_(v) {}

    double t() const { return v_[0]; }
    double x() const { return v_[1]; }
    double y() const { return v_[2]; }
    double z() const { return v_[3]; }
    Vec3 spatial() const { return v_.tail<3>(); }
    const Vec4& components() const { return v_; }

    /// t^2 - |x|^2
    double minkowski_norm() const;

    /// True when t >= mass > 0 and the Minkowski norm equals mass^2 to within
    /// `rel_tol * mass^2`.
    bool is_on_shell(double mass, double rel_tol) const;

    friend bool operator==(const FourVector&, const FourVector&) = default;

private:
    Vec4 v_{Vec4::Zero()};
};

/// Standard rest momentum k = (m, 0, 0, 0).
FourVector rest_momentum(double mass);

double rapidity_from_beta(double beta);
double beta_from_rapidity(double alpha);
double gamma_from_beta(double beta);

/// Observer boost: speed beta in [0, 1) along a unit direction. The rapidity
/// alpha = artanh(beta) is carried alongside so that cosh(alpha) = gamma.
class BoostParams {
public:
    static BoostParams from_beta(double beta, const Vec3& direction);
    static BoostParams from_rapidity(double alpha, const Vec3& direction);

    double beta() const { return beta_; }
    double alpha() const { return alpha_; }
    double gamma() const;
    const Vec3& direction() const { return direction_; }

private:
    BoostParams(double beta, double alpha, const Vec3& direction)
        : beta_(beta), alpha_(alpha), direction_(direction) {}

    double beta_;
    double alpha_;
    Vec3 direction_;
};

/// A massive particle moving with rapidity delta along a unit direction.
class ParticleKinematics {
public:
    ParticleKinematics(double mass, const Vec3& direction, double delta);

    double mass() const { return mass_; }
    const Vec3& direction() const { return direction_; }
    double delta() const { return delta_; }
    /// v_p = tanh(delta)
    double speed() const;
    /// (m cosh delta, m sinh delta * direction)
    FourVector momentum() const;

private:
    double mass_;
    Vec3 direction_;
    double delta_;
};

/// Proper orthochronous Lorentz transformation.
class LorentzMatrix {
public:
    LorentzMatrix() = default;
    explicit LorentzMatrix(const Mat4& m) : m_(m) {}

    static LorentzMatrix identity() { return LorentzMatrix{}; }

    const Mat4& matrix() const { return m_; }
    double operator()(int row, int col) const { return m_(row, col); }
    Mat3 spatial_block() const { return m_.bottomRightCorner<3, 3>(); }

    FourVector apply(const FourVector& p) const { return FourVector(Vec4(m_ * p.components())); }

    /// eta Lambda^T eta, the exact inverse of any Lorentz matrix.
    LorentzMatrix inverse() const;

    /// Largest entry of |Lambda^T eta Lambda - eta|.
    double metric_defect() const;

    /// Metric preserved, det = +1 and Lambda^0_0 >= 1, all within `tol`.
    bool is_proper_orthochronous(double tol) const;

    friend LorentzMatrix operator*(const LorentzMatrix& a, const LorentzMatrix& b) {
        return LorentzMatrix(Mat4(a.m_ * b.m_));
    }

private:
    Mat4 m_{Mat4::Identity()};
};

/// Spatial rotation in axis-angle form. The angle lies in (-pi, pi]; the axis
/// sign is fixed so that its largest-magnitude component is positive, and the
/// zero rotation uses the z axis.
class WignerRotation {
public:
    WignerRotation() = default;
    WignerRotation(const Vec3& axis, double angle);

    const Vec3& axis() const { return axis_; }
    double angle() const { return angle_; }

    /// Right-handed SO(3) matrix.
    Mat3 rotation_matrix() const;
    /// 4x4 embedding that fixes the time axis.
    LorentzMatrix as_lorentz() const;

private:
    Vec3 axis_{Vec3::UnitZ()};
    double angle_ = 0.0;
};

/// Pure boost taking a particle at rest to speed beta along the boost
/// direction.
LorentzMatrix boost_matrix(const BoostParams& b);

/// L(p): the pure boost with L(p) k = p for k = (m, 0, 0, 0).
LorentzMatrix standard_boost(const FourVector& p, double mass,
                             const Tolerances& tol = kDefaultTolerances);

/// W(Lambda, p) = L^-1(Lambda p) Lambda L(p). Throws ConsistencyError if the
/// result fails to fix the rest momentum.
LorentzMatrix little_group_element(const LorentzMatrix& boost, const FourVector& p, double mass,
                                   const Tolerances& tol = kDefaultTolerances);

/// Axis-angle decomposition of a little-group element.
WignerRotation extract_rotation(const LorentzMatrix& w, const Tolerances& tol = kDefaultTolerances);

/// Omega with tan(Omega) = sinh(alpha) sinh(delta) / (cosh(alpha) + cosh(delta)),
/// the Wigner angle for an observer boost perpendicular to the particle
/// momentum. Result in [0, pi/2).
double wigner_angle_closed_form(double alpha, double delta);

/// tan(Omega) from the same relation, finite for every finite input.
double wigner_angle_tangent(double alpha, double delta);

}  // namespace covbell
