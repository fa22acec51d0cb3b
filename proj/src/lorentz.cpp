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

#include "covbell/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace covbell {
namespace {

Vec3 unit_direction(const Vec3& v, const char* what) {
    const double n = v.norm();
    if (!std::isfinite(n) || n == 0.0) {
        throw DomainError(std::string(what) + ": direction must be a finite non-zero vector");
    }
    return v / n;
}

// Index of the component with the largest magnitude, first one on ties.
int dominant_component(const Vec3& v) {
    int best = 0;
    for (int i = 1; i < 3; ++i) {
        if (std::abs(v[i]) > std::abs(v[best])) best = i;
    }
    return best;
}

}  // namespace

Mat4 minkowski_metric() {
    return Vec4(1.0, -1.0, -1.0, -1.0).asDiagonal();
}

double FourVector::minkowski_norm() const {
    return v_[0] * v_[0] - v_.tail<3>().squaredNorm();
}

bool FourVector::is_on_shell(double mass, double rel_tol) const {
    if (!(mass > 0.0) || !v_.allFinite()) return false;
    if (t() < mass * (1.0 - rel_tol)) return false;
    return std::abs(minkowski_norm() - mass * mass) <= rel_tol * t() * t();
}

FourVector rest_momentum(double mass) {
    if (!(mass > 0.0) || !std::isfinite(mass)) throw DomainError("rest_momentum: mass must be positive");
    return FourVector(mass, 0.0, 0.0, 0.0);
}

double rapidity_from_beta(double beta) {
    if (!(beta >= 0.0 && beta < 1.0)) {
        throw DomainError("boost speed beta must lie in [0, 1), got " + std::to_string(beta));
    }
    return std::atanh(beta);
}

double beta_from_rapidity(double alpha) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
        throw DomainError("rapidity must be finite and non-negative, got " + std::to_string(alpha));
    }
    return std::tanh(alpha);
}

double gamma_from_beta(double beta) {
    return std::cosh(rapidity_from_beta(beta));
}

BoostParams BoostParams::from_beta(double beta, const Vec3& direction) {
    const double alpha = rapidity_from_beta(beta);
    return BoostParams(beta, alpha, unit_direction(direction, "BoostParams"));
}

BoostParams BoostParams::from_rapidity(double alpha, const Vec3& direction) {
    const double beta = beta_from_rapidity(alpha);
    if (!(beta < 1.0)) throw DomainError("BoostParams: rapidity too large to represent beta < 1");
    return BoostParams(beta, alpha, unit_direction(direction, "BoostParams"));
}

double BoostParams::gamma() const { return std::cosh(alpha_); }

ParticleKinematics::ParticleKinematics(double mass, const Vec3& direction, double delta)
    : mass_(mass), direction_(unit_direction(direction, "ParticleKinematics")), delta_(delta) {
    if (!(mass > 0.0) || !std::isfinite(mass)) throw DomainError("ParticleKinematics: mass must be positive");
    if (!(delta >= 0.0) || !std::isfinite(delta)) {
        throw DomainError("ParticleKinematics: rapidity must be finite and non-negative");
    }
}

double ParticleKinematics::speed() const { return std::tanh(delta_); }

FourVector ParticleKinematics::momentum() const {
    return FourVector(mass_ * std::cosh(delta_), mass_ * std::sinh(delta_) * direction_);
}

LorentzMatrix LorentzMatrix::inverse() const {
    const Mat4 eta = minkowski_metric();
    return LorentzMatrix(Mat4(eta * m_.transpose() * eta));
}

double LorentzMatrix::metric_defect() const {
    const Mat4 eta = minkowski_metric();
    return (m_.transpose() * eta * m_ - eta).cwiseAbs().maxCoeff();
}

bool LorentzMatrix::is_proper_orthochronous(double tol) const {
    if (!m_.allFinite()) return false;
    // Entries grow like cosh(rapidity); scale the tolerance with them.
    const double scale = std::max(1.0, m_(0, 0) * m_(0, 0));
    return metric_defect() <= tol * scale && std::abs(m_.determinant() - 1.0) <= tol * scale &&
           m_(0, 0) >= 1.0 - tol;
}

WignerRotation::WignerRotation(const Vec3& axis, double angle) : angle_(angle) {
    if (!std::isfinite(angle)) throw DomainError("WignerRotation: angle must be finite");
    Vec3 n = unit_direction(axis, "WignerRotation");
    if (angle == 0.0) {
        axis_ = Vec3::UnitZ();
        angle_ = 0.0;
        return;
    }
    if (n[dominant_component(n)] < 0.0) {
        n = -n;
        angle_ = -angle_;
        // (n, pi) and (-n, pi) are the same rotation; keep the range half-open.
        if (angle_ == -std::numbers::pi) angle_ = std::numbers::pi;
    }
    axis_ = n;
}

Mat3 WignerRotation::rotation_matrix() const {
    return Eigen::AngleAxisd(angle_, axis_).toRotationMatrix();
}

LorentzMatrix WignerRotation::as_lorentz() const {
    Mat4 m = Mat4::Identity();
    m.bottomRightCorner<3, 3>() = rotation_matrix();
    return LorentzMatrix(m);
}

LorentzMatrix boost_matrix(const BoostParams& b) {
    const double gamma = std::cosh(b.alpha());
    const double gamma_beta = std::sinh(b.alpha());
    const Vec3& n = b.direction();
    Mat4 m = Mat4::Identity();
    m(0, 0) = gamma;
    m.block<1, 3>(0, 1) = gamma_beta * n.transpose();
    m.block<3, 1>(1, 0) = gamma_beta * n;
    m.bottomRightCorner<3, 3>() += (gamma - 1.0) * n * n.transpose();
    return LorentzMatrix(m);
}

LorentzMatrix standard_boost(const FourVector& p, double mass, const Tolerances& tol) {
    if (!(mass > 0.0) || !std::isfinite(mass)) throw DomainError("standard_boost: mass must be positive");
    if (!p.is_on_shell(mass, tol.consistency)) {
        throw DomainError("standard_boost: momentum is not on the mass shell p^2 = m^2");
    }
    // gamma = p0/m and gamma*beta*n = p/m; the spatial block is
    // 1 + (gamma - 1) n n^T = 1 + u u^T / (1 + gamma).
    const double gamma = p.t() / mass;
    const Vec3 u = p.spatial() / mass;
    Mat4 m = Mat4::Identity();
    m(0, 0) = gamma;
    m.block<1, 3>(0, 1) = u.transpose();
    m.block<3, 1>(1, 0) = u;
    m.bottomRightCorner<3, 3>() += u * u.transpose() / (1.0 + gamma);
    return LorentzMatrix(m);
}

LorentzMatrix little_group_element(const LorentzMatrix& boost, const FourVector& p, double mass,
                                   const Tolerances& tol) {
    if (!boost.is_proper_orthochronous(tol.consistency)) {
        throw DomainError("little_group_element: boost is not a proper orthochronous Lorentz matrix");
    }
    const LorentzMatrix to_p = standard_boost(p, mass, tol);
    const LorentzMatrix from_boosted = standard_boost(boost.apply(p), mass, tol).inverse();
    const LorentzMatrix w = from_boosted * boost * to_p;

    const Vec4 k = rest_momentum(mass).components();
    const double drift = (w.matrix() * k - k).cwiseAbs().maxCoeff();
    if (drift > tol.consistency * mass) {
        throw ConsistencyError("little_group_element: W k deviates from k by " + std::to_string(drift));
    }
    return w;
}

WignerRotation extract_rotation(const LorentzMatrix& w, const Tolerances& tol) {
    const Mat4& m = w.matrix();
    const double time_defect = std::max({std::abs(m(0, 0) - 1.0), m.block<1, 3>(0, 1).cwiseAbs().maxCoeff(),
                                         m.block<3, 1>(1, 0).cwiseAbs().maxCoeff()});
    if (!m.allFinite() || time_defect > tol.consistency) {
        throw ConsistencyError("extract_rotation: matrix does not fix the rest frame time axis");
    }
    const Mat3 r = w.spatial_block();
    const double ortho_defect = (r.transpose() * r - Mat3::Identity()).cwiseAbs().maxCoeff();
    if (ortho_defect > tol.consistency || r.determinant() < 0.0) {
        throw ConsistencyError("extract_rotation: spatial block is not a proper rotation");
    }

    // R = cos(t) 1 + sin(t) [n]_x + (1 - cos(t)) n n^T
    const Vec3 v(0.5 * (r(2, 1) - r(1, 2)), 0.5 * (r(0, 2) - r(2, 0)), 0.5 * (r(1, 0) - r(0, 1)));
    const double sin_t = v.norm();
    const double cos_t = 0.5 * (r.trace() - 1.0);
    const double angle = std::atan2(sin_t, cos_t);

    if (sin_t > 1e-6) return WignerRotation(v / sin_t, angle);
    if (cos_t > 0.0) {
        if (sin_t <= std::numeric_limits<double>::epsilon()) return WignerRotation();
        return WignerRotation(v / sin_t, angle);
    }
    // Near a half turn the antisymmetric part vanishes; read n n^T from the
    // symmetric part instead.
    const Mat3 nn = (0.5 * (r + r.transpose()) - cos_t * Mat3::Identity()) / (1.0 - cos_t);
    int col = 0;
    nn.diagonal().maxCoeff(&col);
    Vec3 n = nn.col(col).normalized();
    if (n.dot(v) < 0.0) n = -n;
    return WignerRotation(n, angle);
}

double wigner_angle_tangent(double alpha, double delta) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha) || !(delta >= 0.0) || !std::isfinite(delta)) {
        throw DomainError("wigner angle: rapidities must be finite and non-negative");
    }
    if (alpha == 0.0 || delta == 0.0) return 0.0;
    // Divide through by the larger cosh so nothing overflows before the ratio
    // is formed: cosh(s)/cosh(l) = exp(s - l) (1 + e^{-2s}) / (1 + e^{-2l}).
    const double lo = std::min(alpha, delta);
    const double hi = std::max(alpha, delta);
    const double cosh_ratio = std::exp(lo - hi) * (1.0 + std::exp(-2.0 * lo)) / (1.0 + std::exp(-2.0 * hi));
    return std::tanh(hi) * std::sinh(lo) / (1.0 + cosh_ratio);
}

double wigner_angle_closed_form(double alpha, double delta) {
    return std::atan(wigner_angle_tangent(alpha, delta));
}

}  // namespace covbell
