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

#include "covbell/spinstate.hpp"

#include <cmath>
#include <numbers>

namespace covbell {
namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
constexpr Complex kI{0.0, 1.0};

}  // namespace

Spinor2Matrix pauli_x() {
    Spinor2Matrix m;
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

Spinor2Matrix pauli_y() {
    Spinor2Matrix m;
    m << 0.0, -kI, kI, 0.0;
    return m;
}

Spinor2Matrix pauli_z() {
    Spinor2Matrix m;
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

Spinor2Matrix pauli_dot(const Vec3& v) {
    Spinor2Matrix m;
    m << v.z(), Complex(v.x(), -v.y()), Complex(v.x(), v.y()), -v.z();
    return m;
}

std::string_view to_string(BellKind kind) {
    switch (kind) {
        case BellKind::PhiPlus: return "phi+";
        case BellKind::PhiMinus: return "phi-";
        case BellKind::PsiPlus: return "psi+";
        case BellKind::PsiMinus: return "psi-";
    }
    return "?";
}

std::optional<BellKind> parse_bell_kind(std::string_view text) {
    for (BellKind kind : kAllBellKinds) {
        if (to_string(kind) == text) return kind;
    }
    return std::nullopt;
}

TwoQubitState::TwoQubitState(const Amplitudes& amplitudes, std::optional<MomentumPair> momenta,
                             const Tolerances& tol)
    : amplitudes_(amplitudes), momenta_(std::move(momenta)) {
    if (!amplitudes_.allFinite() || std::abs(amplitudes_.norm() - 1.0) > tol.consistency) {
        throw DomainError("TwoQubitState: amplitudes must have unit norm");
    }
}

TwoQubitState TwoQubitState::normalized(const Amplitudes& amplitudes, std::optional<MomentumPair> momenta) {
    const double n = amplitudes.norm();
    if (!std::isfinite(n) || n == 0.0) throw DomainError("TwoQubitState: cannot normalise a zero vector");
    return TwoQubitState(Amplitudes(amplitudes / n), std::move(momenta));
}

double TwoQubitState::max_amplitude_deviation(const TwoQubitState& other) const {
    return (amplitudes_ - other.amplitudes_).cwiseAbs().maxCoeff();
}

double unitarity_defect(const Spinor2Matrix& u) {
    return (u.adjoint() * u - Spinor2Matrix::Identity()).cwiseAbs().maxCoeff();
}

Spinor2Matrix su2_from_rotation(const WignerRotation& r) {
    const double half = 0.5 * r.angle();
    return std::cos(half) * Spinor2Matrix::Identity() - kI * std::sin(half) * pauli_dot(r.axis());
}

FourVector parity(const FourVector& p) {
    return FourVector(p.t(), -p.x(), -p.y(), -p.z());
}

Amplitudes bell_amplitudes(BellKind kind) {
    Amplitudes a = Amplitudes::Zero();
    switch (kind) {
        case BellKind::PhiPlus: a[0] = kInvSqrt2; a[3] = kInvSqrt2; break;
        case BellKind::PhiMinus: a[0] = kInvSqrt2; a[3] = -kInvSqrt2; break;
        case BellKind::PsiPlus: a[1] = kInvSqrt2; a[2] = kInvSqrt2; break;
        case BellKind::PsiMinus: a[1] = kInvSqrt2; a[2] = -kInvSqrt2; break;
    }
    return a;
}

TwoQubitState bell_state(BellKind kind, const FourVector& p, const FourVector& pp) {
    return TwoQubitState(bell_amplitudes(kind), MomentumPair{p, pp});
}

TwoQubitState bell_state(BellKind kind) {
    return TwoQubitState(bell_amplitudes(kind));
}

TwoQubitState boost_state(const TwoQubitState& s, const Spinor2Matrix& d_a, const Spinor2Matrix& d_b,
                          const Tolerances& tol) {
    if (unitarity_defect(d_a) > tol.consistency || unitarity_defect(d_b) > tol.consistency) {
        throw DomainError("boost_state: spin rotation is not unitary");
    }
    const Amplitudes& in = s.amplitudes();
    Amplitudes out = Amplitudes::Zero();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) out[2 * i + j] += d_a(i, k) * d_b(j, l) * in[2 * k + l];
    return TwoQubitState(out, s.momenta(), tol);
}

TwoQubitState apply_lorentz(const TwoQubitState& s, const LorentzMatrix& boost, double mass, const Tolerances& tol) {
    if (!s.momenta()) throw DomainError("apply_lorentz: state carries no momentum labels");
    const auto& [p_a, p_b] = *s.momenta();
    const Spinor2Matrix d_a = su2_from_rotation(extract_rotation(little_group_element(boost, p_a, mass, tol), tol));
    const Spinor2Matrix d_b = su2_from_rotation(extract_rotation(little_group_element(boost, p_b, mass, tol), tol));
    const TwoQubitState rotated = boost_state(s, d_a, d_b, tol);
    return TwoQubitState(rotated.amplitudes(), MomentumPair{boost.apply(p_a), boost.apply(p_b)}, tol);
}

TwoQubitState boosted_bell_analytic(BellKind kind, double omega) {
    const double c = std::cos(omega);
    const double s = std::sin(omega);
    const Amplitudes phi_plus = bell_amplitudes(BellKind::PhiPlus);
    const Amplitudes psi_minus = bell_amplitudes(BellKind::PsiMinus);
    switch (kind) {
        case BellKind::PhiPlus: return TwoQubitState(Amplitudes(c * phi_plus - s * psi_minus));
        case BellKind::PsiMinus: return TwoQubitState(Amplitudes(s * phi_plus + c * psi_minus));
        case BellKind::PhiMinus:
        case BellKind::PsiPlus: break;
    }
    return bell_state(kind);
}

}  // namespace covbell
