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
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <Eigen/Dense>

#include "covbell/lorentz.hpp"

namespace covbell {

using Complex = std::complex<double>;
/// Complex 2x2 matrix acting on a single spin-1/2.
using Spinor2Matrix = Eigen::Matrix2cd;
/// Two-qubit amplitude vector in the order (up-up, up-down, down-up, down-down).
using Amplitudes = Eigen::Vector4cd;

Spinor2Matrix pauli_x();
Spinor2Matrix pauli_y();
Spinor2Matrix pauli_z();
/// sigma . v
Spinor2Matrix pauli_dot(const Vec3& v);

/// The four Bell states. The order is part of the output format.
enum class BellKind {
    PhiPlus,   // (|++> + |-->) / sqrt2
    PhiMinus,  // (|++> - |-->) / sqrt2
    PsiPlus,   // (|+-> + |-+>) / sqrt2
    PsiMinus,  // (|+-> - |-+>) / sqrt2
};

inline constexpr std::array<BellKind, 4> kAllBellKinds{BellKind::PhiPlus, BellKind::PhiMinus, BellKind::PsiPlus,
                                                       BellKind::PsiMinus};

/// "phi+", "phi-", "psi+", "psi-"
std::string_view to_string(BellKind kind);
std::optional<BellKind> parse_bell_kind(std::string_view text);

using MomentumPair = std::pair<FourVector, FourVector>;

/// Pure state of two spin-1/2 particles with sharp momenta. The momenta are
/// carried as labels only; the amplitude algebra is four dimensional.
class TwoQubitState {
public:
    /// Requires |amplitudes| = 1 within `tol.consistency`.
    explicit TwoQubitState(const Amplitudes& amplitudes, std::optional<MomentumPair> momenta = std::nullopt,
                           const Tolerances& tol = kDefaultTolerances);

    static TwoQubitState normalized(const Amplitudes& amplitudes,
                                    std::optional<MomentumPair> momenta = std::nullopt);

    const Amplitudes& amplitudes() const { return amplitudes_; }
    Complex amplitude(int index) const { return amplitudes_[index]; }
    const std::optional<MomentumPair>& momenta() const { return momenta_; }

    double norm() const { return amplitudes_.norm(); }
    /// <this|other>
    Complex inner(const TwoQubitState& other) const { return amplitudes_.dot(other.amplitudes_); }
    /// Largest |a_i - b_i|.
    double max_amplitude_deviation(const TwoQubitState& other) const;

private:
    Amplitudes amplitudes_;
    std::optional<MomentumPair> momenta_;
};

/// Largest entry of |U^dagger U - 1|.
double unitarity_defect(const Spinor2Matrix& u);

/// D(W) = exp(-i angle n.sigma / 2). For the y axis this is the real matrix
/// [[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]].
Spinor2Matrix su2_from_rotation(const WignerRotation& r);

/// P p = (p0, -p)
FourVector parity(const FourVector& p);

Amplitudes bell_amplitudes(BellKind kind);
TwoQubitState bell_state(BellKind kind, const FourVector& p, const FourVector& pp);
TwoQubitState bell_state(BellKind kind);

/// (dA (x) dB) applied to the spin amplitudes; momentum labels unchanged.
/// Throws DomainError when either factor is not unitary within
/// `tol.consistency`.
TwoQubitState boost_state(const TwoQubitState& s, const Spinor2Matrix& d_a, const Spinor2Matrix& d_b,
                          const Tolerances& tol = kDefaultTolerances);

/// Full U(Lambda) action on a labelled state: each particle's spin is rotated
/// by D(W(Lambda, p_i)) and its momentum label mapped to Lambda p_i.
TwoQubitState apply_lorentz(const TwoQubitState& s, const LorentzMatrix& boost, double mass,
                            const Tolerances& tol = kDefaultTolerances);

/// Closed-form boosted Bell states for an observer boost along x and momenta
/// along +z / -z, with Wigner angle `omega`:
///   phi+ -> cos(omega) phi+ - sin(omega) psi-
///   phi- -> phi-
///   psi+ -> psi+
///   psi- -> sin(omega) phi+ + cos(omega) psi-
TwoQubitState boosted_bell_analytic(BellKind kind, double omega);

}  // namespace covbell
