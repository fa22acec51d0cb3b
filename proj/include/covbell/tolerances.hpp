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

namespace covbell {

/// Numerical thresholds shared by the library, the CLI and the test suites.
///
/// `construction` bounds the error of quantities built directly from closed
/// formulas (boost matrices, unit axes, state norms). `consistency` bounds
/// the residual of derived cross-checks such as W k = k for a little-group
/// element or the orthogonality of an extracted rotation block.
struct Tolerances {
    double construction = 1e-12;
    double consistency = 1e-9;
    double imaginary_residual = 1e-9;
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace covbell
