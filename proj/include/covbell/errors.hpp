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

#include <stdexcept>
#include <string>

namespace covbell {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An input lies outside the domain of the operation (beta >= 1, off-shell
/// momentum, non-unit axis, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An internal cross-check failed: the inputs were individually valid but
/// the computation produced an inconsistent result.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// The Czachor CHSH curve never reaches |C| = 2 on the scanned beta grid.
class NoCrossingError : public Error {
public:
    using Error::Error;
};

/// An iterative procedure exhausted its iteration budget.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

}  // namespace covbell
