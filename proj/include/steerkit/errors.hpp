// Copyright 2026 The steerkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace steerkit {

/// An input violates a documented precondition. Maps to CLI exit code 1.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A computation cannot proceed or did not converge. Maps to CLI exit code 2.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// A quadrature result failed its grid-doubling convergence gate, or an
/// integrand evaluated to a non-finite value.
class QuadratureError : public NumericalError {
public:
    explicit QuadratureError(const std::string& what) : NumericalError(what) {}
};

/// A matrix inverse was requested past the conditioning limit.
class SingularMatrixError : public NumericalError {
public:
    explicit SingularMatrixError(const std::string& what) : NumericalError(what) {}
};

/// An analytic closed form was evaluated at one of its poles.
class SingularityError : public NumericalError {
public:
    explicit SingularityError(const std::string& what) : NumericalError(what) {}
};

/// A zero-probability branch or empty data set left nothing to compute with.
class DegenerateError : public NumericalError {
public:
    explicit DegenerateError(const std::string& what) : NumericalError(what) {}
};

/// An iterative solver ran out of iterations.
class ConvergenceError : public NumericalError {
public:
    explicit ConvergenceError(const std::string& what) : NumericalError(what) {}
};

} // namespace steerkit
