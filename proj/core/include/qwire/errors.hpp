/* Copyright 2026 The qwire Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef QWIRE_ERRORS_HPP
#define QWIRE_ERRORS_HPP

#include <stdexcept>

namespace qwire {

/// Invalid input: bad parameter values, grids, or integrator settings.
/// The CLI maps this family to exit code 2.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Operation called outside its mathematical domain (e.g. N below the
/// minimum dimension, Chebyshev form with zero off-diagonal).
class DomainError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Exact-integer arithmetic requested for non-integer entries.
class ModeError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Integrator configuration rejected (resolution guard, horizon).
class ConfigError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Linear system has no unique solution.
class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Integrated state became non-finite or left its stability bound.
class BlowUpError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qwire

#endif // QWIRE_ERRORS_HPP
