/*
 * Copyright (c) 2026, the speclab authors.
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

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace speclab {

/// Bad numeric input (out of a function's mathematical domain).
using DomainError = std::domain_error;

/// Bad configuration value (order/range limits, unknown names).
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Non-finite or otherwise unusable data fed to a solver.
struct DataError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Problem size beyond the supported desk-scale caps.
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

/// Iterative solver failed to converge; carries the best residuals seen.
struct ConvergenceError : std::runtime_error {
    std::vector<double> residuals;
    ConvergenceError(const std::string& what, std::vector<double> res = {})
        : std::runtime_error(what), residuals(std::move(res)) {}
};

/// LDL^T pivot breakdown; the caller should perturb the shift and retry.
struct PivotError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// No tabulated bound exists for the requested (gamma, d) window.
struct NoBoundError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A spectrum does not certifiably contain all negative eigenvalues.
struct CompletenessError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A counting function is still nonzero at the integration cutoff.
struct TailError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace speclab
