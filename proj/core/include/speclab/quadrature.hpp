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

#include <functional>
#include <vector>

namespace speclab {

/// Gauss-Legendre rule on [-1, 1]: weights sum to 2, exact for
/// polynomials of degree <= 2*order - 1.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    int order = 0;

    /// Integral of f over [a, b] with the rule mapped affinely.
    double integrate(const std::function<double(double)>& f, double a, double b) const;
};

/// Nodes and weights by Newton iteration on the Legendre recurrence.
/// order must lie in [1, 512].
QuadratureRule gauss_legendre(int order);

/// Result of the adaptive quadrature driver.
struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int panels = 0;
    bool converged = false;
};

/// Globally adaptive panel quadrature built on a Gauss-Legendre rule.
/// Splits the worst panel first, so integrable endpoint singularities
/// are resolved by geometric refinement.
IntegralResult integrate_adaptive(const std::function<double(double)>& f,
                                  double a, double b,
                                  const QuadratureRule& rule,
                                  double abs_tol,
                                  int max_panels = 20000);

} // namespace speclab
