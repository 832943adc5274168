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

namespace speclab {

/// Gamma function for x > 0 (Lanczos approximation, ~1e-13 relative).
double gamma_fn(double x);

/// log Gamma for x > 0; usable far beyond the overflow range of gamma_fn.
double lgamma_fn(double x);

/// Euler Beta function B(a, b) for a, b > 0, evaluated through lgamma_fn.
double beta_fn(double a, double b);

/// Modified Bessel function of the second kind K_nu(x), 0 <= nu <= 5,
/// x > 0.  Series for x <= 2, continued fraction for x > 2.
double bessel_k(double nu, double x);

} // namespace speclab
