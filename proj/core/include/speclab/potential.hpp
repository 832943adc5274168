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

#include <array>
#include <string>
#include <string_view>

namespace speclab {

enum class ProfileKind { gaussian, bump, sech2 };

/// Nonnegative potential on R^d (d = 1 or 2), from a named family with
/// closed-form integrals of every positive power:
///   gaussian:  amp * exp(-|x|^2 / width^2)
///   bump:      amp * (1 - (|x|/radius)^2)_+        (compact support)
///   sech2:     amp * sech^2(x / width)             (d = 1 only)
/// The coupling multiplies the profile (strong-coupling parameter).
class Potential {
  public:
    Potential(int d, ProfileKind kind, double amplitude, double scale,
              double coupling = 1.0);

    /// Parses "family:amp=3.0,width=1.0" (bump takes radius=...).
    static Potential parse(std::string_view text, int d, double coupling = 1.0);

    int dim() const { return d_; }
    ProfileKind kind() const { return kind_; }
    double amplitude() const { return amp_; }
    double scale() const { return scale_; }
    double coupling() const { return coupling_; }

    Potential with_coupling(double coupling) const;

    /// Pointwise value coupling * profile(|x|).
    double value(double x) const;                 // d = 1
    double value(double x, double y) const;       // d = 2
    double radial(double r) const;

    /// Closed-form integral of v^p over R^d for p > 0 (coupling included).
    double integral_pow(double p) const;

    /// Mass outside |x| > r: used for box-truncation warnings.
    double tail_mass(double r) const;

    /// Smallest radius containing all but `eps` of the total mass.
    double support_radius(double eps = 1e-10) const;

    std::string to_string() const;

  private:
    int d_;
    ProfileKind kind_;
    double amp_;
    double scale_;
    double coupling_;
};

} // namespace speclab
