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

#include <string>
#include <vector>

#include "speclab/quadrature.hpp"

namespace speclab {

/// Riesz exponent gamma >= 0 and boundary dimension d >= 1 (d = 0 only
/// for the half-line base case, which has its own entry points).
struct ConstantQuery {
    double gamma = 0.0;
    int d = 1;
};

enum class BoundKind { upper, lower, sharp };

/// One tabulated multiple of a semiclassical constant, with the window
/// it is valid on and where the number comes from.
struct BoundEntry {
    double factor = 1.0;
    std::string window;
    BoundKind kind = BoundKind::upper;
    std::string source;
};

/// Semiclassical constant for surface potentials:
///   L^cl_{gamma,d} = 2^-d pi^-d/2 Gamma(gamma+1) / Gamma(gamma+d/2+1).
double lt_classical(const ConstantQuery& q);

/// Semiclassical constant in the relativistic bound:
///   D^cl_{gamma,d} = 2^-d pi^-d/2 Gamma(gamma+1) Gamma(d+1)
///                    / (Gamma(gamma+d+1) Gamma(d/2+1)).
double rel_classical(const ConstantQuery& q);

/// Sharp constant in the fractional Sobolev inequality
///   S'_d ||u||^2_{2d/(d-1)} <= ||(-Delta)^{1/4} u||^2,  d >= 2.
double sobolev_trace_constant(int d);

/// Factor 2^{d-1} Gamma(d+1) / (d-1)^d multiplying the semiclassical
/// constant in the lower bound for the relativistic counting constant.
/// Exceeds 1 exactly for d <= 7.
double daubechies_lower_factor(int d);

/// Best tabulated upper bound on the surface-potential constant as a
/// multiple of L^cl.  Throws NoBoundError outside every window (e.g.
/// gamma = 0 at d = 1, where no finite constant exists).
BoundEntry surface_bound_table(const ConstantQuery& q);

/// Best tabulated upper bound on the relativistic constant as a multiple
/// of D^cl (direct tables for d = 2, 3; gamma = 0 and d >= 4; d = 1 via
/// the surface-potential route).
BoundEntry relativistic_bound_table(const ConstantQuery& q);

/// Known lower bounds (as multiples of the respective semiclassical
/// constant) used in the table dump.
std::vector<BoundEntry> lower_bound_entries(const ConstantQuery& q);

/// Sharp delta-plane constant for gamma >= 3/2 as an absolute value:
/// 2^{-2 gamma - d} L^cl_{gamma,d}.  The general reduction is the
/// potential rescaling v -> v/2, exposed as this fixed factor.
double delta_plane_sharp(const ConstantQuery& q);

/// Minimizer and coefficient of the moment-splitting bound:
///   rho* = sqrt(d/(gamma+d)),
///   factor = gamma^{gamma/2} d^{d/2} / (gamma+d)^{(gamma+d)/2}.
struct RhoOptimum {
    double rho;
    double factor;
};
RhoOptimum optimal_rho(double gamma, int d);

/// Beta-integral lift: evaluates
///   B(gamma-gamma0, gamma0+1)^{-1} Int_0^inf s^{gamma-gamma0-1} (t+s)_-^{gamma0} ds
/// by quadrature for t < 0 and 0 <= gamma0 < gamma.  Equals |t|^gamma.
double aizenman_lieb_identity(double t, double gamma, double gamma0,
                              const QuadratureRule& rule);

/// One row of the constant-table dump.
struct ConstantRow {
    double gamma;
    int d;
    std::string quantity;
    double value;
    std::string kind;
    std::string window;
    std::string source;
};

/// All tabulated quantities for one query (classical values, upper and
/// lower bounds, Sobolev constant when defined).
std::vector<ConstantRow> constant_table(const ConstantQuery& q);

/// CSV with header gamma,d,quantity,value,kind,window,source.
std::string constant_table_csv(const std::vector<ConstantRow>& rows);

} // namespace speclab
