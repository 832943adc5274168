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

#include "speclab/matrix.hpp"

namespace speclab {

/// Hard cap for the dense eigensolver (desk scale, predictable memory).
inline constexpr int kDenseEigMaxN = 6000;

/// All eigenvalues of a dense symmetric matrix via Householder
/// tridiagonalization and implicitly shifted QL.
Spectrum eig_dense(const SymmetricMatrix& a);

/// Full decomposition A = V diag(lambda) V^T; vectors is n*n row-major,
/// column j of V belongs to eigenvalues[j].
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    std::vector<double> vectors;
    int n = 0;
};
EigenDecomposition eig_dense_full(const SymmetricMatrix& a);

/// Symmetric tridiagonal pieces (used by the eigensolver and by the
/// tridiagonal inertia count).
struct Tridiagonal {
    std::vector<double> diag;
    std::vector<double> off; // off[i] couples i and i+1, size n-1
};

/// Householder reduction of a dense symmetric matrix (no vectors).
Tridiagonal tridiagonalize(const SymmetricMatrix& a);

/// Eigenvalues of a symmetric tridiagonal matrix (implicit QL).
std::vector<double> tridiag_eigenvalues(Tridiagonal t);

/// Number of eigenvalues of the tridiagonal strictly below shift
/// (sign count of the LDL^T pivot recurrence; never breaks down).
int tridiag_count_below(const Tridiagonal& t, double shift);

/// k smallest eigenvalues of a sparse symmetric matrix by Lanczos with
/// full reorthogonalization.  k <= 40.  Throws ConvergenceError with the
/// best residuals if the iteration cap is hit.
Spectrum eig_lanczos_lowest(const SymmetricMatrix& a, int k, double tol = 1e-8);

/// Number of eigenvalues of A strictly below shift, via the inertia of
/// an LDL^T factorization of A - shift*I.  Dense matrices are reduced to
/// tridiagonal form first; sparse matrices use a banded LDL^T and may
/// throw PivotError (perturb the shift and retry).
int inertia_below(const SymmetricMatrix& a, double shift);

/// k smallest eigenvalues of A located by bisection on a strictly-below
/// counting function.  count(x) must be the number of eigenvalues < x.
/// Requires count(hi) >= k.
std::vector<double> eigenvalues_by_bisection(const std::function<int(double)>& count,
                                             int k, double lo, double hi,
                                             double tol = 1e-9);

} // namespace speclab
