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

#include <cstddef>
#include <span>
#include <vector>

namespace speclab {

struct Triplet {
    int row = 0;
    int col = 0; // row >= col is enforced on construction
    double value = 0.0;
};

/// Real symmetric matrix.  Dense storage keeps the lower triangle
/// row-major; sparse storage keeps a coordinate list with row >= col.
class SymmetricMatrix {
  public:
    static SymmetricMatrix dense(int n);
    static SymmetricMatrix dense_from_full(int n, std::span<const double> full_row_major);
    static SymmetricMatrix sparse(int n, std::vector<Triplet> entries);

    int n() const { return n_; }
    bool is_dense() const { return dense_; }

    /// Dense element access (i >= j not required; symmetry applied).
    double& at(int i, int j);
    double at(int i, int j) const;

    const std::vector<Triplet>& triplets() const { return entries_; }

    /// y = A x (works for both storages).
    void matvec(std::span<const double> x, std::span<double> y) const;

    /// Full n*n row-major copy.
    std::vector<double> to_full() const;

    /// Densified copy of a sparse matrix (self-copy when already dense).
    SymmetricMatrix densified() const;

    double frobenius_norm() const;
    double max_abs() const;

    /// Throws DataError on non-finite entries or malformed indices.
    void validate() const;

    /// Half-bandwidth: max |row - col| over stored entries.
    int bandwidth() const;

  private:
    SymmetricMatrix() = default;
    int n_ = 0;
    bool dense_ = true;
    std::vector<double> lower_;      // dense: n(n+1)/2, row-major lower triangle
    std::vector<Triplet> entries_;   // sparse
};

/// Eigenvalues sorted non-decreasing.  complete == true means all n of
/// them; otherwise only a certified lower part of the spectrum.
struct Spectrum {
    std::vector<double> eigenvalues;
    bool complete = true;

    int count_below(double shift) const;
    double min() const { return eigenvalues.front(); }
    double max() const { return eigenvalues.back(); }
};

} // namespace speclab
