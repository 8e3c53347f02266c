// Copyright 2026 The wdwvqe Authors
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

#include <vector>

#include "wdwvqe/matrix.hpp"

namespace wdwvqe {

struct EigResult {
  /// Ascending.
  std::vector<double> eigenvalues;
  /// Column i is the eigenvector of eigenvalues[i]; each column is scaled so
  /// its first largest-magnitude entry is real and positive.
  ComplexMatrix eigenvectors;
};

/// Full eigendecomposition of a Hermitian matrix: Householder reduction with
/// complex reflectors to a Hermitian tridiagonal, a diagonal phase change to
/// make it real symmetric, then implicit-shift QL.
///
/// Eigenvectors inside a degenerate cluster are re-orthonormalized and
/// ordered by the index of their largest-magnitude component.
///
/// Throws NotHermitian if the input deviates from Hermitian by more than
/// 1e-10 * max(1, max|H_jk|), NoConvergence if QL needs more than 60 sweeps
/// for one eigenvalue.
EigResult eigh(const ComplexMatrix& op);

/// Smallest eigenvalue.
double min_eigenvalue(const ComplexMatrix& op);

/// Eigenvalue of smallest magnitude (ties go to the smaller eigenvalue).
double nearest_zero_eigenvalue(const ComplexMatrix& op);

/// Same selection applied to an already computed spectrum.
double nearest_zero(const std::vector<double>& ascending_eigenvalues);

}  // namespace wdwvqe
