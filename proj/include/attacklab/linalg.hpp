// Copyright 2026 The Authors.
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

#include <complex>
#include <vector>

#include "attacklab/matrix.hpp"

namespace attacklab {

/// Solves A X = B with partial-pivot LU. A and B are consumed.
Matrix lu_solve(Matrix a, Matrix b);

/// e^{S t} by Padé scaling-and-squaring (degrees 3/5/7/9/13 chosen from the
/// 1-norm). Throws on non-finite entries.
Matrix matrix_exponential(const Matrix& s, double t);

/// ∫_0^{t_c} e^{S u} du via the augmented block exponential
/// exp([[S, I], [0, 0]] t_c); valid for singular S. Requires t_c > 0.
Matrix exp_integral(const Matrix& s, double t_c);

struct SymEig {
  Vector eigenvalues;  // ascending
  Matrix vectors;      // orthonormal columns, matching order
};

/// Cyclic Jacobi eigensolver for symmetric matrices.
SymEig sym_eig(const Matrix& a);

struct Svd {
  Vector singular_values;  // descending
  Matrix right_vectors;    // V, columns matching singular_values
};

/// One-sided Jacobi SVD (values and right vectors only). Small singular
/// values come out at high relative accuracy, which is what the rank and
/// kernel decisions need.
Svd jacobi_svd(const Matrix& a);

/// Count of singular values above rel_tol * sigma_max.
int matrix_rank(const Matrix& a, double rel_tol = 1e-8);

/// Eigenvalues of a small real square matrix: Householder Hessenberg
/// reduction followed by complex shifted QR. Intended for the m x m
/// dynamics blocks, not for large systems.
std::vector<std::complex<double>> eig_general(const Matrix& a);

}  // namespace attacklab
