// Copyright 2026 The qfdiv Authors.
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

#ifndef QFDIV_MATCORE_HPP
#define QFDIV_MATCORE_HPP

#include <complex>
#include <functional>
#include <vector>

#include "qfdiv/detail/dense.hpp"
#include "qfdiv/errors.hpp"

namespace qfdiv::matcore {

using Cmplx = std::complex<double>;
using ComplexMatrix = detail::CMat<double>;

/// Dense Hermitian matrix at desk scale (dim <= 64). Construction
/// symmetrizes the input, H <- (H + H^dagger)/2, so the stored entries
/// satisfy entries[i][j] == conj(entries[j][i]) exactly.
class HermitianMatrix {
public:
  explicit HermitianMatrix(int dim);

  /// Builds from a row-major dim x dim array, symmetrizing.
  static HermitianMatrix from_entries(int dim, const std::vector<Cmplx>& row_major);
  static HermitianMatrix from_dense(const ComplexMatrix& m);
  static HermitianMatrix identity(int dim);

  int dim() const { return m_.n; }
  Cmplx operator()(int i, int j) const { return m_(i, j); }

  /// Writes entry (i, j) and its conjugate at (j, i); the diagonal keeps
  /// only the real part.
  void set(int i, int j, Cmplx v);

  const ComplexMatrix& dense() const { return m_; }

  HermitianMatrix& operator+=(const HermitianMatrix& o);
  HermitianMatrix& operator-=(const HermitianMatrix& o);
  HermitianMatrix& operator*=(double s);
  friend HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) { return a += b; }
  friend HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) { return a -= b; }
  friend HermitianMatrix operator*(double s, HermitianMatrix a) { return a *= s; }

  double trace() const { return m_.trace_real(); }
  double frobenius_norm() const { return m_.frobenius(); }

private:
  explicit HermitianMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

/// Eigendecomposition H = V diag(vals) V^dagger with eigenvalues sorted
/// descending and orthonormal eigenvector columns.
struct EigenSystem {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Density operator: PSD within 1e-10 (relative to the largest eigenvalue
/// magnitude). `normalized` additionally requires trace within 1e-10 of 1;
/// `subnormalized` admits any PSD operator, which is what intermediate
/// quantities such as unnormalized mixture components need.
class DensityMatrix {
public:
  static DensityMatrix normalized(HermitianMatrix h);
  static DensityMatrix subnormalized(HermitianMatrix h);

  const HermitianMatrix& matrix() const { return h_; }
  int dim() const { return h_.dim(); }
  double trace() const { return h_.trace(); }
  bool normalized_mode() const { return normalized_; }

private:
  DensityMatrix(HermitianMatrix h, bool normalized) : h_(std::move(h)), normalized_(normalized) {}
  HermitianMatrix h_;
  bool normalized_;
};

// -- Spectral operations ----------------------------------------------------

EigenSystem hermitian_eig(const HermitianMatrix& h);

/// V f(Lambda) V^dagger. Throws DomainError when f evaluates to a non-finite
/// value on some eigenvalue.
HermitianMatrix matrix_function(const HermitianMatrix& h, const std::function<double(double)>& f);

HermitianMatrix positive_part(const HermitianMatrix& x);
HermitianMatrix abs_op(const HermitianMatrix& x);
double trace_norm(const HermitianMatrix& x);

/// Largest absolute eigenvalue.
double op_norm(const HermitianMatrix& x);
double min_eigenvalue(const HermitianMatrix& x);

/// lambda_min(H) >= -tol * max(1, ||H||_op).
bool is_psd(const HermitianMatrix& h, double tol = 1e-10);

/// Moore-Penrose inverse of a PSD matrix: inverts eigenvalues above
/// 1e-12 * lambda_max, zeroes the rest.
HermitianMatrix generalized_inverse(const HermitianMatrix& h);

/// Orthogonal projector onto the range (eigenvalues above 1e-12 * lambda_max).
HermitianMatrix support_projector(const HermitianMatrix& h);

/// Orthogonal projector onto range(P) intersect range(Q), via the
/// eigenvalue-2 eigenspace of the two range projectors' sum.
HermitianMatrix support_intersection(const HermitianMatrix& p, const HermitianMatrix& q);

// -- Small composites used across modules -----------------------------------

/// XY + YX (Hermitian for Hermitian inputs).
HermitianMatrix anticommutator(const HermitianMatrix& x, const HermitianMatrix& y);

/// ||XY - YX||_F.
double commutator_norm(const HermitianMatrix& x, const HermitianMatrix& y);

/// U H U^dagger for unitary U.
HermitianMatrix conjugate_unitary(const HermitianMatrix& h, const ComplexMatrix& u);

}  // namespace qfdiv::matcore

#endif  // QFDIV_MATCORE_HPP
