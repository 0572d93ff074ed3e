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

#include "qfdiv/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qfdiv::matcore {

HermitianMatrix::HermitianMatrix(int dim) : m_(dim) {
  if (dim < 1) throw DomainError("matrix dimension must be positive");
}

HermitianMatrix HermitianMatrix::from_entries(int dim, const std::vector<Cmplx>& row_major) {
  if (static_cast<int>(row_major.size()) != dim * dim)
    throw LengthMismatch("entry list does not match dim*dim");
  ComplexMatrix m(dim);
  m.a = row_major;
  m.hermitize();
  return HermitianMatrix(std::move(m));
}

HermitianMatrix HermitianMatrix::from_dense(const ComplexMatrix& m) {
  ComplexMatrix c = m;
  c.hermitize();
  return HermitianMatrix(std::move(c));
}

HermitianMatrix HermitianMatrix::identity(int dim) {
  return HermitianMatrix(ComplexMatrix::identity(dim));
}

void HermitianMatrix::set(int i, int j, Cmplx v) {
  if (i == j) {
    m_(i, i) = Cmplx(v.real(), 0.0);
  } else {
    m_(i, j) = v;
    m_(j, i) = std::conj(v);
  }
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& o) {
  m_ += o.m_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& o) {
  m_ -= o.m_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double s) {
  m_ *= s;
  return *this;
}

namespace {

// PSD acceptance shared by both density factories.
void require_psd(const HermitianMatrix& h, const char* what) {
  EigenSystem es = hermitian_eig(h);
  double top = 0.0;
  for (double v : es.eigenvalues) top = std::max(top, std::abs(v));
  double floor = -1e-10 * std::max(1.0, top);
  if (es.eigenvalues.back() < floor)
    throw NotPsd(std::string(what) + ": min eigenvalue " + std::to_string(es.eigenvalues.back()));
}

}  // namespace

DensityMatrix DensityMatrix::normalized(HermitianMatrix h) {
  require_psd(h, "density matrix");
  if (std::abs(h.trace() - 1.0) > 1e-10)
    throw NotNormalized("trace " + std::to_string(h.trace()) + " is not 1");
  return DensityMatrix(std::move(h), true);
}

DensityMatrix DensityMatrix::subnormalized(HermitianMatrix h) {
  require_psd(h, "subnormalized operator");
  return DensityMatrix(std::move(h), false);
}

EigenSystem hermitian_eig(const HermitianMatrix& h) {
  EigenSystem es;
  detail::jacobi_eig(h.dense(), es.eigenvalues, es.eigenvectors);
  return es;
}

HermitianMatrix matrix_function(const HermitianMatrix& h, const std::function<double(double)>& f) {
  EigenSystem es = hermitian_eig(h);
  int d = h.dim();
  ComplexMatrix out(d);
  for (int k = 0; k < d; ++k) {
    double fv = f(es.eigenvalues[k]);
    if (!std::isfinite(fv))
      throw DomainError("matrix_function: f(" + std::to_string(es.eigenvalues[k]) +
                        ") is not finite");
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        out(i, j) += fv * es.eigenvectors(i, k) * std::conj(es.eigenvectors(j, k));
  }
  return HermitianMatrix::from_dense(out);
}

HermitianMatrix positive_part(const HermitianMatrix& x) {
  return matrix_function(x, [](double t) { return t > 0.0 ? t : 0.0; });
}

HermitianMatrix abs_op(const HermitianMatrix& x) {
  return matrix_function(x, [](double t) { return std::abs(t); });
}

double trace_norm(const HermitianMatrix& x) {
  EigenSystem es = hermitian_eig(x);
  double s = 0.0;
  for (double v : es.eigenvalues) s += std::abs(v);
  return s;
}

double op_norm(const HermitianMatrix& x) {
  EigenSystem es = hermitian_eig(x);
  double s = 0.0;
  for (double v : es.eigenvalues) s = std::max(s, std::abs(v));
  return s;
}

double min_eigenvalue(const HermitianMatrix& x) {
  EigenSystem es = hermitian_eig(x);
  return es.eigenvalues.back();
}

bool is_psd(const HermitianMatrix& h, double tol) {
  EigenSystem es = hermitian_eig(h);
  double top = 0.0;
  for (double v : es.eigenvalues) top = std::max(top, std::abs(v));
  return es.eigenvalues.back() >= -tol * std::max(1.0, top);
}

HermitianMatrix generalized_inverse(const HermitianMatrix& h) {
  EigenSystem es = hermitian_eig(h);
  double top = es.eigenvalues.empty() ? 0.0 : std::max(0.0, es.eigenvalues.front());
  double cutoff = 1e-12 * top;
  int d = h.dim();
  ComplexMatrix out(d);
  for (int k = 0; k < d; ++k) {
    if (es.eigenvalues[k] <= cutoff) continue;
    double inv = 1.0 / es.eigenvalues[k];
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        out(i, j) += inv * es.eigenvectors(i, k) * std::conj(es.eigenvectors(j, k));
  }
  return HermitianMatrix::from_dense(out);
}

HermitianMatrix support_projector(const HermitianMatrix& h) {
  EigenSystem es = hermitian_eig(h);
  double top = es.eigenvalues.empty() ? 0.0 : std::max(0.0, es.eigenvalues.front());
  double cutoff = 1e-12 * top;
  int d = h.dim();
  ComplexMatrix out(d);
  for (int k = 0; k < d; ++k) {
    if (es.eigenvalues[k] <= cutoff) continue;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        out(i, j) += es.eigenvectors(i, k) * std::conj(es.eigenvectors(j, k));
  }
  return HermitianMatrix::from_dense(out);
}

HermitianMatrix support_intersection(const HermitianMatrix& p, const HermitianMatrix& q) {
  if (p.dim() != q.dim()) throw DimensionMismatch("support_intersection: dims differ");
  HermitianMatrix s = support_projector(p) + support_projector(q);
  EigenSystem es = hermitian_eig(s);
  int d = s.dim();
  ComplexMatrix out(d);
  for (int k = 0; k < d; ++k) {
    if (es.eigenvalues[k] < 2.0 - 1e-8) continue;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        out(i, j) += es.eigenvectors(i, k) * std::conj(es.eigenvectors(j, k));
  }
  return HermitianMatrix::from_dense(out);
}

HermitianMatrix anticommutator(const HermitianMatrix& x, const HermitianMatrix& y) {
  if (x.dim() != y.dim()) throw DimensionMismatch("anticommutator: dims differ");
  ComplexMatrix xy = detail::matmul(x.dense(), y.dense());
  ComplexMatrix yx = detail::matmul(y.dense(), x.dense());
  xy += yx;
  return HermitianMatrix::from_dense(xy);
}

double commutator_norm(const HermitianMatrix& x, const HermitianMatrix& y) {
  if (x.dim() != y.dim()) throw DimensionMismatch("commutator_norm: dims differ");
  ComplexMatrix xy = detail::matmul(x.dense(), y.dense());
  ComplexMatrix yx = detail::matmul(y.dense(), x.dense());
  xy -= yx;
  return xy.frobenius();
}

HermitianMatrix conjugate_unitary(const HermitianMatrix& h, const ComplexMatrix& u) {
  if (h.dim() != u.n) throw DimensionMismatch("conjugate_unitary: dims differ");
  return HermitianMatrix::from_dense(detail::conjugate(u, h.dense()));
}

}  // namespace qfdiv::matcore
