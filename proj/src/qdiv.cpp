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

#include "qfdiv/qdiv.hpp"

#include <cmath>
#include <vector>

#include "qfdiv/tvmax.hpp"

namespace qfdiv::qdiv {

using matcore::ComplexMatrix;
using matcore::DensityMatrix;
using matcore::HermitianMatrix;

fdiv::ExtendedReal dmax_operator_convex(const DensityMatrix& rho, const DensityMatrix& sigma,
                                        const fdiv::FDivFunction& f) {
  if (!f.operator_convex()) throw NotOperatorConvex(f.name() + " lacks the operator-convex flag");
  if (rho.dim() != sigma.dim()) throw DimensionMismatch("dmax_operator_convex: dims differ");
  if (matcore::min_eigenvalue(rho.matrix()) <= 1e-12)
    throw SingularState("rho is not strictly positive");
  if (matcore::min_eigenvalue(sigma.matrix()) <= 1e-12)
    throw SingularState("sigma is not strictly positive");

  HermitianMatrix s_inv_half =
      matcore::matrix_function(sigma.matrix(), [](double t) { return 1.0 / std::sqrt(t); });
  ComplexMatrix t = detail::matmul(detail::matmul(s_inv_half.dense(), rho.matrix().dense()),
                                   s_inv_half.dense());
  HermitianMatrix arg = HermitianMatrix::from_dense(t);
  HermitianMatrix val = matcore::matrix_function(arg, [&f](double r) { return f.eval(r); });
  double out = detail::matmul(sigma.matrix().dense(), val.dense()).trace_real();
  return fdiv::ExtendedReal::finite(out);
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw DimensionMismatch("trace_distance: dims differ");
  return matcore::trace_norm(rho.matrix() - sigma.matrix());
}

reverse_test::POVM helstrom_measurement(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw DimensionMismatch("helstrom_measurement: dims differ");
  HermitianMatrix delta = rho.matrix() - sigma.matrix();
  matcore::EigenSystem es = matcore::hermitian_eig(delta);
  int d = delta.dim();
  double top = 0.0;
  for (double v : es.eigenvalues) top = std::max(top, std::abs(v));
  double cutoff = 1e-12 * top;

  ComplexMatrix proj(d);
  for (int k = 0; k < d; ++k) {
    if (es.eigenvalues[k] <= cutoff) continue;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        proj(i, j) += es.eigenvectors(i, k) * std::conj(es.eigenvectors(j, k));
  }
  HermitianMatrix plus = HermitianMatrix::from_dense(proj);
  HermitianMatrix rest = HermitianMatrix::identity(d) - plus;
  return reverse_test::POVM({plus, rest});
}

fdiv::ExtendedReal measured_divergence(const DensityMatrix& rho, const DensityMatrix& sigma,
                                       const reverse_test::POVM& m, const fdiv::FDivFunction& f) {
  return fdiv::f_divergence(reverse_test::measure(rho, m), reverse_test::measure(sigma, m), f);
}

namespace {

// {P, I - P} for the rank-1 projector onto (c0, c1).
reverse_test::POVM projective_qubit_povm(std::complex<double> c0, std::complex<double> c1) {
  HermitianMatrix p(2);
  p.set(0, 0, std::norm(c0));
  p.set(1, 1, std::norm(c1));
  p.set(0, 1, c0 * std::conj(c1));
  return reverse_test::POVM({p, HermitianMatrix::identity(2) - p});
}

reverse_test::POVM eigenbasis_povm(const HermitianMatrix& h) {
  matcore::EigenSystem es = matcore::hermitian_eig(h);
  return projective_qubit_povm(es.eigenvectors(0, 0), es.eigenvectors(1, 0));
}

}  // namespace

GapScanReport measurement_gap_scan(const DensityMatrix& rho, const DensityMatrix& sigma,
                                   const fdiv::FDivFunction& f, int n_grid, Exec exec) {
  if (rho.dim() != 2 || sigma.dim() != 2)
    throw UnsupportedDimension("measurement_gap_scan handles qubits only");
  if (n_grid < 1) throw InvalidParameters("n_grid must be at least 1");

  bool tv_route = f.name() == "tv";
  if (!tv_route && !f.strictly_convex())
    throw NotStrictlyConvex(f.name() + " lacks the strictly-convex flag");

  fdiv::ExtendedReal dmax =
      tv_route ? fdiv::ExtendedReal::finite(tvmax::dmax_tv_sdp(rho, sigma, 1e-8).value)
               : dmax_operator_convex(rho, sigma, f);

  // Candidate k: 0..2 are the injected eigenbases, the rest the angular grid.
  auto candidate = [&](int k) -> reverse_test::POVM {
    if (k == 0) return eigenbasis_povm(rho.matrix());
    if (k == 1) return eigenbasis_povm(sigma.matrix());
    if (k == 2) return eigenbasis_povm(rho.matrix() - sigma.matrix());
    int g = k - 3;
    int i = g / n_grid, j = g % n_grid;
    double theta = M_PI * (i + 0.5) / n_grid;
    double phi = 2.0 * M_PI * j / n_grid;
    return projective_qubit_povm(std::cos(0.5 * theta),
                                 std::polar(std::sin(0.5 * theta), phi));
  };

  int total = 3 + n_grid * n_grid;
  std::vector<double> values(static_cast<size_t>(total));
  std::vector<char> finite(static_cast<size_t>(total), 1);
  bool parallel = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (parallel)
  for (int k = 0; k < total; ++k) {
    // Exceptions must not cross the parallel region; record and rethrow below.
    try {
      fdiv::ExtendedReal v = measured_divergence(rho, sigma, candidate(k), f);
      finite[k] = v.is_finite() ? 1 : 0;
      values[k] = v.is_finite() ? v.value() : 0.0;
    } catch (const std::exception&) {
      finite[k] = 2;
    }
  }
  for (int k = 0; k < total; ++k)
    if (finite[k] != 1) throw DomainError("measured divergence diverged during scan");

  int best_k = 0;
  for (int k = 1; k < total; ++k)
    if (values[k] > values[best_k]) best_k = k;

  GapScanReport rep{dmax,
                    values[best_k],
                    candidate(best_k),
                    dmax.value() - values[best_k],
                    n_grid,
                    matcore::commutator_norm(rho.matrix(), sigma.matrix()) <= 1e-10};
  return rep;
}

}  // namespace qfdiv::qdiv
