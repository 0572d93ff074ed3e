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

// Deterministic random instance generators shared by the unit and
// acceptance suites. Everything is seeded explicitly; no global state.

#ifndef QFDIV_TESTS_SUPPORT_HPP
#define QFDIV_TESTS_SUPPORT_HPP

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qfdiv/bloch.hpp"
#include "qfdiv/fdiv.hpp"
#include "qfdiv/matcore.hpp"
#include "qfdiv/reverse_test.hpp"

namespace testsupport {

using qfdiv::matcore::Cmplx;
using qfdiv::matcore::ComplexMatrix;
using qfdiv::matcore::DensityMatrix;
using qfdiv::matcore::HermitianMatrix;
using Rng = std::mt19937_64;

inline Cmplx gauss(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return {n(rng), n(rng)};
}

inline HermitianMatrix random_hermitian(Rng& rng, int dim) {
  std::vector<Cmplx> e(static_cast<size_t>(dim) * dim);
  for (auto& v : e) v = gauss(rng);
  return HermitianMatrix::from_entries(dim, e);  // construction symmetrizes
}

/// Full-rank state G G^dagger / tr, a.s. with all eigenvalues positive.
inline DensityMatrix random_state(Rng& rng, int dim) {
  ComplexMatrix g(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = gauss(rng);
  auto h = HermitianMatrix::from_dense(qfdiv::detail::matmul(g, g.adjoint()));
  h *= 1.0 / h.trace();
  return DensityMatrix::normalized(h);
}

/// State with eigenvalues bounded below by `floor` (mixes with I/dim).
inline DensityMatrix random_state_floor(Rng& rng, int dim, double floor) {
  auto rho = random_state(rng, dim);
  auto h = (1.0 - dim * floor) * rho.matrix() + floor * HermitianMatrix::identity(dim);
  return DensityMatrix::normalized(h);
}

inline std::vector<Cmplx> random_pure(Rng& rng, int dim) {
  std::vector<Cmplx> psi(dim);
  double n2 = 0.0;
  for (auto& v : psi) {
    v = gauss(rng);
    n2 += std::norm(v);
  }
  for (auto& v : psi) v /= std::sqrt(n2);
  return psi;
}

inline DensityMatrix pure_state(const std::vector<Cmplx>& psi) {
  const int d = static_cast<int>(psi.size());
  std::vector<Cmplx> e(static_cast<size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) e[static_cast<size_t>(i) * d + j] = psi[i] * std::conj(psi[j]);
  return DensityMatrix::normalized(HermitianMatrix::from_entries(d, e));
}

/// Rank r < dim state, as a mixture of r eigenvectors of a random Hermitian.
inline DensityMatrix random_rank_deficient_state(Rng& rng, int dim, int rank) {
  auto es = qfdiv::matcore::hermitian_eig(random_hermitian(rng, dim));
  std::vector<double> w(rank);
  std::exponential_distribution<double> ex(1.0);
  double s = 0.0;
  for (auto& v : w) {
    v = ex(rng) + 1e-3;
    s += v;
  }
  HermitianMatrix h(dim);
  for (int k = 0; k < rank; ++k) {
    std::vector<Cmplx> col(dim);
    for (int i = 0; i < dim; ++i) col[i] = es.eigenvectors(i, k);
    for (int i = 0; i < dim; ++i)
      for (int j = i; j < dim; ++j)
        h.set(i, j, h(i, j) + (w[k] / s) * col[i] * std::conj(col[j]));
  }
  return DensityMatrix::normalized(h);
}

/// Unitary with Haar-like columns (eigenvectors of a random Hermitian).
inline ComplexMatrix random_unitary(Rng& rng, int dim) {
  return qfdiv::matcore::hermitian_eig(random_hermitian(rng, dim)).eigenvectors;
}

/// Full-support spectrum for commuting-pair tests (entries >= 0.05/dim).
inline std::vector<double> random_spectrum(Rng& rng, int dim) {
  std::exponential_distribution<double> ex(1.0);
  std::vector<double> w(dim);
  double s = 0.0;
  for (auto& v : w) {
    v = ex(rng) + 0.05;
    s += v;
  }
  for (auto& v : w) v /= s;
  return w;
}

struct CommutingPair {
  DensityMatrix rho;
  DensityMatrix sigma;
  std::vector<double> spec_rho;    // eigenvalues in the shared basis
  std::vector<double> spec_sigma;  // aligned with spec_rho
};

inline CommutingPair random_commuting_pair(Rng& rng, int dim) {
  auto u = random_unitary(rng, dim);
  auto p = random_spectrum(rng, dim);
  auto q = random_spectrum(rng, dim);
  auto build = [&](const std::vector<double>& w) {
    HermitianMatrix d(dim);
    for (int i = 0; i < dim; ++i) d.set(i, i, w[i]);
    return DensityMatrix::normalized(qfdiv::matcore::conjugate_unitary(d, u));
  };
  return {build(p), build(q), p, q};
}

/// POVM M_i = S^{-1/2} G_i S^{-1/2} for random PSD G_i, S = sum G_i.
inline qfdiv::reverse_test::POVM random_povm(Rng& rng, int dim, int n_outcomes) {
  std::vector<HermitianMatrix> g;
  HermitianMatrix s(dim);
  for (int k = 0; k < n_outcomes; ++k) {
    ComplexMatrix x(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) x(i, j) = gauss(rng);
    g.push_back(HermitianMatrix::from_dense(qfdiv::detail::matmul(x, x.adjoint())));
    s += g.back();
  }
  auto si = qfdiv::matcore::matrix_function(s, [](double t) { return 1.0 / std::sqrt(t); });
  std::vector<HermitianMatrix> m;
  m.reserve(g.size());
  for (const auto& gi : g)
    m.push_back(HermitianMatrix::from_dense(qfdiv::detail::matmul(
        qfdiv::detail::matmul(si.dense(), gi.dense()), si.dense())));
  return qfdiv::reverse_test::POVM(std::move(m));
}

inline qfdiv::bloch::BlochVector random_ball_vector(Rng& rng, double max_norm = 1.0) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    qfdiv::bloch::BlochVector v{u(rng), u(rng), u(rng)};
    if (v.norm() < max_norm) return v;
  }
}

inline double max_abs_entry_diff(const HermitianMatrix& a, const HermitianMatrix& b) {
  double m = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

inline bool bit_identical(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) return false;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (a(i, j).real() != b(i, j).real() || a(i, j).imag() != b(i, j).imag()) return false;
  return true;
}

}  // namespace testsupport

#endif  // QFDIV_TESTS_SUPPORT_HPP
