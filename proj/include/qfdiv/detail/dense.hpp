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

#ifndef QFDIV_DETAIL_DENSE_HPP
#define QFDIV_DETAIL_DENSE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

namespace qfdiv::detail {

/// Dense square complex matrix, row-major. Templated on the real scalar so
/// the interior-point solver can run in extended precision while the public
/// API stays on double.
template <typename Real>
struct CMat {
  using C = std::complex<Real>;

  int n = 0;
  std::vector<C> a;

  CMat() = default;
  explicit CMat(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim) {}

  static CMat identity(int dim) {
    CMat m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = Real(1);
    return m;
  }

  C& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const C& operator()(int i, int j) const {
    return a[static_cast<std::size_t>(i) * n + j];
  }

  CMat& operator+=(const CMat& o) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += o.a[k];
    return *this;
  }
  CMat& operator-=(const CMat& o) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] -= o.a[k];
    return *this;
  }
  CMat& operator*=(Real s) {
    for (auto& v : a) v *= s;
    return *this;
  }

  friend CMat operator+(CMat x, const CMat& y) { return x += y; }
  friend CMat operator-(CMat x, const CMat& y) { return x -= y; }
  friend CMat operator*(Real s, CMat x) { return x *= s; }

  C trace() const {
    C t{};
    for (int i = 0; i < n; ++i) t += (*this)(i, i);
    return t;
  }
  Real trace_real() const { return trace().real(); }

  Real frobenius() const {
    Real s{};
    for (const auto& v : a) s += std::norm(v);
    return std::sqrt(s);
  }

  CMat adjoint() const {
    CMat r(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
  }

  /// In-place projection onto the Hermitian part, (M + M^dagger)/2.
  void hermitize() {
    for (int i = 0; i < n; ++i) {
      (*this)(i, i) = C((*this)(i, i).real(), Real(0));
      for (int j = i + 1; j < n; ++j) {
        C m = ((*this)(i, j) + std::conj((*this)(j, i))) / Real(2);
        (*this)(i, j) = m;
        (*this)(j, i) = std::conj(m);
      }
    }
  }
};

template <typename Real>
CMat<Real> matmul(const CMat<Real>& x, const CMat<Real>& y) {
  const int n = x.n;
  CMat<Real> r(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const auto xik = x(i, k);
      if (xik == std::complex<Real>{}) continue;
      for (int j = 0; j < n; ++j) r(i, j) += xik * y(k, j);
    }
  }
  return r;
}

/// U H U^dagger for square U (not necessarily unitary).
template <typename Real>
CMat<Real> conjugate(const CMat<Real>& u, const CMat<Real>& h) {
  return matmul(matmul(u, h), u.adjoint());
}

template <typename To, typename From>
CMat<To> convert(const CMat<From>& m) {
  CMat<To> r(m.n);
  for (std::size_t k = 0; k < m.a.size(); ++k)
    r.a[k] = std::complex<To>(static_cast<To>(m.a[k].real()),
                              static_cast<To>(m.a[k].imag()));
  return r;
}

/// Cyclic Jacobi eigensolver for Hermitian matrices.
///
/// Sweeps (p, q) pivots in fixed lexicographic order and applies the complex
/// Givens rotation that annihilates H(p, q). Stops once the off-diagonal
/// Frobenius norm drops below rel_tol * ||H||_F. Deterministic for identical
/// input bits: pivot order, thresholds and arithmetic are all fixed.
///
/// On return `vals` holds eigenvalues sorted descending and the columns of
/// `vecs` the matching orthonormal eigenvectors.
template <typename Real>
void jacobi_eig(CMat<Real> h, std::vector<Real>& vals, CMat<Real>& vecs,
                Real rel_tol = Real(1e-14), int max_sweeps = 80) {
  using C = std::complex<Real>;
  const int n = h.n;
  vecs = CMat<Real>::identity(n);
  vals.assign(n, Real(0));
  if (n == 1) {
    vals[0] = h(0, 0).real();
    return;
  }

  const Real norm_h = h.frobenius();
  const Real stop = rel_tol * std::max(norm_h, Real(1e-300));

  auto offdiag = [&]() {
    Real s{};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) s += std::norm(h(i, j));
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < max_sweeps && offdiag() > stop; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const C apq = h(p, q);
        const Real m = std::abs(apq);
        if (m <= stop / (Real(n) * Real(n))) continue;

        // Phase factor that makes the pivot real, then a real rotation.
        const C w = apq / m;
        const Real app = h(p, p).real();
        const Real aqq = h(q, q).real();
        Real t;
        if (app == aqq) {
          t = Real(1);
        } else {
          const Real tau = (app - aqq) / (Real(2) * m);
          t = (tau >= Real(0) ? Real(1) : Real(-1)) /
              (std::abs(tau) + std::sqrt(Real(1) + tau * tau));
        }
        const Real c = Real(1) / std::sqrt(Real(1) + t * t);
        const Real s = t * c;

        // Column update H <- H * U with U_pp = w c, U_qp = s, U_pq = -w s,
        // U_qq = c (identity elsewhere).
        for (int k = 0; k < n; ++k) {
          const C hkp = h(k, p);
          const C hkq = h(k, q);
          h(k, p) = hkp * (w * c) + hkq * s;
          h(k, q) = hkp * (-w * s) + hkq * c;
        }
        // Row update H <- U^dagger * H.
        for (int k = 0; k < n; ++k) {
          const C hpk = h(p, k);
          const C hqk = h(q, k);
          h(p, k) = std::conj(w) * c * hpk + s * hqk;
          h(q, k) = -std::conj(w) * s * hpk + c * hqk;
        }
        // Accumulate eigenvectors V <- V * U.
        for (int k = 0; k < n; ++k) {
          const C vkp = vecs(k, p);
          const C vkq = vecs(k, q);
          vecs(k, p) = vkp * (w * c) + vkq * s;
          vecs(k, q) = vkp * (-w * s) + vkq * c;
        }
        // Restore exact Hermitian structure at the pivot.
        h(p, q) = C{};
        h(q, p) = C{};
        h(p, p) = C(h(p, p).real(), Real(0));
        h(q, q) = C(h(q, q).real(), Real(0));
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Real> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = h(i, i).real();
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return diag[i] > diag[j]; });

  CMat<Real> sorted(n);
  for (int j = 0; j < n; ++j) {
    vals[j] = diag[order[j]];
    for (int i = 0; i < n; ++i) sorted(i, j) = vecs(i, order[j]);
  }
  vecs = sorted;
}

/// Lower-triangular Cholesky factor of a Hermitian positive definite matrix.
/// Returns false (leaving `l` unspecified) when a pivot is not strictly
/// positive, which doubles as the strict-feasibility test in the solver.
template <typename Real>
bool cholesky(const CMat<Real>& h, CMat<Real>& l) {
  using C = std::complex<Real>;
  const int n = h.n;
  l = CMat<Real>(n);
  for (int j = 0; j < n; ++j) {
    Real d = h(j, j).real();
    for (int k = 0; k < j; ++k) d -= std::norm(l(j, k));
    if (!(d > Real(0)) || !std::isfinite(static_cast<double>(d))) return false;
    const Real ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (int i = j + 1; i < n; ++i) {
      C s = h(i, j);
      for (int k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      l(i, j) = s / ljj;
    }
  }
  return true;
}

template <typename Real>
Real logdet_from_cholesky(const CMat<Real>& l) {
  Real s{};
  for (int i = 0; i < l.n; ++i) s += std::log(l(i, i).real());
  return Real(2) * s;
}

/// Inverse of a Hermitian positive definite matrix from its Cholesky factor:
/// A^{-1} = L^{-dagger} L^{-1}.
template <typename Real>
CMat<Real> inverse_from_cholesky(const CMat<Real>& l) {
  using C = std::complex<Real>;
  const int n = l.n;
  // Forward-substitute L * X = I, column by column.
  CMat<Real> linv(n);
  for (int j = 0; j < n; ++j) {
    linv(j, j) = Real(1) / l(j, j).real();
    for (int i = j + 1; i < n; ++i) {
      C s{};
      for (int k = j; k < i; ++k) s += l(i, k) * linv(k, j);
      linv(i, j) = -s / l(i, i).real();
    }
  }
  CMat<Real> inv(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      C s{};
      for (int k = i; k < n; ++k) s += std::conj(linv(k, i)) * linv(k, j);
      inv(i, j) = s;
      inv(j, i) = std::conj(s);
    }
  }
  return inv;
}

}  // namespace qfdiv::detail

#endif  // QFDIV_DETAIL_DENSE_HPP
