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

#include "qfdiv/tvmax.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace qfdiv::tvmax {

using matcore::ComplexMatrix;
using matcore::DensityMatrix;
using matcore::HermitianMatrix;

namespace {

// The barrier iteration runs in 80-bit extended precision. With plain
// doubles the analytic duals Y = mu*(rho-A)^{-1} pick up error of order
// eps/mu near convergence, which overwhelms a 1e-8 gap certificate; the
// extra 11 bits leave orders of magnitude of headroom.
using LMat = detail::CMat<long double>;
using LC = std::complex<long double>;

struct Rect {
  int rows = 0, cols = 0;
  std::vector<LC> a;
  Rect() = default;
  Rect(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  LC& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const LC& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

// L^dagger H R for column blocks L, R of an orthonormal basis.
Rect compress(const LMat& h, const Rect& l, const Rect& r) {
  int d = h.n;
  Rect hr(d, r.cols);
  for (int a = 0; a < d; ++a)
    for (int j = 0; j < r.cols; ++j) {
      LC s{};
      for (int b = 0; b < d; ++b) s += h(a, b) * r(b, j);
      hr(a, j) = s;
    }
  Rect out(l.cols, r.cols);
  for (int i = 0; i < l.cols; ++i)
    for (int j = 0; j < r.cols; ++j) {
      LC s{};
      for (int a = 0; a < d; ++a) s += std::conj(l(a, i)) * hr(a, j);
      out(i, j) = s;
    }
  return out;
}

LMat to_square(const Rect& r) {
  LMat m(r.rows);
  for (int i = 0; i < r.rows; ++i)
    for (int j = 0; j < r.cols; ++j) m(i, j) = r(i, j);
  return m;
}

LMat pinv_psd(const LMat& h) {
  std::vector<long double> vals;
  LMat vecs;
  detail::jacobi_eig(h, vals, vecs);
  long double top = vals.empty() ? 0.0L : std::max(vals.front(), 0.0L);
  long double cutoff = 1e-12L * top;
  int n = h.n;
  LMat out(n);
  for (int k = 0; k < n; ++k) {
    if (vals[k] <= cutoff) continue;
    long double inv = 1.0L / vals[k];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out(i, j) += inv * vecs(i, k) * std::conj(vecs(j, k));
  }
  return out;
}

// Constraint matrix of the reduced problem: the generalized Schur
// complement of H onto the support block. Compressing alone would admit A
// that violate A <= H off the support; the Schur correction is exactly
// what makes  A supported on S, A <= H  equivalent to  A_S <= schur(H).
LMat schur_reduce(const LMat& h, const Rect& u, const Rect& v) {
  LMat s = to_square(compress(h, u, u));
  if (v.cols == 0) {
    s.hermitize();
    return s;
  }
  Rect c = compress(h, u, v);
  LMat p = pinv_psd(to_square(compress(h, v, v)));
  for (int i = 0; i < s.n; ++i)
    for (int j = 0; j < s.n; ++j) {
      LC acc{};
      for (int a = 0; a < v.cols; ++a)
        for (int b = 0; b < v.cols; ++b) acc += c(i, a) * p(a, b) * std::conj(c(j, b));
      s(i, j) -= acc;
    }
  s.hermitize();
  return s;
}

// Real orthonormal basis of k x k Hermitian matrices (dimension k^2):
// the diagonal units, then (e_ij + e_ji)/sqrt2 and i(e_ij - e_ji)/sqrt2
// for each pair i < j in lexicographic order.
struct HermBasis {
  int k, m;
  std::vector<std::pair<int, int>> pairs;

  explicit HermBasis(int kk) : k(kk), m(kk * kk) {
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
  }

  std::vector<long double> coords(const LMat& x) const {
    const long double s2 = std::sqrt(2.0L);
    std::vector<long double> c(static_cast<size_t>(m));
    for (int i = 0; i < k; ++i) c[i] = x(i, i).real();
    int idx = k;
    for (auto [i, j] : pairs) {
      c[idx++] = s2 * x(i, j).real();
      c[idx++] = s2 * x(i, j).imag();
    }
    return c;
  }

  LMat from_coords(const std::vector<long double>& c) const {
    const long double inv_s2 = 1.0L / std::sqrt(2.0L);
    LMat x(k);
    for (int i = 0; i < k; ++i) x(i, i) = c[i];
    int idx = k;
    for (auto [i, j] : pairs) {
      long double re = c[idx++] * inv_s2;
      long double im = c[idx++] * inv_s2;
      x(i, j) = LC(re, im);
      x(j, i) = LC(re, -im);
    }
    return x;
  }

  // W E_t W for the t-th basis element and Hermitian W.
  LMat sandwich(const LMat& w, int t) const {
    LMat out(k);
    if (t < k) {
      int i = t;
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) out(a, b) = w(a, i) * w(i, b);
      return out;
    }
    int u = t - k;
    auto [i, j] = pairs[u / 2];
    const long double inv_s2 = 1.0L / std::sqrt(2.0L);
    if (u % 2 == 0) {
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
          out(a, b) = inv_s2 * (w(a, i) * w(j, b) + w(a, j) * w(i, b));
    } else {
      const LC iu(0.0L, 1.0L);
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
          out(a, b) = iu * inv_s2 * (w(a, i) * w(j, b) - w(a, j) * w(i, b));
    }
    return out;
  }
};

// Dense symmetric positive definite solve, row-major, in place.
bool spd_solve(std::vector<long double> m, int n, const std::vector<long double>& rhs,
               std::vector<long double>& x) {
  auto at = [&m, n](int i, int j) -> long double& { return m[static_cast<size_t>(i) * n + j]; };
  for (int j = 0; j < n; ++j) {
    long double d = at(j, j);
    for (int t = 0; t < j; ++t) d -= at(j, t) * at(j, t);
    if (!(d > 0.0L) || !std::isfinite(static_cast<double>(d))) return false;
    at(j, j) = std::sqrt(d);
    for (int i = j + 1; i < n; ++i) {
      long double s = at(i, j);
      for (int t = 0; t < j; ++t) s -= at(i, t) * at(j, t);
      at(i, j) = s / at(j, j);
    }
  }
  std::vector<long double> y(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    long double s = rhs[i];
    for (int t = 0; t < i; ++t) s -= at(i, t) * y[t];
    y[i] = s / at(i, i);
  }
  x.assign(static_cast<size_t>(n), 0.0L);
  for (int i = n - 1; i >= 0; --i) {
    long double s = y[i];
    for (int t = i + 1; t < n; ++t) s -= at(t, i) * x[t];
    x[i] = s / at(i, i);
  }
  return true;
}

struct EvalState {
  LMat b1, b2;
  LMat ainv, b1inv, b2inv;
  LMat grad;  // I + mu(A^{-1} - B1^{-1} - B2^{-1}), ascent direction source
  long double psi = 0.0L;
  long double gnorm = 0.0L;
};

// Fills `out` when A is strictly feasible (all three Cholesky factorizations
// succeed); the duals and the gap are later read off these same inverses so
// certificate and gradient agree bit for bit.
bool try_evaluate(const LMat& rho_r, const LMat& sigma_r, const LMat& a, long double mu,
                  EvalState& out) {
  int k = a.n;
  LMat la, l1, l2;
  if (!detail::cholesky(a, la)) return false;
  out.b1 = rho_r - a;
  if (!detail::cholesky(out.b1, l1)) return false;
  out.b2 = sigma_r - a;
  if (!detail::cholesky(out.b2, l2)) return false;

  out.ainv = detail::inverse_from_cholesky(la);
  out.b1inv = detail::inverse_from_cholesky(l1);
  out.b2inv = detail::inverse_from_cholesky(l2);
  out.psi = a.trace_real() + mu * (detail::logdet_from_cholesky(la) +
                                   detail::logdet_from_cholesky(l1) +
                                   detail::logdet_from_cholesky(l2));
  out.grad = out.ainv - out.b1inv - out.b2inv;
  out.grad *= mu;
  out.grad += LMat::identity(k);
  out.gnorm = out.grad.frobenius();
  return true;
}

struct CenterOutcome {
  int steps = 0;
  bool hit_cap = false;
};

// Damped Newton ascent of tr A + mu*(logdet A + logdet B1 + logdet B2)
// until ||grad||_F <= 5e-3 * mu, a stall, or an iteration cap.
//
// Step acceptance is two-phase. Away from the center (Newton decrement above
// 0.25) a step must clear an Armijo fraction of the predicted objective gain.
// Near the center that gain drops below long double rounding noise whenever a
// barrier block is poorly conditioned, so acceptance switches to a strict
// decrease of the gradient norm, which stays measurable down to the precision
// floor of the inverses.
CenterOutcome center(const LMat& rho_r, const LMat& sigma_r, LMat& a, long double mu,
                     EvalState& st, int& newton_total, int newton_cap) {
  CenterOutcome out;
  const int inner_cap = 80;
  int k = a.n;
  HermBasis hb(k);

  if (!try_evaluate(rho_r, sigma_r, a, mu, st)) return out;  // caller keeps last state

  while (st.gnorm > 5e-3L * mu) {
    if (newton_total >= newton_cap) {
      out.hit_cap = true;
      return out;
    }
    if (out.steps >= inner_cap) return out;

    std::vector<long double> hess(static_cast<size_t>(hb.m) * hb.m);
    for (int t = 0; t < hb.m; ++t) {
      LMat s = hb.sandwich(st.ainv, t) + hb.sandwich(st.b1inv, t) + hb.sandwich(st.b2inv, t);
      std::vector<long double> col = hb.coords(s);
      for (int r = 0; r < hb.m; ++r) hess[static_cast<size_t>(r) * hb.m + t] = mu * col[r];
    }
    for (int r = 0; r < hb.m; ++r)
      for (int t = r + 1; t < hb.m; ++t) {
        long double avg = 0.5L * (hess[static_cast<size_t>(r) * hb.m + t] +
                                  hess[static_cast<size_t>(t) * hb.m + r]);
        hess[static_cast<size_t>(r) * hb.m + t] = avg;
        hess[static_cast<size_t>(t) * hb.m + r] = avg;
      }

    std::vector<long double> g = hb.coords(st.grad);
    long double maxdiag = 0.0L;
    for (int r = 0; r < hb.m; ++r)
      maxdiag = std::max(maxdiag, hess[static_cast<size_t>(r) * hb.m + r]);

    std::vector<long double> x;
    bool solved = false;
    for (long double ridge : {0.0L, 1e-16L, 1e-12L, 1e-8L}) {
      std::vector<long double> work = hess;
      for (int r = 0; r < hb.m; ++r) work[static_cast<size_t>(r) * hb.m + r] += ridge * maxdiag;
      if (spd_solve(std::move(work), hb.m, g, x)) {
        solved = true;
        break;
      }
    }
    if (!solved) return out;

    long double lambda2 = 0.0L;
    for (int r = 0; r < hb.m; ++r) lambda2 += g[r] * x[r];
    if (!(lambda2 > 0.0L)) return out;
    long double lam = std::sqrt(lambda2);

    LMat dir = hb.from_coords(x);
    ++newton_total;
    ++out.steps;

    bool moved = false;
    EvalState cand;
    if (lam > 0.25L) {
      for (long double step = 1.0L / (1.0L + lam); step > 1e-18L; step *= 0.5L) {
        LMat trial = a + step * dir;
        if (try_evaluate(rho_r, sigma_r, trial, mu, cand) &&
            cand.psi >= st.psi + 0.01L * step * lambda2) {
          a = trial;
          st = cand;
          moved = true;
          break;
        }
      }
    } else {
      for (long double step = 1.0L; step > 1e-18L; step *= 0.5L) {
        LMat trial = a + step * dir;
        if (try_evaluate(rho_r, sigma_r, trial, mu, cand) && cand.gnorm <= 0.9L * st.gnorm) {
          a = trial;
          st = cand;
          moved = true;
          break;
        }
      }
    }
    if (!moved) return out;  // stalled at line-search or precision resolution
  }
  return out;
}

struct GapParts {
  long double gap = 0.0L;
  long double primal = 0.0L;
  long double dual = 0.0L;
};

// tr(Y rho_r + Z sigma_r) - tr A evaluated as
// tr(Y B1) + tr(Z B2) + tr((Y+Z-I) A): every term is O(mu), so the result
// carries no cancellation against the O(1) objective values.
GapParts compute_gap(const EvalState& st, const LMat& a, long double mu) {
  GapParts g;
  int k = a.n;
  long double t1 = mu * detail::matmul(st.b1inv, st.b1).trace_real();
  long double t2 = mu * detail::matmul(st.b2inv, st.b2).trace_real();
  LMat ysum = st.b1inv + st.b2inv;
  ysum *= mu;
  ysum -= LMat::identity(k);
  long double t3 = detail::matmul(ysum, a).trace_real();
  g.primal = a.trace_real();
  g.gap = t1 + t2 + t3;
  g.dual = g.primal + g.gap;
  return g;
}

HermitianMatrix embed_full(const LMat& xr, const Rect& u, int d) {
  LMat full(d);
  for (int i = 0; i < xr.n; ++i)
    for (int j = 0; j < xr.n; ++j) {
      if (xr(i, j) == LC{}) continue;
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) full(a, b) += u(a, i) * xr(i, j) * std::conj(u(b, j));
    }
  return HermitianMatrix::from_dense(detail::convert<double>(full));
}

}  // namespace

SdpResult dmax_tv_sdp(const DensityMatrix& rho, const DensityMatrix& sigma, double tol) {
  if (rho.dim() != sigma.dim()) throw DimensionMismatch("dmax_tv_sdp: dims differ");
  if (!(tol > 0.0)) throw InvalidParameters("tol must be positive");
  const int d = rho.dim();
  const double tr_rho = rho.trace();
  const double tr_sigma = sigma.trace();

  HermitianMatrix psum =
      matcore::support_projector(rho.matrix()) + matcore::support_projector(sigma.matrix());
  matcore::EigenSystem es = matcore::hermitian_eig(psum);
  int k = 0;
  while (k < d && es.eigenvalues[k] >= 2.0 - 1e-8) ++k;

  if (k == 0) {
    HermitianMatrix zero(d);
    return SdpResult{tr_rho + tr_sigma, zero,  zero, zero, 0.0, 0, 0, true, tol, {},
                     "trivial support intersection: A = 0 is optimal"};
  }

  Rect u(d, k), v(d, d - k);
  for (int a = 0; a < d; ++a) {
    for (int i = 0; i < k; ++i) u(a, i) = LC(es.eigenvectors(a, i));
    for (int p = 0; p < d - k; ++p) v(a, p) = LC(es.eigenvectors(a, k + p));
  }
  LMat rho_r = schur_reduce(detail::convert<long double>(rho.matrix().dense()), u, v);
  LMat sigma_r = schur_reduce(detail::convert<long double>(sigma.matrix().dense()), u, v);

  std::vector<long double> ev;
  LMat vecs;
  detail::jacobi_eig(rho_r, ev, vecs);
  long double lmin_rho = ev.back();
  detail::jacobi_eig(sigma_r, ev, vecs);
  long double lmin_sigma = ev.back();

  long double mu = 1.0L;
  LMat a = LMat::identity(k);
  long double scale = 0.5L * std::min(lmin_rho, lmin_sigma);
  a *= scale;
  EvalState st;
  if (!(scale > 0.0L) || !try_evaluate(rho_r, sigma_r, a, mu, st)) {
    bool ok = false;
    long double c = 1e-3L;
    for (int i = 0; i < 40 && !ok; ++i, c /= 8.0L) {
      a = LMat::identity(k);
      a *= c;
      ok = try_evaluate(rho_r, sigma_r, a, mu, st);
    }
    if (!ok) {
      HermitianMatrix zero(d);
      HermitianMatrix half = 0.5 * HermitianMatrix::identity(d);
      return SdpResult{tr_rho + tr_sigma,
                       zero,
                       half,
                       half,
                       0.5 * (tr_rho + tr_sigma),
                       0,
                       k,
                       false,
                       tol,
                       {},
                       "no strictly feasible interior point found"};
    }
  }

  const int newton_cap = 500;
  int newton_total = 0;
  bool converged = true;
  std::string diagnostic;
  std::vector<SdpStage> stages;

  auto record = [&](int steps) {
    GapParts g = compute_gap(st, a, mu);
    stages.push_back({static_cast<double>(mu), static_cast<double>(g.primal),
                      static_cast<double>(g.dual), static_cast<double>(g.gap), steps});
    return g;
  };

  // Smallest eigenvalue of mu*(B1^{-1}+B2^{-1}) - I, i.e. of Y + Z - I for the
  // duals about to be emitted. The exit test reads this instead of trusting
  // the centering norm, because a stalled center can pass the gap test while
  // its duals still dip below the identity on the face.
  auto face_min = [&](const EvalState& s, long double m) {
    LMat w = s.b1inv + s.b2inv;
    w *= m;
    w -= LMat::identity(k);
    std::vector<long double> fe;
    LMat fv;
    detail::jacobi_eig(w, fe, fv);
    return fe.back();
  };

  // Any face deficit will be repaired by lifting the duals, and that lift is
  // charged to the gap. The exit test therefore scores the corrected gap, so
  // a certificate is emitted only when repair cost and barrier gap together
  // fit the tolerance budget.
  const long double tol_ld = static_cast<long double>(tol);
  GapParts g;
  long double face = 0.0L, lift = 0.0L, gap_c = 0.0L;
  auto rescore = [&]() {
    face = face_min(st, mu);
    lift = face < 0.0L ? -0.5L * face : 0.0L;
    gap_c = g.gap + lift * (rho_r.trace_real() + sigma_r.trace_real());
  };

  CenterOutcome co = center(rho_r, sigma_r, a, mu, st, newton_total, newton_cap);
  g = record(co.steps);
  rescore();
  while (!(3.0L * k * mu <= tol_ld && gap_c >= 0.0L && gap_c <= 0.97L * tol_ld)) {
    if (co.hit_cap || newton_total >= newton_cap) {
      converged = false;
      diagnostic = "newton step cap reached before the gap certificate";
      break;
    }
    if (mu < 1e-14L) {
      converged = false;
      diagnostic = "mu floor reached before the gap certificate";
      break;
    }
    mu *= 0.25L;
    co = center(rho_r, sigma_r, a, mu, st, newton_total, newton_cap);
    g = record(co.steps);
    rescore();
  }

  LMat yr = st.b1inv;
  yr *= mu;
  LMat zr = st.b2inv;
  zr *= mu;
  if (converged && lift > 0.0L) {
    for (int i = 0; i < k; ++i) {
      yr(i, i) += lift;
      zr(i, i) += lift;
    }
    g.gap = gap_c;
    g.dual = g.primal + g.gap;
    stages.back().dual = static_cast<double>(g.dual);
    stages.back().gap = static_cast<double>(g.gap);
  }
  double value = tr_rho + tr_sigma - 2.0 * static_cast<double>(a.trace_real());
  return SdpResult{value,
                   embed_full(a, u, d),
                   embed_full(yr, u, d),
                   embed_full(zr, u, d),
                   static_cast<double>(g.gap),
                   newton_total,
                   k,
                   converged,
                   tol,
                   std::move(stages),
                   std::move(diagnostic)};
}

double dmax_tv_pure(const DensityMatrix& rho, const std::vector<std::complex<double>>& psi) {
  const int d = rho.dim();
  if (static_cast<int>(psi.size()) != d)
    throw DimensionMismatch("dmax_tv_pure: psi length does not match rho");
  double n2 = 0.0;
  for (const auto& c : psi) n2 += std::norm(c);
  if (std::abs(n2 - 1.0) > 1e-10) throw NotNormalized("psi is not a unit vector");

  if (matcore::min_eigenvalue(rho.matrix()) > 1e-12) {
    HermitianMatrix rinv = matcore::matrix_function(rho.matrix(), [](double t) { return 1.0 / t; });
    std::complex<double> q{};
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) q += std::conj(psi[i]) * rinv(i, j) * psi[j];
    return 2.0 - 2.0 / q.real();
  }

  ComplexMatrix proj(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) proj(i, j) = psi[i] * std::conj(psi[j]);
  DensityMatrix sig = DensityMatrix::normalized(HermitianMatrix::from_dense(proj));
  return dmax_tv_sdp(rho, sig, 1e-8).value;
}

ReversibilityReport reversibility_check(const DensityMatrix& rho, const DensityMatrix& sigma,
                                        double tol, bool sdp_crosscheck) {
  if (rho.dim() != sigma.dim()) throw DimensionMismatch("reversibility_check: dims differ");
  if (std::abs(rho.trace() - 1.0) > 1e-10 || std::abs(sigma.trace() - 1.0) > 1e-10)
    throw NotNormalized("reversibility_check expects unit-trace states");
  if (!(tol > 0.0)) throw InvalidParameters("tol must be positive");

  HermitianMatrix diff = rho.matrix() - sigma.matrix();
  HermitianMatrix a = 0.5 * (rho.matrix() + sigma.matrix() - matcore::abs_op(diff));
  double min_eig = matcore::min_eigenvalue(a);

  ReversibilityReport rep{min_eig >= -tol,
                          std::abs(min_eig) <= tol,
                          a,
                          matcore::positive_part(diff),
                          matcore::positive_part(sigma.matrix() - rho.matrix()),
                          min_eig,
                          matcore::trace_norm(diff),
                          std::nullopt};
  if (sdp_crosscheck) rep.dmax = dmax_tv_sdp(rho, sigma, 1e-8).value;
  return rep;
}

bool sufficient_close(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw DimensionMismatch("sufficient_close: dims differ");
  double lhs = matcore::op_norm(rho.matrix() - sigma.matrix());
  double rhs = matcore::min_eigenvalue(rho.matrix() + sigma.matrix());
  return lhs <= rhs + 1e-12;
}

bool sufficient_anticommutator(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim())
    throw DimensionMismatch("sufficient_anticommutator: dims differ");
  return matcore::is_psd(matcore::anticommutator(rho.matrix(), sigma.matrix()), 1e-10);
}

bool decomposition_check(const HermitianMatrix& a, const HermitianMatrix& delta1,
                         const HermitianMatrix& delta2, const DensityMatrix& rho,
                         const DensityMatrix& sigma, double tol) {
  int d = rho.dim();
  if (a.dim() != d || delta1.dim() != d || delta2.dim() != d || sigma.dim() != d)
    throw DimensionMismatch("decomposition_check: dims differ");
  if (!matcore::is_psd(a, tol) || !matcore::is_psd(delta1, tol) || !matcore::is_psd(delta2, tol))
    return false;

  HermitianMatrix r1 = a + delta1 - rho.matrix();
  HermitianMatrix r2 = a + delta2 - sigma.matrix();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (std::abs(r1(i, j)) > tol) return false;
      if (std::abs(r2(i, j)) > tol) return false;
    }
  return detail::matmul(delta1.dense(), delta2.dense()).frobenius() <= tol;
}

}  // namespace qfdiv::tvmax
