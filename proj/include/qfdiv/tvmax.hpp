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

#ifndef QFDIV_TVMAX_HPP
#define QFDIV_TVMAX_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "qfdiv/matcore.hpp"

namespace qfdiv::tvmax {

/// One barrier stage: the state of the solve after centering at a fixed mu.
/// dual - primal = gap >= 0 at every stage (weak duality record).
struct SdpStage {
  double mu;
  double primal;  // tr A
  double dual;    // tr(Y rho + Z sigma) on the reduced face
  double gap;
  int newton_steps;
};

/// Solution of  maximize tr A  subject to  0 <= A <= rho, A <= sigma,
/// reported as the divergence value tr rho + tr sigma - 2 tr A together
/// with a dual certificate.
///
/// The pair (dual_Y, dual_Z) satisfies Y, Z >= 0 and Y + Z >= I on the
/// support intersection of rho and sigma (every feasible A lives there, so
/// weak duality tr(Y rho + Z sigma) >= tr A holds for all feasible A).
/// `gap` is the duality gap on that reduced face; the reported value is
/// within 2*gap of the true infimum.
struct SdpResult {
  double value;
  matcore::HermitianMatrix A_opt;
  matcore::HermitianMatrix dual_Y;
  matcore::HermitianMatrix dual_Z;
  double gap;
  int iterations;  // total Newton steps
  int reduced_dim;
  bool converged;
  double tol;
  std::vector<SdpStage> stages;
  std::string diagnostic;
};

struct ReversibilityReport {
  bool reversible;
  bool boundary;  // |min_eig_A| within the decision tolerance
  matcore::HermitianMatrix A;
  matcore::HermitianMatrix delta1;
  matcore::HermitianMatrix delta2;
  double min_eig_A;
  double tv;
  std::optional<double> dmax;  // filled when the solver cross-check is requested
};

/// Maximal total-variation divergence via the barrier solver, with facial
/// reduction to the support intersection first. Non-convergence (Newton cap
/// 500) is reported through converged = false and the best certificate
/// found, not an exception.
SdpResult dmax_tv_sdp(const matcore::DensityMatrix& rho, const matcore::DensityMatrix& sigma,
                      double tol = 1e-8);

/// Maximal total-variation divergence against the pure state psi:
/// 2 - 2 / <psi| rho^{-1} |psi> for full-rank rho; singular rho falls back
/// to the solver with sigma = |psi><psi|.
double dmax_tv_pure(const matcore::DensityMatrix& rho, const std::vector<std::complex<double>>& psi);

/// Decides whether the total-variation divergence is fully reversible:
/// A = (rho + sigma - |rho - sigma|)/2 must be PSD. delta1/delta2 are the
/// positive parts of +-(rho - sigma); when reversible they give the
/// orthogonal decomposition rho = A + delta1, sigma = A + delta2.
ReversibilityReport reversibility_check(const matcore::DensityMatrix& rho,
                                        const matcore::DensityMatrix& sigma, double tol = 1e-9,
                                        bool sdp_crosscheck = false);

/// Sufficient condition: ||rho - sigma||_op <= lambda_min(rho + sigma).
bool sufficient_close(const matcore::DensityMatrix& rho, const matcore::DensityMatrix& sigma);

/// Sufficient condition: rho sigma + sigma rho >= 0.
bool sufficient_anticommutator(const matcore::DensityMatrix& rho,
                               const matcore::DensityMatrix& sigma);

/// Verifies a claimed decomposition: A, delta1, delta2 PSD, rho = A + delta1
/// and sigma = A + delta2 entrywise, and delta1 * delta2 = 0 (Frobenius),
/// all within tol.
bool decomposition_check(const matcore::HermitianMatrix& a, const matcore::HermitianMatrix& delta1,
                         const matcore::HermitianMatrix& delta2, const matcore::DensityMatrix& rho,
                         const matcore::DensityMatrix& sigma, double tol);

}  // namespace qfdiv::tvmax

#endif  // QFDIV_TVMAX_HPP
