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

#ifndef QFDIV_QDIV_HPP
#define QFDIV_QDIV_HPP

#include "qfdiv/exec.hpp"
#include "qfdiv/fdiv.hpp"
#include "qfdiv/matcore.hpp"
#include "qfdiv/reverse_test.hpp"

namespace qfdiv::qdiv {

/// Maximal f-divergence for operator-convex f and strictly positive states:
/// tr sigma f(sigma^{-1/2} rho sigma^{-1/2}).
/// Throws NotOperatorConvex when the flag is absent and SingularState when
/// either state has an eigenvalue at or below 1e-12 (the formula is only
/// valid on full-rank pairs; no silent regularization).
fdiv::ExtendedReal dmax_operator_convex(const matcore::DensityMatrix& rho,
                                        const matcore::DensityMatrix& sigma,
                                        const fdiv::FDivFunction& f);

/// ||rho - sigma||_1.
double trace_distance(const matcore::DensityMatrix& rho, const matcore::DensityMatrix& sigma);

/// Two-outcome measurement {P, I-P} with P the projector onto the strictly
/// positive eigenspace of rho - sigma; its outcome distributions attain the
/// trace distance.
reverse_test::POVM helstrom_measurement(const matcore::DensityMatrix& rho,
                                        const matcore::DensityMatrix& sigma);

/// D_f of the two outcome distributions of M.
fdiv::ExtendedReal measured_divergence(const matcore::DensityMatrix& rho,
                                       const matcore::DensityMatrix& sigma,
                                       const reverse_test::POVM& m, const fdiv::FDivFunction& f);

struct GapScanReport {
  fdiv::ExtendedReal dmax;
  double best_measured;
  reverse_test::POVM best_measurement;
  double gap;  // dmax - best_measured
  int grid_size;
  bool commuting;  // ||[rho, sigma]||_F <= 1e-10
};

/// Scans rank-1 projective qubit measurements |m(theta, phi)><m| on an
/// n_grid x n_grid angular grid, plus the eigenbases of rho, sigma and
/// rho - sigma as injected candidates, and reports how close the best
/// measured f-divergence comes to the maximal one. The argmax is
/// deterministic: candidates are ranked in a fixed order (injected bases
/// first, then grid points lexicographically) and ties keep the earlier
/// candidate. f may be the total-variation function (routed to the
/// semidefinite solver) or any strictly convex operator-convex catalog
/// entry (closed formula, full-rank states required).
GapScanReport measurement_gap_scan(const matcore::DensityMatrix& rho,
                                   const matcore::DensityMatrix& sigma,
                                   const fdiv::FDivFunction& f, int n_grid,
                                   Exec exec = Exec::parallel);

}  // namespace qfdiv::qdiv

#endif  // QFDIV_QDIV_HPP
