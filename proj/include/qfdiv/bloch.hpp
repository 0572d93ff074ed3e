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

#ifndef QFDIV_BLOCH_HPP
#define QFDIV_BLOCH_HPP

#include <complex>
#include <cstdint>

#include "qfdiv/exec.hpp"
#include "qfdiv/matcore.hpp"

namespace qfdiv::bloch {

struct BlochVector {
  double x = 0.0, y = 0.0, z = 0.0;
  double norm() const;
};

/// Convention: rho = (I + x*X + y*Y + z*Z) / 2 with Pauli X, Y, Z, so
/// x = 2 Re rho_10, y = 2 Im rho_10, z = rho_00 - rho_11.
BlochVector to_bloch(const matcore::DensityMatrix& rho);
matcore::DensityMatrix from_bloch(const BlochVector& v);

enum class Region { inside, boundary, outside };

struct SpheroidReport {
  Region region;
  double s;       // ||v_sigma - v_rho|| + ||v_sigma + v_rho||
  double margin;  // 2 - s
};

/// Reversibility region for a qubit pair in Bloch coordinates: sigma is
/// reversible against rho exactly when the sum of its distances to the foci
/// v_rho and -v_rho is at most 2. Verdicts within 1e-9 of the surface are
/// flagged boundary.
SpheroidReport spheroid_membership(const BlochVector& v_rho, const BlochVector& v_sigma);

/// Volume of the reversibility spheroid as a fraction of the unit ball:
/// 1 - ||v_rho||^2 (semi-major axis 1 along v_rho, semi-minor axes
/// sqrt(1 - ||v_rho||^2)).
double region_volume_fraction_analytic(const BlochVector& v_rho);

struct McResult {
  double fraction;
  long long samples;
  std::uint64_t seed;
  long long member_count;
};

/// i-th point of the deterministic uniform stream in the unit ball for a
/// given seed (rejection sampling from the cube, one counter-based stream
/// per sample index, so shards by index range are exactly reproducible).
BlochVector ball_point(std::uint64_t seed, long long index);

/// Monte Carlo estimate of region_volume_fraction_analytic, per-seed
/// deterministic and independent of the execution policy.
McResult region_volume_fraction_mc(const BlochVector& v_rho, long long samples,
                                   std::uint64_t seed, Exec exec = Exec::parallel);

enum class Branch { b_ge_c, c_ge_b };

struct ConjugatePairResult {
  double dmax;
  matcore::HermitianMatrix A_opt;
  Branch branch;
};

/// Closed-form maximal total-variation divergence for the conjugate pair
/// rho = [[a, conj(c)], [c, b]], sigma = [[a, -conj(c)], [-c, b]] with
/// a >= b >= 0, a + b = 1, ab >= |c|^2:
///   |c| <= b: dmax = 4|c|,             A = diag(a - |c|, b - |c|)
///   |c| >  b: dmax = 2(b + |c|^2/b),   A = diag(a - |c|^2/b, 0).
/// The trace distance is 4|c| in both branches.
ConjugatePairResult conjugate_pair_dmax(double a, double b, std::complex<double> c);

}  // namespace qfdiv::bloch

#endif  // QFDIV_BLOCH_HPP
