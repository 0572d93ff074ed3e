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

#include "qfdiv/bloch.hpp"

#include <cmath>

#include "qfdiv/detail/counter_rng.hpp"

namespace qfdiv::bloch {

using matcore::DensityMatrix;
using matcore::HermitianMatrix;

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

namespace {

void require_in_ball(const BlochVector& v, const char* what) {
  if (v.norm() > 1.0 + 1e-12) throw OutsideBall(std::string(what) + " lies outside the unit ball");
}

}  // namespace

BlochVector to_bloch(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw NotQubit("to_bloch expects a 2x2 state");
  std::complex<double> r10 = rho.matrix()(1, 0);
  return {2.0 * r10.real(), 2.0 * r10.imag(),
          rho.matrix()(0, 0).real() - rho.matrix()(1, 1).real()};
}

DensityMatrix from_bloch(const BlochVector& v) {
  require_in_ball(v, "bloch vector");
  HermitianMatrix h(2);
  h.set(0, 0, 0.5 * (1.0 + v.z));
  h.set(1, 1, 0.5 * (1.0 - v.z));
  h.set(1, 0, std::complex<double>(0.5 * v.x, 0.5 * v.y));
  return DensityMatrix::normalized(std::move(h));
}

SpheroidReport spheroid_membership(const BlochVector& v_rho, const BlochVector& v_sigma) {
  require_in_ball(v_rho, "rho vector");
  require_in_ball(v_sigma, "sigma vector");
  BlochVector d{v_sigma.x - v_rho.x, v_sigma.y - v_rho.y, v_sigma.z - v_rho.z};
  BlochVector s{v_sigma.x + v_rho.x, v_sigma.y + v_rho.y, v_sigma.z + v_rho.z};
  double sum = d.norm() + s.norm();
  Region region = Region::outside;
  if (std::abs(sum - 2.0) <= 1e-9)
    region = Region::boundary;
  else if (sum < 2.0)
    region = Region::inside;
  return {region, sum, 2.0 - sum};
}

double region_volume_fraction_analytic(const BlochVector& v_rho) {
  require_in_ball(v_rho, "rho vector");
  double n = v_rho.norm();
  return 1.0 - n * n;
}

BlochVector ball_point(std::uint64_t seed, long long index) {
  if (index < 0) throw InvalidParameters("sample index must be nonnegative");
  detail::CounterRng rng(seed, static_cast<std::uint64_t>(index));
  for (;;) {
    double x = rng.next_symmetric();
    double y = rng.next_symmetric();
    double z = rng.next_symmetric();
    if (x * x + y * y + z * z < 1.0) return {x, y, z};
  }
}

McResult region_volume_fraction_mc(const BlochVector& v_rho, long long samples,
                                   std::uint64_t seed, Exec exec) {
  require_in_ball(v_rho, "rho vector");
  if (samples <= 0) throw InvalidParameters("sample count must be positive");

  long long hits = 0;
  bool parallel = exec == Exec::parallel;
#pragma omp parallel for schedule(static) reduction(+ : hits) if (parallel)
  for (long long i = 0; i < samples; ++i) {
    SpheroidReport rep = spheroid_membership(v_rho, ball_point(seed, i));
    if (rep.region != Region::outside) ++hits;
  }
  return {static_cast<double>(hits) / static_cast<double>(samples), samples, seed, hits};
}

ConjugatePairResult conjugate_pair_dmax(double a, double b, std::complex<double> c) {
  double ac = std::abs(c);
  if (!(a >= b) || !(b >= 0.0) || std::abs(a + b - 1.0) > 1e-12)
    throw InvalidParameters("need a >= b >= 0 with a + b = 1");
  // Relative slack keeps A_opt entries above -1e-12 even for tiny b.
  if (ac * ac > a * b * (1.0 + 1e-12))
    throw InvalidParameters("need ab >= |c|^2 for a PSD pair");

  HermitianMatrix opt(2);
  if (ac <= b) {
    opt.set(0, 0, a - ac);
    opt.set(1, 1, b - ac);
    return {4.0 * ac, opt, Branch::b_ge_c};
  }
  opt.set(0, 0, a - ac * ac / b);
  opt.set(1, 1, 0.0);
  return {2.0 * (b + ac * ac / b), opt, Branch::c_ge_b};
}

}  // namespace qfdiv::bloch
