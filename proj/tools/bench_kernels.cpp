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

// Times the two parallel kernels against their serial reference paths and
// checks that both produce identical answers (the parallel versions only
// reorder independent iterations).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <optional>

#include "qfdiv/bloch.hpp"
#include "qfdiv/exec.hpp"
#include "qfdiv/fdiv.hpp"
#include "qfdiv/matcore.hpp"
#include "qfdiv/qdiv.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <typename F>
double timed(F&& fn) {
  auto t0 = Clock::now();
  fn();
  return seconds_since(t0);
}

}  // namespace

int main(int argc, char** argv) {
  long long samples = 2'000'000;
  int grid = 80;
  if (argc > 1) samples = std::atoll(argv[1]);
  if (argc > 2) grid = std::atoi(argv[2]);

  const qfdiv::bloch::BlochVector v{0.0, 0.0, 0.7};
  qfdiv::bloch::McResult mc_s{}, mc_p{};
  const double t_mc_serial = timed([&] {
    mc_s = qfdiv::bloch::region_volume_fraction_mc(v, samples, 0, qfdiv::Exec::serial);
  });
  const double t_mc_parallel = timed([&] {
    mc_p = qfdiv::bloch::region_volume_fraction_mc(v, samples, 0, qfdiv::Exec::parallel);
  });
  const bool mc_match = mc_s.member_count == mc_p.member_count;

  using qfdiv::matcore::Cmplx;
  auto rho = qfdiv::matcore::DensityMatrix::normalized(qfdiv::matcore::HermitianMatrix::from_entries(
      2, {Cmplx(0.65), Cmplx(0.15, 0.05), Cmplx(0.15, -0.05), Cmplx(0.35)}));
  auto sigma = qfdiv::matcore::DensityMatrix::normalized(
      qfdiv::matcore::HermitianMatrix::from_entries(
          2, {Cmplx(0.4), Cmplx(-0.1, 0.2), Cmplx(-0.1, -0.2), Cmplx(0.6)}));
  auto f = qfdiv::fdiv::FDivFunction::kl();
  std::optional<qfdiv::qdiv::GapScanReport> scan_s, scan_p;
  const double t_scan_serial = timed(
      [&] { scan_s = qfdiv::qdiv::measurement_gap_scan(rho, sigma, f, grid, qfdiv::Exec::serial); });
  const double t_scan_parallel = timed([&] {
    scan_p = qfdiv::qdiv::measurement_gap_scan(rho, sigma, f, grid, qfdiv::Exec::parallel);
  });
  const bool scan_match = scan_s->best_measured == scan_p->best_measured &&
                          scan_s->gap == scan_p->gap;

  std::printf("kernel                      serial [s]  parallel [s]  speedup  identical\n");
  std::printf("ball sampling (n=%lld)  %10.3f  %12.3f  %7.2f  %s\n",
              static_cast<long long>(samples), t_mc_serial, t_mc_parallel,
              t_mc_serial / t_mc_parallel, mc_match ? "yes" : "NO");
  std::printf("gap scan (grid=%d)          %10.3f  %12.3f  %7.2f  %s\n", grid, t_scan_serial,
              t_scan_parallel, t_scan_serial / t_scan_parallel, scan_match ? "yes" : "NO");
  return (mc_match && scan_match) ? 0 : 1;
}
