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

#include "qfdiv/reverse_test.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qfdiv::reverse_test {

using matcore::DensityMatrix;
using matcore::HermitianMatrix;

POVM::POVM(std::vector<matcore::HermitianMatrix> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw LengthMismatch("POVM needs at least one element");
  int d = elements_.front().dim();
  HermitianMatrix sum(d);
  for (size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].dim() != d) throw DimensionMismatch("POVM elements of mixed dimension");
    if (!matcore::is_psd(elements_[i], 1e-10))
      throw NotPsd("POVM element " + std::to_string(i) + " is not PSD");
    sum += elements_[i];
  }
  sum -= HermitianMatrix::identity(d);
  if (matcore::op_norm(sum) > 1e-10)
    throw NotNormalized("POVM elements do not sum to the identity");
}

ReverseTest::ReverseTest(std::vector<DensityMatrix> states, fdiv::ProbVector p, fdiv::ProbVector q)
    : states_(std::move(states)), p_(std::move(p)), q_(std::move(q)) {
  if (states_.empty()) throw LengthMismatch("reverse test needs at least one symbol");
  if (p_.size() != static_cast<int>(states_.size()) || q_.size() != p_.size())
    throw LengthMismatch("reverse test lengths disagree");
  int d = states_.front().dim();
  for (const DensityMatrix& s : states_) {
    if (s.dim() != d) throw DimensionMismatch("reverse test states of mixed dimension");
    if (std::abs(s.trace() - 1.0) > 1e-10)
      throw NotNormalized("reverse test state has trace " + std::to_string(s.trace()));
  }
}

std::pair<DensityMatrix, DensityMatrix> realize(const ReverseTest& rt) {
  int d = rt.dim();
  HermitianMatrix rho(d), sigma(d);
  for (int x = 0; x < rt.symbols(); ++x) {
    rho += rt.p()[x] * rt.states()[x].matrix();
    sigma += rt.q()[x] * rt.states()[x].matrix();
  }
  auto wrap = [](HermitianMatrix h) {
    return std::abs(h.trace() - 1.0) <= 1e-10 ? DensityMatrix::normalized(std::move(h))
                                              : DensityMatrix::subnormalized(std::move(h));
  };
  return {wrap(std::move(rho)), wrap(std::move(sigma))};
}

fdiv::ProbVector measure(const DensityMatrix& rho, const POVM& m) {
  if (rho.dim() != m.dim()) throw DimensionMismatch("measure: state/POVM dimension mismatch");
  std::vector<double> out(static_cast<size_t>(m.size()));
  for (int y = 0; y < m.size(); ++y)
    out[y] = detail::matmul(m[y].dense(), rho.matrix().dense()).trace_real();
  return fdiv::ProbVector::subnormalized(std::move(out));
}

ReverseTest canonical_tv_reduction(const ReverseTest& rt) {
  auto [rho_dm, sigma_dm] = realize(rt);
  if (std::abs(rho_dm.trace() - 1.0) > 1e-10 || std::abs(sigma_dm.trace() - 1.0) > 1e-10)
    throw NotNormalized("canonical reduction expects unit-trace realizations");

  int d = rt.dim();
  HermitianMatrix a(d);
  double c = 0.0, sp = 0.0, sq = 0.0;
  for (int x = 0; x < rt.symbols(); ++x) {
    double w = std::min(rt.p()[x], rt.q()[x]);
    a += w * rt.states()[x].matrix();
    c += w;
    sp += rt.p()[x];
    sq += rt.q()[x];
  }

  HermitianMatrix rest_rho = rho_dm.matrix() - a;
  HermitianMatrix rest_sigma = sigma_dm.matrix() - a;

  auto normalize_or_mixed = [d](const HermitianMatrix& h) {
    double t = h.trace();
    if (t <= 1e-14) return DensityMatrix::normalized((1.0 / d) * HermitianMatrix::identity(d));
    return DensityMatrix::normalized((1.0 / t) * h);
  };

  std::vector<DensityMatrix> states{normalize_or_mixed(a), normalize_or_mixed(rest_rho),
                                    normalize_or_mixed(rest_sigma)};
  fdiv::ProbVector pp = fdiv::ProbVector::subnormalized({c, sp - c, 0.0});
  fdiv::ProbVector qq = fdiv::ProbVector::subnormalized({c, 0.0, sq - c});
  return ReverseTest(std::move(states), std::move(pp), std::move(qq));
}

}  // namespace qfdiv::reverse_test
