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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "qfdiv/errors.hpp"
#include "qfdiv/matcore.hpp"
#include "support.hpp"

using namespace qfdiv;
using namespace qfdiv::matcore;
using testsupport::Rng;

namespace {

HermitianMatrix diag2(double a, double b) {
  HermitianMatrix h(2);
  h.set(0, 0, a);
  h.set(1, 1, b);
  return h;
}

HermitianMatrix pauli_x() {
  HermitianMatrix h(2);
  h.set(0, 1, 1.0);
  return h;
}

}  // namespace

TEST_SUITE("matcore") {

TEST_CASE("construction symmetrizes exactly") {
  std::vector<Cmplx> e{{1.0, 0.5}, {2.0, 3.0}, {7.0, -1.0}, {4.0, -0.5}};
  auto h = HermitianMatrix::from_entries(2, e);
  CHECK(h(0, 1) == std::conj(h(1, 0)));
  CHECK(h(0, 0).imag() == 0.0);
  CHECK(h(1, 1).imag() == 0.0);
  CHECK(h(0, 1).real() == doctest::Approx(4.5).epsilon(1e-15));
}

TEST_CASE("eigendecomposition on known spectra") {
  auto es = hermitian_eig(pauli_x());
  CHECK(es.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(es.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-14));

  auto es2 = hermitian_eig(diag2(0.7, 0.3));
  CHECK(es2.eigenvalues[0] == doctest::Approx(0.7).epsilon(1e-14));
  CHECK(es2.eigenvalues[1] == doctest::Approx(0.3).epsilon(1e-14));
}

TEST_CASE("eigendecomposition reconstructs and is orthonormal") {
  Rng rng(11);
  for (int dim : {1, 2, 3, 5, 8, 13, 24}) {
    auto h = testsupport::random_hermitian(rng, dim);
    auto es = hermitian_eig(h);
    HermitianMatrix rec(dim);
    for (int k = 0; k < dim; ++k)
      for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j)
          rec.set(i, j, rec(i, j) + es.eigenvalues[k] * es.eigenvectors(i, k) *
                                        std::conj(es.eigenvectors(j, k)));
    const double scale = h.frobenius_norm();
    CHECK((rec - h).frobenius_norm() <= 1e-12 * scale);

    auto vtv = detail::matmul(es.eigenvectors.adjoint(), es.eigenvectors);
    vtv -= ComplexMatrix::identity(dim);
    CHECK(vtv.frobenius() <= 1e-12 * dim);
    for (int k = 0; k + 1 < dim; ++k) CHECK(es.eigenvalues[k] >= es.eigenvalues[k + 1]);
  }
}

TEST_CASE("eigendecomposition is deterministic") {
  Rng rng(12);
  auto h = testsupport::random_hermitian(rng, 6);
  auto a = hermitian_eig(h);
  auto b = hermitian_eig(h);
  for (int i = 0; i < 6; ++i) CHECK(a.eigenvalues[i] == b.eigenvalues[i]);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(a.eigenvectors(i, j) == b.eigenvectors(i, j));
}

TEST_CASE("matrix_function on closed-form instances") {
  HermitianMatrix h(2);
  h.set(0, 0, 2.0);
  h.set(1, 1, 2.0);
  h.set(0, 1, 1.0);
  auto sq = matrix_function(h, [](double t) { return t * t; });
  CHECK(sq(0, 0).real() == doctest::Approx(5.0).epsilon(1e-13));
  CHECK(sq(0, 1).real() == doctest::Approx(4.0).epsilon(1e-13));

  auto rt = matrix_function(diag2(4.0, 9.0), [](double t) { return std::sqrt(t); });
  CHECK(rt(0, 0).real() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(rt(1, 1).real() == doctest::Approx(3.0).epsilon(1e-14));

  Rng rng(13);
  auto g = testsupport::random_hermitian(rng, 5);
  auto id = matrix_function(g, [](double t) { return t; });
  CHECK((id - g).frobenius_norm() <= 1e-12 * g.frobenius_norm());
}

TEST_CASE("matrix_function rejects values outside the scalar domain") {
  CHECK_THROWS_AS(matrix_function(diag2(1.0, 0.0), [](double t) { return std::log(t); }),
                  DomainError);
}

TEST_CASE("matrix_function commutes with unitary conjugation") {
  Rng rng(14);
  for (int rep = 0; rep < 20; ++rep) {
    auto h = testsupport::random_hermitian(rng, 4);
    auto u = testsupport::random_unitary(rng, 4);
    auto f = [](double t) { return std::exp(0.3 * t); };
    auto lhs = matrix_function(conjugate_unitary(h, u), f);
    auto rhs = conjugate_unitary(matrix_function(h, f), u);
    CHECK((lhs - rhs).frobenius_norm() <= 1e-11 * std::max(1.0, lhs.frobenius_norm()));
  }
}

TEST_CASE("positive part on known instances") {
  auto p = positive_part(diag2(0.3, -0.3));
  CHECK(p(0, 0).real() == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(std::abs(p(1, 1)) <= 1e-15);

  auto px = positive_part(pauli_x());
  CHECK(px(0, 0).real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(px(0, 1).real() == doctest::Approx(0.5).epsilon(1e-14));

  CHECK(positive_part(HermitianMatrix(3)).frobenius_norm() == 0.0);
}

TEST_CASE("positive part and absolute value decompose the input") {
  Rng rng(15);
  for (int rep = 0; rep < 30; ++rep) {
    auto x = testsupport::random_hermitian(rng, 4);
    const double scale = x.frobenius_norm();
    auto plus = positive_part(x);
    auto minus = positive_part(-1.0 * x);
    CHECK((x - (plus - minus)).frobenius_norm() <= 1e-12 * scale);
    CHECK((abs_op(x) - (plus + minus)).frobenius_norm() <= 1e-12 * scale);
    CHECK(is_psd(plus, 1e-10));
    CHECK(is_psd(plus - x, 1e-10));
    CHECK(std::abs(trace_norm(x) - abs_op(x).trace()) <= 1e-12 * scale);
  }
}

TEST_CASE("absolute value on known instances") {
  auto a = abs_op(diag2(0.3, -0.3));
  CHECK(a(1, 1).real() == doctest::Approx(0.3).epsilon(1e-14));

  const Cmplx c{0.3, 0.4};
  HermitianMatrix off(2);
  off.set(0, 1, 2.0 * std::conj(c));
  auto ab = abs_op(off);
  CHECK(ab(0, 0).real() == doctest::Approx(2.0 * std::abs(c)).epsilon(1e-13));
  CHECK(ab(1, 1).real() == doctest::Approx(2.0 * std::abs(c)).epsilon(1e-13));
  CHECK(std::abs(ab(0, 1)) <= 1e-13);

  Rng rng(16);
  auto psd = testsupport::random_state(rng, 3).matrix();
  CHECK((abs_op(psd) - psd).frobenius_norm() <= 1e-12);
}

TEST_CASE("trace norm") {
  CHECK(trace_norm(diag2(0.5, -0.5)) == doctest::Approx(1.0).epsilon(1e-14));
  const Cmplx c{0.1, -0.2};
  HermitianMatrix off(2);
  off.set(0, 1, 2.0 * std::conj(c));
  CHECK(trace_norm(off) == doctest::Approx(4.0 * std::abs(c)).epsilon(1e-13));
  Rng rng(17);
  auto psd = testsupport::random_state(rng, 4).matrix();
  CHECK(trace_norm(psd) == doctest::Approx(psd.trace()).epsilon(1e-13));
}

TEST_CASE("psd test with relative tolerance") {
  CHECK(is_psd(diag2(1.0, 0.0), 1e-10));
  HermitianMatrix m(2);
  m.set(0, 0, 1.0);
  m.set(1, 1, 1.0);
  m.set(0, 1, 2.0);
  CHECK_FALSE(is_psd(m, 1e-10));
  CHECK(is_psd(diag2(1.0, -1e-12), 1e-10));
  CHECK_FALSE(is_psd(diag2(1.0, -1e-6), 1e-10));
}

TEST_CASE("generalized inverse") {
  auto gi = generalized_inverse(diag2(0.0, 0.5));
  CHECK(std::abs(gi(0, 0)) <= 1e-15);
  CHECK(gi(1, 1).real() == doctest::Approx(2.0).epsilon(1e-14));

  auto gi2 = generalized_inverse(diag2(2.0, 4.0));
  CHECK(gi2(0, 0).real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(gi2(1, 1).real() == doctest::Approx(0.25).epsilon(1e-14));

  CHECK(generalized_inverse(HermitianMatrix(3)).frobenius_norm() == 0.0);

  Rng rng(18);
  for (int rep = 0; rep < 10; ++rep) {
    auto h = testsupport::random_rank_deficient_state(rng, 5, 3).matrix();
    auto hi = generalized_inverse(h);
    auto hih = HermitianMatrix::from_dense(
        detail::matmul(detail::matmul(h.dense(), hi.dense()), h.dense()));
    CHECK((hih - h).frobenius_norm() <= 1e-10 * std::max(1.0, h.frobenius_norm()));
  }
}

TEST_CASE("support projectors and their intersection") {
  auto zero_zero = testsupport::pure_state({1.0, 0.0}).matrix();
  auto plus = testsupport::pure_state({std::sqrt(0.5), std::sqrt(0.5)}).matrix();
  CHECK(support_intersection(zero_zero, plus).frobenius_norm() <= 1e-12);

  auto id3 = HermitianMatrix::identity(3);
  CHECK((support_intersection(id3, id3) - id3).frobenius_norm() <= 1e-12);

  HermitianMatrix p(3), q(3);
  p.set(0, 0, 1.0);
  p.set(1, 1, 1.0);
  q.set(1, 1, 1.0);
  q.set(2, 2, 1.0);
  auto s = support_intersection(p, q);
  CHECK(s(1, 1).real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(s(0, 0)) + std::abs(s(2, 2)) <= 1e-12);

  Rng rng(19);
  for (int rep = 0; rep < 10; ++rep) {
    auto a = testsupport::random_rank_deficient_state(rng, 4, 3).matrix();
    auto b = testsupport::random_rank_deficient_state(rng, 4, 2).matrix();
    auto ab = support_intersection(a, b);
    auto ba = support_intersection(b, a);
    CHECK((ab - ba).frobenius_norm() <= 1e-12);
    auto sq = HermitianMatrix::from_dense(detail::matmul(ab.dense(), ab.dense()));
    CHECK((sq - ab).frobenius_norm() <= 1e-12);
  }
}

TEST_CASE("density matrix validation") {
  CHECK_THROWS_AS(DensityMatrix::normalized(diag2(0.7, 0.7)), NotNormalized);
  CHECK_THROWS_AS(DensityMatrix::normalized(diag2(1.5, -0.5)), NotPsd);
  CHECK_THROWS_AS(DensityMatrix::subnormalized(diag2(0.5, -0.2)), NotPsd);
  auto sub = DensityMatrix::subnormalized(diag2(0.3, 0.2));
  CHECK(sub.trace() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_FALSE(sub.normalized_mode());
  CHECK(DensityMatrix::normalized(diag2(0.7, 0.3)).normalized_mode());
}

TEST_CASE("anticommutator and commutator norm") {
  auto x = pauli_x();
  HermitianMatrix z = diag2(1.0, -1.0);
  CHECK(anticommutator(x, z).frobenius_norm() <= 1e-15);  // {X, Z} = 0
  CHECK(commutator_norm(z, diag2(0.4, 0.6)) <= 1e-15);
  CHECK(commutator_norm(x, z) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-13));
}

}  // TEST_SUITE
