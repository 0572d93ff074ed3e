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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "qfdiv/errors.hpp"
#include "qfdiv/io.hpp"
#include "support.hpp"

using namespace qfdiv;
using io::Json;
using matcore::Cmplx;
using matcore::HermitianMatrix;

TEST_SUITE_BEGIN("io");

TEST_CASE("matrix json round trip is bit identical") {
  testsupport::Rng rng(11);
  for (int dim : {1, 2, 3, 5, 8}) {
    auto h = testsupport::random_hermitian(rng, dim);
    auto j = io::matrix_json(h);
    // Through text and back: shortest round-trip float formatting.
    auto back = io::matrix_from_json(Json::parse(j.dump()));
    CHECK(testsupport::bit_identical(h, back));
  }
}

TEST_CASE("matrix json imaginary part is optional") {
  auto j = Json::parse(R"({"dim": 2, "re": [[0.7, 0.1], [0.1, 0.3]]})");
  auto h = io::matrix_from_json(j);
  CHECK(h(0, 1) == Cmplx(0.1, 0.0));
  CHECK(h(1, 0).imag() == 0.0);
}

TEST_CASE("matrix json rejects malformed input") {
  CHECK_THROWS_AS(io::matrix_from_json(Json::parse("[1, 2]")), ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(Json::parse(R"({"re": [[1]]})")), ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(Json::parse(R"({"dim": "two", "re": [[1]]})")), ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(Json::parse(R"({"dim": 0, "re": []})")), ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(Json::parse(R"({"dim": 65, "re": []})")), ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(Json::parse(R"({"dim": 2})")), ParseError);
  // Wrong row count, ragged rows, non-numeric entries.
  CHECK_THROWS_AS(io::matrix_from_json(Json::parse(R"({"dim": 2, "re": [[1, 0]]})")), ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(Json::parse(R"({"dim": 2, "re": [[1, 0], [0]]})")),
                  ParseError);
  CHECK_THROWS_AS(
      io::matrix_from_json(Json::parse(R"({"dim": 2, "re": [[1, 0], [0, "x"]]})")), ParseError);
  CHECK_THROWS_AS(
      io::matrix_from_json(Json::parse(R"({"dim": 2, "re": [[1, 0], [0, 0]], "im": [[0]]})")),
      ParseError);
}

TEST_CASE("density parsing enforces state constraints") {
  auto good = Json::parse(R"({"dim": 2, "re": [[0.7, 0.1], [0.1, 0.3]]})");
  CHECK(io::density_from_json(good).matrix()(0, 0).real() == 0.7);
  auto off_trace = Json::parse(R"({"dim": 2, "re": [[0.7, 0.0], [0.0, 0.6]]})");
  CHECK_THROWS_AS(io::density_from_json(off_trace), NotNormalized);
  auto not_psd = Json::parse(R"({"dim": 2, "re": [[1.2, 0.0], [0.0, -0.2]]})");
  CHECK_THROWS_AS(io::density_from_json(not_psd), NotPsd);
}

TEST_CASE("povm json round trip preserves elements bitwise") {
  testsupport::Rng rng(21);
  auto m = testsupport::random_povm(rng, 3, 4);
  auto back = io::povm_from_json(Json::parse(io::povm_json(m).dump()));
  REQUIRE(back.elements().size() == m.elements().size());
  for (size_t k = 0; k < m.elements().size(); ++k)
    CHECK(testsupport::bit_identical(m.elements()[k], back.elements()[k]));
  CHECK_THROWS_AS(io::povm_from_json(Json::parse(R"({"wrong": []})")), ParseError);
}

TEST_CASE("reverse test json round trip") {
  testsupport::Rng rng(31);
  std::vector<matcore::DensityMatrix> states{testsupport::random_state(rng, 2),
                                             testsupport::random_state(rng, 2),
                                             testsupport::random_state(rng, 2)};
  auto rt = reverse_test::ReverseTest(states, fdiv::ProbVector::strict({0.2, 0.3, 0.5}),
                                      fdiv::ProbVector::strict({0.6, 0.1, 0.3}));
  auto back = io::reverse_test_from_json(Json::parse(io::reverse_test_json(rt).dump()));
  REQUIRE(back.states().size() == 3);
  for (size_t k = 0; k < 3; ++k)
    CHECK(testsupport::bit_identical(states[k].matrix(), back.states()[k].matrix()));
  CHECK(back.p().weights() == rt.p().weights());
  CHECK(back.q().weights() == rt.q().weights());
  CHECK_THROWS_AS(io::reverse_test_from_json(Json::parse(R"({"states": []})")), ParseError);
}

TEST_CASE("channel parsing validates shape and column sums") {
  auto ch = io::channel_from_json(Json::parse("[[1.0, 0.3], [0.0, 0.7]]"));
  auto out = fdiv::channel_apply(ch, fdiv::ProbVector::strict({0.5, 0.5}));
  CHECK(out.weights()[0] == doctest::Approx(0.65).epsilon(1e-15));
  CHECK_THROWS_AS(io::channel_from_json(Json::parse("[]")), ParseError);
  CHECK_THROWS_AS(io::channel_from_json(Json::parse("[[1, 0], [0]]")), ParseError);
  CHECK_THROWS_AS(io::channel_from_json(Json::parse(R"({"rows": []})")), ParseError);
  // Columns must each sum to one; that check lives in the channel itself.
  CHECK_THROWS_AS(io::channel_from_json(Json::parse("[[0.5, 0.0], [0.5, 0.9]]")), NotNormalized);
}

TEST_CASE("json file loading") {
  CHECK_THROWS_AS(io::load_json_file("/nonexistent/path.json"), ParseError);
  const std::string path = "io_test_tmp.json";
  {
    std::ofstream out(path);
    out << R"({"dim": 1, "re": [[1.0]]})";
  }
  auto j = io::load_json_file(path);
  CHECK(io::matrix_from_json(j)(0, 0).real() == 1.0);
  {
    std::ofstream out(path);
    out << "{not json";
  }
  CHECK_THROWS_AS(io::load_json_file(path), ParseError);
  std::remove(path.c_str());
}

TEST_CASE("csv vector parsing") {
  auto v = io::parse_real_csv("0.1,0.9");
  REQUIRE(v.size() == 2);
  CHECK(v[0] == 0.1);
  CHECK(v[1] == 0.9);
  CHECK(io::parse_real_csv("1e-3").size() == 1);
  CHECK_THROWS_AS(io::parse_real_csv(""), ParseError);
  CHECK_THROWS_AS(io::parse_real_csv("abc"), ParseError);
  CHECK_THROWS_AS(io::parse_real_csv("1,"), ParseError);
  CHECK_THROWS_AS(io::parse_real_csv("1,2x"), ParseError);

  auto c = io::parse_complex_csv("1:2,3");
  REQUIRE(c.size() == 2);
  CHECK(c[0] == std::complex<double>(1.0, 2.0));
  CHECK(c[1] == std::complex<double>(3.0, 0.0));
  CHECK_THROWS_AS(io::parse_complex_csv("1:"), ParseError);
  CHECK_THROWS_AS(io::parse_complex_csv(":2"), ParseError);
}

TEST_CASE("real formatting uses 12 significant digits") {
  CHECK(io::format_real(0.51) == "0.51");
  CHECK(io::format_real(1.0 / 3.0) == "0.333333333333");
  CHECK(io::format_real(-2.0) == "-2");
  CHECK(io::format_real(1e-30) == "1e-30");
  CHECK(io::format_real(0.0) == "0");
}

TEST_CASE("csv rows for the sampling stream") {
  CHECK(io::csv_header() == "sample_index,x,y,z,s_value,member");
  std::ostringstream os;
  io::csv_row(os, 7, {0.1, 0.2, 0.3}, 1.5, true);
  io::csv_row(os, 8, {0.0, 0.0, 0.0}, 2.5, false);
  CHECK(os.str() == "7,0.1,0.2,0.3,1.5,1\n8,0,0,0,2.5,0\n");
}

TEST_CASE("extended values serialize as number or inf string") {
  CHECK(io::extended_json(fdiv::ExtendedReal::finite(1.5)) == Json(1.5));
  CHECK(io::extended_json(fdiv::ExtendedReal::infinity()) == Json("inf"));
}

TEST_CASE("solver report serializes every certificate field") {
  auto rho = io::density_from_json(Json::parse(R"({"dim": 2, "re": [[0.7, 0], [0, 0.3]]})"));
  auto sigma = io::density_from_json(Json::parse(R"({"dim": 2, "re": [[0.4, 0], [0, 0.6]]})"));
  auto r = tvmax::dmax_tv_sdp(rho, sigma, 1e-8);
  auto j = io::sdp_json(r);
  for (const char* key : {"value", "gap", "iterations", "reduced_dim", "converged", "tol",
                          "diagnostic", "A", "Y", "Z", "stages"})
    CHECK(j.contains(key));
  REQUIRE(j["stages"].is_array());
  REQUIRE_FALSE(j["stages"].empty());
  for (const char* key : {"mu", "primal", "dual", "gap", "newton_steps"})
    CHECK(j["stages"][0].contains(key));
  // Serialization is stable: dump and reparse compare equal.
  CHECK(Json::parse(j.dump()) == j);

  auto rev = tvmax::reversibility_check(rho, sigma);
  auto jr = io::reversibility_json(rev);
  CHECK_FALSE(jr.contains("dmax"));
  auto rev2 = tvmax::reversibility_check(rho, sigma, 1e-9, true);
  CHECK(io::reversibility_json(rev2).contains("dmax"));
}

TEST_CASE("report serializers expose their headline numbers") {
  auto part = fdiv::ratio_partition(fdiv::ProbVector::strict({0.5, 0.5}),
                                    fdiv::ProbVector::strict({1.0, 0.0}));
  auto jp = io::ratio_partition_json(part);
  REQUIRE(jp["classes"].is_array());
  CHECK(jp["classes"].back()["ratio"] == Json("inf"));  // infinite class sorts last
  CHECK(jp.contains("class_of"));

  auto cp = bloch::conjugate_pair_dmax(0.8, 0.2, Cmplx(0.4, 0.0));
  auto jc = io::conjugate_pair_json(cp);
  CHECK(jc["dmax"].get<double>() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(jc["branch"] == Json("c_ge_b"));

  auto js = io::spheroid_json(bloch::spheroid_membership({0.0, 0.0, 0.6}, {0.8, 0.0, 0.0}));
  CHECK(js["region"] == Json("boundary"));

  auto jm = io::mc_json(bloch::region_volume_fraction_mc({0.0, 0.0, 0.7}, 1000, 3));
  CHECK(jm["samples"] == Json(1000));
  CHECK(jm["seed"] == Json(3));
}

TEST_SUITE_END();
