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

#include "qfdiv/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "qfdiv/errors.hpp"

namespace qfdiv::io {

namespace {

std::vector<std::vector<double>> part_rows(const matcore::HermitianMatrix& h, bool imag) {
  const int d = h.dim();
  std::vector<std::vector<double>> rows(d, std::vector<double>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) rows[i][j] = imag ? h(i, j).imag() : h(i, j).real();
  return rows;
}

double require_number(const Json& j, const char* where) {
  if (!j.is_number()) throw ParseError(std::string(where) + ": expected a number");
  return j.get<double>();
}

std::vector<std::vector<double>> require_grid(const Json& j, int dim, const char* key) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw ParseError(std::string(key) + ": expected " + std::to_string(dim) + " rows");
  std::vector<std::vector<double>> rows;
  rows.reserve(dim);
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw ParseError(std::string(key) + ": expected rows of length " + std::to_string(dim));
    std::vector<double> r;
    r.reserve(dim);
    for (const auto& v : row) r.push_back(require_number(v, key));
    rows.push_back(std::move(r));
  }
  return rows;
}

double parse_one_real(const std::string& tok, const std::string& where) {
  try {
    size_t used = 0;
    double v = std::stod(tok, &used);
    while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
    if (used != tok.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ParseError(where + ": cannot parse '" + tok + "' as a number");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

Json matrix_json(const matcore::HermitianMatrix& h) {
  return Json{{"dim", h.dim()}, {"re", part_rows(h, false)}, {"im", part_rows(h, true)}};
}

Json extended_json(const fdiv::ExtendedReal& v) {
  if (v.is_finite()) return Json(v.value());
  return Json("inf");
}

Json povm_json(const reverse_test::POVM& m) {
  Json elems = Json::array();
  for (const auto& e : m.elements()) elems.push_back(matrix_json(e));
  return Json{{"elements", std::move(elems)}};
}

Json reverse_test_json(const reverse_test::ReverseTest& rt) {
  Json states = Json::array();
  for (const auto& s : rt.states()) states.push_back(matrix_json(s.matrix()));
  return Json{{"states", std::move(states)}, {"p", rt.p().weights()}, {"q", rt.q().weights()}};
}

Json sdp_json(const tvmax::SdpResult& r) {
  Json stages = Json::array();
  for (const auto& s : r.stages)
    stages.push_back(Json{{"mu", s.mu},
                          {"primal", s.primal},
                          {"dual", s.dual},
                          {"gap", s.gap},
                          {"newton_steps", s.newton_steps}});
  return Json{{"value", r.value},
              {"gap", r.gap},
              {"iterations", r.iterations},
              {"reduced_dim", r.reduced_dim},
              {"converged", r.converged},
              {"tol", r.tol},
              {"diagnostic", r.diagnostic},
              {"A", matrix_json(r.A_opt)},
              {"Y", matrix_json(r.dual_Y)},
              {"Z", matrix_json(r.dual_Z)},
              {"stages", std::move(stages)}};
}

Json reversibility_json(const tvmax::ReversibilityReport& r) {
  Json j{{"reversible", r.reversible},
         {"boundary", r.boundary},
         {"min_eig_A", r.min_eig_A},
         {"tv", r.tv},
         {"A", matrix_json(r.A)},
         {"delta1", matrix_json(r.delta1)},
         {"delta2", matrix_json(r.delta2)}};
  if (r.dmax) j["dmax"] = *r.dmax;
  return j;
}

Json gap_scan_json(const qdiv::GapScanReport& r) {
  return Json{{"dmax", extended_json(r.dmax)},
              {"best_measured", r.best_measured},
              {"gap", r.gap},
              {"grid_size", r.grid_size},
              {"commuting", r.commuting},
              {"best_measurement", povm_json(r.best_measurement)}};
}

Json lemma1_json(const fdiv::Lemma1Report& r) {
  Json viols = Json::array();
  for (const auto& [x, y] : r.violations) viols.push_back(Json::array({x, y}));
  return Json{{"divergence_preserved", r.divergence_preserved},
              {"block_condition_holds", r.block_condition_holds},
              {"implication_holds", r.implication_holds},
              {"violations", std::move(viols)},
              {"divergence_in", r.divergence_in},
              {"divergence_out", r.divergence_out}};
}

Json ratio_partition_json(const fdiv::RatioPartition& r) {
  Json classes = Json::array();
  for (const auto& c : r.classes)
    classes.push_back(Json{{"ratio", extended_json(c.ratio)}, {"indices", c.indices}});
  return Json{
      {"classes", std::move(classes)}, {"zero_set", r.zero_set}, {"class_of", r.class_of}};
}

Json conjugate_pair_json(const bloch::ConjugatePairResult& r) {
  return Json{{"dmax", r.dmax},
              {"A", matrix_json(r.A_opt)},
              {"branch", r.branch == bloch::Branch::b_ge_c ? "b_ge_c" : "c_ge_b"}};
}

Json spheroid_json(const bloch::SpheroidReport& r) {
  const char* region = r.region == bloch::Region::inside
                           ? "inside"
                           : (r.region == bloch::Region::boundary ? "boundary" : "outside");
  return Json{{"region", region}, {"s", r.s}, {"margin", r.margin}};
}

Json mc_json(const bloch::McResult& r) {
  return Json{{"fraction", r.fraction},
              {"samples", r.samples},
              {"seed", r.seed},
              {"member_count", r.member_count}};
}

matcore::HermitianMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("matrix: expected a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw ParseError("matrix: missing integer field 'dim'");
  const int d = j["dim"].get<int>();
  if (d < 1 || d > 64) throw ParseError("matrix: 'dim' must be in [1, 64]");
  if (!j.contains("re")) throw ParseError("matrix: missing field 're'");
  auto re = require_grid(j["re"], d, "re");
  std::vector<std::vector<double>> im(d, std::vector<double>(d, 0.0));
  if (j.contains("im")) im = require_grid(j["im"], d, "im");
  std::vector<matcore::Cmplx> entries(static_cast<size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) entries[static_cast<size_t>(i) * d + k] = {re[i][k], im[i][k]};
  return matcore::HermitianMatrix::from_entries(d, entries);
}

matcore::DensityMatrix density_from_json(const Json& j) {
  return matcore::DensityMatrix::normalized(matrix_from_json(j));
}

reverse_test::POVM povm_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
    throw ParseError("povm: expected {\"elements\": [..]}");
  std::vector<matcore::HermitianMatrix> elems;
  for (const auto& e : j["elements"]) elems.push_back(matrix_from_json(e));
  return reverse_test::POVM(std::move(elems));
}

reverse_test::ReverseTest reverse_test_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("states") || !j.contains("p") || !j.contains("q"))
    throw ParseError("reverse test: expected fields 'states', 'p', 'q'");
  if (!j["states"].is_array() || j["states"].empty())
    throw ParseError("reverse test: 'states' must be a nonempty array");
  std::vector<matcore::DensityMatrix> states;
  for (const auto& s : j["states"]) states.push_back(density_from_json(s));
  auto read_weights = [](const Json& arr, const char* key) {
    if (!arr.is_array()) throw ParseError(std::string(key) + ": expected an array");
    std::vector<double> w;
    for (const auto& v : arr) w.push_back(require_number(v, key));
    return w;
  };
  auto p = fdiv::ProbVector::strict(read_weights(j["p"], "p"));
  auto q = fdiv::ProbVector::strict(read_weights(j["q"], "q"));
  return reverse_test::ReverseTest(std::move(states), std::move(p), std::move(q));
}

fdiv::ClassicalChannel channel_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("channel: expected a nonempty 2D array");
  const int out_dim = static_cast<int>(j.size());
  if (!j[0].is_array() || j[0].empty())
    throw ParseError("channel: expected a nonempty 2D array");
  const int in_dim = static_cast<int>(j[0].size());
  std::vector<double> a;
  a.reserve(static_cast<size_t>(out_dim) * in_dim);
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != in_dim)
      throw ParseError("channel: ragged rows");
    for (const auto& v : row) a.push_back(require_number(v, "channel"));
  }
  return fdiv::ClassicalChannel::from_matrix(out_dim, in_dim, a);
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ParseError("'" + path + "' is not valid JSON");
  return j;
}

std::vector<double> parse_real_csv(const std::string& text) {
  std::vector<double> out;
  for (const auto& tok : split(text, ',')) out.push_back(parse_one_real(tok, "vector"));
  if (out.empty()) throw ParseError("vector: empty input");
  return out;
}

std::vector<std::complex<double>> parse_complex_csv(const std::string& text) {
  std::vector<std::complex<double>> out;
  for (const auto& tok : split(text, ',')) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos) {
      out.emplace_back(parse_one_real(tok, "vector"), 0.0);
    } else {
      out.emplace_back(parse_one_real(tok.substr(0, colon), "vector"),
                       parse_one_real(tok.substr(colon + 1), "vector"));
    }
  }
  if (out.empty()) throw ParseError("vector: empty input");
  return out;
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string csv_header() { return "sample_index,x,y,z,s_value,member"; }

void csv_row(std::ostream& os, long long index, const bloch::BlochVector& v, double s,
             bool member) {
  os << index << ',' << format_real(v.x) << ',' << format_real(v.y) << ',' << format_real(v.z)
     << ',' << format_real(s) << ',' << (member ? 1 : 0) << '\n';
}

}  // namespace qfdiv::io
