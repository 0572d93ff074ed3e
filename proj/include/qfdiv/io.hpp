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

#ifndef QFDIV_IO_HPP
#define QFDIV_IO_HPP

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "qfdiv/bloch.hpp"
#include "qfdiv/fdiv.hpp"
#include "qfdiv/matcore.hpp"
#include "qfdiv/qdiv.hpp"
#include "qfdiv/reverse_test.hpp"
#include "qfdiv/tvmax.hpp"

namespace qfdiv::io {

using Json = nlohmann::json;

// -- JSON out -----------------------------------------------------------------
// Matrices are emitted as {"dim": d, "re": [[..]], "im": [[..]]}; numbers use
// the library's shortest round-trip formatting, so emit + parse is
// bit-identical.

Json matrix_json(const matcore::HermitianMatrix& h);
Json extended_json(const fdiv::ExtendedReal& v);  // number, or "inf"
Json povm_json(const reverse_test::POVM& m);
Json reverse_test_json(const reverse_test::ReverseTest& rt);
Json sdp_json(const tvmax::SdpResult& r);
Json reversibility_json(const tvmax::ReversibilityReport& r);
Json gap_scan_json(const qdiv::GapScanReport& r);
Json lemma1_json(const fdiv::Lemma1Report& r);
Json ratio_partition_json(const fdiv::RatioPartition& r);
Json conjugate_pair_json(const bloch::ConjugatePairResult& r);
Json spheroid_json(const bloch::SpheroidReport& r);
Json mc_json(const bloch::McResult& r);

// -- JSON in ------------------------------------------------------------------
// All parsers throw ParseError with a field-level message on malformed input.

matcore::HermitianMatrix matrix_from_json(const Json& j);  // "im" optional
matcore::DensityMatrix density_from_json(const Json& j);   // unit-trace state
reverse_test::POVM povm_from_json(const Json& j);          // {"elements": [..]}
reverse_test::ReverseTest reverse_test_from_json(const Json& j);
// Bare row-major 2D array: out_dim rows of in_dim conditional probabilities.
fdiv::ClassicalChannel channel_from_json(const Json& j);

Json load_json_file(const std::string& path);

// -- Plain-text parsing -------------------------------------------------------

std::vector<double> parse_real_csv(const std::string& text);
// Entries are either "x" or "re:im".
std::vector<std::complex<double>> parse_complex_csv(const std::string& text);

// -- Formatting ---------------------------------------------------------------

// 12 significant digits, the precision used for all human-readable output.
std::string format_real(double v);

std::string csv_header();  // sample_index,x,y,z,s_value,member
void csv_row(std::ostream& os, long long index, const bloch::BlochVector& v, double s, bool member);

}  // namespace qfdiv::io

#endif  // QFDIV_IO_HPP
