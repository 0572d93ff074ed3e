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

// Command-line front end: parses inputs, dispatches to the library, emits
// JSON (default), plain text, or CSV sample streams. Exit codes: 0 success,
// 2 input error, 3 solver non-convergence (the result is still emitted).

#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qfdiv/bloch.hpp"
#include "qfdiv/errors.hpp"
#include "qfdiv/exec.hpp"
#include "qfdiv/fdiv.hpp"
#include "qfdiv/io.hpp"
#include "qfdiv/matcore.hpp"
#include "qfdiv/qdiv.hpp"
#include "qfdiv/reverse_test.hpp"
#include "qfdiv/tvmax.hpp"

namespace {

using qfdiv::ParseError;
using qfdiv::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNoConverge = 3;

qfdiv::fdiv::FDivFunction parse_f(const std::string& spec) {
  if (spec == "tv") return qfdiv::fdiv::FDivFunction::total_variation_f();
  if (spec == "kl") return qfdiv::fdiv::FDivFunction::kl();
  if (spec.rfind("alpha:", 0) == 0) {
    double a = 0.0;
    try {
      size_t used = 0;
      a = std::stod(spec.substr(6), &used);
      if (used != spec.size() - 6) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw ParseError("--f: cannot parse '" + spec + "' (expected alpha:<number>)");
    }
    return qfdiv::fdiv::FDivFunction::renyi_alpha(a);
  }
  throw ParseError("--f: unknown function '" + spec + "' (expected tv, kl, or alpha:<a>)");
}

qfdiv::matcore::DensityMatrix load_state(const std::string& path) {
  return qfdiv::io::density_from_json(qfdiv::io::load_json_file(path));
}

void print_plain(const Json& j, std::ostream& os) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_number()) {
      os << key << ' ' << qfdiv::io::format_real(value.get<double>()) << '\n';
    } else if (value.is_boolean()) {
      os << key << ' ' << (value.get<bool>() ? "true" : "false") << '\n';
    } else if (value.is_string()) {
      os << key << ' ' << value.get<std::string>() << '\n';
    }
    // Nested objects and arrays (matrices, stage logs) are JSON-only.
  }
}

void emit(const Json& j, const std::string& output) {
  if (output == "plain")
    print_plain(j, std::cout);
  else
    std::cout << j.dump(2) << '\n';
}

struct Global {
  double tol = 1e-8;
  std::uint64_t seed = 0;
  std::string output = "json";
  bool tol_given = false;  // when absent, each operation keeps its own default
};

int run(int argc, char** argv) {
  CLI::App app{"Classical and maximal quantum f-divergences"};
  app.require_subcommand(1);

  Global g;
  auto* tol_opt =
      app.add_option("--tol", g.tol, "solver / decision tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "random stream seed");
  app.add_option("--output", g.output, "output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}));

  std::string f_spec = "kl", p_csv, q_csv, rho_path, sigma_path, psi_csv, channel_path;
  std::string bloch_csv, csv_path;
  double cp_a = 0.0, cp_b = 0.0, cp_cre = 0.0, cp_cim = 0.0;
  long long samples = 0;
  int grid = 100;
  bool serial = false, rev_sdp = false;

  auto* c_fdiv = app.add_subcommand("fdiv", "classical f-divergence D_f(p||q)");
  c_fdiv->add_option("--f", f_spec, "tv, kl, or alpha:<a>")->required();
  c_fdiv->add_option("--p", p_csv, "comma-separated weights")->required();
  c_fdiv->add_option("--q", q_csv, "comma-separated weights")->required();

  auto* c_qmax = app.add_subcommand("qmax", "maximal f-divergence, operator-convex closed form");
  c_qmax->add_option("--f", f_spec, "kl or alpha:<a>")->required();
  c_qmax->add_option("--rho", rho_path, "state JSON file")->required();
  c_qmax->add_option("--sigma", sigma_path, "state JSON file")->required();

  auto* c_sdp = app.add_subcommand("tv-sdp", "maximal total-variation divergence (solver)");
  c_sdp->add_option("--rho", rho_path, "state JSON file")->required();
  c_sdp->add_option("--sigma", sigma_path, "state JSON file")->required();

  auto* c_rev = app.add_subcommand("reversibility", "trace-distance reversibility report");
  c_rev->add_option("--rho", rho_path, "state JSON file")->required();
  c_rev->add_option("--sigma", sigma_path, "state JSON file")->required();
  c_rev->add_flag("--sdp", rev_sdp, "also cross-check with the solver");

  auto* c_pure = app.add_subcommand("pure", "maximal TV divergence against a pure state");
  c_pure->add_option("--rho", rho_path, "state JSON file")->required();
  c_pure->add_option("--psi", psi_csv, "comma-separated amplitudes, re:im per entry")->required();

  auto* c_cp = app.add_subcommand("conjugate-pair", "closed form for the conjugate qubit pair");
  c_cp->add_option("-a", cp_a, "diagonal entry a")->required();
  c_cp->add_option("-b", cp_b, "diagonal entry b")->required();
  c_cp->add_option("--c-re", cp_cre, "Re c");
  c_cp->add_option("--c-im", cp_cim, "Im c");

  auto* c_region = app.add_subcommand("qubit-region", "reversibility spheroid volume");
  c_region->add_option("--bloch", bloch_csv, "x,y,z of rho")->required();
  c_region->add_option("--samples", samples, "Monte Carlo sample count");
  c_region->add_option("--csv", csv_path, "write per-sample CSV to this file");
  c_region->add_flag("--serial", serial, "single-threaded sampling");

  auto* c_scan = app.add_subcommand("gap-scan", "measured vs maximal divergence over a qubit grid");
  c_scan->add_option("--rho", rho_path, "state JSON file")->required();
  c_scan->add_option("--sigma", sigma_path, "state JSON file")->required();
  c_scan->add_option("--f", f_spec, "tv, kl, or alpha:<a>");
  c_scan->add_option("--grid", grid, "angular grid size n (n*n points)")
      ->check(CLI::PositiveNumber);
  c_scan->add_flag("--serial", serial, "single-threaded scan");

  auto* c_lemma = app.add_subcommand("lemma1", "divergence preservation vs block structure");
  c_lemma->add_option("--p", p_csv, "comma-separated weights")->required();
  c_lemma->add_option("--q", q_csv, "comma-separated weights")->required();
  c_lemma->add_option("--channel", channel_path, "row-major stochastic matrix JSON")->required();
  c_lemma->add_option("--f", f_spec, "strictly convex function");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  g.tol_given = tol_opt->count() > 0;
  const auto exec = serial ? qfdiv::Exec::serial : qfdiv::Exec::parallel;

  try {
    if (g.output == "csv" && !c_region->parsed())
      throw ParseError("--output csv applies to qubit-region only");

    if (c_fdiv->parsed()) {
      auto f = parse_f(f_spec);
      auto p = qfdiv::fdiv::ProbVector::strict(qfdiv::io::parse_real_csv(p_csv));
      auto q = qfdiv::fdiv::ProbVector::strict(qfdiv::io::parse_real_csv(q_csv));
      auto value = qfdiv::fdiv::f_divergence(p, q, f);
      emit(Json{{"f", f.name()}, {"value", qfdiv::io::extended_json(value)}}, g.output);
      return kExitOk;
    }

    if (c_qmax->parsed()) {
      auto f = parse_f(f_spec);
      auto value = qfdiv::qdiv::dmax_operator_convex(load_state(rho_path), load_state(sigma_path), f);
      emit(Json{{"f", f.name()}, {"value", qfdiv::io::extended_json(value)}}, g.output);
      return kExitOk;
    }

    if (c_sdp->parsed()) {
      auto r = qfdiv::tvmax::dmax_tv_sdp(load_state(rho_path), load_state(sigma_path), g.tol);
      emit(qfdiv::io::sdp_json(r), g.output);
      return r.converged ? kExitOk : kExitNoConverge;
    }

    if (c_rev->parsed()) {
      auto rho = load_state(rho_path);
      auto sigma = load_state(sigma_path);
      const double rev_tol = g.tol_given ? g.tol : 1e-9;
      auto r = qfdiv::tvmax::reversibility_check(rho, sigma, rev_tol, rev_sdp);
      Json j = qfdiv::io::reversibility_json(r);
      j["sufficient_close"] = qfdiv::tvmax::sufficient_close(rho, sigma);
      j["sufficient_anticommutator"] = qfdiv::tvmax::sufficient_anticommutator(rho, sigma);
      j["tol"] = rev_tol;
      emit(j, g.output);
      return kExitOk;
    }

    if (c_pure->parsed()) {
      auto rho = load_state(rho_path);
      auto psi = qfdiv::io::parse_complex_csv(psi_csv);
      const double value = qfdiv::tvmax::dmax_tv_pure(rho, psi);
      const int d = static_cast<int>(psi.size());
      std::vector<qfdiv::matcore::Cmplx> outer(static_cast<size_t>(d) * d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          outer[static_cast<size_t>(i) * d + j] = psi[i] * std::conj(psi[j]);
      auto sigma = qfdiv::matcore::DensityMatrix::normalized(
          qfdiv::matcore::HermitianMatrix::from_entries(d, outer));
      auto sdp = qfdiv::tvmax::dmax_tv_sdp(rho, sigma, g.tol);
      const double diff = value - sdp.value;
      emit(Json{{"value", value},
                {"sdp_value", sdp.value},
                {"sdp_gap", sdp.gap},
                {"difference", diff},
                {"agreement", std::abs(diff) <= 1e-6},
                {"converged", sdp.converged},
                {"tol", sdp.tol}},
           g.output);
      return sdp.converged ? kExitOk : kExitNoConverge;
    }

    if (c_cp->parsed()) {
      const std::complex<double> c{cp_cre, cp_cim};
      auto closed = qfdiv::bloch::conjugate_pair_dmax(cp_a, cp_b, c);
      using qfdiv::matcore::Cmplx;
      std::vector<Cmplx> re{Cmplx(cp_a), std::conj(c), c, Cmplx(cp_b)};
      std::vector<Cmplx> se{Cmplx(cp_a), -std::conj(c), -c, Cmplx(cp_b)};
      auto rho = qfdiv::matcore::DensityMatrix::normalized(
          qfdiv::matcore::HermitianMatrix::from_entries(2, re));
      auto sigma = qfdiv::matcore::DensityMatrix::normalized(
          qfdiv::matcore::HermitianMatrix::from_entries(2, se));
      auto sdp = qfdiv::tvmax::dmax_tv_sdp(rho, sigma, g.tol);
      const double diff = closed.dmax - sdp.value;
      Json j = qfdiv::io::conjugate_pair_json(closed);
      j["sdp_value"] = sdp.value;
      j["sdp_gap"] = sdp.gap;
      j["difference"] = diff;
      j["agreement"] = std::abs(diff) <= 1e-6;
      j["trace_distance"] = 4.0 * std::abs(c);
      j["tol"] = sdp.tol;
      emit(j, g.output);
      return sdp.converged ? kExitOk : kExitNoConverge;
    }

    if (c_region->parsed()) {
      auto coords = qfdiv::io::parse_real_csv(bloch_csv);
      if (coords.size() != 3) throw ParseError("--bloch: expected exactly x,y,z");
      qfdiv::bloch::BlochVector v{coords[0], coords[1], coords[2]};
      const double analytic = qfdiv::bloch::region_volume_fraction_analytic(v);
      if (!csv_path.empty() && samples <= 0)
        throw ParseError("--csv requires a positive --samples");

      auto stream_rows = [&](std::ostream& os) {
        os << qfdiv::io::csv_header() << '\n';
        for (long long i = 0; i < samples; ++i) {
          auto pt = qfdiv::bloch::ball_point(g.seed, i);
          auto rep = qfdiv::bloch::spheroid_membership(v, pt);
          qfdiv::io::csv_row(os, i, pt, rep.s, rep.region != qfdiv::bloch::Region::outside);
        }
      };
      if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw ParseError("cannot open '" + csv_path + "' for writing");
        stream_rows(out);
      }
      if (g.output == "csv") {
        if (samples <= 0) throw ParseError("--output csv requires a positive --samples");
        stream_rows(std::cout);
        return kExitOk;
      }
      Json j{{"bloch", coords}, {"fraction_analytic", analytic}};
      if (samples > 0) {
        auto mc = qfdiv::bloch::region_volume_fraction_mc(v, samples, g.seed, exec);
        j["fraction_mc"] = mc.fraction;
        j["samples"] = mc.samples;
        j["seed"] = mc.seed;
        j["member_count"] = mc.member_count;
      }
      emit(j, g.output);
      return kExitOk;
    }

    if (c_scan->parsed()) {
      auto f = parse_f(f_spec);
      auto rep = qfdiv::qdiv::measurement_gap_scan(load_state(rho_path), load_state(sigma_path),
                                                   f, grid, exec);
      Json j = qfdiv::io::gap_scan_json(rep);
      j["f"] = f.name();
      emit(j, g.output);
      return kExitOk;
    }

    if (c_lemma->parsed()) {
      auto f = parse_f(f_spec);
      auto p = qfdiv::fdiv::ProbVector::strict(qfdiv::io::parse_real_csv(p_csv));
      auto q = qfdiv::fdiv::ProbVector::strict(qfdiv::io::parse_real_csv(q_csv));
      auto channel = qfdiv::io::channel_from_json(qfdiv::io::load_json_file(channel_path));
      auto rep = qfdiv::fdiv::lemma1_check(p, q, channel, f);
      Json j = qfdiv::io::lemma1_json(rep);
      j["f"] = f.name();
      emit(j, g.output);
      return kExitOk;
    }
  } catch (const qfdiv::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;  // unreachable: a subcommand is required
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
