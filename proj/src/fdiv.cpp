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

#include "qfdiv/fdiv.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qfdiv::fdiv {

ExtendedReal ExtendedReal::finite(double v) {
  if (!std::isfinite(v)) throw DomainError("ExtendedReal::finite on non-finite value");
  ExtendedReal e;
  e.v_ = v;
  return e;
}

double ExtendedReal::value() const {
  if (!finite_) throw DomainError("value() of +infinity");
  return v_;
}

std::string ExtendedReal::str() const {
  if (!finite_) return "inf";
  std::ostringstream os;
  os.precision(12);
  os << v_;
  return os.str();
}

namespace {

std::vector<double> checked_weights(std::vector<double> w) {
  for (double& v : w) {
    if (!std::isfinite(v)) throw DomainError("probability weight not finite");
    if (v < -1e-12) throw DomainError("negative probability weight " + std::to_string(v));
    if (v < 0.0) v = 0.0;
  }
  return w;
}

}  // namespace

ProbVector ProbVector::strict(std::vector<double> w) {
  w = checked_weights(std::move(w));
  double s = std::accumulate(w.begin(), w.end(), 0.0);
  if (std::abs(s - 1.0) > 1e-12)
    throw NotNormalized("probability vector sums to " + std::to_string(s));
  return ProbVector(std::move(w));
}

ProbVector ProbVector::subnormalized(std::vector<double> w) {
  return ProbVector(checked_weights(std::move(w)));
}

double ProbVector::sum() const { return std::accumulate(w_.begin(), w_.end(), 0.0); }

FDivFunction::FDivFunction(std::string name, std::function<double(double)> eval, double f_at_1,
                           ExtendedReal f_hat_0, bool strictly_convex, bool operator_convex)
    : name_(std::move(name)),
      eval_(std::move(eval)),
      f_at_1_(f_at_1),
      f_hat_0_(f_hat_0),
      strictly_convex_(strictly_convex),
      operator_convex_(operator_convex) {
  validate();
}

void FDivFunction::validate() const {
  if (std::abs(eval_(1.0) - f_at_1_) > 1e-12)
    throw InvalidFunction(name_ + ": declared f(1) does not match the evaluator");

  if (f_hat_0_.is_finite()) {
    // The declared slope at infinity must look like the actual limit:
    // deviation of f(r)/r from it shrinks along r = 1e3, 1e4, 1e5.
    double t = f_hat_0_.value();
    double d3 = std::abs(eval_(1e3) / 1e3 - t);
    double d4 = std::abs(eval_(1e4) / 1e4 - t);
    double d5 = std::abs(eval_(1e5) / 1e5 - t);
    if (d4 > d3 + 1e-15 || d5 > d4 + 1e-15)
      throw InvalidFunction(name_ + ": f(r)/r does not approach the declared f_hat(0)");
  }

  static const double grid[] = {0.05, 0.1, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 5.0, 10.0};
  for (double a : grid) {
    for (double b : grid) {
      if (a >= b) continue;
      double fa = eval_(a);
      double fb = eval_(b);
      double fm = eval_(0.5 * (a + b));
      if (!std::isfinite(fa) || !std::isfinite(fb) || !std::isfinite(fm))
        throw InvalidFunction(name_ + ": evaluator not finite on the check grid");
      double slack = 1e-12 * std::max({1.0, std::abs(fa), std::abs(fb)});
      if (fm > 0.5 * (fa + fb) + slack)
        throw InvalidFunction(name_ + ": midpoint convexity violated on the check grid");
    }
  }
}

FDivFunction FDivFunction::total_variation_f() {
  return FDivFunction(
      "tv", [](double r) { return std::abs(1.0 - r); }, 0.0, ExtendedReal::finite(1.0),
      /*strictly_convex=*/false, /*operator_convex=*/false);
}

FDivFunction FDivFunction::kl() {
  return FDivFunction(
      "kl", [](double r) { return r > 0.0 ? r * std::log(r) : 0.0; }, 0.0,
      ExtendedReal::infinity(),
      /*strictly_convex=*/true, /*operator_convex=*/true);
}

FDivFunction FDivFunction::renyi_alpha(double alpha) {
  if (!(alpha > -1.0 && alpha < 1.0) || alpha == 0.0)
    throw InvalidParameters("alpha must lie in (-1,0) or (0,1)");
  std::ostringstream nm;
  nm << "alpha:" << alpha;
  if (alpha > 0.0) {
    return FDivFunction(
        nm.str(), [alpha](double r) { return -std::pow(r, alpha); }, -1.0,
        ExtendedReal::finite(0.0), true, true);
  }
  // For alpha < 0 the evaluator diverges at r -> 0+; std::pow returns
  // +inf there, which f_divergence turns into a tagged infinite term.
  return FDivFunction(
      nm.str(), [alpha](double r) { return std::pow(r, alpha); }, 1.0, ExtendedReal::finite(0.0),
      true, true);
}

FDivFunction FDivFunction::custom(std::string name, std::function<double(double)> eval,
                                  double f_at_1, ExtendedReal f_hat_0, bool strictly_convex,
                                  bool operator_convex) {
  return FDivFunction(std::move(name), std::move(eval), f_at_1, f_hat_0, strictly_convex,
                      operator_convex);
}

ExtendedReal f_divergence(const ProbVector& p, const ProbVector& q, const FDivFunction& f) {
  if (p.size() != q.size()) throw LengthMismatch("f_divergence: vector lengths differ");
  double sum = 0.0;
  bool infinite = false;
  for (int x = 0; x < p.size(); ++x) {
    double px = p[x], qx = q[x];
    if (qx > 0.0) {
      double r = px / qx;
      double v = f.eval(r);
      if (!std::isfinite(v)) {
        if (r > 0.0) throw DomainError("f evaluated non-finite at ratio " + std::to_string(r));
        infinite = true;  // f(0+) = +infinity (e.g. r^alpha with alpha < 0)
        continue;
      }
      sum += qx * v;
    } else if (px > 0.0) {
      if (f.f_hat_0().is_finite())
        sum += px * f.f_hat_0().value();
      else
        infinite = true;
    }
    // px = qx = 0 contributes nothing.
  }
  return infinite ? ExtendedReal::infinity() : ExtendedReal::finite(sum);
}

double total_variation(const ProbVector& p, const ProbVector& q) {
  if (p.size() != q.size()) throw LengthMismatch("total_variation: vector lengths differ");
  double s = 0.0;
  for (int x = 0; x < p.size(); ++x) s += std::abs(p[x] - q[x]);
  return s;
}

namespace {

bool ratios_equal(const ExtendedReal& a, const ExtendedReal& b) {
  if (!a.is_finite() || !b.is_finite()) return a.is_finite() == b.is_finite();
  double x = a.value(), y = b.value();
  return std::abs(x - y) <= 1e-12 * std::max(std::abs(x), std::abs(y));
}

}  // namespace

RatioPartition ratio_partition(const ProbVector& p, const ProbVector& q) {
  if (p.size() != q.size()) throw LengthMismatch("ratio_partition: vector lengths differ");
  int n = p.size();
  RatioPartition out;
  out.class_of.assign(n, -1);

  std::vector<int> finite_idx;
  std::vector<int> inf_idx;
  for (int x = 0; x < n; ++x) {
    if (q[x] > 0.0) {
      finite_idx.push_back(x);
    } else {
      out.zero_set.push_back(x);
      if (p[x] > 0.0) inf_idx.push_back(x);
    }
  }

  std::sort(finite_idx.begin(), finite_idx.end(), [&](int a, int b) {
    double ra = p[a] / q[a], rb = p[b] / q[b];
    if (ra != rb) return ra < rb;
    return a < b;
  });

  for (int x : finite_idx) {
    double r = p[x] / q[x];
    if (!out.classes.empty() && out.classes.back().ratio.is_finite() &&
        ratios_equal(out.classes.back().ratio, ExtendedReal::finite(r))) {
      out.classes.back().indices.push_back(x);
    } else {
      out.classes.push_back({ExtendedReal::finite(r), {x}});
    }
    out.class_of[x] = static_cast<int>(out.classes.size()) - 1;
  }
  if (!inf_idx.empty()) {
    out.classes.push_back({ExtendedReal::infinity(), inf_idx});
    for (int x : inf_idx) out.class_of[x] = static_cast<int>(out.classes.size()) - 1;
  }
  return out;
}

ClassicalChannel ClassicalChannel::from_matrix(int out_dim, int in_dim,
                                               const std::vector<double>& row_major) {
  if (out_dim < 1 || in_dim < 1) throw DomainError("channel dimensions must be positive");
  if (static_cast<int>(row_major.size()) != out_dim * in_dim)
    throw LengthMismatch("channel entry list does not match out_dim*in_dim");
  for (double v : row_major) {
    if (!(v >= 0.0) || !std::isfinite(v))
      throw DomainError("channel entries must be finite and nonnegative");
  }
  for (int x = 0; x < in_dim; ++x) {
    double col = 0.0;
    for (int y = 0; y < out_dim; ++y) col += row_major[static_cast<size_t>(y) * in_dim + x];
    if (std::abs(col - 1.0) > 1e-12)
      throw NotNormalized("channel column " + std::to_string(x) + " sums to " +
                          std::to_string(col));
  }
  return ClassicalChannel(out_dim, in_dim, row_major);
}

ClassicalChannel ClassicalChannel::identity(int dim) {
  std::vector<double> a(static_cast<size_t>(dim) * dim, 0.0);
  for (int i = 0; i < dim; ++i) a[static_cast<size_t>(i) * dim + i] = 1.0;
  return from_matrix(dim, dim, a);
}

ProbVector channel_apply(const ClassicalChannel& P, const ProbVector& p) {
  if (P.in_dim() != p.size()) throw DimensionMismatch("channel_apply: input length mismatch");
  std::vector<double> out(static_cast<size_t>(P.out_dim()), 0.0);
  for (int y = 0; y < P.out_dim(); ++y)
    for (int x = 0; x < P.in_dim(); ++x) out[y] += P(y, x) * p[x];
  return ProbVector::subnormalized(std::move(out));
}

Lemma1Report lemma1_check(const ProbVector& p, const ProbVector& q, const ClassicalChannel& P,
                          const FDivFunction& f) {
  if (!f.strictly_convex()) throw NotStrictlyConvex(f.name() + " is not strictly convex");
  ExtendedReal din = f_divergence(p, q, f);
  if (!din.is_finite()) throw InfiniteDivergence("input divergence is infinite");

  ProbVector pp = channel_apply(P, p);
  ProbVector qq = channel_apply(P, q);
  ExtendedReal dout = f_divergence(pp, qq, f);
  if (!dout.is_finite()) throw InfiniteDivergence("output divergence is infinite");

  Lemma1Report rep;
  rep.divergence_in = din.value();
  rep.divergence_out = dout.value();
  rep.divergence_preserved = std::abs(rep.divergence_in - rep.divergence_out) <= 1e-10;

  RatioPartition in_part = ratio_partition(p, q);
  RatioPartition out_part = ratio_partition(pp, qq);
  for (int x = 0; x < p.size(); ++x) {
    if (in_part.class_of[x] < 0) continue;  // p_x = q_x = 0: no constraint
    const ExtendedReal& rx = in_part.classes[in_part.class_of[x]].ratio;
    for (int y = 0; y < pp.size(); ++y) {
      if (out_part.class_of[y] < 0) continue;
      const ExtendedReal& ry = out_part.classes[out_part.class_of[y]].ratio;
      if (!ratios_equal(rx, ry) && P(y, x) > 1e-12) rep.violations.emplace_back(x, y);
    }
  }
  rep.block_condition_holds = rep.violations.empty();
  rep.implication_holds = !rep.divergence_preserved || rep.block_condition_holds;
  return rep;
}

}  // namespace qfdiv::fdiv
