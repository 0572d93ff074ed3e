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

#ifndef QFDIV_FDIV_HPP
#define QFDIV_FDIV_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qfdiv/errors.hpp"

namespace qfdiv::fdiv {

/// Tagged finite-or-(+infinity) value. Divergences and f_hat(0) use this
/// instead of raw floating infinities so that the 0 * inf = 0 boundary
/// convention stays an explicit branch, never IEEE arithmetic.
class ExtendedReal {
public:
  ExtendedReal() : v_(0.0), finite_(true) {}

  static ExtendedReal finite(double v);
  static ExtendedReal infinity() {
    ExtendedReal e;
    e.finite_ = false;
    return e;
  }

  bool is_finite() const { return finite_; }

  /// Finite payload; throws DomainError when called on +infinity.
  double value() const;

  std::string str() const;

  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.v_ == b.v_;
  }

private:
  double v_;
  bool finite_;
};

/// Finite vector of nonnegative weights. `strict` requires the sum to be 1
/// within 1e-12; `subnormalized` only requires finite nonnegative entries.
/// Entries within 1e-12 below zero are clamped to zero (measurement outcome
/// probabilities carry that much rounding).
class ProbVector {
public:
  static ProbVector strict(std::vector<double> w);
  static ProbVector subnormalized(std::vector<double> w);

  int size() const { return static_cast<int>(w_.size()); }
  double operator[](int i) const { return w_[i]; }
  const std::vector<double>& weights() const { return w_; }
  double sum() const;

private:
  explicit ProbVector(std::vector<double> w) : w_(std::move(w)) {}
  std::vector<double> w_;
};

/// Descriptor of a convex f on (0, infinity) driving an f-divergence.
/// Construction validates the declared f_hat(0) tail (when finite) and
/// spot-checks midpoint convexity on a fixed grid; a failed check throws
/// InvalidFunction.
class FDivFunction {
public:
  /// f(r) = |1 - r|. f_hat(0) = 1. Convex but not strictly and not
  /// operator convex.
  static FDivFunction total_variation_f();

  /// f(r) = r ln r (0 at r = 0). f_hat(0) = +infinity. Strictly and
  /// operator convex.
  static FDivFunction kl();

  /// alpha in (0,1): f(r) = -r^alpha; alpha in (-1,0): f(r) = +r^alpha.
  /// Both have f_hat(0) = 0 and are strictly and operator convex.
  static FDivFunction renyi_alpha(double alpha);

  /// User-supplied f with caller-asserted convexity flags; still runs the
  /// construction-time validation.
  static FDivFunction custom(std::string name, std::function<double(double)> eval, double f_at_1,
                             ExtendedReal f_hat_0, bool strictly_convex, bool operator_convex);

  const std::string& name() const { return name_; }

  /// Pointwise value; defined on [0, infinity) with the r = 0 endpoint
  /// taken as the right limit (may be IEEE +inf, which callers must branch
  /// on before any accumulation).
  double eval(double r) const { return eval_(r); }

  double f_at_1() const { return f_at_1_; }
  ExtendedReal f_hat_0() const { return f_hat_0_; }
  bool strictly_convex() const { return strictly_convex_; }
  bool operator_convex() const { return operator_convex_; }

private:
  FDivFunction(std::string name, std::function<double(double)> eval, double f_at_1,
               ExtendedReal f_hat_0, bool strictly_convex, bool operator_convex);
  void validate() const;

  std::string name_;
  std::function<double(double)> eval_;
  double f_at_1_;
  ExtendedReal f_hat_0_;
  bool strictly_convex_;
  bool operator_convex_;
};

/// Indices grouped by likelihood ratio r_x = p_x / q_x, with the q_x = 0
/// bookkeeping: zero_set lists all x with q_x = 0; those with p_x > 0 form
/// the +infinity class; those with p_x = q_x = 0 belong to no class.
struct RatioClass {
  ExtendedReal ratio;
  std::vector<int> indices;
};

struct RatioPartition {
  std::vector<RatioClass> classes;  // finite ratios ascending, infinity last
  std::vector<int> zero_set;
  std::vector<int> class_of;  // per index: class id, or -1 when p_x = q_x = 0
};

/// Column-stochastic transition matrix P(y|x), shape out_dim x in_dim.
class ClassicalChannel {
public:
  static ClassicalChannel from_matrix(int out_dim, int in_dim, const std::vector<double>& row_major);
  static ClassicalChannel identity(int dim);

  int in_dim() const { return in_; }
  int out_dim() const { return out_; }
  double operator()(int y, int x) const { return a_[static_cast<size_t>(y) * in_ + x]; }

private:
  ClassicalChannel(int out_dim, int in_dim, std::vector<double> a)
      : out_(out_dim), in_(in_dim), a_(std::move(a)) {}
  int out_, in_;
  std::vector<double> a_;
};

struct Lemma1Report {
  bool divergence_preserved = false;
  bool block_condition_holds = false;
  bool implication_holds = false;  // preserved implies blocks
  std::vector<std::pair<int, int>> violations;  // (x, y) with cross-class leakage
  double divergence_in = 0.0;
  double divergence_out = 0.0;
};

// -- Operations --------------------------------------------------------------

/// D_f(p||q) = sum_x q_x f(p_x/q_x), with the q_x = 0 convention: the term
/// is p_x * f_hat(0), and 0 when additionally p_x = 0.
ExtendedReal f_divergence(const ProbVector& p, const ProbVector& q, const FDivFunction& f);

/// sum_x |p_x - q_x|, in [0, 2] for probability vectors.
double total_variation(const ProbVector& p, const ProbVector& q);

/// Groups indices by ratio with relative tolerance 1e-12.
RatioPartition ratio_partition(const ProbVector& p, const ProbVector& q);

/// p'_y = sum_x P(y|x) p_x. Preserves the total weight.
ProbVector channel_apply(const ClassicalChannel& P, const ProbVector& p);

/// Checks whether P preserves D_f(p||q) and whether P is block diagonal
/// with respect to the ratio classes (P(y|x) = 0 whenever the class of x
/// differs from the class of y under the output pair). Requires strictly
/// convex f and finite input divergence.
Lemma1Report lemma1_check(const ProbVector& p, const ProbVector& q, const ClassicalChannel& P,
                          const FDivFunction& f);

}  // namespace qfdiv::fdiv

#endif  // QFDIV_FDIV_HPP
