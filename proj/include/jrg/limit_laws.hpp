// Copyright 2026 The jrg Authors.
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

// Asymptotic regimes of the pair Jaccard index J and of the all-pairs
// average J_n along a family p = p(n), the matching standardizations, and
// the reference laws they converge to.
//
//   np^2(1-p) -> inf   sqrt(n(2-p)^3 / (2(1-p))) (J - p/(2-p))  ->  N(0,1)
//   np^2 -> lambda     2npJ                                     ->  Poi(lambda)
//   np^2 -> 0          npJ                                      ->  0
//   n(1-p) -> c        n(1-J)                                   ->  Poi(2c)
//   n(1-p) -> 0        n(1-J)                                   ->  0
//
// and, when np -> inf and n^2(1-p) -> inf,
//   n(2-p)^2 / sqrt(8p(1-p)) (J_n - p/(2-p))  ->  N(0,1).

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

namespace jrg {

enum class FamilyForm { kConstant, kPowerLaw, kDenseComplement };

// p(n) = p0, c n^-gamma, or 1 - c n^-gamma.
struct ProbabilityFamily {
  FamilyForm form = FamilyForm::kConstant;
  double c = 0.0;      // p0 for kConstant
  double gamma = 0.0;  // unused for kConstant

  static ProbabilityFamily constant(double p0) { return {FamilyForm::kConstant, p0, 0.0}; }
  static ProbabilityFamily power_law(double c, double gamma) {
    return {FamilyForm::kPowerLaw, c, gamma};
  }
  static ProbabilityFamily dense_complement(double c, double gamma) {
    return {FamilyForm::kDenseComplement, c, gamma};
  }

  // Unclamped p(n).
  double evaluate(double n) const noexcept;

  // Smallest n >= 2 from which p(n) stays inside (0,1). ParameterError if
  // there is none.
  std::uint64_t n_min() const;

  // "const:<p>", "pow:<c>:<gamma>", "dense:<c>:<gamma>".
  static ProbabilityFamily parse(std::string_view spec);
  std::string to_string() const;
};

// Limit of a quantity behaving like coefficient * n^exponent.
struct Asymptote {
  double coefficient = 0.0;
  double exponent = 0.0;

  enum class Limit { kZero, kFinite, kInfinite };
  Limit limit() const noexcept {
    if (coefficient == 0.0 || exponent < 0.0) return Limit::kZero;
    return exponent > 0.0 ? Limit::kInfinite : Limit::kFinite;
  }
  double finite_value() const noexcept { return coefficient; }
};

// Leading-order behaviour of the quantities that decide the regime.
struct FamilyLimits {
  Asymptote np2;
  Asymptote np2_q;  // n p^2 (1-p)
  Asymptote nq;     // n (1-p)
  Asymptote np;
  Asymptote n2q;    // n^2 (1-p)
};

// Computed from the family's coefficients and exponents, never numerically.
FamilyLimits family_limits(const ProbabilityFamily& family);

enum class PairRegime {
  kPairNormal,
  kPairPoisson,   // limit_param = lambda = lim np^2
  kPairZero,
  kDensePoisson,  // limit_param = c = lim n(1-p); limit law Poi(2c)
  kDenseZero,
  kUnclassified,
};

std::string_view to_string(PairRegime r) noexcept;

struct RegimeClass {
  PairRegime pair_regime = PairRegime::kUnclassified;
  bool avg_clt_applies = false;
  double limit_param = 0.0;

  // Mean of the limiting Poisson law (lambda or 2c), 0 for the degenerate
  // regimes, unused for kPairNormal.
  double poisson_mean() const noexcept;
};

// ParameterError if the family leaves (0,1) for all large n.
RegimeClass classify(const ProbabilityFamily& family);

// Regime implied by one (n, p) point, for runs not tied to a family. Uses
// lambda = np^2 and c = n(1-p): c <= 20 picks a dense regime (DenseZero if
// c < 0.05), else lambda <= 20 picks a sparse Poisson/zero regime, else
// PairNormal. avg_clt_applies is set when np >= 20 and n^2(1-p) >= 20.
RegimeClass regime_at_point(std::uint64_t n, double p);

// Statistic whose law converges under `regime` (see table above).
// ParameterError for kPairNormal with p in {0,1} or kUnclassified.
double standardize_pair(double j, std::uint64_t n, double p, const RegimeClass& regime);

// ParameterError for p outside (0,1).
double standardize_average(double j_avg, std::uint64_t n, double p);

// Characteristic function of -V for V = (2-p) I I' - p (I or I'):
//   p^2 e^{-2it(1-p)} + 2p(1-p) e^{itp} + (1-p)^2.
std::complex<double> cf_negV(double t, double p) noexcept;

// exp(2c (e^{it} - it - 1)), the characteristic function of Poi(2c) - 2c.
std::complex<double> cf_poisson_limit(double t, double c) noexcept;

// Standard normal CDF, 0.5 erfc(-x / sqrt 2).
double normal_cdf(double x) noexcept;

// ParameterError for lambda <= 0.
double poisson_pmf(std::uint64_t k, double lambda);

}  // namespace jrg
