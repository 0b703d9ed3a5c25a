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

// Binomial and Poisson probability mass functions using Loader's saddle
// point expansion ("Fast and accurate computation of binomial
// probabilities", 2000). Relative error stays near machine precision far
// out in n, unlike exp(lgamma(...)) which loses digits to cancellation.
//
// Also: full-support binomial expectations with a certified truncation
// bound, and an exact binomial sampler.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "jrg/rng.hpp"
#include "jrg/summation.hpp"

namespace jrg {

// log(n!) - log(sqrt(2 pi n) (n/e)^n), for integer n >= 0 (0 at n = 0 by
// convention of the callers).
double stirling_error(std::uint64_t n) noexcept;

// Deviance term  x log(x/np) + np - x, accurate when x is close to np.
double binomial_deviance(double x, double np) noexcept;

// log(n!) without lgamma (lgamma writes the global signgam and is not
// thread-safe in glibc).
double log_factorial(std::uint64_t n) noexcept;

// C(n,m) q^m (1-q)^(n-m). Requires m <= n and q in [0,1]; callers that
// accept user input use binom_pmf in moments.hpp which validates.
double binomial_pmf_raw(std::uint64_t n, double q, std::uint64_t m) noexcept;

// e^-lambda lambda^k / k!, lambda >= 0.
double poisson_pmf_raw(std::uint64_t k, double lambda) noexcept;

struct BinomialExpectation {
  double value = 0.0;
  // Upper bound on the probability mass of the support points skipped.
  double truncated_mass = 0.0;
};

// Truncate a tail once the remaining mass is certified below this.
inline constexpr double kTailMassCutoff = 1e-17;

// E[f(X)] for X ~ Bin(n, q), accumulated with compensated summation.
// Starts at the mode and walks outward with the pmf ratio recurrence; a
// tail is dropped once the geometric bound pmf * r / (1 - r) on its mass
// (valid because the ratio r is monotone past the mode) is below
// kTailMassCutoff. `f` must be bounded on the support for the recorded
// bound to be meaningful.
template <class F>
BinomialExpectation binomial_expectation(std::uint64_t n, double q, F&& f) {
  BinomialExpectation out;
  if (q <= 0.0) {
    out.value = f(std::uint64_t{0});
    return out;
  }
  if (q >= 1.0) {
    out.value = f(n);
    return out;
  }
  const double odds = q / (1.0 - q);
  const auto mode = static_cast<std::uint64_t>(
      std::min(static_cast<double>(n), std::floor((static_cast<double>(n) + 1.0) * q)));
  const double pmf_mode = binomial_pmf_raw(n, q, mode);

  CompensatedSum sum;
  sum += pmf_mode * f(mode);

  // Upward: pmf(m+1) = pmf(m) * (n-m)/(m+1) * odds.
  double pmf = pmf_mode;
  for (std::uint64_t m = mode; m < n; ++m) {
    const double ratio = static_cast<double>(n - m) / static_cast<double>(m + 1) * odds;
    pmf *= ratio;
    sum += pmf * f(m + 1);
    const double next_ratio =
        static_cast<double>(n - m - 1) / static_cast<double>(m + 2) * odds;
    if (next_ratio < 1.0) {
      const double tail = pmf * next_ratio / (1.0 - next_ratio);
      if (tail < kTailMassCutoff) {
        out.truncated_mass += tail;
        break;
      }
    }
  }
  // Downward: pmf(m-1) = pmf(m) * m/(n-m+1) / odds.
  pmf = pmf_mode;
  for (std::uint64_t m = mode; m > 0; --m) {
    const double ratio = static_cast<double>(m) / static_cast<double>(n - m + 1) / odds;
    pmf *= ratio;
    sum += pmf * f(m - 1);
    if (m >= 2) {
      const double next_ratio =
          static_cast<double>(m - 1) / static_cast<double>(n - m + 2) / odds;
      if (next_ratio < 1.0) {
        const double tail = pmf * next_ratio / (1.0 - next_ratio);
        if (tail < kTailMassCutoff) {
          out.truncated_mass += tail;
          break;
        }
      }
    }
  }
  out.value = sum.value();
  return out;
}

// Exact Bin(n, q) variate. Inversion by sequential search when
// n * min(q, 1-q) <= kBinomialInversionLimit, otherwise Hormann's BTRS
// transformed rejection with squeeze ("The generation of binomial random
// variates", 1993). Both are exact in distribution.
inline constexpr double kBinomialInversionLimit = 30.0;
std::uint64_t sample_binomial(std::uint64_t n, double q, CounterRng& rng) noexcept;

}  // namespace jrg
