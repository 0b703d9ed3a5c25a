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

#include "jrg/binomial.hpp"

#include <algorithm>
#include <array>
#include <numbers>

namespace jrg {
namespace {

// stirling_error(n) for n = 0..15, from 40-digit evaluation.
constexpr std::array<double, 16> kStirlingErrorSmall = {
    0.0,
    0.08106146679532725821967026,
    0.04134069595540929409382208,
    0.02767792568499833914878929,
    0.02079067210376509311152277,
    0.01664469118982119216319487,
    0.01387612882307074799874573,
    0.01189670994589177009505572,
    0.01041126526197209649747857,
    0.009255462182712732917728637,
    0.008330563433362871256469319,
    0.007573675487951840794972024,
    0.006942840107209529865664153,
    0.006408994188004207068439631,
    0.005951370112758847735624416,
    0.00555473355196280137103869,
};

constexpr double kLog2Pi = 1.837877066409345483560659472811;  // log(2 pi)

}  // namespace

double stirling_error(std::uint64_t n) noexcept {
  if (n < kStirlingErrorSmall.size()) return kStirlingErrorSmall[n];
  constexpr double s0 = 1.0 / 12.0;
  constexpr double s1 = 1.0 / 360.0;
  constexpr double s2 = 1.0 / 1260.0;
  constexpr double s3 = 1.0 / 1680.0;
  constexpr double s4 = 1.0 / 1188.0;
  const double x = static_cast<double>(n);
  const double xx = x * x;
  if (n > 500) return (s0 - s1 / xx) / x;
  if (n > 80) return (s0 - (s1 - s2 / xx) / xx) / x;
  if (n > 35) return (s0 - (s1 - (s2 - s3 / xx) / xx) / xx) / x;
  return (s0 - (s1 - (s2 - (s3 - s4 / xx) / xx) / xx) / xx) / x;
}

double binomial_deviance(double x, double np) noexcept {
  if (std::fabs(x - np) < 0.1 * (x + np)) {
    double v = (x - np) / (x + np);
    double s = (x - np) * v;
    double ej = 2.0 * x * v;
    v *= v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v;
      const double next = s + ej / (2 * j + 1);
      if (next == s) return next;
      s = next;
    }
    return s;
  }
  return x * std::log(x / np) + np - x;
}

double log_factorial(std::uint64_t n) noexcept {
  if (n < 2) return 0.0;
  const double x = static_cast<double>(n);
  return stirling_error(n) + 0.5 * (kLog2Pi + std::log(x)) + x * (std::log(x) - 1.0);
}

double binomial_pmf_raw(std::uint64_t n, double q, std::uint64_t m) noexcept {
  const double p_fail = 1.0 - q;
  if (q == 0.0) return m == 0 ? 1.0 : 0.0;
  if (p_fail == 0.0) return m == n ? 1.0 : 0.0;
  const double nd = static_cast<double>(n);
  if (m == 0) {
    if (n == 0) return 1.0;
    const double lc = q < 0.1 ? -binomial_deviance(nd, nd * p_fail) - nd * q
                              : nd * std::log(p_fail);
    return std::exp(lc);
  }
  if (m == n) {
    const double lc = p_fail < 0.1 ? -binomial_deviance(nd, nd * q) - nd * p_fail
                                   : nd * std::log(q);
    return std::exp(lc);
  }
  const double md = static_cast<double>(m);
  const double lc = stirling_error(n) - stirling_error(m) - stirling_error(n - m) -
                    binomial_deviance(md, nd * q) -
                    binomial_deviance(nd - md, nd * p_fail);
  // 2 pi m (n-m)/n
  const double lf = kLog2Pi + std::log(md) + std::log1p(-md / nd);
  return std::exp(lc - 0.5 * lf);
}

double poisson_pmf_raw(std::uint64_t k, double lambda) noexcept {
  if (lambda == 0.0) return k == 0 ? 1.0 : 0.0;
  if (k == 0) return std::exp(-lambda);
  const double x = static_cast<double>(k);
  return std::exp(-stirling_error(k) - binomial_deviance(x, lambda)) /
         std::sqrt(2.0 * std::numbers::pi * x);
}

namespace {

std::uint64_t binomial_inversion(std::uint64_t n, double q, CounterRng& rng) noexcept {
  const double odds = q / (1.0 - q);
  const double u = rng.uniform();
  double pmf = std::exp(static_cast<double>(n) * std::log1p(-q));
  double cdf = pmf;
  std::uint64_t k = 0;
  while (cdf <= u && k < n) {
    pmf *= static_cast<double>(n - k) / static_cast<double>(k + 1) * odds;
    ++k;
    cdf += pmf;
    // Rounding left the cdf short of u deep in the upper tail.
    if (pmf == 0.0) break;
  }
  return k;
}

// BTRS, valid for n q >= 10 and q <= 1/2.
std::uint64_t binomial_btrs(std::uint64_t n, double q, CounterRng& rng) noexcept {
  const double nd = static_cast<double>(n);
  const double spq = std::sqrt(nd * q * (1.0 - q));
  const double b = 1.15 + 2.53 * spq;
  const double a = -0.0873 + 0.0248 * b + 0.01 * q;
  const double c = nd * q + 0.5;
  const double v_r = 0.92 - 4.2 / b;
  const double alpha = (2.83 + 5.1 / b) * spq;
  const double log_odds = std::log(q / (1.0 - q));
  const auto m = static_cast<std::uint64_t>(std::floor((nd + 1.0) * q));
  const double h = log_factorial(m) + log_factorial(n - m);

  for (;;) {
    const double u = rng.uniform() - 0.5;
    double v = rng.uniform_pos();
    const double us = 0.5 - std::fabs(u);
    const double kd = std::floor((2.0 * a / us + b) * u + c);
    if (kd < 0.0 || kd > nd) continue;
    const auto k = static_cast<std::uint64_t>(kd);
    if (us >= 0.07 && v <= v_r) return k;
    v = std::log(v * alpha / (a / (us * us) + b));
    const double log_ratio = h - log_factorial(k) - log_factorial(n - k) +
                             (kd - static_cast<double>(m)) * log_odds;
    if (v <= log_ratio) return k;
  }
}

}  // namespace

std::uint64_t sample_binomial(std::uint64_t n, double q, CounterRng& rng) noexcept {
  if (n == 0 || q <= 0.0) return 0;
  if (q >= 1.0) return n;
  const bool flip = q > 0.5;
  const double r = flip ? 1.0 - q : q;
  const std::uint64_t k = static_cast<double>(n) * r <= kBinomialInversionLimit
                              ? binomial_inversion(n, r, rng)
                              : binomial_btrs(n, r, rng);
  return flip ? n - k : k;
}

}  // namespace jrg
