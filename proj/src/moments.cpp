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

#include "jrg/moments.hpp"

#include <cmath>
#include <string>

#include "jrg/binomial.hpp"
#include "jrg/errors.hpp"

namespace jrg {
namespace {

void require_unit_interval(double q, const char* name) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw ParameterError(std::string(name) + " must lie in [0,1]");
  }
}

void require_open_closed(double p) {
  if (!(p > 0.0 && p <= 1.0)) throw ParameterError("p must lie in (0,1]");
}

}  // namespace

double binom_pmf(std::uint64_t n, double q, std::uint64_t m) {
  require_unit_interval(q, "q");
  if (m > n) {
    throw ParameterError("binomial support is [0," + std::to_string(n) + "], got m=" +
                         std::to_string(m));
  }
  return binomial_pmf_raw(n, q, m);
}

InverseMoment inverse_first_moment_positive(std::uint64_t n, double q) {
  if (n == 0) throw ParameterError("inverse moment needs n >= 1");
  require_unit_interval(q, "q");
  InverseMoment out;
  if (q == 0.0) {
    out.degenerate = true;
    return out;
  }
  const auto e = binomial_expectation(n, q, [](std::uint64_t m) {
    return m == 0 ? 0.0 : 1.0 / static_cast<double>(m);
  });
  out.value = e.value;
  out.truncated_mass = e.truncated_mass;
  out.asymptotic = 1.0 / (static_cast<double>(n) * q);
  out.relative_gap = std::fabs(out.value - out.asymptotic) / out.value;
  return out;
}

Flagged var_jaccard_exact(std::uint64_t n, double p) {
  if (n < 3) throw ParameterError("variance of J needs n >= 3");
  require_unit_interval(p, "p");
  if (p == 0.0 || p == 1.0) return {0.0, true};
  const double q = 2.0 - p;
  const auto inv = inverse_first_moment_positive(n - 2, p * q);
  return {2.0 * p * (1.0 - p) / (q * q) * inv.value, false};
}

double var_jaccard_asymptotic(std::uint64_t n, double p) {
  if (n < 3) throw ParameterError("variance of J needs n >= 3");
  require_open_closed(p);
  const double q = 2.0 - p;
  return 2.0 * (1.0 - p) / (static_cast<double>(n) * q * q * q);
}

MomentReport moment_report(std::uint64_t n, double p) {
  MomentReport r;
  r.n = n;
  r.p = p;
  const Flagged exact = var_jaccard_exact(n, p);
  r.mean = mean_jaccard(p);
  r.degenerate = exact.degenerate;
  if (exact.degenerate) return r;
  r.var_exact = exact.value;
  r.var_asymptotic = var_jaccard_asymptotic(n, p);
  r.relative_gap = std::fabs(r.var_exact - r.var_asymptotic) / r.var_exact;
  return r;
}

double lemma1_quantity(std::uint64_t n, double p, double a, double b) {
  if (n == 0) throw ParameterError("lemma quantity needs n >= 1");
  require_open_closed(p);
  if (!(a >= 0.0)) throw ParameterError("a must be >= 0");
  if (!(b > 0.0)) throw ParameterError("b must be > 0");
  const double scale = (static_cast<double>(n) + a) * p;
  return binomial_expectation(n, p, [&](std::uint64_t m) {
           const double d = scale / (b + static_cast<double>(m)) - 1.0;
           return d * d;
         }).value;
}

double lemma2_quantity(std::uint64_t n, double p, double b, double alpha) {
  if (n == 0) throw ParameterError("lemma quantity needs n >= 1");
  require_open_closed(p);
  if (!(b > 0.0)) throw ParameterError("b must be > 0");
  if (!(alpha > 0.0)) throw ParameterError("alpha must be > 0");
  return binomial_expectation(n, p, [&](std::uint64_t m) {
           return std::pow(b + static_cast<double>(m), -alpha);
         }).value;
}

}  // namespace jrg
