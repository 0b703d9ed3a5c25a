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

// Exact and asymptotic moments of the pair Jaccard index in G(n, p).
//
// Given T = m > 0, S ~ Bin(m, p/(2-p)), so E[J | T] = p/(2-p) and by the
// law of total variance
//   Var J = 2p(1-p)/(2-p)^2 * E[1/T; T > 0],   T ~ Bin(n-2, p(2-p)).

#pragma once

#include <cstdint>

namespace jrg {

// A value that collapses to a known constant at a parameter boundary.
struct Flagged {
  double value = 0.0;
  bool degenerate = false;
};

constexpr double mean_jaccard(double p) noexcept { return p / (2.0 - p); }

constexpr double conditional_mean_s(std::uint64_t m, double p) noexcept {
  return static_cast<double>(m) * p / (2.0 - p);
}

constexpr double conditional_var_s(std::uint64_t m, double p) noexcept {
  return 2.0 * static_cast<double>(m) * p * (1.0 - p) / ((2.0 - p) * (2.0 - p));
}

// C(n,m) q^m (1-q)^(n-m); ParameterError if m > n or q outside [0,1].
double binom_pmf(std::uint64_t n, double q, std::uint64_t m);

struct InverseMoment {
  double value = 0.0;          // sum_{m>=1} P(X=m)/m, X ~ Bin(n, q)
  double asymptotic = 0.0;     // 1/(n q)
  double relative_gap = 0.0;   // |value - asymptotic| / value
  double truncated_mass = 0.0;
  bool degenerate = false;     // q == 0: empty sum
};

// ParameterError if n == 0 or q outside [0,1].
InverseMoment inverse_first_moment_positive(std::uint64_t n, double q);

// Var J for n >= 3. Degenerate (value 0) at p in {0, 1}.
Flagged var_jaccard_exact(std::uint64_t n, double p);

// 2(1-p) / (n (2-p)^3); n >= 3, p in (0,1].
double var_jaccard_asymptotic(std::uint64_t n, double p);

struct MomentReport {
  std::uint64_t n = 0;
  double p = 0.0;
  double mean = 0.0;
  double var_exact = 0.0;
  double var_asymptotic = 0.0;
  double relative_gap = 0.0;  // |exact - asymptotic| / exact, 0 if degenerate
  bool degenerate = false;
};

// p in [0,1], n >= 3. J is constant at p = 0 and p = 1; both variances are
// then reported as 0 and the report is flagged degenerate.
MomentReport moment_report(std::uint64_t n, double p);

// E[((n+a)p / (b+X) - 1)^2], X ~ Bin(n, p). n >= 1, p in (0,1], a >= 0, b > 0.
double lemma1_quantity(std::uint64_t n, double p, double a, double b);

// E[(b+X)^-alpha], X ~ Bin(n, p). n >= 1, p in (0,1], b > 0, alpha > 0.
double lemma2_quantity(std::uint64_t n, double p, double b, double alpha);

}  // namespace jrg
