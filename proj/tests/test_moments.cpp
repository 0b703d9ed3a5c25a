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


#include <cmath>

#include "doctest.h"
#include "jrg/errors.hpp"
#include "jrg/moments.hpp"
#include "jrg/tolerances.hpp"
#include "oracles.hpp"

using namespace jrg;
using doctest::Approx;

namespace {
const ToleranceTable kTol = ToleranceTable::defaults();
}

TEST_CASE("mean_jaccard") {
  CHECK(mean_jaccard(0.0) == 0.0);
  CHECK(mean_jaccard(1.0) == 1.0);
  CHECK(mean_jaccard(0.5) == Approx(1.0 / 3.0).epsilon(1e-15));
  double prev = -1.0;
  for (int k = 0; k <= 1000; ++k) {
    const double v = mean_jaccard(k / 1000.0);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("conditional moments of S given T") {
  CHECK(conditional_mean_s(0, 0.3) == 0.0);
  CHECK(conditional_var_s(0, 0.3) == 0.0);
  CHECK(conditional_mean_s(2, 0.5) == Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(conditional_var_s(2, 0.5) == Approx(4.0 / 9.0).epsilon(1e-15));
}

TEST_CASE("binom_pmf") {
  CHECK(binom_pmf(2, 0.5, 1) == Approx(0.5).epsilon(1e-15));
  CHECK(binom_pmf(17, 0.0, 0) == 1.0);
  CHECK(binom_pmf(10, 0.3, 3) == Approx(0.266827932).epsilon(1e-14));
  CHECK_THROWS_AS(binom_pmf(3, 0.5, 4), ParameterError);
  CHECK_THROWS_AS(binom_pmf(3, 1.5, 1), ParameterError);
}

TEST_CASE("inverse_first_moment_positive") {
  CHECK(inverse_first_moment_positive(2, 0.5).value == Approx(0.625).epsilon(1e-15));
  CHECK(inverse_first_moment_positive(1, 1.0).value == 1.0);
  const InverseMoment big = inverse_first_moment_positive(10000, 0.5);
  CHECK(big.value == Approx(0.00020002000600260150108).epsilon(1e-12));
  CHECK(std::abs(big.value - 2.0e-4) <= 0.01 * 2.0e-4);
  CHECK(big.asymptotic == Approx(2.0e-4).epsilon(1e-15));

  const InverseMoment zero = inverse_first_moment_positive(10, 0.0);
  CHECK(zero.degenerate);
  CHECK(zero.value == 0.0);
  CHECK_THROWS_AS(inverse_first_moment_positive(0, 0.5), ParameterError);
}

TEST_CASE("inverse moment approaches 1/(nq)") {
  for (double nq : {1e2, 1e3, 1e4}) {
    for (double q : {0.05, 0.5}) {
      const auto n = static_cast<std::uint64_t>(nq / q);
      const double v = inverse_first_moment_positive(n, q).value;
      CAPTURE(nq);
      CHECK(std::abs(nq * v - 1.0) <= 3.0 / nq * kTol.inverse_moment_slack);
    }
  }
}

TEST_CASE("var_jaccard_exact examples") {
  CHECK(var_jaccard_exact(3, 0.5).value == Approx(1.0 / 6.0).epsilon(1e-14));
  const Flagged one = var_jaccard_exact(50, 1.0);
  CHECK(one.value == 0.0);
  CHECK(one.degenerate);
  CHECK(var_jaccard_exact(50, 0.0).degenerate);
  const double exact = var_jaccard_exact(1000, 0.2).value;
  const double asym = var_jaccard_asymptotic(1000, 0.2);
  CHECK(std::abs(exact / asym - 1.0) <= 3.0 / (1000 * 0.2));
  CHECK(exact == Approx(0.00027539015671806817598).epsilon(1e-11));
  CHECK(var_jaccard_exact(10000, 0.2).value ==
        Approx(0.000027445211797230206721).epsilon(1e-11));
  CHECK_THROWS_AS(var_jaccard_exact(2, 0.5), ParameterError);
}

TEST_CASE("var_jaccard_exact equals exhaustive enumeration") {
  for (std::uint64_t n : {3, 4, 5, 6}) {
    for (double p : {0.2, 0.5, 0.8}) {
      const auto e = oracle::enumerate_pair(n, p);
      CAPTURE(n);
      CAPTURE(p);
      CHECK(std::abs(e.mean - mean_jaccard(p)) <= kTol.enumeration_abs_tol);
      CHECK(std::abs(var_jaccard_exact(n, p).value - e.variance) <= kTol.enumeration_abs_tol);
      CHECK(var_jaccard_exact(n, p).value > 0.0);
    }
  }
}

TEST_CASE("var_jaccard_asymptotic") {
  CHECK(var_jaccard_asymptotic(100, 1.0) == 0.0);
  CHECK(var_jaccard_asymptotic(1000, 0.5) == Approx(1.0 / 3375.0).epsilon(1e-15));
  CHECK(var_jaccard_asymptotic(2000, 0.5) ==
        Approx(0.5 * var_jaccard_asymptotic(1000, 0.5)).epsilon(1e-15));
  CHECK_THROWS_AS(var_jaccard_asymptotic(100, 0.0), ParameterError);
}

TEST_CASE("exact over asymptotic variance tends to 1") {
  for (double p : {0.01, 0.2, 0.6, 0.95}) {
    for (double np : {100.0, 1000.0, 10000.0}) {
      const auto n = static_cast<std::uint64_t>(np / p);
      const double ratio = var_jaccard_exact(n, p).value / var_jaccard_asymptotic(n, p);
      CAPTURE(p);
      CAPTURE(np);
      CHECK(std::abs(ratio - 1.0) <= 3.0 / np * kTol.variance_ratio_slack);
    }
  }
}

TEST_CASE("moment_report") {
  const MomentReport r = moment_report(1000, 0.5);
  CHECK(r.mean == Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(r.var_asymptotic == Approx(2.963e-4).epsilon(1e-3));
  CHECK(r.relative_gap == Approx(std::abs(r.var_exact - r.var_asymptotic) / r.var_exact));
  CHECK_FALSE(r.degenerate);

  const MomentReport one = moment_report(10, 1.0);
  CHECK(one.mean == 1.0);
  CHECK(one.var_exact == 0.0);
  CHECK(one.var_asymptotic == 0.0);
  CHECK(one.degenerate);

  CHECK(moment_report(3, 0.5).var_exact == Approx(1.0 / 6.0).epsilon(1e-14));
}

TEST_CASE("lemma1_quantity") {
  CHECK(lemma1_quantity(1, 0.5, 0, 1) == Approx(0.40625).epsilon(1e-15));
  CHECK(lemma1_quantity(1, 1.0, 0, 1) == Approx(0.25).epsilon(1e-15));
  CHECK(lemma1_quantity(1000, 0.1, 0, 1) == Approx(0.0091494073356993280873).epsilon(1e-11));
  CHECK(lemma1_quantity(37, 0.3, 1.5, 2) == Approx(0.055462410137653138826).epsilon(1e-12));
  for (double np : {1e2, 1e3, 1e4}) {
    const auto n = static_cast<std::uint64_t>(np / 0.1);
    CHECK(np * lemma1_quantity(n, 0.1, 0, 1) <= kTol.lemma1_bound);
  }
  CHECK_THROWS_AS(lemma1_quantity(10, 0.5, 0, 0), ParameterError);
  CHECK_THROWS_AS(lemma1_quantity(10, 0.5, -1, 1), ParameterError);
}

TEST_CASE("lemma2_quantity") {
  CHECK(lemma2_quantity(1, 0.5, 1, 1) == Approx(0.75).epsilon(1e-15));
  CHECK(lemma2_quantity(1, 1.0, 1, 2) == Approx(0.25).epsilon(1e-15));
  CHECK(lemma2_quantity(1000, 0.1, 1, 2) == Approx(0.00010071514053376973301).epsilon(1e-11));
  CHECK(lemma2_quantity(37, 0.3, 2.5, 1.5) == Approx(0.021757539307131007141).epsilon(1e-12));
  for (double alpha : {1.0, 2.0}) {
    const double np = 1e4;
    CHECK(std::abs(std::pow(np, alpha) * lemma2_quantity(100000, 0.1, 1, alpha) - 1.0) <=
          kTol.lemma2_rel_tol);
  }
  CHECK_THROWS_AS(lemma2_quantity(10, 0.5, 0, 1), ParameterError);
  CHECK_THROWS_AS(lemma2_quantity(10, 0.5, 1, 0), ParameterError);
}
