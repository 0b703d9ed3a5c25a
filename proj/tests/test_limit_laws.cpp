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
#include <complex>
#include <numbers>

#include "doctest.h"
#include "jrg/errors.hpp"
#include "jrg/limit_laws.hpp"
#include "jrg/moments.hpp"
#include "jrg/tolerances.hpp"

using namespace jrg;
using doctest::Approx;

namespace {

double cf_sup_gap(std::uint64_t n, double c) {
  const double p = ProbabilityFamily::dense_complement(c, 1.0).evaluate(static_cast<double>(n));
  double sup = 0.0;
  for (int k = -314; k <= 314; ++k) {
    const double t = 0.01 * k;
    const auto fn = std::pow(cf_negV(t, p), static_cast<double>(n - 2));
    sup = std::max(sup, std::abs(fn - cf_poisson_limit(t, c)));
  }
  return sup;
}

}  // namespace

TEST_CASE("family grammar") {
  const auto c = ProbabilityFamily::parse("const:0.3");
  CHECK(c.form == FamilyForm::kConstant);
  CHECK(c.evaluate(100) == 0.3);
  const auto pw = ProbabilityFamily::parse("pow:2:0.5");
  CHECK(pw.form == FamilyForm::kPowerLaw);
  CHECK(pw.evaluate(10000) == Approx(0.02).epsilon(1e-15));
  const auto d = ProbabilityFamily::parse("dense:1.5:1");
  CHECK(d.evaluate(3000) == Approx(1.0 - 1.5 / 3000).epsilon(1e-15));
  CHECK(ProbabilityFamily::parse(pw.to_string()).evaluate(777) == pw.evaluate(777));

  for (const char* bad : {"", "const", "const:", "const:1.5", "const:0", "pow:2", "pow:-1:0.5",
                          "pow:1:-0.5", "dense:1:x", "weird:1:1", "const:0.3:1", "pow:2:0.5x"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(ProbabilityFamily::parse(bad), ParameterError);
  }
}

TEST_CASE("n_min") {
  CHECK(ProbabilityFamily::constant(0.3).n_min() == 2);
  const auto pw = ProbabilityFamily::power_law(2, 0.5);
  CHECK(pw.n_min() == 5);
  CHECK(pw.evaluate(4) == 1.0);
  CHECK(ProbabilityFamily::dense_complement(1.5, 1).n_min() == 2);
  CHECK(ProbabilityFamily::dense_complement(3, 1).n_min() == 4);
  CHECK_THROWS_AS(ProbabilityFamily::power_law(2, 0).n_min(), ParameterError);
}

TEST_CASE("classify examples") {
  const RegimeClass c = classify(ProbabilityFamily::constant(0.3));
  CHECK(c.pair_regime == PairRegime::kPairNormal);
  CHECK(c.avg_clt_applies);

  const RegimeClass pw = classify(ProbabilityFamily::power_law(2, 0.5));
  CHECK(pw.pair_regime == PairRegime::kPairPoisson);
  CHECK(pw.limit_param == Approx(4.0).epsilon(1e-15));
  CHECK(pw.poisson_mean() == Approx(4.0).epsilon(1e-15));
  CHECK(pw.avg_clt_applies);

  CHECK(classify(ProbabilityFamily::power_law(1, 0.8)).pair_regime == PairRegime::kPairZero);

  const RegimeClass d = classify(ProbabilityFamily::dense_complement(1.5, 1));
  CHECK(d.pair_regime == PairRegime::kDensePoisson);
  CHECK(d.limit_param == Approx(1.5).epsilon(1e-15));
  CHECK(d.poisson_mean() == Approx(3.0).epsilon(1e-15));
  CHECK(d.avg_clt_applies);  // n^2(1-p) = 1.5 n and np both diverge

  CHECK(classify(ProbabilityFamily::dense_complement(1, 1.5)).pair_regime ==
        PairRegime::kDenseZero);
  CHECK_FALSE(classify(ProbabilityFamily::dense_complement(1, 2)).avg_clt_applies);
  CHECK_FALSE(classify(ProbabilityFamily::power_law(1, 1)).avg_clt_applies);
  CHECK(classify(ProbabilityFamily::power_law(1, 0.99)).avg_clt_applies);
}

TEST_CASE("classification is complete and consistent over the three forms") {
  int classified = 0;
  for (double c : {0.25, 1.0, 3.0}) {
    for (int k = 0; k <= 40; ++k) {
      const double g = 0.05 * k;
      for (FamilyForm form : {FamilyForm::kPowerLaw, FamilyForm::kDenseComplement}) {
        const ProbabilityFamily f{form, c, g};
        if (g == 0.0) continue;  // constant in disguise; covered below
        const RegimeClass r = classify(f);
        const FamilyLimits lim = family_limits(f);
        using L = Asymptote::Limit;
        CAPTURE(f.to_string());
        REQUIRE(r.pair_regime != PairRegime::kUnclassified);
        switch (r.pair_regime) {
          case PairRegime::kPairNormal:
            CHECK(lim.np2_q.limit() == L::kInfinite);
            break;
          case PairRegime::kPairPoisson:
            CHECK(lim.np2.limit() == L::kFinite);
            CHECK(r.limit_param > 0.0);
            break;
          case PairRegime::kPairZero:
            CHECK(lim.np2.limit() == L::kZero);
            break;
          case PairRegime::kDensePoisson:
            CHECK(lim.nq.limit() == L::kFinite);
            CHECK(r.limit_param > 0.0);
            break;
          case PairRegime::kDenseZero:
            CHECK(lim.nq.limit() == L::kZero);
            break;
          case PairRegime::kUnclassified:
            break;
        }
        CHECK(r.avg_clt_applies ==
              (lim.np.limit() == L::kInfinite && lim.n2q.limit() == L::kInfinite));
        ++classified;
      }
    }
  }
  for (double p : {1e-6, 0.1, 0.5, 0.999999}) {
    const RegimeClass r = classify(ProbabilityFamily::constant(p));
    CHECK(r.pair_regime == PairRegime::kPairNormal);
    CHECK(r.avg_clt_applies);
  }
  CHECK(classified == 3 * 40 * 2);
}

TEST_CASE("regime_at_point") {
  CHECK(regime_at_point(4000, 0.1).pair_regime == PairRegime::kPairNormal);
  const RegimeClass pois = regime_at_point(100000, std::sqrt(4.0 / 100000));
  CHECK(pois.pair_regime == PairRegime::kPairPoisson);
  CHECK(pois.limit_param == Approx(4.0).epsilon(1e-12));
  const RegimeClass dense = regime_at_point(3000, 1.0 - 1.5 / 3000);
  CHECK(dense.pair_regime == PairRegime::kDensePoisson);
  CHECK(dense.limit_param == Approx(1.5).epsilon(1e-9));
  CHECK(regime_at_point(100000, std::pow(1e5, -0.7)).pair_regime == PairRegime::kPairZero);
  CHECK(regime_at_point(100000, 1.0 - std::pow(1e5, -1.5)).pair_regime ==
        PairRegime::kDenseZero);
  CHECK(regime_at_point(100, 0.0).pair_regime == PairRegime::kPairZero);
}

TEST_CASE("standardize_pair") {
  const RegimeClass normal = classify(ProbabilityFamily::constant(0.3));
  CHECK(standardize_pair(mean_jaccard(0.3), 500, 0.3, normal) == 0.0);
  for (double p : {0.01, 0.2, 0.77}) CHECK(standardize_pair(mean_jaccard(p), 1234, p, normal) == 0.0);
  CHECK_THROWS_AS(standardize_pair(0.5, 100, 1.0, normal), ParameterError);
  CHECK_THROWS_AS(standardize_pair(0.5, 100, 0.0, normal), ParameterError);

  const RegimeClass dense = classify(ProbabilityFamily::dense_complement(1.5, 1));
  CHECK(standardize_pair(1.0, 100, 0.99, dense) == 0.0);
  const RegimeClass pois = classify(ProbabilityFamily::power_law(2, 0.5));
  CHECK(standardize_pair(0.01, 10000, 0.02, pois) == Approx(4.0).epsilon(1e-14));
}

TEST_CASE("standardize_average") {
  CHECK(standardize_average(mean_jaccard(0.4), 100, 0.4) == 0.0);
  CHECK(standardize_average(0.35, 100, 0.5) ==
        Approx(100 * 2.25 / std::sqrt(2.0) * (0.35 - 1.0 / 3.0)).epsilon(1e-14));
  CHECK(standardize_average(0.35, 100, 0.5) == Approx(2.652).epsilon(1e-3));
  CHECK_THROWS_AS(standardize_average(0.5, 100, 1.0), ParameterError);
}

TEST_CASE("cf_negV") {
  CHECK(cf_negV(0.0, 0.37) == std::complex<double>(1.0, 0.0));
  for (double t : {-2.0, 0.5, 3.0}) {
    CHECK(std::abs(cf_negV(t, 1.0) - std::complex<double>(1.0, 0.0)) <= 1e-15);
  }
  const auto v = cf_negV(std::numbers::pi, 0.5);
  CHECK(v.real() == Approx(0.0).scale(1.0).epsilon(1e-15));
  CHECK(v.imag() == Approx(0.5).epsilon(1e-15));
}

TEST_CASE("cf_poisson_limit") {
  CHECK(cf_poisson_limit(0.0, 2.0) == std::complex<double>(1.0, 0.0));
  for (double t : {-3.0, 1.0, 2.5}) {
    CHECK(std::abs(cf_poisson_limit(t, 1e-12) - std::complex<double>(1.0, 0.0)) <= 1e-10);
  }
  const auto v = cf_poisson_limit(std::numbers::pi, 1.0);
  CHECK(v.real() == Approx(std::exp(-4.0)).epsilon(1e-13));
  CHECK(std::abs(v.imag()) <= 1e-15);
}

TEST_CASE("characteristic functions converge along dense:c:1") {
  const double c = 1.5;
  const double g100 = cf_sup_gap(100, c);
  const double g1000 = cf_sup_gap(1000, c);
  const double g10000 = cf_sup_gap(10000, c);
  CHECK(g1000 < g100);
  CHECK(g10000 < g1000);
  CHECK(g10000 <= ToleranceTable::defaults().cf_sup_bound);
}

TEST_CASE("normal_cdf") {
  CHECK(normal_cdf(0.0) == 0.5);
  CHECK(normal_cdf(1.0) == Approx(0.84134474606854294859).epsilon(1e-14));
  CHECK(std::abs(normal_cdf(1.0) - 0.841345) <= 1e-6);
  double prev = 0.0;
  for (int k = -4000; k <= 4000; ++k) {
    const double x = 0.002 * k;
    const double f = normal_cdf(x);
    CHECK(f >= prev);
    CHECK(std::abs(f + normal_cdf(-x) - 1.0) <= 1e-12);
    prev = f;
  }
}

TEST_CASE("poisson_pmf") {
  CHECK(poisson_pmf(0, 4.0) == Approx(std::exp(-4.0)).epsilon(1e-15));
  CHECK(poisson_pmf(0, 4.0) == Approx(0.0183156).epsilon(1e-6));
  CHECK(poisson_pmf(7, 4.0) == Approx(0.059540362609726351177).epsilon(1e-13));
  CHECK(poisson_pmf(10000, 10000.0) == Approx(0.0039893895589628256487).epsilon(1e-12));
  for (double lambda : {0.3, 4.0, 50.0, 2500.0}) {
    double total = 0.0;
    const auto top = static_cast<std::uint64_t>(lambda + 40.0 * std::sqrt(lambda));
    for (std::uint64_t k = 0; k <= top; ++k) total += poisson_pmf(k, lambda);
    CAPTURE(lambda);
    CHECK(total >= 1.0 - 1e-12);
    CHECK(total <= 1.0 + 1e-12);
  }
  CHECK_THROWS_AS(poisson_pmf(1, 0.0), ParameterError);
  CHECK_THROWS_AS(poisson_pmf(1, -2.0), ParameterError);
}
