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

#include "jrg/limit_laws.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <vector>

#include "jrg/binomial.hpp"
#include "jrg/errors.hpp"

namespace jrg {
namespace {

using Limit = Asymptote::Limit;

// Exponents closer to zero than this count as zero (n^0 behaviour).
constexpr double kExponentEps = 1e-12;

Asymptote make(double coefficient, double exponent) {
  return {coefficient, std::fabs(exponent) < kExponentEps ? 0.0 : exponent};
}

FamilyLimits constant_limits(double p0) {
  return {make(p0 * p0, 1.0), make(p0 * p0 * (1.0 - p0), 1.0), make(1.0 - p0, 1.0),
          make(p0, 1.0), make(1.0 - p0, 2.0)};
}

void validate(const ProbabilityFamily& f) {
  if (!std::isfinite(f.c) || !std::isfinite(f.gamma)) {
    throw ParameterError("family parameters must be finite");
  }
  if (f.form == FamilyForm::kConstant) {
    if (!(f.c > 0.0 && f.c < 1.0)) {
      throw ParameterError("constant family needs p in (0,1), got " + f.to_string());
    }
    return;
  }
  if (!(f.c > 0.0)) throw ParameterError("family coefficient c must be > 0");
  if (!(f.gamma >= 0.0)) throw ParameterError("family exponent gamma must be >= 0");
  if (f.gamma == 0.0 && !(f.c < 1.0)) {
    throw ParameterError("family " + f.to_string() + " never lies in (0,1)");
  }
}

double parse_number(std::string_view text, std::string_view spec) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ParameterError("malformed number '" + std::string(text) + "' in family spec '" +
                         std::string(spec) + "'");
  }
  return v;
}

std::string format_number(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

double ProbabilityFamily::evaluate(double n) const noexcept {
  switch (form) {
    case FamilyForm::kConstant:
      return c;
    case FamilyForm::kPowerLaw:
      return c * std::pow(n, -gamma);
    case FamilyForm::kDenseComplement:
      return 1.0 - c * std::pow(n, -gamma);
  }
  return c;
}

std::uint64_t ProbabilityFamily::n_min() const {
  validate(*this);
  if (form == FamilyForm::kConstant || gamma == 0.0) return 2;
  // c n^-gamma < 1  <=>  n > c^(1/gamma)
  const double bound = std::pow(c, 1.0 / gamma);
  auto n = static_cast<std::uint64_t>(std::max(2.0, std::floor(bound) + 1.0));
  while (!(evaluate(static_cast<double>(n)) > 0.0 && evaluate(static_cast<double>(n)) < 1.0)) {
    ++n;
  }
  return n;
}

ProbabilityFamily ProbabilityFamily::parse(std::string_view spec) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto colon = spec.find(':', start);
    parts.push_back(spec.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  ProbabilityFamily f;
  if (parts[0] == "const" && parts.size() == 2) {
    f = constant(parse_number(parts[1], spec));
  } else if (parts[0] == "pow" && parts.size() == 3) {
    f = power_law(parse_number(parts[1], spec), parse_number(parts[2], spec));
  } else if (parts[0] == "dense" && parts.size() == 3) {
    f = dense_complement(parse_number(parts[1], spec), parse_number(parts[2], spec));
  } else {
    throw ParameterError("family spec '" + std::string(spec) +
                         "' must be const:<p>, pow:<c>:<gamma> or dense:<c>:<gamma>");
  }
  validate(f);
  return f;
}

std::string ProbabilityFamily::to_string() const {
  switch (form) {
    case FamilyForm::kConstant:
      return "const:" + format_number(c);
    case FamilyForm::kPowerLaw:
      return "pow:" + format_number(c) + ":" + format_number(gamma);
    case FamilyForm::kDenseComplement:
      return "dense:" + format_number(c) + ":" + format_number(gamma);
  }
  return {};
}

FamilyLimits family_limits(const ProbabilityFamily& family) {
  validate(family);
  const double c = family.c;
  const double g = family.gamma;
  switch (family.form) {
    case FamilyForm::kConstant:
      return constant_limits(c);
    case FamilyForm::kPowerLaw:
      if (g == 0.0) return constant_limits(c);
      // p ~ c n^-g, 1 - p -> 1
      return {make(c * c, 1.0 - 2.0 * g), make(c * c, 1.0 - 2.0 * g), make(1.0, 1.0),
              make(c, 1.0 - g), make(1.0, 2.0)};
    case FamilyForm::kDenseComplement:
      if (g == 0.0) return constant_limits(1.0 - c);
      // p -> 1, 1 - p = c n^-g
      return {make(1.0, 1.0), make(c, 1.0 - g), make(c, 1.0 - g), make(1.0, 1.0),
              make(c, 2.0 - g)};
  }
  return {};
}

std::string_view to_string(PairRegime r) noexcept {
  switch (r) {
    case PairRegime::kPairNormal:
      return "PairNormal";
    case PairRegime::kPairPoisson:
      return "PairPoisson";
    case PairRegime::kPairZero:
      return "PairZero";
    case PairRegime::kDensePoisson:
      return "DensePoisson";
    case PairRegime::kDenseZero:
      return "DenseZero";
    case PairRegime::kUnclassified:
      return "Unclassified";
  }
  return "Unclassified";
}

double RegimeClass::poisson_mean() const noexcept {
  switch (pair_regime) {
    case PairRegime::kPairPoisson:
      return limit_param;
    case PairRegime::kDensePoisson:
      return 2.0 * limit_param;
    default:
      return 0.0;
  }
}

RegimeClass classify(const ProbabilityFamily& family) {
  const FamilyLimits lim = family_limits(family);
  RegimeClass r;
  if (lim.np2_q.limit() == Limit::kInfinite) {
    r.pair_regime = PairRegime::kPairNormal;
  } else if (lim.np2.limit() == Limit::kFinite) {
    r.pair_regime = PairRegime::kPairPoisson;
    r.limit_param = lim.np2.finite_value();
  } else if (lim.np2.limit() == Limit::kZero) {
    r.pair_regime = PairRegime::kPairZero;
  } else if (lim.nq.limit() == Limit::kFinite) {
    r.pair_regime = PairRegime::kDensePoisson;
    r.limit_param = lim.nq.finite_value();
  } else if (lim.nq.limit() == Limit::kZero) {
    r.pair_regime = PairRegime::kDenseZero;
  }
  r.avg_clt_applies =
      lim.np.limit() == Limit::kInfinite && lim.n2q.limit() == Limit::kInfinite;
  return r;
}

RegimeClass regime_at_point(std::uint64_t n, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("p must lie in [0,1]");
  const double nd = static_cast<double>(n);
  const double lambda = nd * p * p;
  const double c = nd * (1.0 - p);
  RegimeClass r;
  if (p == 0.0) {
    r.pair_regime = PairRegime::kPairZero;
  } else if (c <= 20.0) {
    r.pair_regime = c < 0.05 ? PairRegime::kDenseZero : PairRegime::kDensePoisson;
    r.limit_param = r.pair_regime == PairRegime::kDensePoisson ? c : 0.0;
  } else if (lambda <= 20.0) {
    r.pair_regime = lambda < 0.05 ? PairRegime::kPairZero : PairRegime::kPairPoisson;
    r.limit_param = r.pair_regime == PairRegime::kPairPoisson ? lambda : 0.0;
  } else {
    r.pair_regime = PairRegime::kPairNormal;
  }
  r.avg_clt_applies = nd * p >= 20.0 && nd * nd * (1.0 - p) >= 20.0;
  return r;
}

double standardize_pair(double j, std::uint64_t n, double p, const RegimeClass& regime) {
  const double nd = static_cast<double>(n);
  switch (regime.pair_regime) {
    case PairRegime::kPairNormal: {
      if (!(p > 0.0 && p < 1.0)) {
        throw ParameterError("normal standardization needs p in (0,1)");
      }
      const double q = 2.0 - p;
      return std::sqrt(nd * q * q * q / (2.0 * (1.0 - p))) * (j - p / q);
    }
    case PairRegime::kPairPoisson:
      return 2.0 * nd * p * j;
    case PairRegime::kPairZero:
      return nd * p * j;
    case PairRegime::kDensePoisson:
    case PairRegime::kDenseZero:
      return nd * (1.0 - j);
    case PairRegime::kUnclassified:
      break;
  }
  throw ParameterError("no standardization for an unclassified regime");
}

double standardize_average(double j_avg, std::uint64_t n, double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw ParameterError("average standardization needs p in (0,1)");
  }
  const double q = 2.0 - p;
  return static_cast<double>(n) * q * q / std::sqrt(8.0 * p * (1.0 - p)) * (j_avg - p / q);
}

std::complex<double> cf_negV(double t, double p) noexcept {
  using namespace std::complex_literals;
  const double r = 1.0 - p;
  return p * p * std::exp(-2.0i * t * r) + 2.0 * p * r * std::exp(1.0i * t * p) + r * r;
}

std::complex<double> cf_poisson_limit(double t, double c) noexcept {
  using namespace std::complex_literals;
  return std::exp(2.0 * c * (std::exp(1.0i * t) - 1.0i * t - 1.0));
}

double normal_cdf(double x) noexcept {
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double poisson_pmf(std::uint64_t k, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ParameterError("Poisson mean must be > 0");
  }
  return poisson_pmf_raw(k, lambda);
}

}  // namespace jrg
