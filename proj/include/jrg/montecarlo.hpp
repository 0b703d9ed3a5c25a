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

// Reproducible Monte Carlo over G(n, p). Trial t draws only from
// stream_key(seed, t), so results do not depend on the number of worker
// threads or on scheduling.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jrg/pair_index.hpp"
#include "jrg/rng.hpp"
#include "jrg/summation.hpp"

namespace jrg {

enum class TrialMode { kPairDirect, kPairConditional, kAverage };

std::string_view to_string(TrialMode m) noexcept;
TrialMode parse_trial_mode(std::string_view s);

inline constexpr std::size_t kDefaultAverageCap = 4096;

struct TrialConfig {
  std::uint64_t n = 0;
  double p = 0.0;
  std::uint64_t trials = 1;
  Seed seed;
  TrialMode mode = TrialMode::kPairConditional;
  unsigned threads = 1;  // 0 = hardware concurrency; never affects results
  std::size_t average_cap = kDefaultAverageCap;
};

// ParameterError / CapacityError on an unusable config.
void validate(const TrialConfig& cfg);

// Runs body(t) for t in [0, count) on up to `threads` workers.
void parallel_trials(std::uint64_t count, unsigned threads,
                     const std::function<void(std::uint64_t)>& body);

// One pair trial from rows 1 and 2 only.
PairStats pair_trial_direct(std::uint64_t n, double p, Seed seed, std::uint64_t trial) noexcept;
PairStats pair_trial_conditional(std::uint64_t n, double p, Seed seed,
                                 std::uint64_t trial) noexcept;

// (S, T, J) per trial, in trial order.
struct PairSample {
  TrialConfig config;
  std::vector<PairStats> trials;

  std::vector<double> jaccard() const;
  std::vector<double> s_values() const;
  std::vector<double> t_values() const;
};

PairSample run_pair_trials(const TrialConfig& cfg);

// Real-valued sample with provenance. Sorted ascending once built.
class EmpiricalSample {
 public:
  EmpiricalSample() = default;
  EmpiricalSample(std::vector<double> values, const TrialConfig& provenance);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  const TrialConfig& provenance() const noexcept { return provenance_; }
  SampleMoments moments() const noexcept { return sample_moments(values_); }

  // Same provenance, values mapped through f and re-sorted.
  template <class F>
  EmpiricalSample map(F&& f) const {
    std::vector<double> out;
    out.reserve(values_.size());
    for (double v : values_) out.push_back(f(v));
    return EmpiricalSample(std::move(out), provenance_);
  }

 private:
  std::vector<double> values_;
  TrialConfig provenance_;
};

// J_n of one full G(n, p) realization per trial.
EmpiricalSample run_average_trials(const TrialConfig& cfg);

enum class StatisticKind { kKS, kTV };
std::string_view to_string(StatisticKind k) noexcept;

enum class ReferenceKind { kStandardNormal, kPoisson, kPointMassZero };

struct ReferenceLaw {
  ReferenceKind kind = ReferenceKind::kStandardNormal;
  double mean = 0.0;  // Poisson mean

  static ReferenceLaw standard_normal() { return {ReferenceKind::kStandardNormal, 0.0}; }
  static ReferenceLaw poisson(double mean) { return {ReferenceKind::kPoisson, mean}; }
  static ReferenceLaw point_mass_zero() { return {ReferenceKind::kPointMassZero, 0.0}; }
  std::string describe() const;
};

struct GofReport {
  StatisticKind statistic_kind = StatisticKind::kKS;
  double value = 0.0;  // in [0,1]
  ReferenceLaw reference;
  SampleMoments sample_moments;
  // Zero-variance sample that cannot be standardized; `value` is meaningless.
  bool degenerate = false;
};

// sup |F_N - F| over the sorted sample.
GofReport ks_statistic(const EmpiricalSample& sample, const std::function<double(double)>& cdf,
                       ReferenceLaw reference = ReferenceLaw::standard_normal());

// Values are rounded to the nearest integer (ties to even) and compared with
// `pmf` on k = 0..max; reference mass beyond max and sample mass below 0 are
// added in full.
GofReport tv_distance_integer(const EmpiricalSample& sample,
                              const std::function<double(std::uint64_t)>& pmf,
                              ReferenceLaw reference);

// pmf of a ReferenceLaw on the nonnegative integers.
std::function<double(std::uint64_t)> reference_pmf(const ReferenceLaw& law);

// Two-sample KS statistic sup |F_a - F_b|; handles ties.
double ks_two_sample(std::span<const double> a, std::span<const double> b);

// c_alpha sqrt((n_a + n_b) / (n_a n_b)); c = 1.63 for alpha = 0.01.
double ks_two_sample_critical(std::size_t n_a, std::size_t n_b, double c_alpha = 1.63) noexcept;

struct ScalingRow {
  std::uint64_t n = 0;
  double var_rn = 0.0;  // unbiased sample variance of R_n
  double ratio = 0.0;   // var_rn / (n (1-p)); 0 when p = 1
};

// Sample variance of the remainder sum R_n against n(1-p). Trials for n use
// seed stream_key(seed, n) as their master so that rows are independent.
std::vector<ScalingRow> variance_scaling_experiment(std::span<const std::uint64_t> n_list,
                                                    double p, std::uint64_t trials, Seed seed,
                                                    unsigned threads = 1,
                                                    std::size_t average_cap = kDefaultAverageCap);

// CSV: provenance comments, a "value" header, one value per line (%.17g).
void write_sample_csv(std::ostream& out, const EmpiricalSample& sample,
                      std::span<const std::string> extra_comments = {});

}  // namespace jrg
