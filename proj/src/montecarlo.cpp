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

#include "jrg/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

#include "jrg/binomial.hpp"
#include "jrg/errors.hpp"
#include "jrg/graph.hpp"
#include "jrg/limit_laws.hpp"

namespace jrg {

std::string_view to_string(TrialMode m) noexcept {
  switch (m) {
    case TrialMode::kPairDirect:
      return "pair_direct";
    case TrialMode::kPairConditional:
      return "pair_conditional";
    case TrialMode::kAverage:
      return "average";
  }
  return "pair_conditional";
}

TrialMode parse_trial_mode(std::string_view s) {
  if (s == "pair_direct") return TrialMode::kPairDirect;
  if (s == "pair_conditional") return TrialMode::kPairConditional;
  if (s == "average") return TrialMode::kAverage;
  throw ParameterError("unknown mode '" + std::string(s) +
                       "' (expected pair_direct, pair_conditional or average)");
}

void validate(const TrialConfig& cfg) {
  if (cfg.n < 3) throw ParameterError("trials need n >= 3");
  if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) throw ParameterError("p must lie in [0,1]");
  if (cfg.trials < 1) throw ParameterError("trials must be >= 1");
  if (cfg.mode == TrialMode::kAverage && cfg.n > cfg.average_cap) {
    throw CapacityError("average mode builds full graphs; n=" + std::to_string(cfg.n) +
                        " exceeds the cap of " + std::to_string(cfg.average_cap) +
                        " (use a pair mode, or raise the cap explicitly)");
  }
}

void parallel_trials(std::uint64_t count, unsigned threads,
                     const std::function<void(std::uint64_t)>& body) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  const auto workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, count));
  if (workers <= 1) {
    for (std::uint64_t t = 0; t < count; ++t) body(t);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = count * w / workers;
      const std::uint64_t end = count * (w + 1) / workers;
      pool.emplace_back([&, begin, end] {
        try {
          for (std::uint64_t t = begin; t < end; ++t) body(t);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

PairStats pair_trial_direct(std::uint64_t n, double p, Seed seed, std::uint64_t trial) noexcept {
  const std::uint64_t key = stream_key(seed, trial);
  std::uint32_t s = 0;
  std::uint32_t t = 0;
  for (std::uint64_t k = 0; k + 2 < n; ++k) {
    const bool a = bernoulli(hash_at(key, 2 * k), p);
    const bool b = bernoulli(hash_at(key, 2 * k + 1), p);
    s += static_cast<std::uint32_t>(a && b);
    t += static_cast<std::uint32_t>(a || b);
  }
  return {s, t, jaccard_from_counts(s, t, p)};
}

PairStats pair_trial_conditional(std::uint64_t n, double p, Seed seed,
                                 std::uint64_t trial) noexcept {
  CounterRng rng(seed, trial);
  const auto t = sample_binomial(n - 2, p * (2.0 - p), rng);
  const auto s = sample_binomial(t, p / (2.0 - p), rng);
  const auto s32 = static_cast<std::uint32_t>(s);
  const auto t32 = static_cast<std::uint32_t>(t);
  return {s32, t32, jaccard_from_counts(s32, t32, p)};
}

std::vector<double> PairSample::jaccard() const {
  std::vector<double> out;
  out.reserve(trials.size());
  for (const auto& st : trials) out.push_back(st.j);
  return out;
}

std::vector<double> PairSample::s_values() const {
  std::vector<double> out;
  out.reserve(trials.size());
  for (const auto& st : trials) out.push_back(st.s);
  return out;
}

std::vector<double> PairSample::t_values() const {
  std::vector<double> out;
  out.reserve(trials.size());
  for (const auto& st : trials) out.push_back(st.t);
  return out;
}

PairSample run_pair_trials(const TrialConfig& cfg) {
  validate(cfg);
  if (cfg.mode == TrialMode::kAverage) {
    throw ParameterError("run_pair_trials needs a pair mode");
  }
  PairSample out;
  out.config = cfg;
  out.trials.resize(cfg.trials);
  const bool direct = cfg.mode == TrialMode::kPairDirect;
  parallel_trials(cfg.trials, cfg.threads, [&](std::uint64_t t) {
    out.trials[t] = direct ? pair_trial_direct(cfg.n, cfg.p, cfg.seed, t)
                           : pair_trial_conditional(cfg.n, cfg.p, cfg.seed, t);
  });
  return out;
}

EmpiricalSample::EmpiricalSample(std::vector<double> values, const TrialConfig& provenance)
    : values_(std::move(values)), provenance_(provenance) {
  std::sort(values_.begin(), values_.end());
}

EmpiricalSample run_average_trials(const TrialConfig& cfg) {
  validate(cfg);
  if (cfg.mode != TrialMode::kAverage) {
    throw ParameterError("run_average_trials needs mode=average");
  }
  std::vector<double> values(cfg.trials);
  parallel_trials(cfg.trials, cfg.threads, [&](std::uint64_t t) {
    values[t] = average_jaccard(sample_gnp(cfg.n, cfg.p, cfg.seed, t), cfg.p);
  });
  return EmpiricalSample(std::move(values), cfg);
}

std::string_view to_string(StatisticKind k) noexcept {
  return k == StatisticKind::kKS ? "KS" : "TV";
}

std::string ReferenceLaw::describe() const {
  switch (kind) {
    case ReferenceKind::kStandardNormal:
      return "N(0,1)";
    case ReferenceKind::kPoisson: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "Poi(%.17g)", mean);
      return buf;
    }
    case ReferenceKind::kPointMassZero:
      return "delta(0)";
  }
  return {};
}

GofReport ks_statistic(const EmpiricalSample& sample, const std::function<double(double)>& cdf,
                       ReferenceLaw reference) {
  GofReport r;
  r.statistic_kind = StatisticKind::kKS;
  r.reference = reference;
  r.sample_moments = sample.moments();
  const auto xs = sample.values();
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  r.value = std::clamp(d, 0.0, 1.0);
  return r;
}

GofReport tv_distance_integer(const EmpiricalSample& sample,
                              const std::function<double(std::uint64_t)>& pmf,
                              ReferenceLaw reference) {
  GofReport r;
  r.statistic_kind = StatisticKind::kTV;
  r.reference = reference;
  r.sample_moments = sample.moments();

  std::map<double, std::uint64_t> counts;
  for (double v : sample.values()) ++counts[std::nearbyint(v)];
  const double n = static_cast<double>(sample.size());

  // For a normalized reference pmf,
  //   sum_{k=0..K} |e_k - f_k| + (1 - sum_{k<=K} f_k)
  //     = 1 + sum_{k in supp(e), k>=0} (|e_k - f_k| - f_k),
  // so only the sample's support needs visiting.
  CompensatedSum l1;
  l1 += 1.0;
  for (const auto& [k, count] : counts) {
    const double e = static_cast<double>(count) / n;
    if (k < 0.0) {
      l1 += e;
      continue;
    }
    const double f = pmf(static_cast<std::uint64_t>(k));
    l1 += std::fabs(e - f) - f;
  }
  r.value = std::clamp(0.5 * l1.value(), 0.0, 1.0);
  return r;
}

std::function<double(std::uint64_t)> reference_pmf(const ReferenceLaw& law) {
  switch (law.kind) {
    case ReferenceKind::kPoisson: {
      const double mean = law.mean;
      return [mean](std::uint64_t k) { return poisson_pmf(k, mean); };
    }
    case ReferenceKind::kPointMassZero:
      return [](std::uint64_t k) { return k == 0 ? 1.0 : 0.0; };
    case ReferenceKind::kStandardNormal:
      break;
  }
  throw ParameterError("the standard normal has no integer pmf");
}

double ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw ParameterError("two-sample KS needs nonempty samples");
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double na = static_cast<double>(x.size());
  const double nb = static_cast<double>(y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == v) ++i;
    while (j < y.size() && y[j] == v) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

double ks_two_sample_critical(std::size_t n_a, std::size_t n_b, double c_alpha) noexcept {
  const double a = static_cast<double>(n_a);
  const double b = static_cast<double>(n_b);
  return c_alpha * std::sqrt((a + b) / (a * b));
}

std::vector<ScalingRow> variance_scaling_experiment(std::span<const std::uint64_t> n_list,
                                                    double p, std::uint64_t trials, Seed seed,
                                                    unsigned threads, std::size_t average_cap) {
  if (n_list.empty()) throw ParameterError("scaling experiment needs at least one n");
  if (trials < 2) throw ParameterError("variance needs at least 2 trials");
  std::vector<ScalingRow> rows;
  for (const std::uint64_t n : n_list) {
    TrialConfig cfg{n, p, trials, Seed{stream_key(seed, n)}, TrialMode::kAverage, threads,
                    average_cap};
    validate(cfg);
    if (!(p > 0.0)) throw ParameterError("remainder sum needs p in (0,1]");
    std::vector<double> r(trials);
    parallel_trials(trials, threads, [&](std::uint64_t t) {
      r[t] = graph_summary(sample_gnp(n, p, cfg.seed, t), p).r_sum;
    });
    ScalingRow row;
    row.n = n;
    row.var_rn = sample_moments(r).variance;
    const double scale = static_cast<double>(n) * (1.0 - p);
    row.ratio = scale > 0.0 ? row.var_rn / scale : 0.0;
    rows.push_back(row);
  }
  return rows;
}

void write_sample_csv(std::ostream& out, const EmpiricalSample& sample,
                      std::span<const std::string> extra_comments) {
  const TrialConfig& c = sample.provenance();
  char buf[64];
  for (const auto& line : extra_comments) out << "# " << line << '\n';
  out << "# n=" << c.n << '\n';
  std::snprintf(buf, sizeof buf, "%.17g", c.p);
  out << "# p=" << buf << '\n';
  out << "# mode=" << to_string(c.mode) << '\n';
  out << "# trials=" << c.trials << '\n';
  out << "# seed=" << c.seed.master << '\n';
  out << "value\n";
  for (double v : sample.values()) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << buf << '\n';
  }
  if (!out) throw IoError("failed to write sample CSV");
}

}  // namespace jrg
