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

// Every slack constant used to compare numerics or Monte Carlo output with
// an asymptotic law lives here. The asymptotic results give orders such as
// O(1/np) without constants; the multipliers below are our choices.

#pragma once

#include <string>

namespace jrg {

struct ToleranceTable {
  double identity_rel_tol = 1e-9;        // decomposition of J_n, per graph
  double enumeration_abs_tol = 1e-12;    // exact variance vs enumeration
  double mean_se_multiplier = 4.0;       // |mean - E| <= k * SE
  double variance_rel_tol = 0.03;        // sample vs exact variance
  double variance_correction_coeff = 3.0;  // |exact/asym - 1| <= coeff/(np)
  double variance_ratio_slack = 5.0;     // ... times this for np >= 100 sweeps
  double inverse_moment_slack = 10.0;    // |nq * E[1/X] - 1| <= 3/(nq) * slack
  double lemma1_bound = 10.0;            // np * lemma1 <= bound
  double lemma2_rel_tol = 0.02;          // |(np)^a * lemma2 - 1| <= tol
  double cf_sup_bound = 0.02;            // sup_t |f^(n-2) - limit| at n = 1e4
  double ks_normal_max = 0.05;
  double tv_poisson_max = 0.05;
  double degenerate_threshold = 0.1;     // |statistic| > this counts as a miss
  double degenerate_fraction_max = 0.02;
  double scaling_factor_max = 3.0;       // max/min of Var R_n / (n(1-p))
  double ks_two_sample_c = 1.63;         // alpha = 0.01

  static ToleranceTable defaults() { return {}; }

  // Keys absent from the file keep their defaults; unknown keys are an error
  // except those starting with '$'.
  static ToleranceTable load(const std::string& path);

  // Loads the file named by JRG_TOLERANCE_TABLE if set, else defaults().
  static ToleranceTable from_environment();

  std::string to_json() const;
};

inline constexpr const char* kToleranceEnvVar = "JRG_TOLERANCE_TABLE";

}  // namespace jrg
