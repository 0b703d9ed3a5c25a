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

#include "jrg/tolerances.hpp"

#include <cstdlib>
#include <fstream>
#include <utility>
#include <vector>

#include "jrg/errors.hpp"
#include "json.hpp"

namespace jrg {
namespace {

std::vector<std::pair<const char*, double ToleranceTable::*>> fields() {
  return {
      {"identity_rel_tol", &ToleranceTable::identity_rel_tol},
      {"enumeration_abs_tol", &ToleranceTable::enumeration_abs_tol},
      {"mean_se_multiplier", &ToleranceTable::mean_se_multiplier},
      {"variance_rel_tol", &ToleranceTable::variance_rel_tol},
      {"variance_correction_coeff", &ToleranceTable::variance_correction_coeff},
      {"variance_ratio_slack", &ToleranceTable::variance_ratio_slack},
      {"inverse_moment_slack", &ToleranceTable::inverse_moment_slack},
      {"lemma1_bound", &ToleranceTable::lemma1_bound},
      {"lemma2_rel_tol", &ToleranceTable::lemma2_rel_tol},
      {"cf_sup_bound", &ToleranceTable::cf_sup_bound},
      {"ks_normal_max", &ToleranceTable::ks_normal_max},
      {"tv_poisson_max", &ToleranceTable::tv_poisson_max},
      {"degenerate_threshold", &ToleranceTable::degenerate_threshold},
      {"degenerate_fraction_max", &ToleranceTable::degenerate_fraction_max},
      {"scaling_factor_max", &ToleranceTable::scaling_factor_max},
      {"ks_two_sample_c", &ToleranceTable::ks_two_sample_c},
  };
}

}  // namespace

ToleranceTable ToleranceTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open tolerance table '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("tolerance table '" + path + "': " + e.what());
  }
  if (!doc.is_object()) throw ValidationError("tolerance table must be a JSON object");
  ToleranceTable table;
  const auto known = fields();
  for (const auto& [key, value] : doc.items()) {
    if (!key.empty() && key[0] == '$') continue;  // "$comment" etc.
    bool matched = false;
    for (const auto& [name, member] : known) {
      if (key != name) continue;
      if (!value.is_number()) {
        throw ValidationError("tolerance '" + key + "' must be a number");
      }
      table.*member = value.get<double>();
      matched = true;
    }
    if (!matched) throw ValidationError("unknown tolerance '" + key + "'");
  }
  return table;
}

ToleranceTable ToleranceTable::from_environment() {
  const char* path = std::getenv(kToleranceEnvVar);
  if (path == nullptr || *path == '\0') return defaults();
  return load(path);
}

std::string ToleranceTable::to_json() const {
  nlohmann::ordered_json doc;
  for (const auto& [name, member] : fields()) doc[name] = this->*member;
  return doc.dump(2);
}

}  // namespace jrg
