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

// Subcommands of the `jrg` tool, separated from argument parsing so they can
// be driven from tests and replayed from a run manifest.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jrg/tolerances.hpp"
#include "json.hpp"

namespace jrg::cli {

inline constexpr const char* kVersion = "0.1.0";

// Every parameter any subcommand accepts. Only the ones relevant to
// `command` are recorded in its manifest.
struct Params {
  std::string command;
  std::optional<std::uint64_t> n;
  std::optional<double> p;
  std::uint64_t trials = 1000;
  std::optional<std::uint64_t> seed;
  bool entropy = false;
  unsigned threads = 1;
  std::string out;
  std::string format;  // "csv" or "json"; empty = command default
  std::string mode = "pair_conditional";
  std::string family;
  std::vector<std::uint64_t> n_list;
  std::string graph;  // edge-list path for pairstats
  std::optional<std::uint64_t> i;
  std::optional<std::uint64_t> j;
  std::uint64_t average_cap = 4096;
};

// One output of a command. `suffix` is appended to --out; the empty suffix
// is the primary output and goes to stdout when --out is not given.
struct Artifact {
  std::string suffix;
  std::string content;
};

struct Result {
  std::vector<Artifact> artifacts;
  nlohmann::ordered_json manifest;  // without duration
};

// Fills the seed from std::random_device when only --entropy was given;
// throws ParameterError when a randomized command has neither.
void resolve_seed(Params& params);

// Runs one subcommand. Throws jrg::Error subclasses on failure.
Result run(Params params, const ToleranceTable& tolerances);

// Parameters recorded for `params.command`, suitable for replay.
nlohmann::ordered_json manifest_for(const Params& params);

// Inverse of manifest_for.
Params params_from_manifest(const nlohmann::json& manifest);

// Writes artifacts under params.out plus "<out>.manifest.json" carrying the
// wall-clock duration. Returns the primary artifact when out is empty.
std::string emit(const Result& result, const std::string& out, double duration_seconds);

// Process exit code for an error token (E_USAGE 2, E_PARAM 3, E_VALIDATION 4,
// E_CAPACITY 5, E_IO 6, anything else 1).
int exit_code_for(const char* code) noexcept;

// Full command-line entry point; returns the process exit code.
int main_entry(int argc, char** argv);

}  // namespace jrg::cli
