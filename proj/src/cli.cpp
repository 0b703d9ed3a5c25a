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

#include "jrg/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "jrg/errors.hpp"
#include "jrg/graph.hpp"
#include "jrg/limit_laws.hpp"
#include "jrg/moments.hpp"
#include "jrg/montecarlo.hpp"
#include "jrg/pair_index.hpp"

namespace jrg::cli {
namespace {

using ojson = nlohmann::ordered_json;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool is_randomized(const std::string& command) {
  return command == "sample" || command == "gof" || command == "sweep";
}

template <class T>
T require(const std::optional<T>& v, const char* flag, const std::string& command) {
  if (!v) throw UsageError(command + " requires --" + std::string(flag));
  return *v;
}

std::string format_or(const Params& params, const char* fallback) {
  const std::string f = params.format.empty() ? fallback : params.format;
  if (f != "csv" && f != "json") {
    throw UsageError("--format must be csv or json, got '" + f + "'");
  }
  return f;
}

std::string manifest_comment(const ojson& manifest) {
  return "manifest=" + manifest.dump();
}

// ---- sample -----------------------------------------------------------------

Result cmd_sample(const Params& params) {
  const auto n = require(params.n, "n", "sample");
  const auto p = require(params.p, "p", "sample");
  const Graph g = sample_gnp(n, p, Seed{*params.seed});
  Result r;
  r.manifest = manifest_for(params);
  std::ostringstream text;
  const std::string header[] = {std::string("jrg ") + kVersion + " sample",
                                manifest_comment(r.manifest)};
  write_edge_list(text, g, header);
  r.artifacts.push_back({"", text.str()});
  return r;
}

// ---- pairstats --------------------------------------------------------------

Graph load_graph(const Params& params) {
  if (params.graph.empty()) throw UsageError("pairstats requires --graph <edge-list>");
  std::ifstream in(params.graph);
  if (!in) throw IoError("cannot open edge list '" + params.graph + "'");
  return read_edge_list(in, params.n.value_or(0));
}

Result cmd_pairstats(const Params& params) {
  const double p = require(params.p, "p", "pairstats");
  const Graph g = load_graph(params);
  Result r;
  r.manifest = manifest_for(params);

  if (params.i || params.j) {
    const auto i = require(params.i, "i", "pairstats");
    const auto j = require(params.j, "j", "pairstats");
    if (i < 1 || j < 1) throw ParameterError("vertices are 1-based");
    const PairStats st = pair_stats(g, i - 1, j - 1, p);
    ojson doc;
    doc["manifest"] = r.manifest;
    doc["i"] = i;
    doc["j"] = j;
    doc["s"] = st.s;
    doc["t"] = st.t;
    doc["jaccard"] = st.j;
    if (p > 0.0 && g.n() >= 3) {
      doc["remainder"] = remainder_from_counts(st.s, st.t, g.n(), p);
    } else {
      doc["remainder"] = nullptr;
    }
    r.artifacts.push_back({"", doc.dump(2) + "\n"});
    return r;
  }

  if (format_or(params, "json") == "csv") {
    std::ostringstream csv;
    csv << "# jrg " << kVersion << " pairstats\n# " << manifest_comment(r.manifest) << '\n';
    csv << "i,j,s,t,jaccard\n";
    if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("p must lie in [0,1]");
    for (const auto& e : all_pairs(g, p)) {
      csv << (e.i + 1) << ',' << (e.j + 1) << ',' << e.stats.s << ',' << e.stats.t << ','
          << fmt17(e.stats.j) << '\n';
    }
    r.artifacts.push_back({"", csv.str()});
    return r;
  }

  ojson doc;
  doc["manifest"] = r.manifest;
  doc["n"] = g.n();
  doc["p"] = p;
  if (p > 0.0) {
    const GraphSummary s = graph_summary(g, p);
    doc["j_avg"] = s.j_avg;
    doc["p1"] = s.p1;
    doc["p2"] = s.p2;
    doc["paths2"] = s.paths2;
    doc["r_sum"] = s.r_sum;
    doc["identity_residual"] = decomposition_residual(s, g.n(), p);
  } else {
    doc["j_avg"] = average_jaccard(g, p);
    doc["p1"] = edge_count(g);
    doc["p2"] = path2_sum(g);
    doc["paths2"] = two_path_count(g);
    doc["r_sum"] = nullptr;
    doc["identity_residual"] = nullptr;
  }
  r.artifacts.push_back({"", doc.dump(2) + "\n"});
  return r;
}

// ---- moments ----------------------------------------------------------------

Result cmd_moments(const Params& params) {
  const auto n = require(params.n, "n", "moments");
  const auto p = require(params.p, "p", "moments");
  const MomentReport m = moment_report(n, p);
  Result r;
  r.manifest = manifest_for(params);
  ojson doc;
  doc["manifest"] = r.manifest;
  doc["n"] = m.n;
  doc["p"] = m.p;
  doc["mean"] = m.mean;
  doc["var_exact"] = m.var_exact;
  doc["var_asymptotic"] = m.var_asymptotic;
  doc["relative_gap"] = m.relative_gap;
  doc["degenerate"] = m.degenerate;
  if (!m.degenerate) {
    const InverseMoment inv = inverse_first_moment_positive(n - 2, p * (2.0 - p));
    doc["inverse_moment"] = {{"value", inv.value},
                             {"asymptotic", inv.asymptotic},
                             {"relative_gap", inv.relative_gap},
                             {"truncated_mass", inv.truncated_mass}};
  } else {
    doc["inverse_moment"] = nullptr;
  }
  r.artifacts.push_back({"", doc.dump(2) + "\n"});
  return r;
}

// ---- regime -----------------------------------------------------------------

ojson asymptote_json(const Asymptote& a) {
  const char* limit = a.limit() == Asymptote::Limit::kZero       ? "zero"
                      : a.limit() == Asymptote::Limit::kInfinite ? "infinity"
                                                                 : "finite";
  return ojson{{"coefficient", a.coefficient}, {"exponent", a.exponent}, {"limit", limit}};
}

Result cmd_regime(const Params& params) {
  if (params.family.empty()) throw UsageError("regime requires --family");
  const auto family = ProbabilityFamily::parse(params.family);
  const RegimeClass rc = classify(family);
  const FamilyLimits lim = family_limits(family);
  Result r;
  r.manifest = manifest_for(params);
  ojson doc;
  doc["manifest"] = r.manifest;
  doc["family"] = family.to_string();
  doc["pair_regime"] = std::string(to_string(rc.pair_regime));
  doc["limit_param"] = rc.limit_param;
  doc["poisson_mean"] = rc.poisson_mean();
  doc["avg_clt_applies"] = rc.avg_clt_applies;
  doc["n_min"] = family.n_min();
  doc["limits"] = {{"np2", asymptote_json(lim.np2)},
                   {"np2_1mp", asymptote_json(lim.np2_q)},
                   {"n_1mp", asymptote_json(lim.nq)},
                   {"np", asymptote_json(lim.np)},
                   {"n2_1mp", asymptote_json(lim.n2q)}};
  if (params.n) {
    doc["n"] = *params.n;
    doc["p_at_n"] = family.evaluate(static_cast<double>(*params.n));
  }
  r.artifacts.push_back({"", doc.dump(2) + "\n"});
  return r;
}

// ---- gof / sweep ------------------------------------------------------------

struct GofRun {
  EmpiricalSample raw;  // J or J_n
  GofReport report;
  std::string regime;
  std::string standardization;
  double threshold = 0.0;
};

GofRun evaluate_gof(const TrialConfig& cfg, const RegimeClass& regime,
                    const ToleranceTable& tol) {
  GofRun run;
  const std::uint64_t n = cfg.n;
  const double p = cfg.p;
  if (cfg.mode == TrialMode::kAverage) {
    run.raw = run_average_trials(cfg);
    run.regime = "AverageNormal";
    run.standardization = "n(2-p)^2/sqrt(8p(1-p)) (J_n - p/(2-p))";
    run.threshold = tol.ks_normal_max;
    if (p <= 0.0 || p >= 1.0 || run.raw.moments().variance == 0.0) {
      run.report.statistic_kind = StatisticKind::kKS;
      run.report.reference = ReferenceLaw::standard_normal();
      run.report.sample_moments = run.raw.moments();
      run.report.degenerate = true;
      return run;
    }
    run.report = ks_statistic(run.raw.map([&](double v) { return standardize_average(v, n, p); }),
                              normal_cdf);
    return run;
  }

  const PairSample pairs = run_pair_trials(cfg);
  run.raw = EmpiricalSample(pairs.jaccard(), cfg);
  run.regime = std::string(to_string(regime.pair_regime));
  switch (regime.pair_regime) {
    case PairRegime::kPairNormal:
      run.standardization = "sqrt(n(2-p)^3/(2(1-p))) (J - p/(2-p))";
      run.threshold = tol.ks_normal_max;
      if (p <= 0.0 || p >= 1.0 || run.raw.moments().variance == 0.0) {
        run.report.statistic_kind = StatisticKind::kKS;
        run.report.reference = ReferenceLaw::standard_normal();
        run.report.sample_moments = run.raw.moments();
        run.report.degenerate = true;
        return run;
      }
      run.report = ks_statistic(
          run.raw.map([&](double v) { return standardize_pair(v, n, p, regime); }), normal_cdf);
      return run;
    case PairRegime::kPairPoisson:
    case PairRegime::kDensePoisson:
    case PairRegime::kPairZero:
    case PairRegime::kDenseZero: {
      const bool dense = regime.pair_regime == PairRegime::kDensePoisson ||
                         regime.pair_regime == PairRegime::kDenseZero;
      run.standardization = dense ? "n(1-J)"
                            : regime.pair_regime == PairRegime::kPairPoisson ? "2npJ"
                                                                             : "npJ";
      run.threshold = tol.tv_poisson_max;
      const double mean = regime.poisson_mean();
      const ReferenceLaw law =
          mean > 0.0 ? ReferenceLaw::poisson(mean) : ReferenceLaw::point_mass_zero();
      run.report = tv_distance_integer(
          run.raw.map([&](double v) { return standardize_pair(v, n, p, regime); }),
          reference_pmf(law), law);
      return run;
    }
    case PairRegime::kUnclassified:
      break;
  }
  throw ParameterError("no reference law for an unclassified regime");
}

ojson report_json(const GofRun& run, const ojson& manifest) {
  ojson doc;
  doc["manifest"] = manifest;
  doc["statistic_kind"] = std::string(to_string(run.report.statistic_kind));
  if (run.report.degenerate) {
    doc["value"] = nullptr;
    doc["within_threshold"] = nullptr;
  } else {
    doc["value"] = run.report.value;
    doc["within_threshold"] = run.report.value <= run.threshold;
  }
  doc["threshold"] = run.threshold;
  doc["degenerate"] = run.report.degenerate;
  doc["reference"] = run.report.reference.describe();
  doc["regime"] = run.regime;
  doc["standardization"] = run.standardization;
  const auto& sm = run.report.sample_moments;
  doc["sample_moments"] = {{"count", sm.count}, {"mean", sm.mean}, {"variance", sm.variance}};
  const auto raw = run.raw.moments();
  doc["raw_moments"] = {{"count", raw.count}, {"mean", raw.mean}, {"variance", raw.variance}};
  return doc;
}

std::string sample_json(const EmpiricalSample& s, const ojson& manifest) {
  const TrialConfig& c = s.provenance();
  ojson doc;
  doc["manifest"] = manifest;
  doc["config"] = {{"n", c.n},
                   {"p", c.p},
                   {"trials", c.trials},
                   {"seed", c.seed.master},
                   {"mode", std::string(to_string(c.mode))}};
  doc["values"] = std::vector<double>(s.values().begin(), s.values().end());
  return doc.dump(2) + "\n";
}

// Resolves (n, p, regime) for gof from --p or --family.
std::pair<double, RegimeClass> gof_point(const Params& params, std::uint64_t n) {
  if (!params.family.empty()) {
    if (params.p) throw UsageError("give either --p or --family, not both");
    const auto family = ProbabilityFamily::parse(params.family);
    if (n < family.n_min()) {
      throw ParameterError("family " + family.to_string() + " needs n >= " +
                           std::to_string(family.n_min()));
    }
    return {family.evaluate(static_cast<double>(n)), classify(family)};
  }
  const double p = require(params.p, "p", "gof");
  return {p, regime_at_point(n, p)};
}

Result cmd_gof(const Params& params, const ToleranceTable& tol) {
  const auto n = require(params.n, "n", "gof");
  const auto [p, regime] = gof_point(params, n);
  TrialConfig cfg{n,       p, params.trials, Seed{*params.seed}, parse_trial_mode(params.mode),
                  params.threads, params.average_cap};
  const GofRun run = evaluate_gof(cfg, regime, tol);
  Result r;
  r.manifest = manifest_for(params);
  const std::string report = report_json(run, r.manifest).dump(2) + "\n";
  if (params.out.empty()) {
    r.artifacts.push_back({"", report});
    return r;
  }
  if (format_or(params, "csv") == "csv") {
    std::ostringstream csv;
    const std::string header[] = {std::string("jrg ") + kVersion + " gof",
                                  manifest_comment(r.manifest)};
    write_sample_csv(csv, run.raw, header);
    r.artifacts.push_back({"", csv.str()});
  } else {
    r.artifacts.push_back({"", sample_json(run.raw, r.manifest)});
  }
  r.artifacts.push_back({".report.json", report});
  return r;
}

Result cmd_sweep(const Params& params, const ToleranceTable& tol) {
  if (params.family.empty()) throw UsageError("sweep requires --family");
  if (params.n_list.empty()) throw UsageError("sweep requires a nonempty --n-list");
  const auto family = ProbabilityFamily::parse(params.family);
  const RegimeClass regime = classify(family);
  const TrialMode mode = parse_trial_mode(params.mode);
  Result r;
  r.manifest = manifest_for(params);
  std::ostringstream csv;
  csv << "# jrg " << kVersion << " sweep\n# " << manifest_comment(r.manifest) << '\n';
  csv << "n,p,regime,statistic,reference,value,threshold,sample_mean,sample_variance,"
         "degenerate\n";
  for (const std::uint64_t n : params.n_list) {
    if (n < family.n_min()) {
      throw ParameterError("family " + family.to_string() + " needs n >= " +
                           std::to_string(family.n_min()));
    }
    const double p = family.evaluate(static_cast<double>(n));
    TrialConfig cfg{n,   p, params.trials, Seed{stream_key(Seed{*params.seed}, n)}, mode,
                    params.threads, params.average_cap};
    const GofRun run = evaluate_gof(cfg, regime, tol);
    const auto& m = run.report.sample_moments;
    csv << n << ',' << fmt17(p) << ',' << run.regime << ','
        << to_string(run.report.statistic_kind) << ',' << run.report.reference.describe() << ','
        << (run.report.degenerate ? std::string() : fmt17(run.report.value)) << ','
        << fmt17(run.threshold) << ',' << fmt17(m.mean) << ',' << fmt17(m.variance) << ','
        << (run.report.degenerate ? "true" : "false") << '\n';
  }
  r.artifacts.push_back({"", csv.str()});
  return r;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace

void resolve_seed(Params& params) {
  if (params.seed || !is_randomized(params.command)) return;
  if (!params.entropy) {
    throw UsageError(params.command +
                     " requires --seed (or --entropy for a nondeterministic seed)");
  }
  std::random_device rd;
  params.seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

ojson manifest_for(const Params& params) {
  ojson m;
  m["command"] = params.command;
  m["version"] = kVersion;
  ojson args = ojson::object();
  const auto& c = params.command;
  auto put_opt = [&](const char* key, const auto& v) {
    if (v) args[key] = *v;
  };
  if (c == "sample") {
    put_opt("n", params.n);
    put_opt("p", params.p);
  } else if (c == "pairstats") {
    args["graph"] = params.graph;
    put_opt("n", params.n);
    put_opt("p", params.p);
    put_opt("i", params.i);
    put_opt("j", params.j);
    if (!params.format.empty()) args["format"] = params.format;
  } else if (c == "moments") {
    put_opt("n", params.n);
    put_opt("p", params.p);
  } else if (c == "regime") {
    args["family"] = params.family;
    put_opt("n", params.n);
  } else if (c == "gof") {
    args["mode"] = params.mode;
    put_opt("n", params.n);
    put_opt("p", params.p);
    if (!params.family.empty()) args["family"] = params.family;
    args["trials"] = params.trials;
    args["average_cap"] = params.average_cap;
    if (!params.format.empty()) args["format"] = params.format;
  } else if (c == "sweep") {
    args["family"] = params.family;
    args["n_list"] = params.n_list;
    args["mode"] = params.mode;
    args["trials"] = params.trials;
    args["average_cap"] = params.average_cap;
  }
  m["params"] = args;
  if (params.seed) {
    m["seed"] = *params.seed;
  } else {
    m["seed"] = nullptr;
  }
  return m;
}

Params params_from_manifest(const nlohmann::json& manifest) {
  try {
    Params p;
    p.command = manifest.at("command").get<std::string>();
    if (manifest.contains("seed") && !manifest.at("seed").is_null()) {
      p.seed = manifest.at("seed").get<std::uint64_t>();
    }
    const auto& a = manifest.at("params");
    if (a.contains("n")) p.n = a.at("n").get<std::uint64_t>();
    if (a.contains("p")) p.p = a.at("p").get<double>();
    if (a.contains("i")) p.i = a.at("i").get<std::uint64_t>();
    if (a.contains("j")) p.j = a.at("j").get<std::uint64_t>();
    if (a.contains("graph")) p.graph = a.at("graph").get<std::string>();
    if (a.contains("format")) p.format = a.at("format").get<std::string>();
    if (a.contains("family")) p.family = a.at("family").get<std::string>();
    if (a.contains("mode")) p.mode = a.at("mode").get<std::string>();
    if (a.contains("trials")) p.trials = a.at("trials").get<std::uint64_t>();
    if (a.contains("average_cap")) p.average_cap = a.at("average_cap").get<std::uint64_t>();
    if (a.contains("n_list")) p.n_list = a.at("n_list").get<std::vector<std::uint64_t>>();
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed manifest: ") + e.what());
  }
}

Result run(Params params, const ToleranceTable& tolerances) {
  resolve_seed(params);
  const auto& c = params.command;
  if (c == "sample") return cmd_sample(params);
  if (c == "pairstats") return cmd_pairstats(params);
  if (c == "moments") return cmd_moments(params);
  if (c == "regime") return cmd_regime(params);
  if (c == "gof") return cmd_gof(params, tolerances);
  if (c == "sweep") return cmd_sweep(params, tolerances);
  throw UsageError("unknown command '" + c + "'");
}

std::string emit(const Result& result, const std::string& out, double duration_seconds) {
  std::string primary;
  for (const auto& a : result.artifacts) {
    if (out.empty()) {
      if (a.suffix.empty()) primary = a.content;
      continue;
    }
    write_file(out + a.suffix, a.content);
  }
  if (!out.empty()) {
    ojson sidecar = result.manifest;
    sidecar["duration_seconds"] = duration_seconds;
    write_file(out + ".manifest.json", sidecar.dump(2) + "\n");
  }
  return primary;
}

int exit_code_for(const char* code) noexcept {
  const std::string_view c = code;
  if (c == "E_USAGE") return 2;
  if (c == "E_PARAM") return 3;
  if (c == "E_VALIDATION") return 4;
  if (c == "E_CAPACITY") return 5;
  if (c == "E_IO") return 6;
  return 1;
}

namespace {

void add_common(CLI::App* sub, Params& params) {
  sub->add_option("--seed", params.seed, "Master seed (64-bit)");
  sub->add_flag("--entropy", params.entropy, "Draw the seed from std::random_device");
  sub->add_option("--threads", params.threads, "Worker threads (0 = all cores)");
  sub->add_option("--out", params.out, "Output path (stdout if omitted)");
}

}  // namespace

int main_entry(int argc, char** argv) {
  CLI::App app{"Jaccard index statistics on G(n,p) random graphs", "jrg"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Params params;
  std::string manifest_path;

  auto* sample = app.add_subcommand("sample", "Sample G(n,p) and write an edge list");
  sample->add_option("--n", params.n, "Vertex count")->required();
  sample->add_option("--p", params.p, "Edge probability")->required();
  add_common(sample, params);

  auto* pairstats = app.add_subcommand("pairstats", "Jaccard statistics of an edge-list graph");
  pairstats->add_option("--graph", params.graph, "Edge-list file")->required();
  pairstats->add_option("--p", params.p, "p used for the empty-union convention")->required();
  pairstats->add_option("--n", params.n, "Vertex count (overrides the file)");
  pairstats->add_option("--i", params.i, "First vertex (1-based)");
  pairstats->add_option("--j", params.j, "Second vertex (1-based)");
  pairstats->add_option("--format", params.format, "csv (all pairs) or json (summary)");
  add_common(pairstats, params);

  auto* moments = app.add_subcommand("moments", "Exact and asymptotic moments of J");
  moments->add_option("--n", params.n, "Vertex count")->required();
  moments->add_option("--p", params.p, "Edge probability")->required();
  add_common(moments, params);

  auto* regime = app.add_subcommand("regime", "Classify a family p(n)");
  regime->add_option("--family", params.family, "const:<p> | pow:<c>:<g> | dense:<c>:<g>")
      ->required();
  regime->add_option("--n", params.n, "Also evaluate p at this n");
  add_common(regime, params);

  auto* gof = app.add_subcommand("gof", "Monte Carlo goodness of fit against the limit law");
  gof->add_option("--mode", params.mode, "pair_direct | pair_conditional | average");
  gof->add_option("--n", params.n, "Vertex count")->required();
  gof->add_option("--p", params.p, "Edge probability");
  gof->add_option("--family", params.family, "Family p(n) instead of --p");
  gof->add_option("--trials", params.trials, "Number of trials");
  gof->add_option("--format", params.format, "Sample format: csv or json");
  gof->add_option("--average-cap", params.average_cap, "Largest n for average mode");
  add_common(gof, params);

  auto* sweep = app.add_subcommand("sweep", "Goodness of fit along a family for several n");
  sweep->add_option("--family", params.family, "const:<p> | pow:<c>:<g> | dense:<c>:<g>")
      ->required();
  sweep->add_option("--n-list", params.n_list, "Comma-separated sizes")->delimiter(',');
  sweep->add_option("--mode", params.mode, "pair_direct | pair_conditional | average");
  sweep->add_option("--trials", params.trials, "Trials per size");
  sweep->add_option("--average-cap", params.average_cap, "Largest n for average mode");
  add_common(sweep, params);

  auto* replay = app.add_subcommand("replay", "Re-run a command from its manifest file");
  replay->add_option("--manifest", manifest_path, "Manifest JSON")->required();
  replay->add_option("--threads", params.threads, "Worker threads (0 = all cores)");
  replay->add_option("--out", params.out, "Output path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error[E_USAGE]: " << e.what() << '\n';
    return 2;
  }

  try {
    if (replay->parsed()) {
      std::ifstream in(manifest_path);
      if (!in) throw IoError("cannot open manifest '" + manifest_path + "'");
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("manifest is not JSON: ") + e.what());
      }
      Params replayed = params_from_manifest(doc.contains("manifest") ? doc.at("manifest") : doc);
      replayed.threads = params.threads;
      replayed.out = params.out;
      params = std::move(replayed);
    } else {
      params.command = app.get_subcommands().front()->get_name();
    }
    const ToleranceTable tolerances = ToleranceTable::from_environment();
    const auto start = std::chrono::steady_clock::now();
    const Result result = run(params, tolerances);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << emit(result, params.out, seconds);
    return 0;
  } catch (const Error& e) {
    std::cerr << "error[" << e.code() << "]: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error[E_INTERNAL]: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace jrg::cli
