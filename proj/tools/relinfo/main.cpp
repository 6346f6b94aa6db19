// Copyright 2026 The relinfo authors
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

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "relinfo/props.hpp"
#include "relinfo/scenarios.hpp"
#include "relinfo/sdl.hpp"

namespace fs = std::filesystem;

namespace {

// Exit-code contract: 0 all assertions/properties pass, 1 a scenario
// assertion or property failed (parse and evaluation diagnostics included),
// 2 usage or I/O error.
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  double tol = 0.0;  ///< 0 means "use the library defaults"
  long samples = 1000;
  std::uint64_t seed = relinfo::PropsConfig{}.seed;
  std::string out;
  std::string format = "json";

  bool want_json() const { return format != "csv"; }
  bool want_csv() const { return format != "json"; }
};

bool write_atomic(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    f << content;
    if (!f) {
      std::error_code ec;
      fs::remove(tmp, ec);
      return false;
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  return !ec;
}

/// Writes (or prints) one scenario report plus its CSV artifacts.
/// Returns kExitPass/kExitUsage.
int emit_scenario(const relinfo::ScenarioResult& result, const Options& opt,
                  const std::string& base) {
  for (const auto& a : result.assertions) {
    std::fprintf(stderr, "%s  [%s] %s: %.12g (expected %.12g, tol %g)\n",
                 a.pass ? "pass" : "FAIL", a.context.c_str(), a.description.c_str(), a.measured,
                 a.expected, a.tolerance);
  }
  std::fprintf(stderr, "%s: %zu assertions, %zu failed\n", result.name.c_str(),
               result.assertions.size(), result.failures());

  if (opt.want_json()) {
    std::string text = to_json(result).dump(2) + "\n";
    if (opt.out.empty()) {
      std::fputs(text.c_str(), stdout);
    } else if (!write_atomic(fs::path(opt.out) / (base + ".json"), text)) {
      std::fprintf(stderr, "error: cannot write %s.json under %s\n", base.c_str(),
                   opt.out.c_str());
      return kExitUsage;
    }
  }
  if (opt.want_csv()) {
    fs::path dir = opt.out.empty() ? fs::current_path() : fs::path(opt.out);
    for (const auto& [name, content] : result.artifacts) {
      if (!write_atomic(dir / name, content)) {
        std::fprintf(stderr, "error: cannot write artifact %s\n", name.c_str());
        return kExitUsage;
      }
    }
  }
  return kExitPass;
}

int cmd_run(const std::vector<std::string>& paths, const Options& opt) {
  int exit = kExitPass;
  for (const auto& path : paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      std::fprintf(stderr, "%s: error: cannot open file\n", path.c_str());
      exit = std::max(exit, kExitUsage);
      continue;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    auto parsed = relinfo::sdl::parse(buffer.str());
    for (const auto& d : parsed.diagnostics) {
      std::fprintf(stderr, "%s\n", d.render(path).c_str());
    }
    if (!parsed.ok()) {
      exit = std::max(exit, kExitFail);
      continue;
    }

    relinfo::sdl::EvalOptions eval_opts;
    eval_opts.name = fs::path(path).stem().string();
    if (opt.tol > 0.0) eval_opts.fact_tol = opt.tol;
    auto eval = relinfo::sdl::evaluate(*parsed.ast, eval_opts);
    for (const auto& d : eval.diagnostics) {
      std::fprintf(stderr, "%s\n", d.render(path).c_str());
    }
    if (!eval.ok()) {
      exit = std::max(exit, kExitFail);
      continue;
    }

    int emitted = emit_scenario(*eval.result, opt, eval_opts.name);
    if (emitted != kExitPass) return emitted;
    if (!eval.result->all_pass()) exit = std::max(exit, kExitFail);
  }
  return exit;
}

int cmd_builtin(const std::string& name, const Options& opt) {
  const double fact_tol = opt.tol > 0.0 ? opt.tol : relinfo::kFactTol;
  relinfo::ScenarioResult result;
  if (name == "merge") {
    result = relinfo::scenario_merge(fact_tol);
  } else if (name == "epr") {
    result = relinfo::scenario_epr(fact_tol);
  } else if (name == "ghz") {
    result = relinfo::scenario_ghz(fact_tol);
  } else if (name == "wigner") {
    result = relinfo::scenario_wigner(fact_tol);
  } else if (name == "ewfs") {
    result = relinfo::scenario_ewfs({}, fact_tol);
  } else if (name == "appb") {
    result = relinfo::scenario_coupling_sweep(static_cast<std::size_t>(opt.samples), 1e-6, 1.0,
                                              fact_tol);
  } else {
    std::fprintf(stderr,
                 "error: unknown builtin '%s'; available: merge, epr, ghz, wigner, ewfs, appb\n",
                 name.c_str());
    return kExitUsage;
  }
  int emitted = emit_scenario(result, opt, result.name);
  if (emitted != kExitPass) return emitted;
  return result.all_pass() ? kExitPass : kExitFail;
}

/// Accepts either a bare counterexample object or a whole props report, in
/// which case the first failing property's counterexample is replayed.
int cmd_replay(const std::string& path, const Options& opt) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::fprintf(stderr, "%s: error: cannot open file\n", path.c_str());
    return kExitUsage;
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    std::fprintf(stderr, "%s: error: %s\n", path.c_str(), e.what());
    return kExitUsage;
  }
  if (doc.contains("results")) {
    nlohmann::json picked;
    for (const auto& entry : doc["results"]) {
      if (entry.value("failures", 0) > 0) {
        picked = entry["counterexample"];
        break;
      }
    }
    if (picked.is_null()) {
      std::fprintf(stderr, "%s: error: report has no failing property to replay\n",
                   path.c_str());
      return kExitUsage;
    }
    doc = std::move(picked);
  }
  try {
    relinfo::PropertyResult result = relinfo::replay_counterexample(doc);
    std::fprintf(stderr, "%s: %s\n", result.name.c_str(),
                 result.pass() ? "pass (counterexample no longer fails)" : "fails as recorded");
    if (opt.want_json()) {
      std::fputs(to_json(std::vector<relinfo::PropertyResult>{result}).dump(2).c_str(), stdout);
      std::fputs("\n", stdout);
    }
    return result.pass() ? kExitPass : kExitFail;
  } catch (const relinfo::Error& e) {
    std::fprintf(stderr, "%s: error: %s\n", path.c_str(), e.what());
    return kExitUsage;
  }
}

int cmd_props(const Options& opt) {
  relinfo::PropsConfig config;
  config.seed = opt.seed;
  config.trials = static_cast<std::size_t>(opt.samples);
  if (opt.tol > 0.0) config.tol = opt.tol;

  std::vector<relinfo::PropertyResult> results = relinfo::run_property_suite(config);
  bool pass = true;
  for (const auto& r : results) {
    pass = pass && r.pass();
    std::fprintf(stderr, "%s  %s: %zu/%zu trials\n", r.pass() ? "pass" : "FAIL", r.name.c_str(),
                 r.trials - r.failures, r.trials);
  }

  nlohmann::json report = to_json(results);
  report["seed"] = config.seed;
  report["trials"] = config.trials;
  std::string text = report.dump(2) + "\n";
  if (opt.out.empty()) {
    std::fputs(text.c_str(), stdout);
  } else if (!write_atomic(fs::path(opt.out) / "props.json", text)) {
    std::fprintf(stderr, "error: cannot write props.json under %s\n", opt.out.c_str());
    return kExitUsage;
  }
  return pass ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"relational information measures: scenarios, sweeps, property suite"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--tol", opt.tol, "tolerance override in bits (fact verdicts, property checks)")
      ->check(CLI::PositiveNumber);
  app.add_option("--samples", opt.samples,
                 "sweep sample count for 'builtin appb'; trial count for 'props'")
      ->check(CLI::Range(2L, 100000000L));
  app.add_option("--seed", opt.seed, "RNG seed for the property suite")
      ->envname("RELINFO_SEED");
  app.add_option("--out", opt.out, "directory for reports and CSV artifacts (default: stdout)");
  app.add_option("--format", opt.format, "json | csv | both (default json)")
      ->check(CLI::IsMember({"json", "csv", "both"}));

  std::vector<std::string> files;
  auto* run = app.add_subcommand("run", "evaluate scenario files");
  run->fallthrough();
  run->add_option("files", files, "scenario (.sdl) files")->required();

  std::string builtin_name;
  auto* builtin = app.add_subcommand("builtin", "run a built-in scenario");
  builtin->fallthrough();
  builtin->add_option("name", builtin_name, "merge | epr | ghz | wigner | ewfs | appb")
      ->required();

  std::string replay_path;
  auto* props = app.add_subcommand("props", "run the randomized property suite");
  props->fallthrough();
  props->add_option("--replay", replay_path,
                    "re-evaluate a serialized counterexample (file or whole report)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  if (!opt.out.empty()) {
    std::error_code ec;
    fs::create_directories(opt.out, ec);
    if (ec) {
      std::fprintf(stderr, "error: cannot create output directory %s\n", opt.out.c_str());
      return kExitUsage;
    }
  }

  try {
    if (run->parsed()) return cmd_run(files, opt);
    if (builtin->parsed()) return cmd_builtin(builtin_name, opt);
    if (!replay_path.empty()) return cmd_replay(replay_path, opt);
    return cmd_props(opt);
  } catch (const relinfo::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
}
