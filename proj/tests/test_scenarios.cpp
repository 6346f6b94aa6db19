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

#include <cmath>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include <doctest.h>

#include "relinfo/scenarios.hpp"

using namespace relinfo;

namespace {

constexpr double kTsirelson = 2.8284271247461903;  // 2 sqrt(2)
constexpr double kRootTwoOverEight = 0.17677669529663687;

const Assertion& find_assertion(const ScenarioResult& r, const std::string& context,
                                const std::string& description) {
  for (const auto& a : r.assertions) {
    if (a.context == context && a.description == description) return a;
  }
  FAIL(("missing assertion: " + context + " / " + description).c_str());
  return r.assertions.front();
}

} // namespace

TEST_CASE("merge scenario reproduces the recorded verdict matrix") {
  ScenarioResult r = scenario_merge();
  CHECK(r.name == "merge");
  CHECK(r.all_pass());
  CHECK(r.assertions.size() == 23);
  REQUIRE(r.stages.size() == 4);
  CHECK(r.stages[0].label == "psi0");
  CHECK(r.stages[3].label == "psi2p");
  CHECK(r.stages[2].perspectives.size() == 1);

  // The 12 relative-fact verdicts, stage by stage.
  const std::map<std::pair<std::string, std::string>, bool> matrix{
      {{"psi0", "no record of the qubit exists yet"}, false},
      {{"psi0", "the second register is equally ignorant"}, false},
      {{"psi1", "the qubit outcome is definite relative to register A"}, true},
      {{"psi1", "the qubit stays undefined relative to register B"}, false},
      {{"psi2", "the first record persists"}, true},
      {{"psi2", "the second register caught up"}, true},
      {{"psi2", "register B also fixes register A"}, true},
      {{"psi2", "register A also fixes register B"}, true},
      {{"psi2p", "the rotated variable is definite relative to register B"}, true},
      {{"psi2p", "the rotated variable is undefined relative to register A"}, false},
      {{"psi2p", "the registers no longer fix each other"}, false},
      {{"psi2p", "the original records dissolved"}, false},
  };
  for (const auto& [key, expected] : matrix) {
    const Assertion& a = find_assertion(r, key.first, key.second);
    CHECK(a.pass);
    CHECK(a.measured == (expected ? 1.0 : 0.0));
  }
}

TEST_CASE("epr scenario holds in both bases and rejects the mixed record") {
  ScenarioResult r = scenario_epr();
  CHECK(r.name == "epr");
  CHECK(r.all_pass());
  CHECK(r.assertions.size() == 13);
  const Assertion& match = find_assertion(r, "phi_plus",
                                          "matching basis records determine each other");
  CHECK(match.measured == doctest::Approx(1.0).epsilon(1e-9));
  const Assertion& reject =
      find_assertion(r, "phi_plus", "incompatible variables cannot form one record");
  CHECK(reject.pass);
}

TEST_CASE("ghz scenario separates the plain and rotated bases") {
  ScenarioResult r = scenario_ghz();
  CHECK(r.name == "ghz");
  CHECK(r.all_pass());
  CHECK(r.assertions.size() == 20);

  std::size_t yes = 0;
  std::size_t no = 0;
  for (const auto& a : r.assertions) {
    if (a.tolerance != 0.5) continue;
    if (a.expected == 1.0) ++yes;
    if (a.expected == 0.0) ++no;
  }
  // 6 pairwise plain-basis relative facts + 3 agreements + 1 joint record,
  // against 6 rotated-basis non-facts.
  CHECK(yes == 10);
  CHECK(no == 6);
}

TEST_CASE("wigner scenario keeps the outside account consistent") {
  ScenarioResult r = scenario_wigner();
  CHECK(r.name == "wigner");
  CHECK(r.all_pass());
  CHECK(r.assertions.size() == 25);
  REQUIRE(r.stages.size() == 4);
  CHECK(r.stages[0].label == "Psi0");
  CHECK(r.stages[3].label == "Psi3");
}

TEST_CASE("ewfs statistics sit at the Tsirelson point") {
  EwfsStatistics stats = ewfs_statistics();
  CHECK(std::abs(stats.chsh - kTsirelson) <= 1e-9);
  CHECK(stats.record_off_support <= 1e-12);
  CHECK(stats.consistency_gap <= 1e-9);
  CHECK(std::abs(stats.deviation - kRootTwoOverEight) <= 1e-9);
  CHECK(stats.deviation > 0.05);

  // Default settings: measurement bases at the standard CHSH angles.
  CHECK(stats.settings.alice_angles[0] == doctest::Approx(0.0));
  CHECK(stats.settings.alice_angles[1] == doctest::Approx(3.14159265358979323846 / 2));
  CHECK(stats.settings.bob_angles[0] == doctest::Approx(3.14159265358979323846 / 4));

  // Each setting pair's distribution is normalized.
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      double sum = 0.0;
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) sum += stats.f[x][y][a][b];
      }
      CHECK(std::abs(sum - 1.0) <= 1e-9);
    }
  }

  ScenarioResult r = scenario_ewfs();
  CHECK(r.name == "ewfs");
  CHECK(r.all_pass());
  CHECK(r.assertions.size() == 8);
}

TEST_CASE("coupling sweep scenario carries its csv artifacts") {
  ScenarioResult r = scenario_coupling_sweep(200);
  CHECK(r.name == "appb");
  CHECK(r.all_pass());
  CHECK(r.assertions.size() == 19);
  REQUIRE(r.stages.size() == 2);
  CHECK(r.stages[0].label == "ideal");
  CHECK(r.stages[1].label == "full_rank");
  REQUIRE(r.artifacts.count("sweep_ideal.csv") == 1);
  REQUIRE(r.artifacts.count("sweep_fullrank.csv") == 1);
  CHECK(r.artifacts.at("sweep_ideal.csv").rfind(
            "t,omega_t,I_mutual_bits,I_relative_bits,I_target_bits", 0) == 0);

  ScenarioResult failing = scenario_coupling_sweep(5);
  CHECK(failing.assertions.size() == 19);
}

TEST_CASE("scenario reports serialize with a versioned schema") {
  ScenarioResult r = scenario_epr();
  nlohmann::json j = to_json(r);
  CHECK(j["schema_version"] == 1);
  CHECK(j["kind"] == "scenario");
  CHECK(j["name"] == "epr");
  CHECK(j["pass"].get<bool>());
  CHECK(j["failures"].get<std::size_t>() == 0);
  CHECK(j["assertions"].size() == 13);
  REQUIRE(j["stages"].size() == 1);
  CHECK(j["stages"][0]["label"] == "phi_plus");

  nlohmann::json sweep = to_json(scenario_coupling_sweep(50));
  CHECK(sweep["artifacts"].contains("sweep_ideal.csv"));
}
