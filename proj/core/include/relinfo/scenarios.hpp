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

#ifndef RELINFO_SCENARIOS_HPP
#define RELINFO_SCENARIOS_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "relinfo/dynamics.hpp"

namespace relinfo {

/// One checked claim inside a scenario. `context` names the stage of the
/// story the claim belongs to; numeric claims pass when |measured -
/// expected| <= tolerance, boolean claims encode yes as 1 and no as 0.
struct Assertion {
  std::string description;
  std::string context;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// A named preparation of the story, with whatever reports were taken in it.
struct Stage {
  std::string label;
  std::vector<Perspective> perspectives;
  std::vector<InfoReport> reports;
};

struct ScenarioResult {
  std::string name;
  std::vector<Stage> stages;
  std::vector<Assertion> assertions;
  /// Generated files by name, e.g. sweep CSVs, ready to be written out.
  std::map<std::string, std::string> artifacts;

  bool all_pass() const;
  std::size_t failures() const;
};

nlohmann::json to_json(const ScenarioResult& result);

/// Tolerance for numeric scenario claims, in bits or probability.
inline constexpr double kScenarioTol = 1e-9;

/// Two bystander registers successively record a qubit; the records, and the
/// qubit relative to each record, are checked across four preparations of
/// increasing correlation.
ScenarioResult scenario_merge(double fact_tol = kFactTol);

/// A maximally entangled qubit pair: each side's variable is a relative fact
/// for the other in matching bases, with no absolute fact anywhere.
ScenarioResult scenario_epr(double fact_tol = kFactTol);

/// Three-qubit maximally entangled state: pairwise records fix the basis
/// variables while the complementary ones stay maximally uncertain.
ScenarioResult scenario_ghz(double fact_tol = kFactTol);

/// A friend measures a qubit inside a lab, an outside observer then measures
/// the lab. Both sequences of records are tracked, including the stage where
/// the outside observer knows the measurement happened without its outcome.
ScenarioResult scenario_wigner(double fact_tol = kFactTol);

/// Measurement angles for the extended two-observer experiment. Defaults
/// give the maximal Bell violation.
struct EwfsSettings {
  std::array<double, 2> alice_angles;
  std::array<double, 2> bob_angles;
  EwfsSettings();
};

/// Joint statistics of the extended experiment: the observed correlations
/// f(ab|xy), the record-resolved tables p(abc|xy) obtained by first reading
/// the inside record, and the gaps between the two.
struct EwfsStatistics {
  EwfsSettings settings;
  /// f[x][y][a][b], outcome index 0 = -1, 1 = +1.
  std::array<std::array<std::array<std::array<double, 2>, 2>, 2>, 2> f{};
  /// pqm[x][y][a][b][c], c over the inside pointer outcomes.
  std::array<std::array<std::array<std::array<std::array<double, 3>, 2>, 2>, 2>, 2> pqm{};
  double chsh = 0.0;             ///< E11 + E12 + E21 - E22 from f
  double record_off_support = 0.0;  ///< weight off the aligned cells when x = 1
  double consistency_gap = 0.0;  ///< max |f - sum_c pqm| over x = 1 cells
  double deviation = 0.0;        ///< max |f - sum_c pqm| over x = 2 cells
};

EwfsStatistics ewfs_statistics(const EwfsSettings& settings = {});

ScenarioResult scenario_ewfs(const EwfsSettings& settings = {}, double fact_tol = kFactTol);

/// A two-outcome variable written into a three-state pointer by the coupling
/// Hamiltonian, swept over a quarter period. Runs the exact preparation and
/// a full-rank variant mixed with epsilon of the identity; emits one CSV per
/// run.
ScenarioResult scenario_coupling_sweep(std::size_t samples = 1000, double epsilon = 1e-6,
                                       double omega = 1.0, double fact_tol = kFactTol);

} // namespace relinfo

#endif // RELINFO_SCENARIOS_HPP
