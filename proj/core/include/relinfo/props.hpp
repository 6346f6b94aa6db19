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

#ifndef RELINFO_PROPS_HPP
#define RELINFO_PROPS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "relinfo/rng.hpp"
#include "relinfo/scenarios.hpp"

namespace relinfo {

struct PropsConfig {
  std::uint64_t seed = 0xC0FFEE;
  std::size_t trials = 1000;
  double tol = 1e-9;  ///< bits, for the numeric identities
};

struct PropertyResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  /// First failing trial, with enough of the inputs serialized to replay it.
  nlohmann::json counterexample;  // null when the property held

  bool pass() const { return failures == 0; }
};

/// Names of the randomized properties, in suite order.
const std::vector<std::string>& property_names();

/// Runs one property for config.trials trials. The trial stream depends only
/// on (config.seed, name), never on suite order.
PropertyResult run_property(const std::string& name, const PropsConfig& config);

/// Runs the whole suite.
std::vector<PropertyResult> run_property_suite(const PropsConfig& config);

/// Re-checks a serialized counterexample; the returned result has one trial
/// and reports whether the property now holds on those exact inputs.
PropertyResult replay_counterexample(const nlohmann::json& counterexample);

nlohmann::json to_json(const std::vector<PropertyResult>& results);

/// Random state plus two compatible nondegenerate-or-coarse variables on the
/// same space, drawn from a shared random eigenbasis. Exposed for tests that
/// need compatible triples with matching statistics guarantees.
struct CompatiblePair {
  Operator rho;
  Observable a;
  Observable b;
};
CompatiblePair random_compatible_pair(Rng& rng, Index dim);

/// Serialization helpers shared by the property suite and its tests.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);
nlohmann::json observable_to_json(const Observable& obs);
Observable observable_from_json(const nlohmann::json& j);

} // namespace relinfo

#endif // RELINFO_PROPS_HPP
