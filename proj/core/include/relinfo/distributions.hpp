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

#ifndef RELINFO_DISTRIBUTIONS_HPP
#define RELINFO_DISTRIBUTIONS_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "relinfo/observables.hpp"

namespace relinfo {

/// Probabilities at or below this floor count as unsupported outcomes.
inline constexpr double kSupportFloor = 1e-12;

/// Negative probabilities no larger than this in magnitude are rounding
/// residue and get clamped to zero; anything more negative is an error.
inline constexpr double kClampFloor = 1e-12;

/// Tolerance for a probability table to sum to one before renormalization,
/// and for the imaginary part of a joint trace to vanish.
inline constexpr double kStochasticTol = 1e-9;

/// One axis of a joint table: the variable name plus its outcome labels and
/// eigenvalues in outcome order.
struct VariableAxis {
  std::string name;
  std::vector<double> eigenvalues;
  std::vector<std::string> labels;

  std::size_t size() const { return labels.size(); }
};

/// Dense joint probability table over one or more variables, stored
/// row-major with the first axis slowest. Construction clamps rounding
/// residue, rejects genuinely negative entries, and renormalizes, so a held
/// table is always a distribution.
class JointDistribution {
 public:
  JointDistribution(std::vector<VariableAxis> axes, std::vector<double> table,
                    double support_floor = kSupportFloor);

  std::size_t n_vars() const { return axes_.size(); }
  const VariableAxis& axis(std::size_t v) const { return axes_.at(v); }
  const std::vector<VariableAxis>& axes() const { return axes_; }
  const std::vector<double>& table() const { return table_; }
  double support_floor() const { return support_floor_; }

  /// Largest magnitude clamped away at construction (0 when none).
  double max_clamp() const { return max_clamp_; }

  double probability_flat(std::size_t flat) const { return table_.at(flat); }
  double probability(std::span<const std::size_t> outcome) const;

  std::size_t flat_index(std::span<const std::size_t> outcome) const;
  std::vector<std::size_t> unflatten(std::size_t flat) const;

  /// Axis position of the variable with the given name; throws if absent.
  std::size_t var_index(std::string_view name) const;

 private:
  std::vector<VariableAxis> axes_;
  std::vector<double> table_;
  double support_floor_;
  double max_clamp_ = 0.0;
};

/// Single-variable outcome distribution of `a` in state `rho`.
JointDistribution born_single(const Operator& rho, const Observable& a,
                              double support_floor = kSupportFloor);

/// Joint outcome distribution of pairwise compatible variables. Incompatible
/// pairs are rejected with a NonCommuting error; the result is invariant
/// under reordering the list.
JointDistribution born_joint(const Operator& rho, std::span<const Observable> vars,
                             double support_floor = kSupportFloor);

/// Joint distribution of a classical subsystem's members followed by one
/// extra target variable (which must be compatible with every member).
JointDistribution born_joint(const Operator& rho, const ClassicalSubsystem& given,
                             const Observable& target,
                             double support_floor = kSupportFloor);

/// Marginal over the axes listed in `keep` (strictly increasing positions).
JointDistribution marginal(const JointDistribution& jd, std::span<const std::size_t> keep);

/// Distribution over the remaining axes given that axis `given_var` came out
/// at `outcome`. Throws NullSupport when that outcome's probability is at or
/// below the support floor.
JointDistribution conditional(const JointDistribution& jd, std::size_t given_var,
                              std::size_t outcome);

/// Collapses a table to two axes: `target` first, then all of `given` fused
/// into a single chain variable whose labels join the member labels with
/// commas. Orderings follow the original table.
JointDistribution collapse_pair(const JointDistribution& jd, std::size_t target,
                                std::span<const std::size_t> given);

/// CSV rendering: one header line of axis names plus "p", then one line per
/// table cell with outcome labels and the probability at 12 significant
/// digits.
std::string to_csv(const JointDistribution& jd);

nlohmann::json to_json(const JointDistribution& jd);

} // namespace relinfo

#endif // RELINFO_DISTRIBUTIONS_HPP
