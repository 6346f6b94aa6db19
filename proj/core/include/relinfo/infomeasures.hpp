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

#ifndef RELINFO_INFOMEASURES_HPP
#define RELINFO_INFOMEASURES_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "relinfo/distributions.hpp"

namespace relinfo {

/// Shannon entropy in bits, -sum p log2 p over the support. The entries must
/// be nonnegative and sum to 1 within 1e-9.
double shannon_entropy(std::span<const double> p);

/// Entropy in bits of one axis of a joint table.
double shannon_entropy(const JointDistribution& jd, std::size_t var);

/// Entropy in bits of the whole joint table.
double joint_entropy(const JointDistribution& jd);

/// Largest information a variable can carry: log2 of its outcome count.
double max_information(const JointDistribution& jd, std::size_t var);

/// Information carried by one variable, log2 N - H, in bits. Zero for a
/// uniform variable, log2 N for a point mass.
double information(const JointDistribution& jd, std::size_t var);

/// Information carried jointly by a group of variables, log2(prod N) - H.
double information(const JointDistribution& jd, std::span<const std::size_t> vars);

/// Information in `target` after conditioning on one concrete outcome of
/// `given`. Throws NullSupport for outcomes at or below the support floor.
double conditional_information(const JointDistribution& jd, std::size_t target,
                               std::size_t given, std::size_t outcome);

/// Information in `target` relative to `given`: the expected conditional
/// information, weighting each supported outcome of `given` by its
/// probability.
double relative_information(const JointDistribution& jd, std::size_t target, std::size_t given);

/// Relative information against a chain of conditioning variables treated as
/// one composite variable.
double relative_information(const JointDistribution& jd, std::size_t target,
                            std::span<const std::size_t> given);

/// Same quantity computed as a single sum over the joint support,
/// log2 N + sum p(a,b) log2 p(a|b), without forming per-outcome slices.
double relative_information_closed_form(const JointDistribution& jd, std::size_t target,
                                        std::size_t given);

/// Mutual information H_A + H_B - H_AB in bits between two axes.
double mutual_information(const JointDistribution& jd, std::size_t a, std::size_t b);

/// Mutual information between two disjoint groups of axes.
double mutual_information(const JointDistribution& jd, std::span<const std::size_t> a,
                          std::span<const std::size_t> b);

/// Von Neumann entropy of a density operator, in bits.
double von_neumann_entropy(const Operator& rho);

/// Quantum mutual information S(rho_A) + S(rho_B) - S(rho) in bits, where
/// part A holds the tensor factors listed in `part_a` and part B the rest.
double quantum_mutual_information(const Operator& rho, const std::vector<Index>& dims,
                                  const std::vector<std::size_t>& part_a);

/// Everything one usually wants to know about a target variable relative to
/// a conditioning chain, computed from a single joint table.
struct InfoReport {
  std::string target;
  std::string given;
  double i_max = 0.0;        ///< log2 of the target's outcome count
  double entropy = 0.0;      ///< H of the target marginal
  double information = 0.0;  ///< i_max - entropy
  double relative = 0.0;     ///< expected conditional information
  double mutual = 0.0;       ///< mutual information with the chain
  /// Conditional information per supported chain outcome, in chain order.
  std::vector<std::pair<std::string, double>> conditional;
  /// Chain outcomes whose probability sits at or below the support floor.
  std::vector<std::string> unsupported;
};

/// Builds an InfoReport for `target` against the chain `given`.
InfoReport info_report(const JointDistribution& jd, std::size_t target,
                       std::span<const std::size_t> given);

/// JSON object with fields i_max, entropy, information, conditional (object
/// keyed by chain outcome label), relative, and mutual.
nlohmann::json to_json(const InfoReport& report);

} // namespace relinfo

#endif // RELINFO_INFOMEASURES_HPP
