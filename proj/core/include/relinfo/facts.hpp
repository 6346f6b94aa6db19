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

#ifndef RELINFO_FACTS_HPP
#define RELINFO_FACTS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "relinfo/infomeasures.hpp"

namespace relinfo {

/// Default slack, in bits, under which a variable counts as maximally
/// informative and hence as a fact.
inline constexpr double kFactTol = 1e-6;

enum class FactStatus {
  Fact,         ///< information reaches its maximum unconditionally
  RelativeFact, ///< information reaches its maximum relative to a subsystem
  NotFact,      ///< slack above tolerance
};

/// Verdict of a fact test: how far the measured information fell short of
/// the maximum, and the tolerance the verdict was taken at.
struct FactVerdict {
  std::string target;
  FactStatus status = FactStatus::NotFact;
  std::string relative_to;                ///< conditioning chain; empty if none
  std::optional<std::string> at_outcome;  ///< set when judged at one outcome
  double slack_bits = 0.0;                ///< i_max - measured information
  double tolerance_bits = kFactTol;
};

/// Is `target` a fact outright: does its unconditional information reach
/// i_max within `tol` bits?
FactVerdict is_fact(const JointDistribution& jd, std::size_t target, double tol = kFactTol);

/// Is `target` a fact relative to the conditioning chain `given`: does the
/// relative information reach i_max within `tol` bits?
FactVerdict is_relative_fact(const JointDistribution& jd, std::size_t target,
                             std::span<const std::size_t> given, double tol = kFactTol);
FactVerdict is_relative_fact(const JointDistribution& jd, std::size_t target, std::size_t given,
                             double tol = kFactTol);

/// Same test at one concrete outcome of the conditioning variable. Throws
/// NullSupport when the outcome is unsupported.
FactVerdict is_relative_fact_at(const JointDistribution& jd, std::size_t target,
                                std::size_t given, std::size_t outcome, double tol = kFactTol);

/// Verdict and full information report for one target as seen from a
/// classical subsystem. Targets that do not commute with every member are
/// skipped, not failed, with the reason recorded.
struct TargetReport {
  std::string target;
  bool skipped = false;
  std::string skip_reason;
  InfoReport info;
  FactVerdict verdict;
};

/// All fact verdicts relative to one classical subsystem in one state.
struct Perspective {
  std::string subsystem;
  std::string state_label;
  double tolerance_bits = kFactTol;
  std::vector<TargetReport> targets;
};

Perspective perspective_of(const Operator& rho, const ClassicalSubsystem& subsystem,
                           std::span<const Observable> targets, double tol = kFactTol,
                           std::string state_label = {});

/// Comparison of two perspectives on one target variable. The perspectives
/// agree when the target is a relative fact for both subsystems and the
/// outcome each subsystem's record points to is the same wherever both
/// records occur together.
struct AgreementReport {
  std::string target;
  std::string subsystem_a;
  std::string subsystem_b;
  bool relative_fact_a = false;
  bool relative_fact_b = false;
  bool assignments_match = false;
  bool agree = false;
  double tolerance_bits = kFactTol;
  /// Supported record outcome -> assigned target outcome, per subsystem.
  std::vector<std::pair<std::string, std::string>> assignment_a;
  std::vector<std::pair<std::string, std::string>> assignment_b;
};

AgreementReport perspectives_agree(const Operator& rho, const ClassicalSubsystem& a,
                                   const ClassicalSubsystem& b, const Observable& target,
                                   double tol = kFactTol);

nlohmann::json to_json(const FactVerdict& verdict);
nlohmann::json to_json(const Perspective& perspective);
nlohmann::json to_json(const AgreementReport& report);

const char* to_string(FactStatus status);

} // namespace relinfo

#endif // RELINFO_FACTS_HPP
