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

#include "relinfo/facts.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <nlohmann/json.hpp>

namespace relinfo {

FactVerdict is_fact(const JointDistribution& jd, std::size_t target, double tol) {
  FactVerdict v;
  v.target = jd.axis(target).name;
  v.tolerance_bits = tol;
  v.slack_bits = max_information(jd, target) - information(jd, target);
  v.status = v.slack_bits <= tol ? FactStatus::Fact : FactStatus::NotFact;
  return v;
}

FactVerdict is_relative_fact(const JointDistribution& jd, std::size_t target,
                             std::span<const std::size_t> given, double tol) {
  FactVerdict v;
  v.target = jd.axis(target).name;
  for (std::size_t i = 0; i < given.size(); ++i) {
    if (i > 0) v.relative_to += ",";
    v.relative_to += jd.axis(given[i]).name;
  }
  v.tolerance_bits = tol;
  v.slack_bits = max_information(jd, target) - relative_information(jd, target, given);
  v.status = v.slack_bits <= tol ? FactStatus::RelativeFact : FactStatus::NotFact;
  return v;
}

FactVerdict is_relative_fact(const JointDistribution& jd, std::size_t target, std::size_t given,
                             double tol) {
  std::size_t chain[1] = {given};
  return is_relative_fact(jd, target, std::span<const std::size_t>(chain), tol);
}

FactVerdict is_relative_fact_at(const JointDistribution& jd, std::size_t target,
                                std::size_t given, std::size_t outcome, double tol) {
  FactVerdict v;
  v.target = jd.axis(target).name;
  v.relative_to = jd.axis(given).name;
  v.at_outcome = jd.axis(given).labels.at(outcome);
  v.tolerance_bits = tol;
  v.slack_bits =
      max_information(jd, target) - conditional_information(jd, target, given, outcome);
  v.status = v.slack_bits <= tol ? FactStatus::RelativeFact : FactStatus::NotFact;
  return v;
}

Perspective perspective_of(const Operator& rho, const ClassicalSubsystem& subsystem,
                           std::span<const Observable> targets, double tol,
                           std::string state_label) {
  Perspective p;
  p.subsystem = subsystem.name();
  p.state_label = std::move(state_label);
  p.tolerance_bits = tol;

  for (const Observable& target : targets) {
    TargetReport tr;
    tr.target = target.name();

    std::string blocker;
    if (target.dim() != subsystem.dim()) {
      blocker = "acts on a space of dim " + std::to_string(target.dim()) +
                ", subsystem lives in dim " + std::to_string(subsystem.dim());
    } else {
      for (const Observable& member : subsystem.members()) {
        if (!commutes(member, target)) {
          blocker = "does not commute with member '" + member.name() + "'";
          break;
        }
      }
    }
    if (!blocker.empty()) {
      tr.skipped = true;
      tr.skip_reason = blocker;
      p.targets.push_back(std::move(tr));
      continue;
    }

    JointDistribution jd = born_joint(rho, subsystem, target);
    std::size_t t = jd.n_vars() - 1;
    std::vector<std::size_t> chain(t);
    std::iota(chain.begin(), chain.end(), 0);
    tr.info = info_report(jd, t, chain);
    tr.verdict = is_relative_fact(jd, t, chain, tol);
    p.targets.push_back(std::move(tr));
  }
  return p;
}

namespace {

/// Most likely target outcome for each supported chain outcome of `pair`
/// (axes: target, chain), as chain label -> target label.
std::vector<std::pair<std::string, std::string>> assignments(const JointDistribution& pair) {
  std::size_t na = pair.axis(0).size();
  std::size_t nb = pair.axis(1).size();
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t b = 0; b < nb; ++b) {
    double pb = 0.0;
    std::size_t best = 0;
    double best_p = -1.0;
    for (std::size_t a = 0; a < na; ++a) {
      double pab = pair.table()[a * nb + b];
      pb += pab;
      if (pab > best_p) {
        best_p = pab;
        best = a;
      }
    }
    if (pb <= pair.support_floor()) continue;
    out.emplace_back(pair.axis(1).labels[b], pair.axis(0).labels[best]);
  }
  return out;
}

} // namespace

AgreementReport perspectives_agree(const Operator& rho, const ClassicalSubsystem& a,
                                   const ClassicalSubsystem& b, const Observable& target,
                                   double tol) {
  AgreementReport report;
  report.target = target.name();
  report.subsystem_a = a.name();
  report.subsystem_b = b.name();
  report.tolerance_bits = tol;

  // One joint table over both subsystems and the target. Building it already
  // enforces that the two record chains are compatible with each other.
  std::vector<Observable> vars = a.members();
  vars.insert(vars.end(), b.members().begin(), b.members().end());
  vars.push_back(target);
  JointDistribution jd = born_joint(rho, vars);

  std::size_t t = jd.n_vars() - 1;
  std::vector<std::size_t> chain_a(a.size());
  std::iota(chain_a.begin(), chain_a.end(), 0);
  std::vector<std::size_t> chain_b(b.size());
  std::iota(chain_b.begin(), chain_b.end(), a.size());

  report.relative_fact_a =
      is_relative_fact(jd, t, chain_a, tol).status == FactStatus::RelativeFact;
  report.relative_fact_b =
      is_relative_fact(jd, t, chain_b, tol).status == FactStatus::RelativeFact;

  JointDistribution pair_a = collapse_pair(jd, t, chain_a);
  JointDistribution pair_b = collapse_pair(jd, t, chain_b);
  report.assignment_a = assignments(pair_a);
  report.assignment_b = assignments(pair_b);

  // Both assignments must point at the same target outcome wherever the two
  // records are jointly supported.
  std::vector<std::size_t> both(chain_a);
  both.insert(both.end(), chain_b.begin(), chain_b.end());
  JointDistribution records = marginal(jd, both);
  auto label_of = [](const std::vector<std::pair<std::string, std::string>>& table,
                     const std::string& key) -> const std::string* {
    for (const auto& [k, v] : table) {
      if (k == key) return &v;
    }
    return nullptr;
  };

  bool match = true;
  for (std::size_t flat = 0; flat < records.table().size(); ++flat) {
    if (records.table()[flat] <= records.support_floor()) continue;
    auto outcome = records.unflatten(flat);
    std::string key_a, key_b;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i > 0) key_a += ",";
      key_a += records.axis(i).labels[outcome[i]];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i > 0) key_b += ",";
      key_b += records.axis(a.size() + i).labels[outcome[a.size() + i]];
    }
    const std::string* va = label_of(report.assignment_a, key_a);
    const std::string* vb = label_of(report.assignment_b, key_b);
    if (va == nullptr || vb == nullptr || *va != *vb) {
      match = false;
      break;
    }
  }
  report.assignments_match = match;
  report.agree = report.relative_fact_a && report.relative_fact_b && match;
  return report;
}

const char* to_string(FactStatus status) {
  switch (status) {
    case FactStatus::Fact:
      return "fact";
    case FactStatus::RelativeFact:
      return "relative_fact";
    case FactStatus::NotFact:
      return "not_fact";
  }
  return "unknown";
}

nlohmann::json to_json(const FactVerdict& verdict) {
  nlohmann::json j{{"target", verdict.target},
                   {"status", to_string(verdict.status)},
                   {"slack_bits", verdict.slack_bits},
                   {"tolerance_bits", verdict.tolerance_bits}};
  if (!verdict.relative_to.empty()) j["relative_to"] = verdict.relative_to;
  if (verdict.at_outcome) j["at_outcome"] = *verdict.at_outcome;
  return j;
}

nlohmann::json to_json(const Perspective& perspective) {
  nlohmann::json targets = nlohmann::json::array();
  for (const auto& tr : perspective.targets) {
    nlohmann::json t{{"target", tr.target}, {"skipped", tr.skipped}};
    if (tr.skipped) {
      t["skip_reason"] = tr.skip_reason;
    } else {
      t["info"] = to_json(tr.info);
      t["verdict"] = to_json(tr.verdict);
    }
    targets.push_back(std::move(t));
  }
  return nlohmann::json{{"subsystem", perspective.subsystem},
                        {"state", perspective.state_label},
                        {"tolerance_bits", perspective.tolerance_bits},
                        {"targets", targets}};
}

nlohmann::json to_json(const AgreementReport& report) {
  auto table = [](const std::vector<std::pair<std::string, std::string>>& rows) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : rows) j[k] = v;
    return j;
  };
  return nlohmann::json{{"target", report.target},
                        {"subsystem_a", report.subsystem_a},
                        {"subsystem_b", report.subsystem_b},
                        {"relative_fact_a", report.relative_fact_a},
                        {"relative_fact_b", report.relative_fact_b},
                        {"assignments_match", report.assignments_match},
                        {"agree", report.agree},
                        {"tolerance_bits", report.tolerance_bits},
                        {"assignment_a", table(report.assignment_a)},
                        {"assignment_b", table(report.assignment_b)}};
}

} // namespace relinfo
