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

#include "relinfo/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <utility>

#include <nlohmann/json.hpp>

namespace relinfo {

namespace {

std::string format_prob(double p) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", p);
  return buf;
}

} // namespace

JointDistribution::JointDistribution(std::vector<VariableAxis> axes, std::vector<double> table,
                                     double support_floor)
    : axes_(std::move(axes)), table_(std::move(table)), support_floor_(support_floor) {
  if (axes_.empty()) {
    throw Error(ErrorKind::InvalidArgument, "joint distribution needs at least one axis");
  }
  std::size_t cells = 1;
  for (const auto& ax : axes_) {
    if (ax.size() == 0) {
      throw Error(ErrorKind::InvalidArgument, "axis '" + ax.name + "' has no outcomes");
    }
    if (ax.eigenvalues.size() != ax.labels.size()) {
      throw Error(ErrorKind::InvalidArgument,
                  "axis '" + ax.name + "' has mismatched labels and eigenvalues");
    }
    cells *= ax.size();
  }
  if (table_.size() != cells) {
    throw Error(ErrorKind::InvalidArgument,
                "table has " + std::to_string(table_.size()) + " cells, axes imply " +
                    std::to_string(cells));
  }
  if (support_floor_ < 0.0) {
    throw Error(ErrorKind::InvalidArgument, "support floor must be nonnegative");
  }

  double sum = 0.0;
  for (double& p : table_) {
    if (p < 0.0) {
      if (p < -kClampFloor) {
        throw Error(ErrorKind::NotNormalized,
                    "probability " + std::to_string(p) + " is negative beyond rounding residue");
      }
      max_clamp_ = std::max(max_clamp_, -p);
      p = 0.0;
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kStochasticTol) {
    throw Error(ErrorKind::NotNormalized,
                "probabilities sum to " + std::to_string(sum) + ", expected 1");
  }
  for (double& p : table_) p /= sum;
}

double JointDistribution::probability(std::span<const std::size_t> outcome) const {
  return table_[flat_index(outcome)];
}

std::size_t JointDistribution::flat_index(std::span<const std::size_t> outcome) const {
  if (outcome.size() != axes_.size()) {
    throw Error(ErrorKind::InvalidArgument, "outcome tuple arity does not match the table");
  }
  std::size_t flat = 0;
  for (std::size_t v = 0; v < axes_.size(); ++v) {
    if (outcome[v] >= axes_[v].size()) {
      throw Error(ErrorKind::InvalidArgument,
                  "outcome index " + std::to_string(outcome[v]) + " out of range for axis '" +
                      axes_[v].name + "'");
    }
    flat = flat * axes_[v].size() + outcome[v];
  }
  return flat;
}

std::vector<std::size_t> JointDistribution::unflatten(std::size_t flat) const {
  std::vector<std::size_t> outcome(axes_.size());
  for (std::size_t v = axes_.size(); v-- > 0;) {
    outcome[v] = flat % axes_[v].size();
    flat /= axes_[v].size();
  }
  return outcome;
}

std::size_t JointDistribution::var_index(std::string_view name) const {
  for (std::size_t v = 0; v < axes_.size(); ++v) {
    if (axes_[v].name == name) return v;
  }
  throw Error(ErrorKind::InvalidArgument, "no axis named '" + std::string(name) + "'");
}

namespace {

VariableAxis axis_of(const Observable& obs) {
  VariableAxis ax;
  ax.name = obs.name();
  ax.eigenvalues.reserve(obs.n_outcomes());
  ax.labels.reserve(obs.n_outcomes());
  for (const auto& o : obs.spectrum()) {
    ax.eigenvalues.push_back(o.eigenvalue);
    ax.labels.push_back(o.label);
  }
  return ax;
}

} // namespace

JointDistribution born_single(const Operator& rho, const Observable& a, double support_floor) {
  return born_joint(rho, std::span<const Observable>(&a, 1), support_floor);
}

JointDistribution born_joint(const Operator& rho, std::span<const Observable> vars,
                             double support_floor) {
  if (rho.kind() != OpKind::Density) {
    throw Error(ErrorKind::NotDensity, "joint statistics need a density operator state");
  }
  if (vars.empty()) {
    throw Error(ErrorKind::InvalidArgument, "joint distribution needs at least one variable");
  }
  for (const auto& v : vars) {
    if (v.dim() != rho.dim()) {
      throw Error(ErrorKind::DimensionMismatch,
                  "variable '" + v.name() + "' has dim " + std::to_string(v.dim()) +
                      " but the state has dim " + std::to_string(rho.dim()));
    }
  }
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = i + 1; j < vars.size(); ++j) {
      if (!commutes(vars[i], vars[j])) {
        throw Error(ErrorKind::NonCommuting,
                    "variables '" + vars[i].name() + "' and '" + vars[j].name() +
                        "' do not commute; their joint distribution is undefined");
      }
    }
  }

  std::vector<VariableAxis> axes;
  axes.reserve(vars.size());
  std::size_t cells = 1;
  for (const auto& v : vars) {
    axes.push_back(axis_of(v));
    cells *= v.n_outcomes();
  }

  std::vector<double> table(cells);
  // Depth-first product of outcome projectors; the running product is reused
  // across all completions of a partial tuple.
  std::vector<std::size_t> tuple(vars.size());
  std::function<void(std::size_t, const Matrix&)> walk = [&](std::size_t depth,
                                                             const Matrix& prefix) {
    if (depth == vars.size()) {
      Complex p = (prefix.array() * rho.entries().transpose().array()).sum();
      if (std::abs(p.imag()) > kStochasticTol) {
        throw Error(ErrorKind::NonCommuting,
                    "joint probability has imaginary part " + std::to_string(p.imag()));
      }
      std::size_t flat = 0;
      for (std::size_t v = 0; v < vars.size(); ++v) {
        flat = flat * vars[v].n_outcomes() + tuple[v];
      }
      table[flat] = p.real();
      return;
    }
    for (std::size_t k = 0; k < vars[depth].n_outcomes(); ++k) {
      tuple[depth] = k;
      const Matrix& proj = vars[depth].outcome(k).projector.entries();
      if (depth == 0) {
        walk(depth + 1, proj);
      } else {
        walk(depth + 1, Matrix(prefix * proj));
      }
    }
  };
  walk(0, Matrix());

  return JointDistribution(std::move(axes), std::move(table), support_floor);
}

JointDistribution born_joint(const Operator& rho, const ClassicalSubsystem& given,
                             const Observable& target, double support_floor) {
  std::vector<Observable> vars = given.members();
  vars.push_back(target);
  return born_joint(rho, vars, support_floor);
}

JointDistribution marginal(const JointDistribution& jd, std::span<const std::size_t> keep) {
  if (keep.empty()) {
    throw Error(ErrorKind::InvalidArgument, "marginal must keep at least one axis");
  }
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= jd.n_vars() || (i > 0 && keep[i] <= keep[i - 1])) {
      throw Error(ErrorKind::InvalidArgument,
                  "keep positions must be strictly increasing axis indices");
    }
  }
  std::vector<VariableAxis> axes;
  std::size_t cells = 1;
  for (std::size_t v : keep) {
    axes.push_back(jd.axis(v));
    cells *= jd.axis(v).size();
  }
  std::vector<double> table(cells, 0.0);
  for (std::size_t flat = 0; flat < jd.table().size(); ++flat) {
    auto outcome = jd.unflatten(flat);
    std::size_t out = 0;
    for (std::size_t v : keep) out = out * jd.axis(v).size() + outcome[v];
    table[out] += jd.table()[flat];
  }
  return JointDistribution(std::move(axes), std::move(table), jd.support_floor());
}

JointDistribution conditional(const JointDistribution& jd, std::size_t given_var,
                              std::size_t outcome) {
  if (given_var >= jd.n_vars()) {
    throw Error(ErrorKind::InvalidArgument, "conditioning axis out of range");
  }
  if (jd.n_vars() < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "conditioning needs at least one remaining variable");
  }
  const auto& gax = jd.axis(given_var);
  if (outcome >= gax.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "outcome index out of range for axis '" + gax.name + "'");
  }

  double weight = 0.0;
  for (std::size_t flat = 0; flat < jd.table().size(); ++flat) {
    if (jd.unflatten(flat)[given_var] == outcome) weight += jd.table()[flat];
  }
  if (weight <= jd.support_floor()) {
    throw Error(ErrorKind::NullSupport,
                "outcome '" + gax.labels[outcome] + "' of '" + gax.name +
                    "' has probability " + std::to_string(weight) +
                    " at or below the support floor; conditioning on it is undefined");
  }

  std::vector<VariableAxis> axes;
  for (std::size_t v = 0; v < jd.n_vars(); ++v) {
    if (v != given_var) axes.push_back(jd.axis(v));
  }
  std::vector<double> table;
  table.reserve(jd.table().size() / gax.size());
  for (std::size_t flat = 0; flat < jd.table().size(); ++flat) {
    if (jd.unflatten(flat)[given_var] == outcome) {
      table.push_back(jd.table()[flat] / weight);
    }
  }
  return JointDistribution(std::move(axes), std::move(table), jd.support_floor());
}

JointDistribution collapse_pair(const JointDistribution& jd, std::size_t target,
                                std::span<const std::size_t> given) {
  if (target >= jd.n_vars()) {
    throw Error(ErrorKind::InvalidArgument, "target axis out of range");
  }
  if (given.empty()) {
    throw Error(ErrorKind::InvalidArgument, "collapse needs at least one conditioning axis");
  }
  for (std::size_t g : given) {
    if (g >= jd.n_vars()) {
      throw Error(ErrorKind::InvalidArgument, "conditioning axis out of range");
    }
    if (g == target) {
      throw Error(ErrorKind::InvalidArgument, "target cannot belong to the conditioning chain");
    }
  }

  const auto& tax = jd.axis(target);
  VariableAxis chain;
  std::size_t chain_cells = 1;
  for (std::size_t i = 0; i < given.size(); ++i) {
    if (i > 0) chain.name += ",";
    chain.name += jd.axis(given[i]).name;
    chain_cells *= jd.axis(given[i]).size();
  }
  chain.labels.reserve(chain_cells);
  chain.eigenvalues.reserve(chain_cells);
  for (std::size_t c = 0; c < chain_cells; ++c) {
    std::size_t rem = c;
    std::vector<std::size_t> parts(given.size());
    for (std::size_t i = given.size(); i-- > 0;) {
      parts[i] = rem % jd.axis(given[i]).size();
      rem /= jd.axis(given[i]).size();
    }
    std::string label;
    for (std::size_t i = 0; i < given.size(); ++i) {
      if (i > 0) label += ",";
      label += jd.axis(given[i]).labels[parts[i]];
    }
    chain.labels.push_back(std::move(label));
    chain.eigenvalues.push_back(static_cast<double>(c));
  }

  std::vector<double> table(tax.size() * chain_cells, 0.0);
  for (std::size_t flat = 0; flat < jd.table().size(); ++flat) {
    auto outcome = jd.unflatten(flat);
    std::size_t c = 0;
    for (std::size_t g : given) c = c * jd.axis(g).size() + outcome[g];
    table[outcome[target] * chain_cells + c] += jd.table()[flat];
  }
  std::vector<VariableAxis> axes{tax, std::move(chain)};
  return JointDistribution(std::move(axes), std::move(table), jd.support_floor());
}

std::string to_csv(const JointDistribution& jd) {
  std::string out;
  for (std::size_t v = 0; v < jd.n_vars(); ++v) {
    out += jd.axis(v).name;
    out += ',';
  }
  out += "p\n";
  for (std::size_t flat = 0; flat < jd.table().size(); ++flat) {
    auto outcome = jd.unflatten(flat);
    for (std::size_t v = 0; v < jd.n_vars(); ++v) {
      out += jd.axis(v).labels[outcome[v]];
      out += ',';
    }
    out += format_prob(jd.table()[flat]);
    out += '\n';
  }
  return out;
}

nlohmann::json to_json(const JointDistribution& jd) {
  nlohmann::json axes = nlohmann::json::array();
  for (const auto& ax : jd.axes()) {
    axes.push_back({{"name", ax.name}, {"labels", ax.labels}, {"eigenvalues", ax.eigenvalues}});
  }
  return nlohmann::json{{"axes", axes},
                        {"p", jd.table()},
                        {"support_floor", jd.support_floor()}};
}

} // namespace relinfo
