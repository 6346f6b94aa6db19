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

#include "relinfo/infomeasures.hpp"

#include <cmath>
#include <numeric>

#include <nlohmann/json.hpp>

namespace relinfo {

double shannon_entropy(std::span<const double> p) {
  double sum = 0.0;
  for (double x : p) {
    if (x < 0.0) {
      throw Error(ErrorKind::InvalidArgument,
                  "probabilities must be nonnegative, got " + std::to_string(x));
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > kStochasticTol) {
    throw Error(ErrorKind::NotNormalized,
                "probabilities sum to " + std::to_string(sum) + ", expected 1");
  }
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

namespace {

/// Entropy of an already validated table, in bits.
double entropy_raw(std::span<const double> p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

std::vector<std::size_t> sorted_indices(std::span<const std::size_t> vars) {
  std::vector<std::size_t> out(vars.begin(), vars.end());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

double shannon_entropy(const JointDistribution& jd, std::size_t var) {
  std::size_t keep[1] = {var};
  return entropy_raw(marginal(jd, keep).table());
}

double joint_entropy(const JointDistribution& jd) { return entropy_raw(jd.table()); }

double max_information(const JointDistribution& jd, std::size_t var) {
  return std::log2(static_cast<double>(jd.axis(var).size()));
}

double information(const JointDistribution& jd, std::size_t var) {
  return max_information(jd, var) - shannon_entropy(jd, var);
}

double information(const JointDistribution& jd, std::span<const std::size_t> vars) {
  auto keep = sorted_indices(vars);
  JointDistribution m = marginal(jd, keep);
  double i_max = 0.0;
  for (std::size_t v = 0; v < m.n_vars(); ++v) {
    i_max += std::log2(static_cast<double>(m.axis(v).size()));
  }
  return i_max - entropy_raw(m.table());
}

double conditional_information(const JointDistribution& jd, std::size_t target,
                               std::size_t given, std::size_t outcome) {
  if (target == given) {
    throw Error(ErrorKind::InvalidArgument, "target and conditioning variable must differ");
  }
  JointDistribution sliced = conditional(jd, given, outcome);
  // Removing the conditioning axis shifts later positions down by one.
  std::size_t t = target > given ? target - 1 : target;
  return information(sliced, t);
}

double relative_information(const JointDistribution& jd, std::size_t target, std::size_t given) {
  std::size_t chain[1] = {given};
  return relative_information(jd, target, std::span<const std::size_t>(chain));
}

double relative_information(const JointDistribution& jd, std::size_t target,
                            std::span<const std::size_t> given) {
  JointDistribution pair = collapse_pair(jd, target, given);
  std::size_t na = pair.axis(0).size();
  std::size_t nb = pair.axis(1).size();
  double i_max = std::log2(static_cast<double>(na));

  double total = 0.0;
  for (std::size_t b = 0; b < nb; ++b) {
    double pb = 0.0;
    for (std::size_t a = 0; a < na; ++a) pb += pair.table()[a * nb + b];
    if (pb <= pair.support_floor()) continue;
    double h = 0.0;
    for (std::size_t a = 0; a < na; ++a) {
      double pab = pair.table()[a * nb + b];
      if (pab > 0.0) {
        double cond = pab / pb;
        h -= cond * std::log2(cond);
      }
    }
    total += pb * (i_max - h);
  }
  return total;
}

double relative_information_closed_form(const JointDistribution& jd, std::size_t target,
                                        std::size_t given) {
  std::size_t chain[1] = {given};
  JointDistribution pair = collapse_pair(jd, target, chain);
  std::size_t na = pair.axis(0).size();
  std::size_t nb = pair.axis(1).size();

  std::vector<double> pb(nb, 0.0);
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t b = 0; b < nb; ++b) pb[b] += pair.table()[a * nb + b];
  }
  double sum = 0.0;
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t b = 0; b < nb; ++b) {
      double pab = pair.table()[a * nb + b];
      if (pab > 0.0) sum += pab * std::log2(pab / pb[b]);
    }
  }
  return std::log2(static_cast<double>(na)) + sum;
}

double mutual_information(const JointDistribution& jd, std::size_t a, std::size_t b) {
  std::size_t ga[1] = {a};
  std::size_t gb[1] = {b};
  return mutual_information(jd, std::span<const std::size_t>(ga),
                            std::span<const std::size_t>(gb));
}

double mutual_information(const JointDistribution& jd, std::span<const std::size_t> a,
                          std::span<const std::size_t> b) {
  for (std::size_t x : a) {
    for (std::size_t y : b) {
      if (x == y) {
        throw Error(ErrorKind::InvalidArgument, "mutual information groups must be disjoint");
      }
    }
  }
  auto group_entropy = [&](std::span<const std::size_t> g) {
    auto keep = sorted_indices(g);
    return entropy_raw(marginal(jd, keep).table());
  };
  std::vector<std::size_t> joint(a.begin(), a.end());
  joint.insert(joint.end(), b.begin(), b.end());
  return group_entropy(a) + group_entropy(b) - group_entropy(joint);
}

double von_neumann_entropy(const Operator& rho) {
  if (rho.kind() != OpKind::Density) {
    throw Error(ErrorKind::NotDensity, "von Neumann entropy needs a density operator");
  }
  double h = 0.0;
  for (double lambda : eigenvalues_hermitian(rho)) {
    if (lambda > 0.0) h -= lambda * std::log2(lambda);
  }
  return h;
}

double quantum_mutual_information(const Operator& rho, const std::vector<Index>& dims,
                                  const std::vector<std::size_t>& part_a) {
  if (part_a.empty() || part_a.size() >= dims.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "part A must be a proper nonempty subset of the tensor factors");
  }
  std::vector<std::size_t> part_b;
  for (std::size_t f = 0; f < dims.size(); ++f) {
    if (std::find(part_a.begin(), part_a.end(), f) == part_a.end()) part_b.push_back(f);
  }
  Operator rho_a = partial_trace(rho, dims, part_a);
  Operator rho_b = partial_trace(rho, dims, part_b);
  return von_neumann_entropy(rho_a) + von_neumann_entropy(rho_b) - von_neumann_entropy(rho);
}

InfoReport info_report(const JointDistribution& jd, std::size_t target,
                       std::span<const std::size_t> given) {
  JointDistribution pair = collapse_pair(jd, target, given);
  std::size_t na = pair.axis(0).size();
  std::size_t nb = pair.axis(1).size();

  InfoReport report;
  report.target = pair.axis(0).name;
  report.given = pair.axis(1).name;
  report.i_max = std::log2(static_cast<double>(na));

  std::vector<double> pa(na, 0.0), pb(nb, 0.0);
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t b = 0; b < nb; ++b) {
      double pab = pair.table()[a * nb + b];
      pa[a] += pab;
      pb[b] += pab;
    }
  }
  report.entropy = entropy_raw(pa);
  report.information = report.i_max - report.entropy;

  double expected = 0.0;
  for (std::size_t b = 0; b < nb; ++b) {
    if (pb[b] <= pair.support_floor()) {
      report.unsupported.push_back(pair.axis(1).labels[b]);
      continue;
    }
    double h = 0.0;
    for (std::size_t a = 0; a < na; ++a) {
      double pab = pair.table()[a * nb + b];
      if (pab > 0.0) {
        double cond = pab / pb[b];
        h -= cond * std::log2(cond);
      }
    }
    double cond_info = report.i_max - h;
    report.conditional.emplace_back(pair.axis(1).labels[b], cond_info);
    expected += pb[b] * cond_info;
  }
  report.relative = expected;
  report.mutual = report.entropy + entropy_raw(pb) - entropy_raw(pair.table());
  return report;
}

nlohmann::json to_json(const InfoReport& report) {
  nlohmann::json conditional = nlohmann::json::object();
  for (const auto& [label, bits] : report.conditional) conditional[label] = bits;
  return nlohmann::json{{"i_max", report.i_max},
                        {"entropy", report.entropy},
                        {"information", report.information},
                        {"conditional", conditional},
                        {"relative", report.relative},
                        {"mutual", report.mutual}};
}

} // namespace relinfo
