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

#include "relinfo/observables.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

namespace relinfo {

namespace {

std::string format_eigenvalue(double v) {
  double rounded = std::round(v);
  if (std::abs(v - rounded) < 1e-12 && std::abs(v) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%+.0f", rounded == 0.0 ? 0.0 : rounded);
    return buf;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

} // namespace

Observable::Observable(std::string name, Operator op, std::vector<Outcome> spectrum)
    : name_(std::move(name)), op_(std::move(op)), spectrum_(std::move(spectrum)) {
  if (spectrum_.empty()) {
    throw Error(ErrorKind::InvalidArgument, "observable '" + name_ + "' has no outcomes");
  }
}

std::size_t Observable::outcome_index(std::string_view label) const {
  for (std::size_t i = 0; i < spectrum_.size(); ++i) {
    if (spectrum_[i].label == label) return i;
  }
  throw Error(ErrorKind::InvalidArgument,
              "observable '" + name_ + "' has no outcome labeled '" + std::string(label) + "'");
}

Observable make_observable(std::string name, const Operator& op) {
  std::vector<Eigenspace> spaces = eig_hermitian(op);
  std::vector<Outcome> outcomes;
  outcomes.reserve(spaces.size());
  for (auto& s : spaces) {
    outcomes.push_back(Outcome{s.eigenvalue, std::move(s.projector), format_eigenvalue(s.eigenvalue)});
  }
  Operator herm = op.kind() == OpKind::General
                      ? Operator::hermitian(op.entries())
                      : op;
  return Observable(std::move(name), std::move(herm), std::move(outcomes));
}

Observable make_observable(std::string name, std::vector<Outcome> outcomes) {
  if (outcomes.empty()) {
    throw Error(ErrorKind::InvalidArgument, "observable '" + name + "' has no outcomes");
  }
  Index dim = outcomes.front().projector.dim();
  Matrix sum = Matrix::Zero(dim, dim);
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& oi = outcomes[i];
    if (oi.projector.dim() != dim) {
      throw Error(ErrorKind::DimensionMismatch,
                  "outcome projectors of '" + name + "' act on different spaces");
    }
    if (oi.label.empty()) {
      throw Error(ErrorKind::InvalidArgument, "outcome labels must be nonempty");
    }
    for (std::size_t j = 0; j < i; ++j) {
      const auto& oj = outcomes[j];
      if (oj.label == oi.label) {
        throw Error(ErrorKind::InvalidArgument,
                    "observable '" + name + "' repeats the outcome label '" + oi.label + "'");
      }
      if (oj.eigenvalue == oi.eigenvalue) {
        throw Error(ErrorKind::InvalidArgument,
                    "observable '" + name + "' repeats the eigenvalue of outcome '" + oi.label +
                        "'");
      }
      double overlap =
          Matrix(oi.projector.entries() * oj.projector.entries()).cwiseAbs().maxCoeff();
      if (overlap > kResolutionTol) {
        throw Error(ErrorKind::InvalidArgument,
                    "outcomes '" + oi.label + "' and '" + oj.label + "' of '" + name +
                        "' are not orthogonal (overlap " + std::to_string(overlap) + ")");
      }
    }
    sum += oi.projector.entries();
  }
  double completeness =
      (sum - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
  if (completeness > kResolutionTol) {
    throw Error(ErrorKind::InvalidArgument,
                "outcome projectors of '" + name + "' do not resolve the identity (deviation " +
                    std::to_string(completeness) + ")");
  }
  Matrix op = Matrix::Zero(dim, dim);
  for (const auto& o : outcomes) op += o.eigenvalue * o.projector.entries();
  return Observable(std::move(name), Operator::hermitian(std::move(op)), std::move(outcomes));
}

bool commutes(const Observable& a, const Observable& b, double tol) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "observables '" + a.name() + "' and '" + b.name() + "' act on different spaces");
  }
  return commutator_norm(a.op(), b.op()) <= tol;
}

Observable lift_observable(const Observable& obs, const std::vector<Index>& dims,
                           std::size_t position) {
  if (position >= dims.size()) {
    throw Error(ErrorKind::InvalidArgument, "lift position out of range");
  }
  if (dims[position] != obs.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "observable '" + obs.name() + "' has dim " + std::to_string(obs.dim()) +
                    " but factor " + std::to_string(position) + " has dim " +
                    std::to_string(dims[position]));
  }
  Index before = 1, after = 1;
  for (std::size_t f = 0; f < position; ++f) before *= dims[f];
  for (std::size_t f = position + 1; f < dims.size(); ++f) after *= dims[f];

  auto lift = [&](const Operator& p, OpKind kind) {
    Operator left = tensor(Operator::identity(before), Operator(p.entries(), kind));
    return tensor(left, Operator::identity(after));
  };

  std::vector<Outcome> outcomes;
  outcomes.reserve(obs.n_outcomes());
  for (const auto& o : obs.spectrum()) {
    outcomes.push_back(Outcome{o.eigenvalue, lift(o.projector, OpKind::Projector), o.label});
  }
  Operator op = lift(obs.op(), OpKind::Hermitian);
  return Observable(obs.name(), std::move(op), std::move(outcomes));
}

ClassicalSubsystem::ClassicalSubsystem(std::string name, std::vector<Observable> members,
                                       double tol)
    : name_(std::move(name)), members_(std::move(members)) {
  if (members_.empty()) {
    throw Error(ErrorKind::InvalidArgument,
                "classical subsystem '" + name_ + "' needs at least one member");
  }
  for (std::size_t i = 0; i < members_.size(); ++i) {
    for (std::size_t j = i + 1; j < members_.size(); ++j) {
      if (!commutes(members_[i], members_[j], tol)) {
        throw Error(ErrorKind::NonCommuting,
                    "members '" + members_[i].name() + "' and '" + members_[j].name() +
                        "' of subsystem '" + name_ + "' do not commute");
      }
    }
  }
}

ClassicalSubsystem make_classical_subsystem(std::string name, std::vector<Observable> members,
                                            double tol) {
  return ClassicalSubsystem(std::move(name), std::move(members), tol);
}

Operator pauli_x() {
  Matrix m(2, 2);
  m << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
  return Operator::hermitian(std::move(m));
}

Operator pauli_y() {
  Matrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return Operator::hermitian(std::move(m));
}

Operator pauli_z() {
  Matrix m(2, 2);
  m << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0);
  return Operator::hermitian(std::move(m));
}

Observable pointer_observable(std::string name, Index dim, std::vector<std::string> labels) {
  if (dim <= 0) {
    throw Error(ErrorKind::InvalidArgument, "pointer dimension must be positive");
  }
  if (labels.empty()) {
    for (Index k = 0; k < dim; ++k) labels.push_back(std::to_string(k));
  }
  if (static_cast<Index>(labels.size()) != dim) {
    throw Error(ErrorKind::InvalidArgument,
                "pointer '" + name + "' needs exactly " + std::to_string(dim) + " labels");
  }
  std::vector<Outcome> outcomes;
  outcomes.reserve(static_cast<std::size_t>(dim));
  for (Index k = 0; k < dim; ++k) {
    Matrix p = Matrix::Zero(dim, dim);
    p(k, k) = Complex(1.0, 0.0);
    outcomes.push_back(
        Outcome{static_cast<double>(k), Operator::projector(std::move(p)), labels[k]});
  }
  return make_observable(std::move(name), std::move(outcomes));
}

} // namespace relinfo
