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

#ifndef RELINFO_OBSERVABLES_HPP
#define RELINFO_OBSERVABLES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "relinfo/linops.hpp"

namespace relinfo {

/// Entrywise commutator bound under which two observables count as
/// compatible.
inline constexpr double kCommuteTol = 1e-9;

/// Entrywise bound for projector completeness and pairwise orthogonality of
/// a declared outcome set.
inline constexpr double kResolutionTol = 1e-9;

/// One measurement outcome: eigenvalue, eigenspace projector, display label.
struct Outcome {
  double eigenvalue;
  Operator projector;
  std::string label;
};

/// A physical variable: hermitian operator plus its resolved outcome set.
/// Construct through make_observable so the spectrum and the operator are
/// guaranteed consistent.
class Observable {
 public:
  Observable(std::string name, Operator op, std::vector<Outcome> spectrum);

  const std::string& name() const { return name_; }
  const Operator& op() const { return op_; }
  Index dim() const { return op_.dim(); }
  const std::vector<Outcome>& spectrum() const { return spectrum_; }
  std::size_t n_outcomes() const { return spectrum_.size(); }
  const Outcome& outcome(std::size_t i) const { return spectrum_.at(i); }

  /// Index of the outcome with the given label; throws if absent.
  std::size_t outcome_index(std::string_view label) const;

 private:
  std::string name_;
  Operator op_;
  std::vector<Outcome> spectrum_;
};

/// Builds an observable by diagonalizing a hermitian operator. Outcomes are
/// indexed by ascending eigenvalue; eigenvalues within the relative merge
/// gap collapse into one degenerate outcome. Labels render the eigenvalues.
Observable make_observable(std::string name, const Operator& op);

/// Builds an observable from declared outcomes, skipping diagonalization.
/// The projectors must be mutually orthogonal and complete within 1e-9 and
/// the eigenvalues distinct; declaration order is preserved, which lets a
/// coarse-grained variable keep meaningful sector labels.
Observable make_observable(std::string name, std::vector<Outcome> outcomes);

/// True when max |[A, B]| <= tol entrywise. Dimension mismatch throws.
bool commutes(const Observable& a, const Observable& b, double tol = kCommuteTol);

/// Embeds an observable acting on factor `position` of a product space into
/// the full space, tensoring identities around it.
Observable lift_observable(const Observable& obs, const std::vector<Index>& dims,
                           std::size_t position);

/// A set of variables verified to be pairwise compatible, so their joint
/// statistics are classical.
class ClassicalSubsystem {
 public:
  ClassicalSubsystem(std::string name, std::vector<Observable> members, double tol);

  const std::string& name() const { return name_; }
  const std::vector<Observable>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  Index dim() const { return members_.front().dim(); }

 private:
  std::string name_;
  std::vector<Observable> members_;
};

/// Verifies pairwise compatibility of `members` and wraps them. The error on
/// failure names the offending pair.
ClassicalSubsystem make_classical_subsystem(std::string name, std::vector<Observable> members,
                                            double tol = kCommuteTol);

/// 2x2 Pauli operators.
Operator pauli_x();
Operator pauli_y();
Operator pauli_z();

/// Pointer variable of a d-dimensional register: eigenvalue k on basis state
/// |k>, labeled by `labels` (defaults to "0".."d-1").
Observable pointer_observable(std::string name, Index dim, std::vector<std::string> labels = {});

} // namespace relinfo

#endif // RELINFO_OBSERVABLES_HPP
