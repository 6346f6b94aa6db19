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

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>

#include "relinfo/facts.hpp"
#include "sdl_internal.hpp"

namespace relinfo::sdl {

namespace {

std::vector<Index> mixed_radix_strides(const std::vector<Index>& dims) {
  std::vector<Index> s(dims.size());
  Index acc = 1;
  for (std::size_t k = dims.size(); k-- > 0;) {
    s[k] = acc;
    acc *= dims[k];
  }
  return s;
}

Index product(const std::vector<Index>& dims) {
  Index p = 1;
  for (Index d : dims) p *= d;
  return p;
}

/// Places `local`, whose axes are the tensor factors listed in `positions`
/// (in that order), into the full product space, acting as the identity on
/// every other factor.
Matrix embed_matrix(const Matrix& local, const std::vector<Index>& dims,
                    const std::vector<std::size_t>& positions) {
  std::vector<Index> gstride = mixed_radix_strides(dims);
  std::vector<std::size_t> rest;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (std::find(positions.begin(), positions.end(), k) == positions.end()) rest.push_back(k);
  }
  std::vector<Index> ldims, rdims;
  for (auto p : positions) ldims.push_back(dims[p]);
  for (auto p : rest) rdims.push_back(dims[p]);
  std::vector<Index> ldiv = mixed_radix_strides(ldims);
  std::vector<Index> rdiv = mixed_radix_strides(rdims);
  const Index ldim = product(ldims);
  const Index rdim = product(rdims);
  auto global_of = [&](Index li, Index ri) {
    Index g = 0;
    for (std::size_t k = 0; k < positions.size(); ++k) {
      g += ((li / ldiv[k]) % ldims[k]) * gstride[positions[k]];
    }
    for (std::size_t m = 0; m < rest.size(); ++m) {
      g += ((ri / rdiv[m]) % rdims[m]) * gstride[rest[m]];
    }
    return g;
  };
  Matrix full = Matrix::Zero(product(dims), product(dims));
  for (Index li = 0; li < ldim; ++li) {
    for (Index lj = 0; lj < ldim; ++lj) {
      const Complex v = local(li, lj);
      if (v == Complex(0.0, 0.0)) continue;
      for (Index ri = 0; ri < rdim; ++ri) full(global_of(li, ri), global_of(lj, ri)) = v;
    }
  }
  return full;
}

/// Reorders the axes of a product-space vector from one factor ordering to
/// another ordering of the same factors.
Vector remap_axes(const Vector& v, const std::vector<std::size_t>& from_pos,
                  const std::vector<std::size_t>& to_pos, const std::vector<Index>& dims) {
  std::vector<Index> fdims, tdims;
  for (auto p : from_pos) fdims.push_back(dims[p]);
  for (auto p : to_pos) tdims.push_back(dims[p]);
  std::vector<Index> fdiv = mixed_radix_strides(fdims);
  std::vector<Index> tdiv = mixed_radix_strides(tdims);
  Vector out(v.size());
  for (Index t = 0; t < v.size(); ++t) {
    Index f = 0;
    for (std::size_t k = 0; k < to_pos.size(); ++k) {
      Index digit = (t / tdiv[k]) % tdims[k];
      std::size_t slot =
          std::find(from_pos.begin(), from_pos.end(), to_pos[k]) - from_pos.begin();
      f += digit * fdiv[slot];
    }
    out(t) = v(f);
  }
  return out;
}

struct SystemEntry {
  std::string name;
  Index dim = 0;
  std::vector<std::string> labels;
};

struct StateEntry {
  std::vector<std::size_t> positions;
  Vector local;  ///< normalized, axes in declaration order
};

struct VarEntry {
  std::vector<std::size_t> positions;
  Observable local;
  Observable full;
};

struct CouplingEntry {
  Operator full;
  double omega = 1.0;
};

class Evaluator {
 public:
  Evaluator(const ScenarioAst& ast, const EvalOptions& opts) : ast_(ast), opts_(opts) {
    result_.name = opts.name;
  }

  EvalResult run() {
    build_systems();
    if (!has_error()) {
      build_states();
      build_observables();
      build_classical();
    }
    if (!has_error()) run_steps();
    EvalResult out;
    out.diagnostics = std::move(diagnostics_);
    if (!std::any_of(out.diagnostics.begin(), out.diagnostics.end(), [](const Diagnostic& d) {
          return d.severity == Diagnostic::Severity::Error;
        })) {
      out.result = std::move(result_);
    }
    return out;
  }

 private:
  void error(SourcePos pos, std::string message) {
    diagnostics_.push_back(Diagnostic{Diagnostic::Severity::Error, pos, std::move(message)});
  }

  bool has_error() const {
    return std::any_of(diagnostics_.begin(), diagnostics_.end(), [](const Diagnostic& d) {
      return d.severity == Diagnostic::Severity::Error;
    });
  }

  std::optional<std::size_t> system_index(const std::string& name) {
    for (std::size_t k = 0; k < systems_.size(); ++k) {
      if (systems_[k].name == name) return k;
    }
    return std::nullopt;
  }

  std::optional<Index> label_index(std::size_t system, const std::string& label) {
    const auto& labels = systems_[system].labels;
    for (std::size_t k = 0; k < labels.size(); ++k) {
      if (labels[k] == label) return static_cast<Index>(k);
    }
    return std::nullopt;
  }

  bool taken(const std::string& name) const {
    return vars_.count(name) || couplings_.count(name) || classical_.count(name);
  }

  /// Resolves a list of system names to distinct factor positions.
  std::optional<std::vector<std::size_t>> resolve_systems(const std::vector<std::string>& names,
                                                          SourcePos pos) {
    std::vector<std::size_t> out;
    for (const auto& name : names) {
      auto idx = system_index(name);
      if (!idx) {
        error(pos, "unknown system '" + name + "'");
        return std::nullopt;
      }
      if (std::find(out.begin(), out.end(), *idx) != out.end()) {
        error(pos, "system '" + name + "' listed twice");
        return std::nullopt;
      }
      out.push_back(*idx);
    }
    return out;
  }

  void build_systems() {
    if (ast_.systems.empty()) {
      error(SourcePos{1, 1}, "scenario declares no systems");
      return;
    }
    for (const auto& decl : ast_.systems) {
      if (system_index(decl.name)) {
        error(decl.span.begin, "system '" + decl.name + "' already declared");
        continue;
      }
      SystemEntry entry;
      entry.name = decl.name;
      entry.dim = decl.dim;
      if (decl.labels.empty()) {
        for (long k = 0; k < decl.dim; ++k) entry.labels.push_back(std::to_string(k));
      } else {
        entry.labels = decl.labels;
      }
      systems_.push_back(std::move(entry));
    }
    dims_.clear();
    for (const auto& s : systems_) dims_.push_back(s.dim);
  }

  void build_states() {
    for (const auto& decl : ast_.states) {
      if (states_.count(decl.name)) {
        error(decl.span.begin, "state '" + decl.name + "' already declared");
        continue;
      }
      std::vector<std::string> names = decl.systems;
      if (names.empty()) {
        for (const auto& s : systems_) names.push_back(s.name);
      }
      auto positions = resolve_systems(names, decl.span.begin);
      if (!positions) continue;
      std::vector<Index> ldims;
      for (auto p : *positions) ldims.push_back(dims_[p]);
      std::vector<Index> ldiv = mixed_radix_strides(ldims);
      Vector v = Vector::Zero(product(ldims));
      bool bad = false;
      for (const auto& term : decl.terms) {
        if (term.labels.size() != positions->size()) {
          error(term.span.begin, "ket lists " + std::to_string(term.labels.size()) +
                                     " labels for " + std::to_string(positions->size()) +
                                     " systems");
          bad = true;
          break;
        }
        Index flat = 0;
        for (std::size_t k = 0; k < term.labels.size(); ++k) {
          auto digit = label_index((*positions)[k], term.labels[k]);
          if (!digit) {
            error(term.span.begin, "system '" + systems_[(*positions)[k]].name +
                                       "' has no basis label '" + term.labels[k] + "'");
            bad = true;
            break;
          }
          flat += *digit * ldiv[k];
        }
        if (bad) break;
        v(flat) += term.coeff.value();
      }
      if (bad) continue;
      double norm = v.norm();
      if (norm <= 1e-12) {
        error(decl.span.begin, "state '" + decl.name + "' has zero norm");
        continue;
      }
      v /= norm;
      states_.emplace(decl.name, StateEntry{std::move(*positions), std::move(v)});
    }
  }

  Observable embed_observable(const Observable& local,
                              const std::vector<std::size_t>& positions) {
    std::vector<Outcome> outcomes;
    outcomes.reserve(local.n_outcomes());
    for (const auto& o : local.spectrum()) {
      outcomes.push_back(Outcome{
          o.eigenvalue,
          Operator::projector(embed_matrix(o.projector.entries(), dims_, positions)), o.label});
    }
    return Observable(local.name(),
                      Operator::hermitian(embed_matrix(local.op().entries(), dims_, positions)),
                      std::move(outcomes));
  }

  std::optional<Observable> build_diag(const ObsDecl& decl, const DiagSpec& spec,
                                       const std::vector<std::size_t>& positions) {
    std::vector<Index> ldims;
    for (auto p : positions) ldims.push_back(dims_[p]);
    std::vector<Index> ldiv = mixed_radix_strides(ldims);
    const Index ldim = product(ldims);
    if (static_cast<Index>(spec.values.size()) != ldim) {
      error(decl.span.begin, "diag lists " + std::to_string(spec.values.size()) +
                                 " values for dimension " + std::to_string(ldim));
      return std::nullopt;
    }
    auto basis_label = [&](Index flat) {
      std::string out;
      for (std::size_t k = 0; k < positions.size(); ++k) {
        if (k > 0) out += ".";
        out += systems_[positions[k]].labels[(flat / ldiv[k]) % ldims[k]];
      }
      return out;
    };
    std::vector<double> seen;
    std::vector<Outcome> outcomes;
    for (Index flat = 0; flat < ldim; ++flat) {
      double v = spec.values[flat];
      std::size_t group = std::find(seen.begin(), seen.end(), v) - seen.begin();
      if (group == seen.size()) {
        seen.push_back(v);
        outcomes.push_back(
            Outcome{v, Operator::projector(Matrix::Zero(ldim, ldim)), std::string()});
      }
      Matrix p = outcomes[group].projector.entries();
      p(flat, flat) = Complex(1.0, 0.0);
      outcomes[group].projector = Operator::projector(std::move(p));
      if (!outcomes[group].label.empty()) outcomes[group].label += "+";
      outcomes[group].label += basis_label(flat);
    }
    return make_observable(decl.name, std::move(outcomes));
  }

  std::optional<Observable> build_projector(const ObsDecl& decl, const ProjectorSpec& spec,
                                            const std::vector<std::size_t>& positions) {
    auto it = states_.find(spec.state);
    if (it == states_.end()) {
      error(decl.span.begin, "unknown state '" + spec.state + "'");
      return std::nullopt;
    }
    const StateEntry& entry = it->second;
    std::vector<std::size_t> sorted_a = entry.positions;
    std::vector<std::size_t> sorted_b = positions;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) {
      error(decl.span.begin,
            "projector state '" + spec.state + "' does not live on the listed systems");
      return std::nullopt;
    }
    Vector v = entry.positions == positions
                   ? entry.local
                   : remap_axes(entry.local, entry.positions, positions, dims_);
    Matrix p = v * v.adjoint();
    Matrix q = Matrix::Identity(p.rows(), p.cols()) - p;
    std::vector<Outcome> outcomes{
        Outcome{1.0, Operator::projector(std::move(p)), "1"},
        Outcome{0.0, Operator::projector(std::move(q)), "0"},
    };
    return make_observable(decl.name, std::move(outcomes));
  }

  void build_measure(const ObsDecl& decl, const MeasureSpec& spec,
                     const std::vector<std::size_t>& positions) {
    if (positions.size() != 2) {
      error(decl.span.begin, "measure needs exactly two systems: measured, pointer");
      return;
    }
    auto target = vars_.find(spec.target);
    if (target == vars_.end()) {
      error(decl.span.begin, "unknown variable '" + spec.target + "'");
      return;
    }
    if (target->second.positions != std::vector<std::size_t>{positions[0]}) {
      error(decl.span.begin, "variable '" + spec.target + "' is not declared on system '" +
                                 systems_[positions[0]].name + "' alone");
      return;
    }
    const Observable& local = target->second.local;
    const std::size_t pointer = positions[1];
    auto ready = label_index(pointer, spec.ready);
    if (!ready) {
      error(decl.span.begin, "pointer system '" + systems_[pointer].name +
                                 "' has no basis label '" + spec.ready + "'");
      return;
    }
    if (spec.couple.size() != local.n_outcomes()) {
      error(decl.span.begin, "couple must list every outcome of '" + spec.target +
                                 "' exactly once (" + std::to_string(local.n_outcomes()) +
                                 " outcomes)");
      return;
    }
    std::vector<Index> record(local.n_outcomes(), -1);
    for (const auto& pair : spec.couple) {
      std::size_t out_idx;
      try {
        out_idx = local.outcome_index(pair.outcome);
      } catch (const Error&) {
        error(decl.span.begin,
              "'" + spec.target + "' has no outcome labeled '" + pair.outcome + "'");
        return;
      }
      auto rec = label_index(pointer, pair.record);
      if (!rec) {
        error(decl.span.begin, "pointer system '" + systems_[pointer].name +
                                   "' has no basis label '" + pair.record + "'");
        return;
      }
      if (record[out_idx] != -1) {
        error(decl.span.begin, "outcome '" + pair.outcome + "' coupled twice");
        return;
      }
      record[out_idx] = *rec;
    }
    try {
      Operator h = measurement_hamiltonian(local, dims_[pointer],
                                           PointerScheme{*ready, std::move(record)}, spec.omega);
      couplings_.emplace(decl.name,
                         CouplingEntry{Operator::hermitian(embed_matrix(h.entries(), dims_,
                                                                        positions)),
                                       spec.omega});
    } catch (const Error& e) {
      error(decl.span.begin, e.what());
    }
  }

  void build_observables() {
    for (const auto& decl : ast_.observables) {
      if (taken(decl.name)) {
        error(decl.span.begin, "name '" + decl.name + "' already declared");
        continue;
      }
      auto positions = resolve_systems(decl.systems, decl.span.begin);
      if (!positions) continue;
      try {
        if (const auto* pauli = std::get_if<PauliSpec>(&decl.spec)) {
          if (positions->size() != 1 || dims_[(*positions)[0]] != 2) {
            error(decl.span.begin, "pauli needs a single two-dimensional system");
            continue;
          }
          Operator op = pauli->axis == 'X' ? pauli_x() : pauli->axis == 'Y' ? pauli_y()
                                                                            : pauli_z();
          Observable local = make_observable(decl.name, op);
          vars_.emplace(decl.name,
                        VarEntry{*positions, local, embed_observable(local, *positions)});
        } else if (const auto* diag = std::get_if<DiagSpec>(&decl.spec)) {
          auto local = build_diag(decl, *diag, *positions);
          if (!local) continue;
          vars_.emplace(decl.name,
                        VarEntry{*positions, *local, embed_observable(*local, *positions)});
        } else if (std::get_if<PointerSpec>(&decl.spec)) {
          if (positions->size() != 1) {
            error(decl.span.begin, "pointer needs a single system");
            continue;
          }
          std::size_t p = (*positions)[0];
          Observable local = pointer_observable(decl.name, dims_[p], systems_[p].labels);
          vars_.emplace(decl.name,
                        VarEntry{*positions, local, embed_observable(local, *positions)});
        } else if (const auto* proj = std::get_if<ProjectorSpec>(&decl.spec)) {
          auto local = build_projector(decl, *proj, *positions);
          if (!local) continue;
          vars_.emplace(decl.name,
                        VarEntry{*positions, *local, embed_observable(*local, *positions)});
        } else if (const auto* measure = std::get_if<MeasureSpec>(&decl.spec)) {
          build_measure(decl, *measure, *positions);
        }
      } catch (const Error& e) {
        error(decl.span.begin, e.what());
      }
    }
  }

  void build_classical() {
    for (const auto& decl : ast_.subsystems) {
      if (taken(decl.name)) {
        error(decl.span.begin, "name '" + decl.name + "' already declared");
        continue;
      }
      std::vector<Observable> members;
      bool bad = false;
      for (const auto& member : decl.members) {
        auto it = vars_.find(member);
        if (it == vars_.end()) {
          error(decl.span.begin, couplings_.count(member)
                                     ? "'" + member + "' is a coupling, not a variable"
                                     : "unknown variable '" + member + "'");
          bad = true;
          break;
        }
        members.push_back(it->second.full);
      }
      if (bad) continue;
      try {
        classical_.emplace(decl.name, make_classical_subsystem(decl.name, std::move(members)));
      } catch (const Error& e) {
        error(decl.span.begin, e.what());
      }
    }
  }

  // --- step execution -----------------------------------------------------

  const VarEntry* find_var(const std::string& name, SourcePos pos) {
    auto it = vars_.find(name);
    if (it != vars_.end()) return &it->second;
    error(pos, couplings_.count(name) ? "'" + name + "' is a coupling, not a variable"
          : classical_.count(name)    ? "'" + name + "' is a classical subsystem, not a variable"
                                      : "unknown variable '" + name + "'");
    return nullptr;
  }

  const ClassicalSubsystem* find_classical(const std::string& name, SourcePos pos) {
    auto it = classical_.find(name);
    if (it != classical_.end()) return &it->second;
    error(pos, vars_.count(name) ? "'" + name + "' is a variable, not a classical subsystem"
                                 : "unknown classical subsystem '" + name + "'");
    return nullptr;
  }

  Operator current_density() { return pure_density(*current_); }

  bool require_state(SourcePos pos) {
    if (current_) return true;
    error(pos, "no state has been set");
    return false;
  }

  void record_value(const AssertStep& as, double measured) {
    Assertion a;
    a.description = as.note.empty() ? detail::render_claim(as) : as.note;
    a.context = result_.stages.back().label;
    a.measured = measured;
    a.expected = as.expected;
    a.tolerance = as.tol.value_or(opts_.value_tol);
    a.pass = std::abs(measured - a.expected) <= a.tolerance;
    result_.assertions.push_back(std::move(a));
  }

  void record_yesno(const AssertStep& as, bool measured) {
    Assertion a;
    a.description = as.note.empty() ? detail::render_claim(as) : as.note;
    a.context = result_.stages.back().label;
    a.measured = measured ? 1.0 : 0.0;
    a.expected = as.expected_yes ? 1.0 : 0.0;
    a.tolerance = 0.5;
    a.pass = measured == as.expected_yes;
    result_.assertions.push_back(std::move(a));
  }

  void run_set_state(const SetStateStep& step, SourcePos pos) {
    auto it = states_.find(step.state);
    if (it == states_.end()) {
      error(pos, "unknown state '" + step.state + "'");
      return;
    }
    if (it->second.positions.size() != systems_.size()) {
      error(pos, "state '" + step.state + "' does not cover every system");
      return;
    }
    std::vector<std::size_t> global(systems_.size());
    std::iota(global.begin(), global.end(), 0);
    Vector full = it->second.positions == global
                      ? it->second.local
                      : remap_axes(it->second.local, it->second.positions, global, dims_);
    current_ = StateVector::normalized(std::move(full), 1e-9);
    result_.stages.push_back(Stage{step.state, {}, {}});
  }

  void run_evolve(const EvolveStep& step, SourcePos pos) {
    if (!require_state(pos)) return;
    auto it = couplings_.find(step.hamiltonian);
    if (it == couplings_.end()) {
      error(pos, vars_.count(step.hamiltonian)
                     ? "'" + step.hamiltonian + "' is a variable, not a coupling"
                     : "unknown coupling '" + step.hamiltonian + "'");
      return;
    }
    const double duration = step.until.value();
    if (step.watch_subsystem.empty()) {
      if (!step.csv.empty()) {
        error(pos, "csv output needs a watch clause");
        return;
      }
    } else {
      const ClassicalSubsystem* cs = find_classical(step.watch_subsystem, pos);
      const VarEntry* target = find_var(step.watch_target, pos);
      if (!cs || !target) return;
      std::vector<double> times =
          uniform_times(static_cast<std::size_t>(step.samples), duration);
      const WatchSpec watch[] = {WatchSpec{*cs, target->full}};
      Sweep sweep = run_sweep(current_density(), it->second.full, watch, times,
                              it->second.omega);
      result_.stages.back().reports.push_back(sweep.samples.back().reports[0]);
      if (!step.csv.empty()) result_.artifacts[step.csv] = sweep_csv(sweep, 0);
    }
    Operator u = expm_unitary(it->second.full, duration);
    current_ = evolve(u, *current_);
  }

  void run_report(const ReportStep& step, SourcePos pos) {
    if (!require_state(pos)) return;
    const ClassicalSubsystem* cs = find_classical(step.subsystem, pos);
    if (!cs) return;
    std::vector<Observable> targets;
    for (const auto& name : step.targets) {
      const VarEntry* var = find_var(name, pos);
      if (!var) return;
      targets.push_back(var->full);
    }
    result_.stages.back().perspectives.push_back(
        perspective_of(current_density(), *cs, targets, step.tol.value_or(opts_.fact_tol),
                       result_.stages.back().label));
  }

  /// Joint table of (chain..., target) for a conditioning name that may be a
  /// variable or a classical subsystem; fills `chain` with the conditioning
  /// axis indices.
  std::optional<JointDistribution> chain_joint(const std::string& given,
                                               const Observable& target,
                                               std::vector<std::size_t>& chain, SourcePos pos) {
    auto cls = classical_.find(given);
    if (cls != classical_.end()) {
      JointDistribution jd = born_joint(current_density(), cls->second, target);
      chain.resize(jd.n_vars() - 1);
      std::iota(chain.begin(), chain.end(), 0);
      return jd;
    }
    const VarEntry* var = find_var(given, pos);
    if (!var) return std::nullopt;
    const Observable pair[] = {var->full, target};
    chain = {0};
    return born_joint(current_density(), pair);
  }

  void run_assert(const AssertStep& as, SourcePos pos) {
    if (result_.stages.empty()) {
      error(pos, "assert before any set_state");
      return;
    }
    if (!require_state(pos)) return;
    Operator rho = current_density();
    const double ftol = as.tol.value_or(opts_.fact_tol);
    switch (as.kind) {
      case AssertKind::Info:
      case AssertKind::Entropy:
      case AssertKind::Imax: {
        const VarEntry* var = find_var(as.operands[0], pos);
        if (!var) return;
        JointDistribution jd = born_single(rho, var->full);
        double v = as.kind == AssertKind::Info      ? information(jd, 0)
                   : as.kind == AssertKind::Entropy ? shannon_entropy(jd, 0)
                                                    : max_information(jd, 0);
        record_value(as, v);
        break;
      }
      case AssertKind::Mutual: {
        const VarEntry* a = find_var(as.operands[0], pos);
        const VarEntry* b = find_var(as.operands[1], pos);
        if (!a || !b) return;
        const Observable pair[] = {a->full, b->full};
        record_value(as, mutual_information(born_joint(rho, pair), 0, 1));
        break;
      }
      case AssertKind::Relative: {
        const VarEntry* target = find_var(as.operands[0], pos);
        if (!target) return;
        std::vector<std::size_t> chain;
        auto jd = chain_joint(as.operands[1], target->full, chain, pos);
        if (!jd) return;
        record_value(as, relative_information(*jd, jd->n_vars() - 1, chain));
        break;
      }
      case AssertKind::Conditional: {
        const VarEntry* target = find_var(as.operands[0], pos);
        const VarEntry* given = find_var(as.operands[1], pos);
        if (!target || !given) return;
        const Observable pair[] = {given->full, target->full};
        JointDistribution jd = born_joint(rho, pair);
        std::size_t outcome = given->full.outcome_index(as.at_labels[0]);
        record_value(as, conditional_information(jd, 1, 0, outcome));
        break;
      }
      case AssertKind::Prob: {
        std::vector<Observable> ops;
        std::vector<std::size_t> idx;
        if (as.at_labels.size() != as.operands.size()) {
          error(pos, "prob lists " + std::to_string(as.operands.size()) + " variables but " +
                         std::to_string(as.at_labels.size()) + " outcome labels");
          return;
        }
        for (std::size_t k = 0; k < as.operands.size(); ++k) {
          const VarEntry* var = find_var(as.operands[k], pos);
          if (!var) return;
          ops.push_back(var->full);
          idx.push_back(var->full.outcome_index(as.at_labels[k]));
        }
        record_value(as, born_joint(rho, ops).probability(idx));
        break;
      }
      case AssertKind::Fact: {
        const VarEntry* var = find_var(as.operands[0], pos);
        if (!var) return;
        JointDistribution jd = born_single(rho, var->full);
        record_yesno(as, is_fact(jd, 0, ftol).status == FactStatus::Fact);
        break;
      }
      case AssertKind::RelFact: {
        const VarEntry* target = find_var(as.operands[0], pos);
        if (!target) return;
        std::vector<std::size_t> chain;
        auto jd = chain_joint(as.operands[1], target->full, chain, pos);
        if (!jd) return;
        std::size_t t = jd->n_vars() - 1;
        FactStatus status;
        if (as.at_labels.empty()) {
          status = is_relative_fact(*jd, t, chain, ftol).status;
        } else {
          if (chain.size() != 1) {
            error(pos, "relfact ... at needs a single conditioning variable");
            return;
          }
          // Axis 0 is the conditioning variable; resolve its outcome label.
          std::size_t outcome = 0;
          const auto& labels = jd->axis(0).labels;
          auto found = std::find(labels.begin(), labels.end(), as.at_labels[0]);
          if (found == labels.end()) {
            error(pos, "'" + as.operands[1] + "' has no outcome labeled '" + as.at_labels[0] +
                           "'");
            return;
          }
          outcome = found - labels.begin();
          status = is_relative_fact_at(*jd, t, 0, outcome, ftol).status;
        }
        record_yesno(as, status == FactStatus::RelativeFact);
        break;
      }
      case AssertKind::Agree: {
        const ClassicalSubsystem* a = find_classical(as.operands[0], pos);
        const ClassicalSubsystem* b = find_classical(as.operands[1], pos);
        const VarEntry* target = find_var(as.operands[2], pos);
        if (!a || !b || !target) return;
        record_yesno(as, perspectives_agree(rho, *a, *b, target->full, ftol).agree);
        break;
      }
    }
  }

  void run_steps() {
    for (const auto& step : ast_.steps) {
      SourcePos pos = step.span.begin;
      try {
        if (const auto* st = std::get_if<SetStateStep>(&step.op)) {
          run_set_state(*st, pos);
        } else if (const auto* ev = std::get_if<EvolveStep>(&step.op)) {
          run_evolve(*ev, pos);
        } else if (const auto* rep = std::get_if<ReportStep>(&step.op)) {
          run_report(*rep, pos);
        } else if (const auto* as = std::get_if<AssertStep>(&step.op)) {
          run_assert(*as, pos);
        }
      } catch (const Error& e) {
        error(pos, e.what());
      }
      if (has_error()) return;
    }
  }

  const ScenarioAst& ast_;
  EvalOptions opts_;
  std::vector<SystemEntry> systems_;
  std::vector<Index> dims_;
  std::map<std::string, StateEntry> states_;
  std::map<std::string, VarEntry> vars_;
  std::map<std::string, CouplingEntry> couplings_;
  std::map<std::string, ClassicalSubsystem> classical_;
  std::optional<StateVector> current_;
  ScenarioResult result_;
  std::vector<Diagnostic> diagnostics_;
};

} // namespace

EvalResult evaluate(const ScenarioAst& ast, const EvalOptions& options) {
  return Evaluator(ast, options).run();
}

} // namespace relinfo::sdl
