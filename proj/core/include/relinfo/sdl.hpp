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

#ifndef RELINFO_SDL_HPP
#define RELINFO_SDL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "relinfo/scenarios.hpp"

namespace relinfo::sdl {

/// 1-based position in the source text.
struct SourcePos {
  std::size_t line = 0;
  std::size_t col = 0;
};

/// Half-open range [begin, end) in the source text. Spans are carried for
/// diagnostics only and never take part in structural equality.
struct SourceSpan {
  SourcePos begin;
  SourcePos end;
};

struct Diagnostic {
  enum class Severity { Error, Warning };
  Severity severity = Severity::Error;
  SourcePos pos;
  std::string message;

  /// "file:line:col: severity: message"
  std::string render(std::string_view filename) const;
};

/// Exact amplitude as written: a sign, an optional imaginary unit, and a
/// magnitude kept in its source form so printing can reproduce it.
struct Coefficient {
  enum class Form {
    One,       ///< implicit 1 (bare ket)
    Decimal,   ///< floating literal
    Ratio,     ///< num/den
    RootRatio, ///< num/sqrt(den)
  };
  Form form = Form::One;
  bool negative = false;
  bool imaginary = false;
  double decimal = 0.0;
  long num = 1;
  long den = 1;

  Complex value() const;
  std::string to_string() const;
  bool operator==(const Coefficient& other) const;
};

struct KetTerm {
  Coefficient coeff;
  std::vector<std::string> labels;  ///< one per system of the state
  SourceSpan span;
  bool operator==(const KetTerm& other) const {
    return coeff == other.coeff && labels == other.labels;
  }
};

struct SystemDecl {
  std::string name;
  long dim = 0;
  std::vector<std::string> labels;  ///< empty means "0".."dim-1"
  SourceSpan span;
  bool operator==(const SystemDecl& other) const {
    return name == other.name && dim == other.dim && labels == other.labels;
  }
};

struct StateDecl {
  std::string name;
  std::vector<std::string> systems;  ///< empty means every declared system
  std::vector<KetTerm> terms;
  SourceSpan span;
  bool operator==(const StateDecl& other) const {
    return name == other.name && systems == other.systems && terms == other.terms;
  }
};

struct PauliSpec {
  char axis = 'Z';
  bool operator==(const PauliSpec&) const = default;
};
struct DiagSpec {
  std::vector<double> values;
  bool operator==(const DiagSpec&) const = default;
};
struct PointerSpec {
  bool operator==(const PointerSpec&) const = default;
};
struct ProjectorSpec {
  std::string state;
  bool operator==(const ProjectorSpec&) const = default;
};
struct CouplePair {
  std::string outcome;  ///< outcome label of the measured variable
  std::string record;   ///< pointer basis label it gets written to
  bool operator==(const CouplePair&) const = default;
};
struct MeasureSpec {
  std::string target;  ///< variable declared on the measured system
  std::string ready;   ///< pointer basis label the coupling starts from
  std::vector<CouplePair> couple;
  double omega = 1.0;
  bool operator==(const MeasureSpec&) const = default;
};

struct ObsDecl {
  std::string name;
  std::vector<std::string> systems;
  std::variant<PauliSpec, DiagSpec, PointerSpec, ProjectorSpec, MeasureSpec> spec;
  SourceSpan span;
  bool operator==(const ObsDecl& other) const {
    return name == other.name && systems == other.systems && spec == other.spec;
  }
};

struct ClassicalDecl {
  std::string name;
  std::vector<std::string> members;
  SourceSpan span;
  bool operator==(const ClassicalDecl& other) const {
    return name == other.name && members == other.members;
  }
};

/// Duration literal: either a plain number or a rational multiple of pi,
/// kept symbolic for exact printing.
struct TimeExpr {
  bool is_pi = false;
  long pi_num = 1;
  long pi_den = 1;
  double number = 0.0;

  double value() const;
  std::string to_string() const;
  bool operator==(const TimeExpr& other) const;
};

struct SetStateStep {
  std::string state;
  bool operator==(const SetStateStep&) const = default;
};

struct EvolveStep {
  std::string hamiltonian;  ///< name of a hermitian variable declaration
  TimeExpr until;
  long samples = 2;
  std::string watch_subsystem;  ///< empty when nothing is tracked
  std::string watch_target;
  std::string csv;  ///< artifact name for the sweep table; empty for none
  bool operator==(const EvolveStep&) const = default;
};

struct ReportStep {
  std::string subsystem;
  std::vector<std::string> targets;
  std::optional<double> tol;
  bool operator==(const ReportStep&) const = default;
};

enum class AssertKind {
  Info,        ///< info <obs>
  Entropy,     ///< entropy <obs>
  Imax,        ///< imax <obs>
  Mutual,      ///< mutual <a> <b>
  Relative,    ///< relative <obs> given <name>
  Conditional, ///< conditional <obs> given <obs> at <label>
  Prob,        ///< prob <obs,...> at <label,...>
  Fact,        ///< fact <obs> = yes|no
  RelFact,     ///< relfact <obs> given <name> [at <label>] = yes|no
  Agree,       ///< agree <cs> <cs> target <obs> = yes|no
};

struct AssertStep {
  AssertKind kind = AssertKind::Info;
  std::vector<std::string> operands;
  std::vector<std::string> at_labels;
  bool expect_bool = false;
  bool expected_yes = false;
  double expected = 0.0;
  std::optional<double> tol;
  std::string note;
  bool operator==(const AssertStep&) const = default;
};

struct Step {
  std::variant<SetStateStep, EvolveStep, ReportStep, AssertStep> op;
  SourceSpan span;
  bool operator==(const Step& other) const { return op == other.op; }
};

struct ScenarioAst {
  std::vector<SystemDecl> systems;
  std::vector<StateDecl> states;
  std::vector<ObsDecl> observables;
  std::vector<ClassicalDecl> subsystems;
  std::vector<Step> steps;

  bool operator==(const ScenarioAst& other) const {
    return systems == other.systems && states == other.states &&
           observables == other.observables && subsystems == other.subsystems &&
           steps == other.steps;
  }
};

struct ParseResult {
  std::optional<ScenarioAst> ast;  ///< present only when no errors occurred
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return ast.has_value(); }
};

/// Parses a scenario. Never throws: malformed lines produce positioned
/// diagnostics and parsing continues on the next line.
ParseResult parse(std::string_view source);

/// Canonical rendering. Whitespace is normalized, coefficients keep their
/// symbolic form, and declarations are grouped by kind; parse(print(ast))
/// is structurally equal to ast.
std::string print(const ScenarioAst& ast);

struct EvalOptions {
  std::string name = "scenario";
  double fact_tol = kFactTol;   ///< default for fact/relfact/agree claims
  double value_tol = 1e-9;      ///< default for numeric claims
};

struct EvalResult {
  std::optional<ScenarioResult> result;  ///< absent when diagnostics contain errors
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return result.has_value(); }
};

/// Resolves names, builds the quantum objects, and runs the steps. Semantic
/// problems (undefined names, dimension clashes, incompatible members) and
/// runtime failures come back as diagnostics carrying the span of the
/// offending declaration or step.
EvalResult evaluate(const ScenarioAst& ast, const EvalOptions& options = {});

} // namespace relinfo::sdl

#endif // RELINFO_SDL_HPP
