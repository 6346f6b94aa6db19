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

#include <charconv>

#include "sdl_internal.hpp"

namespace relinfo::sdl {

namespace detail {

std::string shortest_double(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

} // namespace detail

using detail::shortest_double;

std::string Coefficient::to_string() const {
  std::string out = negative ? "-" : "";
  switch (form) {
    case Form::One: break;
    case Form::Decimal: out += shortest_double(decimal); break;
    case Form::Ratio: out += std::to_string(num) + "/" + std::to_string(den); break;
    case Form::RootRatio:
      out += std::to_string(num) + "/sqrt(" + std::to_string(den) + ")";
      break;
  }
  if (imaginary) out += "i";
  return out;
}

std::string TimeExpr::to_string() const {
  if (!is_pi) return shortest_double(number);
  std::string out;
  if (pi_num != 1) out += std::to_string(pi_num);
  out += "pi";
  if (pi_den != 1) out += "/" + std::to_string(pi_den);
  return out;
}

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k > 0) out += sep;
    out += parts[k];
  }
  return out;
}

std::string render_ket(const KetTerm& term) {
  return "|" + join(term.labels, ",") + ">";
}

std::string render_terms(const std::vector<KetTerm>& terms) {
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    Coefficient coeff = terms[k].coeff;
    if (k == 0) {
      out += coeff.to_string();
    } else {
      out += coeff.negative ? " - " : " + ";
      coeff.negative = false;
      out += coeff.to_string();
    }
    out += render_ket(terms[k]);
  }
  return out;
}

std::string render_obs_spec(const ObsDecl& decl) {
  struct Visitor {
    std::string operator()(const PauliSpec& s) const {
      return std::string("pauli ") + s.axis;
    }
    std::string operator()(const DiagSpec& s) const {
      std::string out = "diag";
      for (double v : s.values) out += " " + shortest_double(v);
      return out;
    }
    std::string operator()(const PointerSpec&) const { return "pointer"; }
    std::string operator()(const ProjectorSpec& s) const { return "projector " + s.state; }
    std::string operator()(const MeasureSpec& s) const {
      std::string out = "measure " + s.target + " ready " + s.ready + " couple ";
      for (std::size_t k = 0; k < s.couple.size(); ++k) {
        if (k > 0) out += ",";
        out += s.couple[k].outcome + ":" + s.couple[k].record;
      }
      if (s.omega != 1.0) out += " omega " + shortest_double(s.omega);
      return out;
    }
  };
  return std::visit(Visitor{}, decl.spec);
}

} // namespace

namespace detail {

std::string render_claim(const AssertStep& as) {
  std::string out;
  switch (as.kind) {
    case AssertKind::Info: out = "info " + as.operands.at(0); break;
    case AssertKind::Entropy: out = "entropy " + as.operands.at(0); break;
    case AssertKind::Imax: out = "imax " + as.operands.at(0); break;
    case AssertKind::Mutual: out = "mutual " + as.operands.at(0) + " " + as.operands.at(1); break;
    case AssertKind::Relative:
      out = "relative " + as.operands.at(0) + " given " + as.operands.at(1);
      break;
    case AssertKind::Conditional:
      out = "conditional " + as.operands.at(0) + " given " + as.operands.at(1) + " at " +
            as.at_labels.at(0);
      break;
    case AssertKind::Prob:
      out = "prob " + join(as.operands, ",") + " at " + join(as.at_labels, ",");
      break;
    case AssertKind::Fact: out = "fact " + as.operands.at(0); break;
    case AssertKind::RelFact:
      out = "relfact " + as.operands.at(0) + " given " + as.operands.at(1);
      if (!as.at_labels.empty()) out += " at " + as.at_labels.at(0);
      break;
    case AssertKind::Agree:
      out = "agree " + as.operands.at(0) + " " + as.operands.at(1) + " target " +
            as.operands.at(2);
      break;
  }
  out += " = ";
  if (as.expect_bool) {
    out += as.expected_yes ? "yes" : "no";
  } else {
    out += shortest_double(as.expected);
  }
  return out;
}

} // namespace detail

std::string print(const ScenarioAst& ast) {
  std::vector<std::string> sections;

  if (!ast.systems.empty()) {
    std::string s;
    for (const auto& decl : ast.systems) {
      s += "system " + decl.name + " " + std::to_string(decl.dim);
      if (!decl.labels.empty()) s += " labels " + join(decl.labels, " ");
      s += "\n";
    }
    sections.push_back(std::move(s));
  }

  if (!ast.states.empty()) {
    std::string s;
    for (const auto& decl : ast.states) {
      s += "state " + decl.name;
      if (!decl.systems.empty()) s += " on " + join(decl.systems, ",");
      s += " = " + render_terms(decl.terms) + "\n";
    }
    sections.push_back(std::move(s));
  }

  if (!ast.observables.empty()) {
    std::string s;
    for (const auto& decl : ast.observables) {
      s += "obs " + decl.name + " " + join(decl.systems, ",") + " " + render_obs_spec(decl) +
           "\n";
    }
    sections.push_back(std::move(s));
  }

  if (!ast.subsystems.empty()) {
    std::string s;
    for (const auto& decl : ast.subsystems) {
      s += "classical " + decl.name + " = { " + join(decl.members, ", ") + " }\n";
    }
    sections.push_back(std::move(s));
  }

  if (!ast.steps.empty()) {
    std::string s;
    struct Visitor {
      std::string operator()(const SetStateStep& st) const {
        return "step set_state " + st.state;
      }
      std::string operator()(const EvolveStep& st) const {
        std::string out = "step evolve " + st.hamiltonian + " until " + st.until.to_string();
        if (st.samples != 2) out += " samples " + std::to_string(st.samples);
        if (!st.watch_subsystem.empty()) {
          out += " watch " + st.watch_subsystem + " target " + st.watch_target;
        }
        if (!st.csv.empty()) out += " csv \"" + st.csv + "\"";
        return out;
      }
      std::string operator()(const ReportStep& st) const {
        std::string out = "step report " + st.subsystem + " targets " + join(st.targets, ",");
        if (st.tol) out += " tol " + shortest_double(*st.tol);
        return out;
      }
      std::string operator()(const AssertStep& st) const {
        std::string out = "assert " + detail::render_claim(st);
        if (st.tol) out += " tol " + shortest_double(*st.tol);
        if (!st.note.empty()) out += " note \"" + st.note + "\"";
        return out;
      }
    };
    for (const auto& step : ast.steps) {
      s += std::visit(Visitor{}, step.op) + "\n";
    }
    sections.push_back(std::move(s));
  }

  std::string out;
  for (std::size_t k = 0; k < sections.size(); ++k) {
    if (k > 0) out += "\n";
    out += sections[k];
  }
  return out;
}

} // namespace relinfo::sdl
