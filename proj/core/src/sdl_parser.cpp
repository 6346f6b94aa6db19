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

#include "relinfo/sdl.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <set>

namespace relinfo::sdl {

std::string Diagnostic::render(std::string_view filename) const {
  std::string out;
  out += filename;
  out += ':';
  out += std::to_string(pos.line);
  out += ':';
  out += std::to_string(pos.col);
  out += severity == Severity::Error ? ": error: " : ": warning: ";
  out += message;
  return out;
}

Complex Coefficient::value() const {
  double magnitude = 1.0;
  switch (form) {
    case Form::One: magnitude = 1.0; break;
    case Form::Decimal: magnitude = decimal; break;
    case Form::Ratio: magnitude = static_cast<double>(num) / static_cast<double>(den); break;
    case Form::RootRatio:
      magnitude = static_cast<double>(num) / std::sqrt(static_cast<double>(den));
      break;
  }
  if (negative) magnitude = -magnitude;
  return imaginary ? Complex(0.0, magnitude) : Complex(magnitude, 0.0);
}

bool Coefficient::operator==(const Coefficient& other) const {
  if (form != other.form || negative != other.negative || imaginary != other.imaginary) {
    return false;
  }
  switch (form) {
    case Form::One: return true;
    case Form::Decimal: return decimal == other.decimal;
    case Form::Ratio:
    case Form::RootRatio: return num == other.num && den == other.den;
  }
  return false;
}

double TimeExpr::value() const {
  if (is_pi) {
    return static_cast<double>(pi_num) * std::numbers::pi / static_cast<double>(pi_den);
  }
  return number;
}

bool TimeExpr::operator==(const TimeExpr& other) const {
  if (is_pi != other.is_pi) return false;
  if (is_pi) return pi_num == other.pi_num && pi_den == other.pi_den;
  return number == other.number;
}

namespace {

bool is_word_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

/// Scanner over one source line. Comments start at '#'.
class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line) : text_(text), line_(line) {
    std::size_t hash = text_.find('#');
    if (hash != std::string_view::npos) text_ = text_.substr(0, hash);
  }

  void skip_ws() {
    while (i_ < text_.size() && (text_[i_] == ' ' || text_[i_] == '\t' || text_[i_] == '\r')) {
      ++i_;
    }
  }

  bool done() {
    skip_ws();
    return i_ >= text_.size();
  }

  SourcePos here() {
    skip_ws();
    return SourcePos{line_, i_ + 1};
  }

  SourcePos end_pos() const { return SourcePos{line_, text_.size() + 1}; }

  char peek() {
    skip_ws();
    return i_ < text_.size() ? text_[i_] : '\0';
  }

  char peek_raw() const { return i_ < text_.size() ? text_[i_] : '\0'; }

  bool lit(char c) {
    skip_ws();
    if (i_ < text_.size() && text_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  std::optional<std::string> word() {
    skip_ws();
    if (i_ >= text_.size() || !is_word_start(text_[i_])) return std::nullopt;
    std::size_t start = i_;
    while (i_ < text_.size() && is_word_char(text_[i_])) ++i_;
    return std::string(text_.substr(start, i_ - start));
  }

  /// Consumes `w` only if the next word equals it.
  bool word_lit(std::string_view w) {
    skip_ws();
    std::size_t save = i_;
    auto got = word();
    if (got && *got == w) return true;
    i_ = save;
    return false;
  }

  std::optional<double> number(bool allow_sign) {
    skip_ws();
    std::size_t start = i_;
    bool neg = false;
    if (allow_sign && i_ < text_.size() && (text_[i_] == '-' || text_[i_] == '+')) {
      neg = text_[i_] == '-';
      ++i_;
    }
    if (i_ >= text_.size() ||
        (!std::isdigit(static_cast<unsigned char>(text_[i_])) && text_[i_] != '.')) {
      i_ = start;
      return std::nullopt;
    }
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text_.data() + i_, text_.data() + text_.size(), v);
    if (ec != std::errc{} || ptr == text_.data() + i_) {
      i_ = start;
      return std::nullopt;
    }
    i_ = ptr - text_.data();
    return neg ? -v : v;
  }

  std::size_t save() const { return i_; }
  void restore(std::size_t mark) { i_ = mark; }

  std::optional<long> integer() {
    skip_ws();
    if (i_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[i_]))) {
      return std::nullopt;
    }
    long v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + i_, text_.data() + text_.size(), v);
    if (ec != std::errc{}) return std::nullopt;
    i_ = ptr - text_.data();
    return v;
  }

  std::optional<std::string> quoted() {
    skip_ws();
    if (i_ >= text_.size() || text_[i_] != '"') return std::nullopt;
    std::size_t start = ++i_;
    while (i_ < text_.size() && text_[i_] != '"') ++i_;
    if (i_ >= text_.size()) return std::nullopt;
    std::string out(text_.substr(start, i_ - start));
    ++i_;
    return out;
  }

  /// Raw run of non-space characters up to any stop character; used for
  /// outcome and basis labels, which may contain '+' and '-'.
  std::string until(std::string_view stops) {
    skip_ws();
    std::size_t start = i_;
    while (i_ < text_.size() && stops.find(text_[i_]) == std::string_view::npos &&
           text_[i_] != ' ' && text_[i_] != '\t') {
      ++i_;
    }
    return std::string(text_.substr(start, i_ - start));
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view source) : source_(source) {}

  ParseResult run() {
    std::size_t line_no = 1;
    std::size_t begin = 0;
    while (begin <= source_.size()) {
      std::size_t nl = source_.find('\n', begin);
      std::string_view line = source_.substr(
          begin, nl == std::string_view::npos ? source_.size() - begin : nl - begin);
      parse_line(line, line_no);
      if (nl == std::string_view::npos) break;
      begin = nl + 1;
      ++line_no;
    }
    ParseResult result;
    result.diagnostics = std::move(diagnostics_);
    bool failed = false;
    for (const auto& d : result.diagnostics) {
      failed = failed || d.severity == Diagnostic::Severity::Error;
    }
    if (!failed) result.ast = std::move(ast_);
    return result;
  }

 private:
  void fail(SourcePos pos, std::string message) {
    diagnostics_.push_back(
        Diagnostic{Diagnostic::Severity::Error, pos, std::move(message)});
  }

  bool expect_done(Cursor& c) {
    if (c.done()) return true;
    fail(c.here(), "unexpected trailing input");
    return false;
  }

  void parse_line(std::string_view text, std::size_t line_no) {
    Cursor c(text, line_no);
    if (c.done()) return;
    SourcePos start = c.here();
    auto keyword = c.word();
    if (!keyword) {
      fail(start, "expected a declaration or step");
      return;
    }
    SourceSpan span{start, c.end_pos()};
    if (*keyword == "system") {
      parse_system(c, span);
    } else if (*keyword == "state") {
      parse_state(c, span);
    } else if (*keyword == "obs") {
      parse_obs(c, span);
    } else if (*keyword == "classical") {
      parse_classical(c, span);
    } else if (*keyword == "step") {
      parse_step(c, span);
    } else if (*keyword == "assert") {
      parse_assert(c, span);
    } else {
      fail(start, "unknown keyword '" + *keyword + "'");
    }
  }

  void parse_system(Cursor& c, SourceSpan span) {
    SystemDecl decl;
    decl.span = span;
    auto name = c.word();
    if (!name) return fail(c.here(), "system needs a name");
    decl.name = *name;
    auto dim = c.integer();
    if (!dim || *dim < 1) return fail(c.here(), "system needs a positive dimension");
    decl.dim = *dim;
    if (c.word_lit("labels")) {
      for (long k = 0; k < decl.dim; ++k) {
        std::string label = c.until(",>=");
        if (label.empty()) {
          return fail(c.here(), "system '" + decl.name + "' expects " +
                                    std::to_string(decl.dim) + " labels");
        }
        decl.labels.push_back(std::move(label));
      }
      std::set<std::string> unique(decl.labels.begin(), decl.labels.end());
      if (unique.size() != decl.labels.size()) {
        return fail(span.begin, "system '" + decl.name + "' has duplicate labels");
      }
    }
    if (expect_done(c)) ast_.systems.push_back(std::move(decl));
  }

  bool parse_name_list(Cursor& c, std::vector<std::string>& out, const char* what) {
    while (true) {
      auto name = c.word();
      if (!name) {
        fail(c.here(), std::string("expected ") + what);
        return false;
      }
      out.push_back(std::move(*name));
      if (!c.lit(',')) return true;
    }
  }

  std::optional<Coefficient> parse_coefficient(Cursor& c, bool negative) {
    Coefficient k;
    k.negative = negative;
    if (c.peek() == '|') return k;
    if (c.peek() == 'i') {
      c.lit('i');
      k.imaginary = true;
      return k;
    }
    SourcePos at = c.here();
    std::size_t mark = c.save();
    auto whole = c.integer();
    if (whole && c.peek_raw() == '/') {
      c.lit('/');
      k.num = *whole;
      if (c.word_lit("sqrt")) {
        if (!c.lit('(')) {
          fail(c.here(), "expected '(' after sqrt");
          return std::nullopt;
        }
        auto den = c.integer();
        if (!den || *den <= 0) {
          fail(c.here(), "sqrt needs a positive integer");
          return std::nullopt;
        }
        k.den = *den;
        if (!c.lit(')')) {
          fail(c.here(), "expected ')'");
          return std::nullopt;
        }
        k.form = Coefficient::Form::RootRatio;
      } else {
        auto den = c.integer();
        if (!den || *den <= 0) {
          fail(c.here(), "ratio needs a positive denominator");
          return std::nullopt;
        }
        k.den = *den;
        k.form = Coefficient::Form::Ratio;
      }
    } else {
      c.restore(mark);
      auto v = c.number(false);
      if (!v) {
        fail(at, "expected an amplitude or a ket");
        return std::nullopt;
      }
      k.form = Coefficient::Form::Decimal;
      k.decimal = *v;
    }
    if (c.peek_raw() == 'i') {
      c.lit('i');
      k.imaginary = true;
    }
    return k;
  }

  std::optional<KetTerm> parse_term(Cursor& c, bool negative) {
    KetTerm term;
    SourcePos start = c.here();
    auto coeff = parse_coefficient(c, negative);
    if (!coeff) return std::nullopt;
    term.coeff = *coeff;
    if (!c.lit('|')) {
      fail(c.here(), "expected '|' to open a ket");
      return std::nullopt;
    }
    while (true) {
      std::string label = c.until(",>|=");
      if (label.empty()) {
        fail(c.here(), "empty basis label in ket");
        return std::nullopt;
      }
      term.labels.push_back(std::move(label));
      if (c.lit(',')) continue;
      break;
    }
    if (!c.lit('>')) {
      fail(c.here(), "expected '>' to close the ket");
      return std::nullopt;
    }
    term.span = SourceSpan{start, c.here()};
    return term;
  }

  void parse_state(Cursor& c, SourceSpan span) {
    StateDecl decl;
    decl.span = span;
    auto name = c.word();
    if (!name) return fail(c.here(), "state needs a name");
    decl.name = *name;
    if (c.word_lit("on")) {
      if (!parse_name_list(c, decl.systems, "a system name")) return;
    }
    if (!c.lit('=')) return fail(c.here(), "expected '=' in state declaration");
    bool negative = c.lit('-');
    if (!negative) c.lit('+');
    while (true) {
      auto term = parse_term(c, negative);
      if (!term) return;
      if (!decl.terms.empty() && term->labels.size() != decl.terms.front().labels.size()) {
        return fail(term->span.begin, "ket has a different number of labels than the first");
      }
      decl.terms.push_back(std::move(*term));
      if (c.lit('+')) {
        negative = false;
      } else if (c.lit('-')) {
        negative = true;
      } else {
        break;
      }
    }
    if (expect_done(c)) ast_.states.push_back(std::move(decl));
  }

  void parse_obs(Cursor& c, SourceSpan span) {
    ObsDecl decl;
    decl.span = span;
    auto name = c.word();
    if (!name) return fail(c.here(), "obs needs a name");
    decl.name = *name;
    if (!parse_name_list(c, decl.systems, "a system name")) return;
    auto kind = c.word();
    if (!kind) return fail(c.here(), "obs needs a kind: pauli, diag, pointer, projector, measure");
    if (*kind == "pauli") {
      auto axis = c.word();
      if (!axis || axis->size() != 1 || (*axis != "X" && *axis != "Y" && *axis != "Z")) {
        return fail(c.here(), "pauli needs an axis X, Y, or Z");
      }
      decl.spec = PauliSpec{(*axis)[0]};
    } else if (*kind == "diag") {
      DiagSpec spec;
      while (auto v = c.number(true)) spec.values.push_back(*v);
      if (spec.values.empty()) return fail(c.here(), "diag needs at least one value");
      decl.spec = std::move(spec);
    } else if (*kind == "pointer") {
      decl.spec = PointerSpec{};
    } else if (*kind == "projector") {
      auto state = c.word();
      if (!state) return fail(c.here(), "projector needs a state name");
      decl.spec = ProjectorSpec{*state};
    } else if (*kind == "measure") {
      MeasureSpec spec;
      auto target = c.word();
      if (!target) return fail(c.here(), "measure needs a target variable");
      spec.target = *target;
      if (!c.word_lit("ready")) return fail(c.here(), "measure needs 'ready <label>'");
      spec.ready = c.until(",:=");
      if (spec.ready.empty()) return fail(c.here(), "ready needs a pointer label");
      if (!c.word_lit("couple")) return fail(c.here(), "measure needs 'couple <pairs>'");
      while (true) {
        CouplePair pair;
        pair.outcome = c.until(":,=");
        if (pair.outcome.empty()) break;
        if (!c.lit(':')) return fail(c.here(), "couple pair needs ':'");
        pair.record = c.until(":,=");
        if (pair.record.empty()) return fail(c.here(), "couple pair needs a record label");
        spec.couple.push_back(std::move(pair));
        if (!c.lit(',')) break;
      }
      if (spec.couple.empty()) return fail(c.here(), "couple needs at least one pair");
      if (c.word_lit("omega")) {
        auto w = c.number(true);
        if (!w || *w <= 0.0) return fail(c.here(), "omega must be a positive number");
        spec.omega = *w;
      }
      decl.spec = std::move(spec);
    } else {
      return fail(c.here(), "unknown obs kind '" + *kind + "'");
    }
    if (expect_done(c)) ast_.observables.push_back(std::move(decl));
  }

  void parse_classical(Cursor& c, SourceSpan span) {
    ClassicalDecl decl;
    decl.span = span;
    auto name = c.word();
    if (!name) return fail(c.here(), "classical needs a name");
    decl.name = *name;
    if (!c.lit('=')) return fail(c.here(), "expected '=' in classical declaration");
    if (!c.lit('{')) return fail(c.here(), "expected '{'");
    if (!parse_name_list(c, decl.members, "a variable name")) return;
    if (!c.lit('}')) return fail(c.here(), "expected '}'");
    if (expect_done(c)) ast_.subsystems.push_back(std::move(decl));
  }

  std::optional<TimeExpr> parse_time(Cursor& c) {
    TimeExpr t;
    std::size_t mark = c.save();
    auto whole = c.integer();
    if (c.word_lit("pi")) {
      t.is_pi = true;
      t.pi_num = whole.value_or(1);
      if (t.pi_num <= 0) {
        fail(c.here(), "pi multiple must be positive");
        return std::nullopt;
      }
      if (c.lit('/')) {
        auto den = c.integer();
        if (!den || *den <= 0) {
          fail(c.here(), "pi divisor must be a positive integer");
          return std::nullopt;
        }
        t.pi_den = *den;
      }
      return t;
    }
    c.restore(mark);
    auto v = c.number(false);
    if (!v || *v <= 0.0) {
      fail(c.here(), "expected a positive duration or a pi fraction");
      return std::nullopt;
    }
    t.number = *v;
    return t;
  }

  void parse_step(Cursor& c, SourceSpan span) {
    auto kind = c.word();
    if (!kind) return fail(c.here(), "step needs a kind: set_state, evolve, report");
    Step step;
    step.span = span;
    if (*kind == "set_state") {
      auto state = c.word();
      if (!state) return fail(c.here(), "set_state needs a state name");
      step.op = SetStateStep{*state};
    } else if (*kind == "evolve") {
      EvolveStep ev;
      auto ham = c.word();
      if (!ham) return fail(c.here(), "evolve needs a coupling name");
      ev.hamiltonian = *ham;
      if (!c.word_lit("until")) return fail(c.here(), "evolve needs 'until <duration>'");
      auto t = parse_time(c);
      if (!t) return;
      ev.until = *t;
      if (c.word_lit("samples")) {
        auto n = c.integer();
        if (!n || *n < 2) return fail(c.here(), "samples must be an integer >= 2");
        ev.samples = *n;
      }
      if (c.word_lit("watch")) {
        auto cs = c.word();
        if (!cs) return fail(c.here(), "watch needs a classical subsystem name");
        ev.watch_subsystem = *cs;
        if (!c.word_lit("target")) return fail(c.here(), "watch needs 'target <variable>'");
        auto target = c.word();
        if (!target) return fail(c.here(), "watch needs a target variable");
        ev.watch_target = *target;
      }
      if (c.word_lit("csv")) {
        auto path = c.quoted();
        if (!path || path->empty()) return fail(c.here(), "csv needs a quoted file name");
        ev.csv = *path;
      }
      step.op = std::move(ev);
    } else if (*kind == "report") {
      ReportStep rep;
      auto cs = c.word();
      if (!cs) return fail(c.here(), "report needs a classical subsystem name");
      rep.subsystem = *cs;
      if (!c.word_lit("targets")) return fail(c.here(), "report needs 'targets <variables>'");
      if (!parse_name_list(c, rep.targets, "a variable name")) return;
      if (c.word_lit("tol")) {
        auto tol = c.number(false);
        if (!tol || *tol <= 0.0) return fail(c.here(), "tol must be positive");
        rep.tol = *tol;
      }
      step.op = std::move(rep);
    } else {
      return fail(c.here(), "unknown step kind '" + *kind + "'");
    }
    if (expect_done(c)) ast_.steps.push_back(std::move(step));
  }

  void parse_assert(Cursor& c, SourceSpan span) {
    auto kind_word = c.word();
    if (!kind_word) return fail(c.here(), "assert needs a kind");
    AssertStep as;
    bool needs_bool = false;
    if (*kind_word == "info") {
      as.kind = AssertKind::Info;
    } else if (*kind_word == "entropy") {
      as.kind = AssertKind::Entropy;
    } else if (*kind_word == "imax") {
      as.kind = AssertKind::Imax;
    } else if (*kind_word == "mutual") {
      as.kind = AssertKind::Mutual;
    } else if (*kind_word == "relative") {
      as.kind = AssertKind::Relative;
    } else if (*kind_word == "conditional") {
      as.kind = AssertKind::Conditional;
    } else if (*kind_word == "prob") {
      as.kind = AssertKind::Prob;
    } else if (*kind_word == "fact") {
      as.kind = AssertKind::Fact;
      needs_bool = true;
    } else if (*kind_word == "relfact") {
      as.kind = AssertKind::RelFact;
      needs_bool = true;
    } else if (*kind_word == "agree") {
      as.kind = AssertKind::Agree;
      needs_bool = true;
    } else {
      return fail(c.here(), "unknown assert kind '" + *kind_word + "'");
    }
    as.expect_bool = needs_bool;

    auto take_word = [&](const char* what) -> bool {
      auto w = c.word();
      if (!w) {
        fail(c.here(), std::string("expected ") + what);
        return false;
      }
      as.operands.push_back(std::move(*w));
      return true;
    };

    switch (as.kind) {
      case AssertKind::Info:
      case AssertKind::Entropy:
      case AssertKind::Imax:
      case AssertKind::Fact:
        if (!take_word("a variable name")) return;
        break;
      case AssertKind::Mutual:
        if (!take_word("a variable name") || !take_word("a variable name")) return;
        break;
      case AssertKind::Relative:
        if (!take_word("a variable name")) return;
        if (!c.word_lit("given")) return fail(c.here(), "relative needs 'given <name>'");
        if (!take_word("a conditioning name")) return;
        break;
      case AssertKind::Conditional: {
        if (!take_word("a variable name")) return;
        if (!c.word_lit("given")) return fail(c.here(), "conditional needs 'given <variable>'");
        if (!take_word("a variable name")) return;
        if (!c.word_lit("at")) return fail(c.here(), "conditional needs 'at <label>'");
        std::string label = c.until(",=");
        if (label.empty()) return fail(c.here(), "expected an outcome label");
        as.at_labels.push_back(std::move(label));
        break;
      }
      case AssertKind::Prob: {
        if (!parse_name_list(c, as.operands, "a variable name")) return;
        if (!c.word_lit("at")) return fail(c.here(), "prob needs 'at <labels>'");
        while (true) {
          std::string label = c.until(",=");
          if (label.empty()) return fail(c.here(), "expected an outcome label");
          as.at_labels.push_back(std::move(label));
          if (!c.lit(',')) break;
        }
        break;
      }
      case AssertKind::RelFact: {
        if (!take_word("a variable name")) return;
        if (!c.word_lit("given")) return fail(c.here(), "relfact needs 'given <name>'");
        if (!take_word("a conditioning name")) return;
        if (c.word_lit("at")) {
          std::string label = c.until(",=");
          if (label.empty()) return fail(c.here(), "expected an outcome label");
          as.at_labels.push_back(std::move(label));
        }
        break;
      }
      case AssertKind::Agree:
        if (!take_word("a classical subsystem") || !take_word("a classical subsystem")) return;
        if (!c.word_lit("target")) return fail(c.here(), "agree needs 'target <variable>'");
        if (!take_word("a variable name")) return;
        break;
    }

    if (!c.lit('=')) return fail(c.here(), "expected '=' before the expected value");
    if (needs_bool) {
      if (c.word_lit("yes")) {
        as.expected_yes = true;
      } else if (c.word_lit("no")) {
        as.expected_yes = false;
      } else {
        return fail(c.here(), "expected yes or no");
      }
    } else {
      auto v = c.number(true);
      if (!v) return fail(c.here(), "expected a number");
      as.expected = *v;
    }
    if (c.word_lit("tol")) {
      auto tol = c.number(false);
      if (!tol || *tol <= 0.0) return fail(c.here(), "tol must be positive");
      as.tol = *tol;
    }
    if (c.word_lit("note")) {
      auto note = c.quoted();
      if (!note) return fail(c.here(), "note needs a quoted string");
      as.note = *note;
    }
    if (!expect_done(c)) return;
    Step step;
    step.span = span;
    step.op = std::move(as);
    ast_.steps.push_back(std::move(step));
  }

  std::string_view source_;
  ScenarioAst ast_;
  std::vector<Diagnostic> diagnostics_;
};

} // namespace

ParseResult parse(std::string_view source) { return Parser(source).run(); }

} // namespace relinfo::sdl
