#pragma once

#include "gip/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace gip {

using VarId = std::string;

enum class ConstraintKind {
  CONST_ONE,  // x = 1
  ADD_EQ,     // x + y = z
  INV_EQ,     // x * y = 1
  ADD_LEQ,    // x + y <= z
  ADD_GEQ,    // x + y >= z
  INV_LEQ,    // x * y <= 1
  INV_GEQ,    // x * y >= 1
};

inline bool is_add(ConstraintKind k) {
  return k == ConstraintKind::ADD_EQ || k == ConstraintKind::ADD_LEQ ||
         k == ConstraintKind::ADD_GEQ;
}
inline bool is_inv(ConstraintKind k) {
  return k == ConstraintKind::INV_EQ || k == ConstraintKind::INV_LEQ ||
         k == ConstraintKind::INV_GEQ;
}

inline std::size_t operand_count(ConstraintKind k) {
  if (k == ConstraintKind::CONST_ONE) return 1;
  if (is_add(k)) return 3;
  return 2;
}

// Operands may repeat (x + x >= z is legal).
struct Constraint {
  ConstraintKind kind;
  std::vector<VarId> operands;
};

struct Formula {
  std::vector<VarId> variables;  // declaration order
  std::vector<Constraint> constraints;
  Rational lo;
  Rational hi;

  bool has_variable(const VarId& v) const {
    return std::find(variables.begin(), variables.end(), v) != variables.end();
  }
};

// Total rational assignment.
using Assignment = std::map<VarId, Rational>;

// ---------------------------------------------------------------------------
// Validation

inline std::vector<std::string> validate_formula(const Formula& f) {
  std::vector<std::string> defects;
  if (!(f.lo < f.hi)) defects.push_back("BAD_RANGE: lo must be less than hi");
  std::set<VarId> vars(f.variables.begin(), f.variables.end());
  if (vars.size() != f.variables.size()) defects.push_back("duplicate variable declaration");
  for (std::size_t i = 0; i < f.constraints.size(); ++i) {
    const auto& c = f.constraints[i];
    if (c.operands.size() != operand_count(c.kind))
      defects.push_back("constraint " + std::to_string(i) + ": wrong operand count");
    for (const auto& v : c.operands)
      if (!vars.count(v))
        defects.push_back("UNDECLARED_VARIABLE: constraint " + std::to_string(i) + " uses " + v);
  }
  return defects;
}

// ---------------------------------------------------------------------------
// Parsing

enum class ParseErrorKind { SYNTAX_ERROR, UNDECLARED_VARIABLE, BAD_RANGE };

struct ParseError {
  ParseErrorKind kind;
  int line = 0;
  int column = 0;
  std::string message;
};

struct ParseResult {
  std::optional<Formula> formula;
  std::optional<ParseError> error;

  bool ok() const { return formula.has_value(); }
};

namespace detail {

inline bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
inline bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

struct Token {
  std::string text;
  int column;
};

inline std::optional<std::vector<Token>> tokenize_line(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    int col = static_cast<int>(i) + 1;
    if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && is_ident_char(line[j])) ++j;
      out.push_back({line.substr(i, j - i), col});
      i = j;
    } else if ((c >= '0' && c <= '9') || c == '-') {
      std::size_t j = i + 1;
      while (j < line.size() && ((line[j] >= '0' && line[j] <= '9') || line[j] == '/')) ++j;
      out.push_back({line.substr(i, j - i), col});
      i = j;
    } else if (c == '<' || c == '>') {
      if (i + 1 < line.size() && line[i + 1] == '=') {
        out.push_back({line.substr(i, 2), col});
        i += 2;
      } else {
        return std::nullopt;
      }
    } else if (c == '+' || c == '*' || c == '=') {
      out.push_back({std::string(1, c), col});
      ++i;
    } else {
      return std::nullopt;
    }
  }
  return out;
}

}  // namespace detail

// Grammar (one statement per line, `#` comments):
//   range <rat> <rat>
//   x = 1 | x + y = z | x * y = 1 | x + y <= z | x + y >= z | x * y <= 1 | x * y >= 1
inline ParseResult parse_formula(const std::string& text) {
  Formula f;
  bool have_range = false;
  std::set<VarId> seen;
  auto fail = [&](ParseErrorKind k, int line, int col, std::string msg) {
    ParseResult r;
    r.error = ParseError{k, line, col, std::move(msg)};
    return r;
  };
  auto declare = [&](const VarId& v) {
    if (seen.insert(v).second) f.variables.push_back(v);
  };

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens_opt = detail::tokenize_line(line);
    if (!tokens_opt)
      return fail(ParseErrorKind::SYNTAX_ERROR, lineno, 1, "unrecognized character");
    auto& t = *tokens_opt;
    if (t.empty()) continue;

    if (!have_range) {
      if (t.size() != 3 || t[0].text != "range")
        return fail(ParseErrorKind::SYNTAX_ERROR, lineno, t[0].column,
                    "expected 'range <rat> <rat>' header");
      auto lo = parse_rational(t[1].text);
      auto hi = parse_rational(t[2].text);
      if (!lo || !hi)
        return fail(ParseErrorKind::BAD_RANGE, lineno, t[1].column, "malformed range bound");
      if (!(*lo < *hi))
        return fail(ParseErrorKind::BAD_RANGE, lineno, t[1].column, "range lo must be < hi");
      f.lo = *lo;
      f.hi = *hi;
      have_range = true;
      continue;
    }

    auto is_ident = [&](std::size_t i) {
      return i < t.size() && detail::is_ident_start(t[i].text[0]) && t[i].text != "range";
    };
    auto tok = [&](std::size_t i) { return i < t.size() ? t[i].text : std::string(); };

    if (t.size() == 3 && is_ident(0) && tok(1) == "=" && tok(2) == "1") {
      declare(t[0].text);
      f.constraints.push_back({ConstraintKind::CONST_ONE, {t[0].text}});
      continue;
    }
    if (t.size() == 5 && is_ident(0) && tok(1) == "+" && is_ident(2) && is_ident(4)) {
      ConstraintKind k;
      if (tok(3) == "=") k = ConstraintKind::ADD_EQ;
      else if (tok(3) == "<=") k = ConstraintKind::ADD_LEQ;
      else if (tok(3) == ">=") k = ConstraintKind::ADD_GEQ;
      else
        return fail(ParseErrorKind::SYNTAX_ERROR, lineno, t[3].column, "expected =, <= or >=");
      declare(t[0].text);
      declare(t[2].text);
      declare(t[4].text);
      f.constraints.push_back({k, {t[0].text, t[2].text, t[4].text}});
      continue;
    }
    if (t.size() == 5 && is_ident(0) && tok(1) == "*" && is_ident(2) && tok(4) == "1") {
      ConstraintKind k;
      if (tok(3) == "=") k = ConstraintKind::INV_EQ;
      else if (tok(3) == "<=") k = ConstraintKind::INV_LEQ;
      else if (tok(3) == ">=") k = ConstraintKind::INV_GEQ;
      else
        return fail(ParseErrorKind::SYNTAX_ERROR, lineno, t[3].column, "expected =, <= or >=");
      declare(t[0].text);
      declare(t[2].text);
      f.constraints.push_back({k, {t[0].text, t[2].text}});
      continue;
    }
    return fail(ParseErrorKind::SYNTAX_ERROR, lineno, t[0].column, "unrecognized statement");
  }
  if (!have_range)
    return fail(ParseErrorKind::SYNTAX_ERROR, 1, 1, "missing 'range' header");
  ParseResult r;
  r.formula = std::move(f);
  return r;
}

inline std::string serialize_formula(const Formula& f) {
  std::ostringstream out;
  out << "range " << to_string(f.lo) << " " << to_string(f.hi) << "\n";
  for (const auto& c : f.constraints) {
    const auto& o = c.operands;
    switch (c.kind) {
      case ConstraintKind::CONST_ONE: out << o[0] << " = 1\n"; break;
      case ConstraintKind::ADD_EQ: out << o[0] << " + " << o[1] << " = " << o[2] << "\n"; break;
      case ConstraintKind::ADD_LEQ: out << o[0] << " + " << o[1] << " <= " << o[2] << "\n"; break;
      case ConstraintKind::ADD_GEQ: out << o[0] << " + " << o[1] << " >= " << o[2] << "\n"; break;
      case ConstraintKind::INV_EQ: out << o[0] << " * " << o[1] << " = 1\n"; break;
      case ConstraintKind::INV_LEQ: out << o[0] << " * " << o[1] << " <= 1\n"; break;
      case ConstraintKind::INV_GEQ: out << o[0] << " * " << o[1] << " >= 1\n"; break;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Evaluation

enum class EvalStatus { SAT, RANGE_VIOLATION, CONSTRAINT_VIOLATION };

struct EvalResult {
  EvalStatus status = EvalStatus::SAT;
  std::vector<VarId> range_violations;
  std::vector<std::size_t> constraint_violations;
};

// Exact check with slack tol (tol = 0 gives exact semantics); range first.
inline EvalResult evaluate(const Formula& f, const Assignment& a, const Rational& tol = 0) {
  EvalResult r;
  for (const auto& v : f.variables) {
    const Rational& x = a.at(v);
    if (x < f.lo - tol || x > f.hi + tol) r.range_violations.push_back(v);
  }
  if (!r.range_violations.empty()) {
    r.status = EvalStatus::RANGE_VIOLATION;
    return r;
  }
  for (std::size_t i = 0; i < f.constraints.size(); ++i) {
    const auto& c = f.constraints[i];
    const auto& o = c.operands;
    bool ok = true;
    switch (c.kind) {
      case ConstraintKind::CONST_ONE: ok = rat_abs(a.at(o[0]) - 1) <= tol; break;
      case ConstraintKind::ADD_EQ:
        ok = rat_abs(a.at(o[0]) + a.at(o[1]) - a.at(o[2])) <= tol;
        break;
      case ConstraintKind::ADD_LEQ: ok = a.at(o[0]) + a.at(o[1]) <= a.at(o[2]) + tol; break;
      case ConstraintKind::ADD_GEQ: ok = a.at(o[0]) + a.at(o[1]) >= a.at(o[2]) - tol; break;
      case ConstraintKind::INV_EQ: ok = rat_abs(a.at(o[0]) * a.at(o[1]) - 1) <= tol; break;
      case ConstraintKind::INV_LEQ: ok = a.at(o[0]) * a.at(o[1]) <= 1 + tol; break;
      case ConstraintKind::INV_GEQ: ok = a.at(o[0]) * a.at(o[1]) >= 1 - tol; break;
    }
    if (!ok) r.constraint_violations.push_back(i);
  }
  if (!r.constraint_violations.empty()) r.status = EvalStatus::CONSTRAINT_VIOLATION;
  return r;
}

}  // namespace gip
