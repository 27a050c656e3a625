// Copyright 2026 The stcvrp Authors
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

#include "stcvrp/lp_format.h"

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>

#include "stcvrp/error.h"
#include "text_util.h"

namespace stcvrp {
namespace {

enum class Section { kNone, kObjective, kConstraints, kBounds, kBinaries,
                     kGenerals, kEnd };

struct Token {
  std::string text;
  std::size_t line = 0;
};

std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

bool IsNameStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool IsNameChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
         c == '[' || c == ']';
}

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line_no = 0;
  for (std::string_view line : internal::SplitLines(text)) {
    ++line_no;
    if (const auto slash = line.find('\\'); slash != std::string_view::npos) {
      line = line.substr(0, slash);
    }
    std::size_t i = 0;
    while (i < line.size()) {
      const char c = line[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (c == '<' || c == '>' || c == '=') {
        std::string op(1, c);
        if (i + 1 < line.size() && line[i + 1] == '=') {
          op += '=';
          ++i;
        } else if (c == '=' && i + 1 < line.size() &&
                   (line[i + 1] == '<' || line[i + 1] == '>')) {
          op = std::string(1, line[i + 1]) + "=";
          ++i;
        }
        if (op == "<") op = "<=";
        if (op == ">") op = ">=";
        tokens.push_back({op, line_no});
        ++i;
      } else if (c == '+' || c == '-' || c == ':') {
        tokens.push_back({std::string(1, c), line_no});
        ++i;
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        std::size_t j = i;
        while (j < line.size() &&
               (std::isdigit(static_cast<unsigned char>(line[j])) ||
                line[j] == '.' || line[j] == 'e' || line[j] == 'E' ||
                ((line[j] == '+' || line[j] == '-') && j > i &&
                 (line[j - 1] == 'e' || line[j - 1] == 'E')))) {
          ++j;
        }
        tokens.push_back({std::string(line.substr(i, j - i)), line_no});
        i = j;
      } else if (IsNameStart(c)) {
        std::size_t j = i;
        while (j < line.size() && IsNameChar(line[j])) ++j;
        tokens.push_back({std::string(line.substr(i, j - i)), line_no});
        i = j;
      } else {
        throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) +
                                           ": unexpected character '" +
                                           std::string(1, c) + "'");
      }
    }
  }
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  LpProblem Parse() {
    LpProblem lp;
    Section section = Section::kNone;
    while (pos_ < tokens_.size()) {
      if (auto next = SectionAt(pos_)) {
        section = *next;
        if (section == Section::kObjective) {
          lp.minimize = Lower(tokens_[pos_].text).starts_with("min");
        }
        pos_ += section == Section::kConstraints && IsTwoWordSubjectTo() ? 2 : 1;
        if (section == Section::kEnd) break;
        continue;
      }
      switch (section) {
        case Section::kObjective:
          ParseObjective(lp);
          break;
        case Section::kConstraints:
          lp.rows.push_back(ParseRow(lp));
          break;
        case Section::kBounds:
          ParseBound(lp);
          break;
        case Section::kBinaries:
        case Section::kGenerals: {
          const Token& t = tokens_[pos_++];
          if (!IsNameStart(t.text.front())) Fail(t, "expected a variable name");
          (section == Section::kBinaries ? lp.binaries : lp.generals)
              .push_back(t.text);
          lp.variables.insert(t.text);
          break;
        }
        case Section::kNone:
        case Section::kEnd:
          Fail(tokens_[pos_], "content outside any section");
      }
    }
    if (section != Section::kEnd) {
      throw Error(ErrorKind::kParse, "missing End");
    }
    return lp;
  }

 private:
  [[noreturn]] static void Fail(const Token& t, const std::string& message) {
    throw Error(ErrorKind::kParse, "line " + std::to_string(t.line) + ": " +
                                       message + " near '" + t.text + "'");
  }

  bool IsTwoWordSubjectTo() const {
    const std::string w = Lower(tokens_[pos_].text);
    return (w == "subject" || w == "such") && pos_ + 1 < tokens_.size();
  }

  std::optional<Section> SectionAt(std::size_t i) const {
    // A name followed by ':' is a label, never a keyword.
    if (i + 1 < tokens_.size() && tokens_[i + 1].text == ":") return std::nullopt;
    const std::string w = Lower(tokens_[i].text);
    if (w == "minimize" || w == "minimum" || w == "min" || w == "maximize" ||
        w == "maximum" || w == "max") {
      return Section::kObjective;
    }
    if (w == "subject" || w == "such") {
      if (i + 1 < tokens_.size() &&
          (Lower(tokens_[i + 1].text) == "to" ||
           Lower(tokens_[i + 1].text) == "that")) {
        return Section::kConstraints;
      }
    }
    if (w == "st" || w == "s.t.") return Section::kConstraints;
    if (w == "bounds" || w == "bound") return Section::kBounds;
    if (w == "binaries" || w == "binary" || w == "bin") return Section::kBinaries;
    if (w == "generals" || w == "general" || w == "gen") return Section::kGenerals;
    if (w == "end") return Section::kEnd;
    return std::nullopt;
  }

  bool AtSense() const {
    const std::string& t = tokens_[pos_].text;
    return t == "<=" || t == ">=" || t == "=";
  }

  std::optional<std::string> TakeLabel() {
    if (pos_ + 1 < tokens_.size() && tokens_[pos_ + 1].text == ":") {
      std::string label = tokens_[pos_].text;
      pos_ += 2;
      return label;
    }
    return std::nullopt;
  }

  static std::optional<double> Number(const std::string& text) {
    return internal::ParseDouble(text);
  }

  // Reads "[+|-] [coef] name" terms until a sense token or a section start.
  std::vector<std::pair<double, std::string>> ParseExpression(LpProblem& lp) {
    std::vector<std::pair<double, std::string>> terms;
    while (pos_ < tokens_.size() && !AtSense() && !SectionAt(pos_)) {
      double sign = 1.0;
      while (tokens_[pos_].text == "+" || tokens_[pos_].text == "-") {
        if (tokens_[pos_].text == "-") sign = -sign;
        if (++pos_ >= tokens_.size()) Fail(tokens_.back(), "dangling sign");
      }
      double coefficient = 1.0;
      if (const auto value = Number(tokens_[pos_].text)) {
        coefficient = *value;
        if (++pos_ >= tokens_.size()) Fail(tokens_.back(), "dangling number");
      }
      const Token& name = tokens_[pos_];
      if (!IsNameStart(name.text.front()) || SectionAt(pos_)) {
        Fail(name, "expected a variable name");
      }
      ++pos_;
      terms.emplace_back(sign * coefficient, name.text);
      lp.variables.insert(name.text);
      if (pos_ < tokens_.size() && TakeLabelAhead()) break;
    }
    return terms;
  }

  // True when the next tokens start a new labeled row (objective sections
  // end at the first label of Subject To only through keywords, so this is
  // only a guard against malformed input).
  bool TakeLabelAhead() const {
    return pos_ + 1 < tokens_.size() && tokens_[pos_ + 1].text == ":" &&
           tokens_[pos_].text != "+" && tokens_[pos_].text != "-";
  }

  double SignedNumber() {
    double sign = 1.0;
    while (pos_ < tokens_.size() &&
           (tokens_[pos_].text == "+" || tokens_[pos_].text == "-")) {
      if (tokens_[pos_].text == "-") sign = -sign;
      ++pos_;
    }
    if (pos_ >= tokens_.size()) Fail(tokens_.back(), "expected a number");
    const Token& t = tokens_[pos_];
    const std::string lower = Lower(t.text);
    ++pos_;
    if (lower == "inf" || lower == "infinity") {
      return sign * std::numeric_limits<double>::infinity();
    }
    const auto value = Number(t.text);
    if (!value) Fail(t, "expected a number");
    return sign * *value;
  }

  void ParseObjective(LpProblem& lp) {
    if (auto label = TakeLabel()) lp.objective_name = *label;
    lp.objective = ParseExpression(lp);
  }

  LpProblem::Row ParseRow(LpProblem& lp) {
    LpProblem::Row row;
    if (auto label = TakeLabel()) row.name = *label;
    row.terms = ParseExpression(lp);
    if (pos_ >= tokens_.size() || !AtSense()) {
      Fail(tokens_[std::min(pos_, tokens_.size() - 1)],
           "constraint without a sense");
    }
    row.sense = tokens_[pos_++].text;
    row.rhs = SignedNumber();
    return row;
  }

  void ParseBound(LpProblem& lp) {
    // Forms: name op value | value op name [op value] | name free
    const std::size_t line = tokens_[pos_].line;
    auto is_name = [&](std::size_t i) {
      return IsNameStart(tokens_[i].text.front()) &&
             Lower(tokens_[i].text) != "inf" &&
             Lower(tokens_[i].text) != "infinity";
    };
    std::string variable;
    if (is_name(pos_)) {
      variable = tokens_[pos_++].text;
      if (pos_ < tokens_.size() && Lower(tokens_[pos_].text) == "free") {
        ++pos_;
      } else {
        if (pos_ >= tokens_.size() || !AtSense()) Fail(tokens_[pos_ - 1], "bad bound");
        ++pos_;
        SignedNumber();
      }
    } else {
      SignedNumber();
      if (pos_ >= tokens_.size() || !AtSense()) Fail(tokens_[pos_ - 1], "bad bound");
      ++pos_;
      if (pos_ >= tokens_.size() || !is_name(pos_)) Fail(tokens_[pos_ - 1], "bad bound");
      variable = tokens_[pos_++].text;
      if (pos_ < tokens_.size() && tokens_[pos_].line == line && AtSense()) {
        ++pos_;
        SignedNumber();
      }
    }
    lp.bounded.push_back(variable);
    lp.variables.insert(variable);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

LpProblem ParseLp(std::string_view text) {
  return Parser(Tokenize(text)).Parse();
}

}  // namespace stcvrp
